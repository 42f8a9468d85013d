#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "contactlab/cyclepack_types.hpp"
#include "contactlab/errors.hpp"
#include "contactlab/family.hpp"

namespace contactlab {

using Json = nlohmann::json;

namespace detail {

inline void reject_unknown_keys(const Json& obj, const std::set<std::string>& allowed,
                                const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key()))
      throw ParseError("unknown key \"" + it.key() + "\" in " + where);
}

inline const Json& need(const Json& obj, const std::string& key,
                        const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw ParseError("missing key \"" + key + "\" in " + where);
  return *it;
}

}  // namespace detail

// Instance file format: a single JSON object
//   {"kind": "regions"|"curves", "k": int, "curves": [id...],
//    "parent": {child: parent, ...},           (absent keys = roots)
//    "contacts": [{"id": id, "members": [id...], "order": [id...]?}, ...],
//    "boundary_order": {curve: [contact id...], ...}}   (regions only)
// Unknown keys are rejected; all references must resolve.
inline ContactFamily family_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("instance file must hold a JSON object");
  detail::reject_unknown_keys(
      j, {"kind", "k", "curves", "parent", "contacts", "boundary_order"},
      "instance");
  ContactFamily f;
  const auto& kind = detail::need(j, "kind", "instance");
  if (!kind.is_string() || (kind != "regions" && kind != "curves"))
    throw ParseError("\"kind\" must be \"regions\" or \"curves\"");
  f.kind = kind == "regions" ? FamilyKind::Regions : FamilyKind::Curves;
  const auto& k = detail::need(j, "k", "instance");
  if (!k.is_number_integer() || k.get<long long>() < 1)
    throw ParseError("\"k\" must be a positive integer");
  f.declared_k = k.get<int>();

  const auto& curves = detail::need(j, "curves", "instance");
  if (!curves.is_array()) throw ParseError("\"curves\" must be an array of ids");
  std::unordered_map<std::string, int> curve_idx;
  for (const auto& c : curves) {
    if (!c.is_string()) throw ParseError("curve ids must be strings");
    std::string id = c.get<std::string>();
    if (!curve_idx.emplace(id, f.n()).second)
      throw ParseError("duplicate curve id: " + id);
    f.curve_ids.push_back(id);
  }
  auto resolve_curve = [&](const Json& v, const std::string& where) {
    if (!v.is_string()) throw ParseError("expected a curve id in " + where);
    auto it = curve_idx.find(v.get<std::string>());
    if (it == curve_idx.end())
      throw ParseError("unknown curve id \"" + v.get<std::string>() + "\" in " +
                       where);
    return it->second;
  };

  f.parent.assign(f.n(), -1);
  if (j.contains("parent")) {
    const auto& par = j["parent"];
    if (!par.is_object()) throw ParseError("\"parent\" must be an object");
    for (auto it = par.begin(); it != par.end(); ++it) {
      auto cit = curve_idx.find(it.key());
      if (cit == curve_idx.end())
        throw ParseError("unknown curve id \"" + it.key() + "\" in parent");
      f.parent[cit->second] = resolve_curve(it.value(), "parent");
    }
  }

  const auto& contacts = detail::need(j, "contacts", "instance");
  if (!contacts.is_array()) throw ParseError("\"contacts\" must be an array");
  std::unordered_map<std::string, int> point_idx;
  for (const auto& pj : contacts) {
    if (!pj.is_object()) throw ParseError("contact entries must be objects");
    detail::reject_unknown_keys(pj, {"id", "members", "order"}, "contact");
    ContactPoint p;
    const auto& pid = detail::need(pj, "id", "contact");
    if (!pid.is_string()) throw ParseError("contact ids must be strings");
    p.id = pid.get<std::string>();
    if (!point_idx.emplace(p.id, static_cast<int>(f.contacts.size())).second)
      throw ParseError("duplicate contact id: " + p.id);
    const auto& members = detail::need(pj, "members", "contact " + p.id);
    if (!members.is_array())
      throw ParseError("contact members must be an array");
    std::set<int> seen;
    for (const auto& m : members) {
      int c = resolve_curve(m, "contact " + p.id);
      if (!seen.insert(c).second)
        throw ParseError("duplicate member in contact " + p.id);
      p.members.push_back(c);
    }
    if (pj.contains("order")) {
      std::vector<int> order;
      for (const auto& m : pj["order"])
        order.push_back(resolve_curve(m, "order of contact " + p.id));
      p.cyclic_order = std::move(order);
    }
    f.contacts.push_back(std::move(p));
  }

  if (j.contains("boundary_order")) {
    if (f.kind != FamilyKind::Regions)
      throw ParseError("\"boundary_order\" is only valid for region families");
    const auto& bo = j["boundary_order"];
    if (!bo.is_object()) throw ParseError("\"boundary_order\" must be an object");
    f.boundary_order.assign(f.n(), {});
    for (auto it = bo.begin(); it != bo.end(); ++it) {
      auto cit = curve_idx.find(it.key());
      if (cit == curve_idx.end())
        throw ParseError("unknown curve id \"" + it.key() +
                         "\" in boundary_order");
      if (!it.value().is_array())
        throw ParseError("boundary_order entries must be arrays");
      for (const auto& pv : it.value()) {
        if (!pv.is_string())
          throw ParseError("boundary_order lists contact ids");
        auto pit = point_idx.find(pv.get<std::string>());
        if (pit == point_idx.end())
          throw ParseError("unknown contact id \"" + pv.get<std::string>() +
                           "\" in boundary_order");
        f.boundary_order[cit->second].push_back(pit->second);
      }
    }
  }
  return f;
}

inline Json family_to_json(const ContactFamily& f) {
  Json j;
  j["kind"] = f.kind == FamilyKind::Regions ? "regions" : "curves";
  j["k"] = f.declared_k;
  j["curves"] = Json::array();
  for (const auto& id : f.curve_ids) j["curves"].push_back(id);
  Json par = Json::object();
  for (int c = 0; c < f.n(); ++c)
    if (f.parent[c] >= 0) par[f.curve_ids[c]] = f.curve_ids[f.parent[c]];
  if (!par.empty()) j["parent"] = par;
  j["contacts"] = Json::array();
  for (const auto& p : f.contacts) {
    Json pj;
    pj["id"] = p.id;
    pj["members"] = Json::array();
    for (int c : p.members) pj["members"].push_back(f.curve_ids[c]);
    if (p.cyclic_order) {
      pj["order"] = Json::array();
      for (int c : *p.cyclic_order) pj["order"].push_back(f.curve_ids[c]);
    }
    j["contacts"].push_back(std::move(pj));
  }
  if (f.kind == FamilyKind::Regions && !f.boundary_order.empty()) {
    Json bo = Json::object();
    for (int c = 0; c < f.n(); ++c) {
      Json arr = Json::array();
      for (int pi : f.boundary_order[c]) arr.push_back(f.contacts[pi].id);
      bo[f.curve_ids[c]] = std::move(arr);
    }
    j["boundary_order"] = std::move(bo);
  }
  return j;
}

// Digraph file format:
//   {"vertices": [id...], "arcs": [[u,v], ...], "rotation": {v: [[a,b],...]}}
// Arcs are ordered pairs; parallel arcs and self-loops are rejected,
// antiparallel pairs are allowed. The optional rotation lists the incident
// arcs of each vertex (regardless of direction) in cyclic order.
inline PlanarDigraph digraph_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("digraph file must hold a JSON object");
  detail::reject_unknown_keys(j, {"vertices", "arcs", "rotation"}, "digraph");
  PlanarDigraph g;
  const auto& vs = detail::need(j, "vertices", "digraph");
  if (!vs.is_array()) throw ParseError("\"vertices\" must be an array");
  std::unordered_map<std::string, int> vidx;
  for (const auto& v : vs) {
    if (!v.is_string()) throw ParseError("vertex ids must be strings");
    std::string id = v.get<std::string>();
    if (!vidx.emplace(id, static_cast<int>(g.labels.size())).second)
      throw ParseError("duplicate vertex id: " + id);
    g.labels.push_back(id);
  }
  auto resolve = [&](const Json& v, const std::string& where) {
    if (!v.is_string()) throw ParseError("expected a vertex id in " + where);
    auto it = vidx.find(v.get<std::string>());
    if (it == vidx.end())
      throw ParseError("unknown vertex id \"" + v.get<std::string>() +
                       "\" in " + where);
    return it->second;
  };
  const auto& arcs = detail::need(j, "arcs", "digraph");
  if (!arcs.is_array()) throw ParseError("\"arcs\" must be an array");
  std::set<std::pair<int, int>> seen;
  for (const auto& a : arcs) {
    if (!a.is_array() || a.size() != 2)
      throw ParseError("arcs must be [tail, head] pairs");
    int u = resolve(a[0], "arcs"), v = resolve(a[1], "arcs");
    if (u == v) throw ParseError("self-loops are not allowed");
    if (!seen.emplace(u, v).second)
      throw ParseError("parallel arc " + g.labels[u] + "->" + g.labels[v]);
    g.arcs.emplace_back(u, v);
  }
  if (j.contains("rotation")) {
    const auto& rot = j["rotation"];
    if (!rot.is_object()) throw ParseError("\"rotation\" must be an object");
    std::vector<std::vector<int>> rotation(g.n());
    std::map<std::pair<int, int>, int> arc_idx;
    for (int i = 0; i < static_cast<int>(g.arcs.size()); ++i)
      arc_idx[g.arcs[i]] = i;
    for (auto it = rot.begin(); it != rot.end(); ++it) {
      auto vit = vidx.find(it.key());
      if (vit == vidx.end())
        throw ParseError("unknown vertex id \"" + it.key() + "\" in rotation");
      for (const auto& a : it.value()) {
        if (!a.is_array() || a.size() != 2)
          throw ParseError("rotation entries must be [tail, head] pairs");
        int u = resolve(a[0], "rotation"), v = resolve(a[1], "rotation");
        auto ait = arc_idx.find({u, v});
        if (ait == arc_idx.end())
          throw ParseError("rotation references a missing arc");
        rotation[vit->second].push_back(ait->second);
      }
    }
    g.rotation = std::move(rotation);
  }
  return g;
}

inline Json digraph_to_json(const PlanarDigraph& g) {
  Json j;
  j["vertices"] = Json::array();
  for (const auto& id : g.labels) j["vertices"].push_back(id);
  j["arcs"] = Json::array();
  for (auto [u, v] : g.arcs)
    j["arcs"].push_back(Json::array({g.labels[u], g.labels[v]}));
  if (g.rotation) {
    Json rot = Json::object();
    for (int v = 0; v < g.n(); ++v) {
      Json arr = Json::array();
      for (int ai : (*g.rotation)[v])
        arr.push_back(Json::array(
            {g.labels[g.arcs[ai].first], g.labels[g.arcs[ai].second]}));
      rot[g.labels[v]] = std::move(arr);
    }
    j["rotation"] = std::move(rot);
  }
  return j;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << data;
}

inline Json parse_json_file(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
}

inline ContactFamily load_family(const std::string& path) {
  return family_from_json(parse_json_file(path));
}

inline PlanarDigraph load_digraph(const std::string& path) {
  return digraph_from_json(parse_json_file(path));
}

}  // namespace contactlab
