#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "contactlab/family.hpp"

namespace contactlab {

enum class VertexKind { Disk, Contact };

// The plane bipartite contact graph of a region family: one disk vertex per
// region, one contact vertex per contact point, an edge per incidence. The
// rotation system (counterclockwise everywhere) comes from the boundary
// orders (disk side) and the point rotations (contact side).
struct PlaneBipartiteGraph {
  struct Vertex {
    VertexKind kind;
    int ref;  // curve index or point index
  };
  std::vector<Vertex> vertices;
  std::vector<std::vector<int>> rot;   // rotation: neighbor vertex ids
  std::vector<std::vector<int>> twin;  // twin[v][i] = slot of v at rot[v][i]

  int n() const { return static_cast<int>(vertices.size()); }
  int degree(int v) const { return static_cast<int>(rot[v].size()); }
  std::size_t edge_count() const {
    std::size_t darts = 0;
    for (const auto& r : rot) darts += r.size();
    return darts / 2;
  }

  // Fills twin slots; requires a simple graph (each neighbor listed once).
  void index_twins() {
    twin.assign(n(), {});
    for (int v = 0; v < n(); ++v) twin[v].assign(rot[v].size(), -1);
    for (int v = 0; v < n(); ++v)
      for (int i = 0; i < degree(v); ++i) {
        int u = rot[v][i];
        const auto& ru = rot[u];
        for (int j = 0; j < static_cast<int>(ru.size()); ++j)
          if (ru[j] == v) {
            twin[v][i] = j;
            break;
          }
        if (twin[v][i] < 0)
          throw GuaranteeError("rotation system is not symmetric");
      }
  }
};

// A dart is slot i at vertex v, i.e. the directed edge v -> rot[v][i].
struct Dart {
  int v;
  int slot;
};

struct FaceSet {
  std::vector<std::vector<Dart>> faces;
  std::vector<std::vector<int>> face_at;  // per vertex slot: face index

  int degree(int face) const { return static_cast<int>(faces[face].size()); }
  std::size_t count() const { return faces.size(); }
};

inline std::vector<int> component_ids(const PlaneBipartiteGraph& g,
                                      int* count = nullptr) {
  std::vector<int> comp(g.n(), -1);
  int c = 0;
  std::vector<int> stack;
  for (int v = 0; v < g.n(); ++v) {
    if (comp[v] >= 0) continue;
    comp[v] = c;
    stack.push_back(v);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int u : g.rot[x])
        if (comp[u] < 0) {
          comp[u] = c;
          stack.push_back(u);
        }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

inline bool is_connected(const PlaneBipartiteGraph& g) {
  if (g.n() == 0) return true;
  int c = 0;
  component_ids(g, &c);
  return c == 1;
}

inline PlaneBipartiteGraph build_contact_graph(const ContactFamily& f) {
  if (f.kind != FamilyKind::Regions)
    throw std::invalid_argument("contact graph requires a region family");
  require_valid(f);
  if (f.boundary_order.size() != static_cast<std::size_t>(f.n()))
    throw std::invalid_argument("contact graph requires boundary orders");
  PlaneBipartiteGraph g;
  int n = f.n();
  int pcount = static_cast<int>(f.contacts.size());
  g.vertices.reserve(n + pcount);
  for (int c = 0; c < n; ++c) g.vertices.push_back({VertexKind::Disk, c});
  for (int p = 0; p < pcount; ++p)
    g.vertices.push_back({VertexKind::Contact, p});
  g.rot.assign(n + pcount, {});
  for (int c = 0; c < n; ++c)
    for (int pi : f.boundary_order[c]) g.rot[c].push_back(n + pi);
  for (int p = 0; p < pcount; ++p) {
    if (!f.contacts[p].cyclic_order)
      throw std::invalid_argument("contact point " + f.contacts[p].id +
                                  " lacks rotation data");
    for (int c : *f.contacts[p].cyclic_order) g.rot[n + p].push_back(c);
  }
  g.index_twins();
  return g;
}

// Face traversal: arriving on a dart, leave on the rotation successor of its
// reverse. Every dart lies on exactly one face walk; the sum of face degrees
// is twice the edge count. On a connected graph the rotation system must
// describe a plane embedding, so the Euler identity is asserted.
inline FaceSet trace_faces(const PlaneBipartiteGraph& g) {
  FaceSet fs;
  fs.face_at.assign(g.n(), {});
  for (int v = 0; v < g.n(); ++v) fs.face_at[v].assign(g.degree(v), -1);
  for (int v = 0; v < g.n(); ++v)
    for (int s = 0; s < g.degree(v); ++s) {
      if (fs.face_at[v][s] >= 0) continue;
      int id = static_cast<int>(fs.faces.size());
      std::vector<Dart> walk;
      int cv = v, cs = s;
      do {
        fs.face_at[cv][cs] = id;
        walk.push_back({cv, cs});
        int u = g.rot[cv][cs];
        int j = g.twin[cv][cs];
        cv = u;
        cs = (j + 1) % g.degree(u);
      } while (!(cv == v && cs == s));
      fs.faces.push_back(std::move(walk));
    }
  if (g.edge_count() > 0 && is_connected(g)) {
    long long euler = g.n() - static_cast<long long>(g.edge_count()) +
                      static_cast<long long>(fs.count());
    if (euler != 2)
      throw GuaranteeError("rotation system is not a plane embedding (Euler " +
                           std::to_string(euler) + ")");
  }
  return fs;
}

// Disk vertices sharing at least one contact vertex with v.
inline std::vector<int> loose_neighbors(const PlaneBipartiteGraph& g, int v) {
  if (v < 0 || v >= g.n() || g.vertices[v].kind != VertexKind::Disk)
    throw std::invalid_argument("loose neighbors are defined for disk vertices");
  std::vector<char> seen(g.n(), 0);
  std::vector<int> out;
  for (int p : g.rot[v])
    for (int d : g.rot[p])
      if (d != v && !seen[d]) {
        seen[d] = 1;
        out.push_back(d);
      }
  std::sort(out.begin(), out.end());
  return out;
}

struct ClaimCheck {
  bool holds = true;
  std::string witness;
};

// Structural diagnostics of the contact graph. On a counterexample-free
// instance some of these are expected to fail; each failure witnesses a
// reduction opportunity.
struct ClaimReport {
  ClaimCheck connected;                 // one component, Euler-consistent
  ClaimCheck faces_degree_ge_6;         // every face walk has >= 6 darts
  ClaimCheck degree_bounds;             // min degree 2, contact degree <= k
  ClaimCheck no_adjacent_2_vertices;    // every edge has an endpoint of deg >= 3
  ClaimCheck small_disk_has_big_neighbor;  // disks of degree <= 7 meet a big vertex
};

inline ClaimReport structure_report(const PlaneBipartiteGraph& g, int k,
                                    int big_threshold = 72) {
  ClaimReport r;
  auto fs = trace_faces(g);

  int comps = 0;
  auto comp = component_ids(g, &comps);
  if (comps != 1) {
    r.connected.holds = false;
    r.connected.witness = std::to_string(comps) + " components";
  } else {
    // Euler check |V| - |E| + |F| = 2 for the traced embedding.
    long long euler = g.n() - static_cast<long long>(g.edge_count()) +
                      static_cast<long long>(fs.count());
    if (g.n() > 0 && g.edge_count() > 0 && euler != 2) {
      r.connected.holds = false;
      r.connected.witness = "Euler value " + std::to_string(euler);
    }
  }
  (void)comp;

  for (std::size_t i = 0; i < fs.count(); ++i)
    if (fs.degree(static_cast<int>(i)) < 6) {
      r.faces_degree_ge_6.holds = false;
      r.faces_degree_ge_6.witness =
          "face of degree " + std::to_string(fs.degree(static_cast<int>(i)));
      break;
    }

  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) < 2) {
      r.degree_bounds.holds = false;
      r.degree_bounds.witness = "vertex " + std::to_string(v) + " has degree " +
                                std::to_string(g.degree(v));
      break;
    }
    if (g.vertices[v].kind == VertexKind::Contact && g.degree(v) > k) {
      r.degree_bounds.holds = false;
      r.degree_bounds.witness = "contact vertex " + std::to_string(v) +
                                " has degree " + std::to_string(g.degree(v)) +
                                " > k";
      break;
    }
  }

  for (int v = 0; v < g.n() && r.no_adjacent_2_vertices.holds; ++v)
    for (int u : g.rot[v]) {
      if (u < v) continue;
      if (g.degree(v) == 2 && g.degree(u) == 2) {
        r.no_adjacent_2_vertices.holds = false;
        r.no_adjacent_2_vertices.witness =
            "edge (" + std::to_string(v) + "," + std::to_string(u) +
            ") joins two 2-vertices";
        break;
      }
    }

  for (int v = 0; v < g.n(); ++v) {
    if (g.vertices[v].kind != VertexKind::Disk || g.degree(v) > 7) continue;
    bool has_big = false;
    for (int u : g.rot[v])
      if (g.degree(u) >= big_threshold) {
        has_big = true;
        break;
      }
    if (!has_big) {
      r.small_disk_has_big_neighbor.holds = false;
      r.small_disk_has_big_neighbor.witness =
          "disk vertex " + std::to_string(v) + " of degree " +
          std::to_string(g.degree(v)) + " has no big neighbor";
      break;
    }
  }
  return r;
}

// Text dump: one vertex per line with its rotation, disk vertices as D:<curve>
// and contact vertices as C:<point>. Consumed by external plotting scripts.
inline std::string dump_graph(const PlaneBipartiteGraph& g,
                              const ContactFamily& f) {
  std::string out;
  auto name = [&](int v) {
    const auto& vx = g.vertices[v];
    return vx.kind == VertexKind::Disk ? "D:" + f.curve_ids[vx.ref]
                                       : "C:" + f.contacts[vx.ref].id;
  };
  for (int v = 0; v < g.n(); ++v) {
    out += name(v);
    for (int u : g.rot[v]) {
      out += ' ';
      out += name(u);
    }
    out += '\n';
  }
  return out;
}

}  // namespace contactlab
