#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "contactlab/errors.hpp"
#include "contactlab/graph.hpp"
#include "contactlab/rational.hpp"

namespace contactlab {

enum class FamilyKind { Regions, Curves };

// A contact point: a point of the plane lying on at least two members.
// cyclic_order is the rotation of the members around the point; region
// families need it to embed the contact graph.
struct ContactPoint {
  std::string id;
  std::vector<int> members;                      // curve indices, no duplicates
  std::optional<std::vector<int>> cyclic_order;  // permutation of members
};

// Combinatorial stand-in for a touching family of Jordan curves or regions:
// a laminar containment forest plus the list of contact points. Curves are
// dense integer indices; the string ids only appear in files. Region families
// forbid nesting and additionally carry the cyclic order of contact points
// along each region boundary.
struct ContactFamily {
  FamilyKind kind = FamilyKind::Curves;
  int declared_k = 2;
  std::vector<std::string> curve_ids;
  std::vector<int> parent;                       // -1 = root
  std::vector<ContactPoint> contacts;
  std::vector<std::vector<int>> boundary_order;  // per curve, point indices

  int n() const { return static_cast<int>(curve_ids.size()); }

  int curve_index(const std::string& id) const {
    for (int i = 0; i < n(); ++i)
      if (curve_ids[i] == id) return i;
    throw std::invalid_argument("unknown curve id: " + id);
  }

  void check_curve(int c) const {
    if (c < 0 || c >= n()) throw std::invalid_argument("curve index out of range");
  }
};

struct Violation {
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool simple = false;
  bool simplicity_checked = false;

  bool valid() const { return violations.empty(); }
};

struct FamilyStats {
  std::size_t n = 0;
  std::size_t m = 0;              // intersecting pairs
  int k_effective = 0;            // max point multiplicity
  int max_distance = -1;          // -1 when undefined (m == 0)
  std::optional<Rat> alpha;       // sum d / (k_effective * m)
  std::optional<Rat> avg_distance;
};

namespace detail {

// Proper ancestors of c, innermost first. The parent mapping is bounded by n
// steps; longer walks mean a cycle and are reported by the validator.
inline std::vector<int> ancestor_chain(const ContactFamily& f, int c) {
  std::vector<int> chain;
  int cur = f.parent[c];
  int guard = f.n() + 1;
  while (cur >= 0 && guard-- > 0) {
    chain.push_back(cur);
    cur = f.parent[cur];
  }
  if (guard <= 0) throw FamilyError("parent mapping contains a cycle");
  return chain;
}

// Reusable timestamped mark buffer so distance scans stay allocation-free.
struct MarkBuf {
  std::vector<std::uint32_t> mark;
  std::uint32_t stamp = 0;
  void reset(std::size_t n) {
    if (mark.size() < n) mark.assign(n, 0);
    ++stamp;
  }
  void set(int i) { mark[i] = stamp; }
  bool test(int i) const { return mark[i] == stamp; }
};

inline std::uint64_t pair_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

}  // namespace detail

// d(a,b): number of curves whose closed region contains exactly one of a,b.
// In the laminar model that is |(anc(a) symdiff anc(b)) \ {a,b}|.
inline int distance(const ContactFamily& f, int a, int b) {
  f.check_curve(a);
  f.check_curve(b);
  if (a == b) throw std::invalid_argument("distance requires two distinct curves");
  auto ca = detail::ancestor_chain(f, a);
  auto cb = detail::ancestor_chain(f, b);
  static thread_local detail::MarkBuf ma, mb;
  ma.reset(f.n());
  for (int x : ca) ma.set(x);
  mb.reset(f.n());
  for (int x : cb) mb.set(x);
  int d = 0;
  for (int x : ca)
    if (!mb.test(x) && x != a && x != b) ++d;
  for (int x : cb)
    if (!ma.test(x) && x != a && x != b) ++d;
  return d;
}

// The separating set D(a,b) itself.
inline std::vector<int> separators(const ContactFamily& f, int a, int b) {
  auto ca = detail::ancestor_chain(f, a);
  auto cb = detail::ancestor_chain(f, b);
  static thread_local detail::MarkBuf ma, mb;
  ma.reset(f.n());
  for (int x : ca) ma.set(x);
  mb.reset(f.n());
  for (int x : cb) mb.set(x);
  std::vector<int> out;
  for (int x : ca)
    if (!mb.test(x) && x != a && x != b) out.push_back(x);
  for (int x : cb)
    if (!ma.test(x) && x != a && x != b) out.push_back(x);
  return out;
}

// Structural validation. Simplicity (any two curves meet in at most one
// point) is an extra property: it is always reported in the `simple` flag
// when affordable, but only counts as a violation when `require_simple`.
inline ValidationReport validate_family(const ContactFamily& f,
                                        bool require_simple = false) {
  ValidationReport rep;
  auto add = [&rep](std::string code, std::string msg) {
    rep.violations.push_back({std::move(code), std::move(msg)});
  };

  if (f.declared_k < 1) add("bad-k", "declared k must be positive");
  if (f.parent.size() != static_cast<std::size_t>(f.n()))
    add("bad-shape", "parent table size does not match curve count");

  // Laminar forest: no cycles.
  {
    std::vector<int> state(f.n(), 0);  // 0 unseen, 1 active, 2 done
    for (int c = 0; c < f.n(); ++c) {
      if (state[c]) continue;
      std::vector<int> path;
      int cur = c;
      while (cur >= 0 && state[cur] == 0) {
        state[cur] = 1;
        path.push_back(cur);
        cur = f.parent[cur];
      }
      if (cur >= 0 && state[cur] == 1) {
        add("parent-cycle", "containment forest has a cycle through curve " +
                                f.curve_ids[cur]);
        for (int x : path) state[x] = 2;
        break;
      }
      for (int x : path) state[x] = 2;
    }
    if (!rep.violations.empty() &&
        rep.violations.back().code == "parent-cycle") {
      return rep;  // distances are undefined past this point
    }
  }

  if (f.kind == FamilyKind::Regions) {
    for (int c = 0; c < f.n(); ++c)
      if (f.parent[c] >= 0) {
        add("regions-nested", "region " + f.curve_ids[c] +
                                  " has a parent; regions have disjoint interiors");
        break;
      }
  }

  for (const auto& p : f.contacts) {
    if (p.members.size() < 2)
      add("point-multiplicity",
          "contact point " + p.id + " lies on fewer than 2 curves");
    if (p.members.size() > static_cast<std::size_t>(f.declared_k))
      add("point-over-k", "contact point " + p.id + " lies on " +
                              std::to_string(p.members.size()) +
                              " curves, more than k=" +
                              std::to_string(f.declared_k));
    if (p.cyclic_order) {
      auto a = p.members, b = *p.cyclic_order;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b)
        add("bad-point-rotation",
            "rotation at point " + p.id + " is not a permutation of its members");
    } else if (f.kind == FamilyKind::Regions) {
      add("missing-point-rotation",
          "region family point " + p.id + " lacks a rotation");
    }
  }

  // Separation closure: every curve separating two members of a point also
  // passes through the point. Trivial for region families (no nesting).
  if (f.kind == FamilyKind::Curves) {
    bool closure_ok = true;
    for (const auto& p : f.contacts) {
      if (!closure_ok) break;
      static thread_local detail::MarkBuf inpoint;
      inpoint.reset(f.n());
      for (int c : p.members) inpoint.set(c);
      for (std::size_t i = 0; i < p.members.size() && closure_ok; ++i)
        for (std::size_t j = i + 1; j < p.members.size() && closure_ok; ++j)
          for (int s : separators(f, p.members[i], p.members[j]))
            if (!inpoint.test(s)) {
              add("separation-closure",
                  "point " + p.id + ": curve " + f.curve_ids[s] +
                      " separates members " + f.curve_ids[p.members[i]] +
                      "," + f.curve_ids[p.members[j]] +
                      " but does not pass through the point");
              closure_ok = false;
              break;
            }
    }
  }

  if (f.kind == FamilyKind::Regions) {
    if (f.boundary_order.size() != static_cast<std::size_t>(f.n())) {
      add("missing-boundary-order", "region family lacks boundary orders");
    } else {
      // boundary_order must list each incident point exactly once.
      std::vector<std::vector<int>> incident(f.n());
      for (int pi = 0; pi < static_cast<int>(f.contacts.size()); ++pi)
        for (int c : f.contacts[pi].members) incident[c].push_back(pi);
      for (int c = 0; c < f.n(); ++c) {
        auto a = incident[c];
        auto b = f.boundary_order[c];
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
          add("boundary-order-mismatch",
              "boundary of region " + f.curve_ids[c] +
                  " does not list its contact points exactly once");
      }
    }
  }

  // Simplicity scan; skipped above a size guard unless explicitly required.
  std::uint64_t pair_count = 0;
  for (const auto& p : f.contacts) {
    std::uint64_t s = p.members.size();
    pair_count += s * (s - 1) / 2;
  }
  if (require_simple || pair_count <= (1u << 22)) {
    std::vector<std::uint64_t> keys;
    keys.reserve(pair_count);
    for (const auto& p : f.contacts)
      for (std::size_t i = 0; i < p.members.size(); ++i)
        for (std::size_t j = i + 1; j < p.members.size(); ++j)
          keys.push_back(detail::pair_key(p.members[i], p.members[j]));
    std::sort(keys.begin(), keys.end());
    rep.simplicity_checked = true;
    rep.simple = std::adjacent_find(keys.begin(), keys.end()) == keys.end();
    if (require_simple && !rep.simple) {
      auto it = std::adjacent_find(keys.begin(), keys.end());
      int a = static_cast<int>(*it >> 32), b = static_cast<int>(*it & 0xffffffffu);
      add("not-simple", "curves " + f.curve_ids[a] + " and " + f.curve_ids[b] +
                            " share at least two contact points");
    }
  }
  return rep;
}

inline void require_valid(const ContactFamily& f, bool require_simple = false) {
  auto rep = validate_family(f, require_simple);
  if (!rep.valid())
    throw FamilyError("invalid family: " + rep.violations.front().code + ": " +
                      rep.violations.front().message);
}

// Intersection graph: vertices are curves, edges are pairs sharing a point.
inline SimpleGraph intersection_graph(const ContactFamily& f) {
  require_valid(f);
  std::vector<std::uint64_t> keys;
  for (const auto& p : f.contacts)
    for (std::size_t i = 0; i < p.members.size(); ++i)
      for (std::size_t j = i + 1; j < p.members.size(); ++j)
        keys.push_back(detail::pair_key(p.members[i], p.members[j]));
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(keys.size());
  for (auto k : keys)
    pairs.emplace_back(static_cast<int>(k >> 32),
                       static_cast<int>(k & 0xffffffffu));
  return SimpleGraph::from_pairs(f.n(), std::move(pairs));
}

// Unordered intersecting pairs, each once, without the validity round-trip.
inline std::vector<std::pair<int, int>> intersecting_pairs(
    const ContactFamily& f) {
  std::vector<std::uint64_t> keys;
  for (const auto& p : f.contacts)
    for (std::size_t i = 0; i < p.members.size(); ++i)
      for (std::size_t j = i + 1; j < p.members.size(); ++j)
        keys.push_back(detail::pair_key(p.members[i], p.members[j]));
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(keys.size());
  for (auto k : keys)
    pairs.emplace_back(static_cast<int>(k >> 32),
                       static_cast<int>(k & 0xffffffffu));
  return pairs;
}

// Exact mean of d(a,b) over unordered intersecting pairs, each counted once.
inline Rat average_distance(const ContactFamily& f) {
  require_valid(f);
  auto pairs = intersecting_pairs(f);
  if (pairs.empty())
    throw std::invalid_argument(
        "average distance undefined: no intersecting pairs");
  BigInt total = 0;
  for (auto [a, b] : pairs) total += distance(f, a, b);
  return Rat(total, BigInt(pairs.size()));
}

// Intersecting pairs a,b (both != c) with c a proper ancestor of exactly one.
inline long long count_c_crossing_pairs(const ContactFamily& f, int c) {
  f.check_curve(c);
  require_valid(f);
  std::vector<char> inside(f.n(), 0);
  for (int x = 0; x < f.n(); ++x) {
    if (x == c) continue;
    for (int a = f.parent[x]; a >= 0; a = f.parent[a])
      if (a == c) {
        inside[x] = 1;
        break;
      }
  }
  long long count = 0;
  for (auto [a, b] : intersecting_pairs(f)) {
    if (a == c || b == c) continue;
    if (inside[a] != inside[b]) ++count;
  }
  return count;
}

// Replaces every curve by `ell` nested copies. Every contact point keeps its
// identity with each member expanded to all of its copies, and each original
// curve additionally gets one fresh point shared by exactly its copies, so the
// edge identity m' = C(ell,2) n + ell^2 m holds for every input. Former
// children reattach below the innermost copy.
inline ContactFamily replicate(const ContactFamily& f, int ell) {
  if (ell < 1) throw std::invalid_argument("replication factor must be >= 1");
  if (f.kind != FamilyKind::Curves)
    throw std::invalid_argument("replicate applies to curve families only");
  if (ell == 1) return f;

  ContactFamily out;
  out.kind = FamilyKind::Curves;
  out.declared_k = f.declared_k * ell;
  int n = f.n();
  auto copy_index = [ell](int c, int i) { return c * ell + i; };  // i in [0,ell)
  out.curve_ids.resize(static_cast<std::size_t>(n) * ell);
  out.parent.assign(static_cast<std::size_t>(n) * ell, -1);
  for (int c = 0; c < n; ++c)
    for (int i = 0; i < ell; ++i) {
      out.curve_ids[copy_index(c, i)] =
          f.curve_ids[c] + "#" + std::to_string(i + 1);
      if (i > 0)
        out.parent[copy_index(c, i)] = copy_index(c, i - 1);
      else if (f.parent[c] >= 0)
        out.parent[copy_index(c, 0)] = copy_index(f.parent[c], ell - 1);
    }
  for (const auto& p : f.contacts) {
    ContactPoint q;
    q.id = p.id;
    q.members.reserve(p.members.size() * ell);
    for (int c : p.members)
      for (int i = 0; i < ell; ++i) q.members.push_back(copy_index(c, i));
    out.contacts.push_back(std::move(q));
  }
  for (int c = 0; c < n; ++c) {
    ContactPoint q;
    q.id = "self#" + f.curve_ids[c];
    for (int i = 0; i < ell; ++i) q.members.push_back(copy_index(c, i));
    out.contacts.push_back(std::move(q));
  }
  return out;
}

inline FamilyStats family_stats(const ContactFamily& f) {
  require_valid(f);
  FamilyStats st;
  st.n = static_cast<std::size_t>(f.n());
  for (const auto& p : f.contacts)
    st.k_effective =
        std::max(st.k_effective, static_cast<int>(p.members.size()));
  auto pairs = intersecting_pairs(f);
  st.m = pairs.size();
  if (st.m == 0) return st;
  BigInt total = 0;
  int maxd = 0;
  for (auto [a, b] : pairs) {
    int d = distance(f, a, b);
    total += d;
    maxd = std::max(maxd, d);
  }
  st.max_distance = maxd;
  st.avg_distance = Rat(total, BigInt(st.m));
  st.alpha = Rat(total, BigInt(st.m) * st.k_effective);
  return st;
}

// Restriction to the curves with drop[c] == 0. Contact points that lose all
// but one member disappear; boundary orders drop the vanished points. Returns
// the new family and the map new index -> old index.
inline std::pair<ContactFamily, std::vector<int>> remove_curves(
    const ContactFamily& f, const std::vector<char>& drop) {
  ContactFamily out;
  out.kind = f.kind;
  out.declared_k = f.declared_k;
  std::vector<int> new_to_old;
  std::vector<int> old_to_new(f.n(), -1);
  for (int c = 0; c < f.n(); ++c)
    if (!drop[c]) {
      old_to_new[c] = static_cast<int>(new_to_old.size());
      new_to_old.push_back(c);
      out.curve_ids.push_back(f.curve_ids[c]);
    }
  out.parent.assign(new_to_old.size(), -1);
  for (std::size_t i = 0; i < new_to_old.size(); ++i) {
    int a = f.parent[new_to_old[i]];
    while (a >= 0 && drop[a]) a = f.parent[a];  // nearest kept ancestor
    out.parent[i] = a >= 0 ? old_to_new[a] : -1;
  }
  std::vector<int> point_map(f.contacts.size(), -1);
  for (std::size_t pi = 0; pi < f.contacts.size(); ++pi) {
    const auto& p = f.contacts[pi];
    ContactPoint q;
    q.id = p.id;
    for (int c : p.members)
      if (!drop[c]) q.members.push_back(old_to_new[c]);
    if (q.members.size() < 2) continue;
    if (p.cyclic_order) {
      std::vector<int> order;
      for (int c : *p.cyclic_order)
        if (!drop[c]) order.push_back(old_to_new[c]);
      q.cyclic_order = std::move(order);
    }
    point_map[pi] = static_cast<int>(out.contacts.size());
    out.contacts.push_back(std::move(q));
  }
  if (!f.boundary_order.empty()) {
    out.boundary_order.resize(new_to_old.size());
    for (std::size_t i = 0; i < new_to_old.size(); ++i)
      for (int pi : f.boundary_order[new_to_old[i]])
        if (point_map[pi] >= 0)
          out.boundary_order[i].push_back(point_map[pi]);
  }
  return {std::move(out), std::move(new_to_old)};
}

}  // namespace contactlab
