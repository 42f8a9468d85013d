#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "contactlab/cyclepack_types.hpp"
#include "contactlab/errors.hpp"
#include "contactlab/rational.hpp"
#include "contactlab/simplex.hpp"

namespace contactlab {

namespace detail {

// Face traversal of the underlying multigraph (each arc one edge, darts are
// (arc, departing endpoint)): the rotation system must satisfy Euler's
// formula on every component that carries an edge.
inline void check_rotation_embedding(const PlanarDigraph& g) {
  const auto& rot = *g.rotation;
  if (rot.size() != static_cast<std::size_t>(g.n()))
    throw std::invalid_argument("rotation table size does not match");
  int m = static_cast<int>(g.arcs.size());
  std::vector<std::vector<int>> incident(g.n());
  for (int ai = 0; ai < m; ++ai) {
    incident[g.arcs[ai].first].push_back(ai);
    incident[g.arcs[ai].second].push_back(ai);
  }
  for (int v = 0; v < g.n(); ++v) {
    auto a = incident[v], b = rot[v];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      throw std::invalid_argument(
          "rotation must list each incident arc exactly once");
  }
  // position of arc ai within rot[v]
  auto pos_of = [&](int v, int ai) {
    for (int i = 0; i < static_cast<int>(rot[v].size()); ++i)
      if (rot[v][i] == ai) return i;
    return -1;
  };
  // Components of the underlying multigraph.
  std::vector<int> comp(g.n(), -1);
  int comps = 0;
  std::vector<std::vector<int>> adj(g.n());
  for (auto [u, v] : g.arcs) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (int v = 0; v < g.n(); ++v) {
    if (comp[v] >= 0) continue;
    std::vector<int> stack{v};
    comp[v] = comps;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int u : adj[x])
        if (comp[u] < 0) {
          comp[u] = comps;
          stack.push_back(u);
        }
    }
    ++comps;
  }
  // Count per-component vertices/edges/faces; a face belongs to the component
  // of any dart on it, and components without edges contribute nothing.
  std::vector<long long> cv(comps, 0), ce(comps, 0), cf(comps, 0);
  for (int v = 0; v < g.n(); ++v) ++cv[comp[v]];
  for (auto [u, v] : g.arcs) ++ce[comp[u]], (void)v;
  {
    std::vector<std::array<char, 2>> seen(m, {0, 0});
    for (int ai = 0; ai < m; ++ai)
      for (int side = 0; side < 2; ++side) {
        if (seen[ai][side]) continue;
        ++cf[comp[g.arcs[ai].first]];
        int ca = ai, cs = side;
        do {
          seen[ca][cs] = 1;
          int to = cs == 0 ? g.arcs[ca].second : g.arcs[ca].first;
          int p = pos_of(to, ca);
          int next = rot[to][(p + 1) % rot[to].size()];
          ca = next;
          cs = g.arcs[next].first == to ? 0 : 1;
        } while (!(ca == ai && cs == side));
      }
  }
  for (int c = 0; c < comps; ++c) {
    if (ce[c] == 0) continue;
    if (cv[c] - ce[c] + cf[c] != 2)
      throw std::invalid_argument("rotation system fails Euler's formula");
  }
}

}  // namespace detail

inline void validate_digraph(const PlanarDigraph& g) {
  std::vector<std::pair<int, int>> seen = g.arcs;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw std::invalid_argument("parallel arcs are not allowed");
  for (auto [u, v] : g.arcs) {
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (u < 0 || v < 0 || u >= g.n() || v >= g.n())
      throw std::invalid_argument("arc endpoint out of range");
  }
  if (g.n() >= 3) {
    // Edge support (antiparallel pairs counted once) respects planarity.
    std::vector<std::pair<int, int>> und;
    und.reserve(g.arcs.size());
    for (auto [u, v] : g.arcs) und.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(und.begin(), und.end());
    und.erase(std::unique(und.begin(), und.end()), und.end());
    if (und.size() > static_cast<std::size_t>(3 * g.n() - 6))
      throw std::invalid_argument("edge count exceeds the planar bound");
  }
  if (g.rotation) detail::check_rotation_embedding(g);
}

// All simple directed cycles, each reported once starting at its smallest
// vertex, in deterministic order. DFS from each start s over vertices >= s.
inline std::vector<std::vector<int>> enumerate_cycles(const PlanarDigraph& g,
                                                      std::size_t limit) {
  validate_digraph(g);
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> adj(g.n());
  for (auto [u, v] : g.arcs) adj[u].push_back(v);
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::vector<char> on_path(g.n(), 0);
  std::vector<int> path;
  auto dfs = [&](auto&& self, int s, int v) -> void {
    for (int u : adj[v]) {
      if (u == s) {
        if (path.size() >= 2) {
          if (out.size() >= limit)
            throw LimitError("cycle enumeration limit exceeded");
          out.push_back(path);
        }
      } else if (u > s && !on_path[u]) {
        on_path[u] = 1;
        path.push_back(u);
        self(self, s, u);
        path.pop_back();
        on_path[u] = 0;
      }
    }
  };
  for (int s = 0; s < g.n(); ++s) {
    path = {s};
    on_path.assign(g.n(), 0);
    on_path[s] = 1;
    dfs(dfs, s, s);
  }
  if (out.size() > limit) throw LimitError("cycle enumeration limit exceeded");
  return out;
}

// Exact maximum number of vertex-disjoint cycles from the enumerated list:
// branch and bound with a greedy initial packing and a remaining-vertex
// capacity prune.
inline long long nu_exact(const PlanarDigraph& g,
                          const std::vector<std::vector<int>>& cycles,
                          std::vector<std::vector<int>>* witness = nullptr) {
  int nc = static_cast<int>(cycles.size());
  std::vector<int> order(nc);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return cycles[a].size() != cycles[b].size()
               ? cycles[a].size() < cycles[b].size()
               : a < b;
  });

  std::vector<char> used(g.n(), 0);
  std::vector<int> chosen;

  long long best = 0;
  std::vector<int> best_set;
  // Greedy seed in shortest-first order.
  {
    for (int ci : order) {
      bool free = true;
      for (int v : cycles[ci])
        if (used[v]) {
          free = false;
          break;
        }
      if (!free) continue;
      for (int v : cycles[ci]) used[v] = 1;
      chosen.push_back(ci);
    }
    best = static_cast<long long>(chosen.size());
    best_set = chosen;
    for (int v = 0; v < g.n(); ++v) used[v] = 0;
    chosen.clear();
  }

  int free_vertices = g.n();
  auto rec = [&](auto&& self, int idx) -> void {
    long long bound = static_cast<long long>(chosen.size()) + free_vertices / 2;
    if (bound <= best) return;
    if (idx == nc) {
      if (static_cast<long long>(chosen.size()) > best) {
        best = static_cast<long long>(chosen.size());
        best_set = chosen;
      }
      return;
    }
    int ci = order[idx];
    bool free = true;
    for (int v : cycles[ci])
      if (used[v]) {
        free = false;
        break;
      }
    if (free) {
      for (int v : cycles[ci]) used[v] = 1;
      free_vertices -= static_cast<int>(cycles[ci].size());
      chosen.push_back(ci);
      self(self, idx + 1);
      chosen.pop_back();
      free_vertices += static_cast<int>(cycles[ci].size());
      for (int v : cycles[ci]) used[v] = 0;
    }
    self(self, idx + 1);
  };
  rec(rec, 0);
  // The recursion only records at idx == nc, so flush the greedy result too.
  if (witness) {
    witness->clear();
    for (int ci : best_set) witness->push_back(cycles[ci]);
  }
  return best;
}

struct PackingResult {
  std::vector<std::vector<int>> cycles;  // enumerated cycles
  long long nu = 0;
  std::vector<std::vector<int>> nu_witness;  // vertex-disjoint cycles
  Rat nu_star;
  std::vector<Rat> weights;  // per enumerated cycle
  std::vector<Rat> dual;     // per vertex; certifies optimality
  // nu_star = rs_n / rs_k in lowest terms; rs_multiplicity[i] copies of
  // cycle i give rs_n cycles total with every vertex on at most rs_k of them.
  BigInt rs_n, rs_k;
  std::vector<BigInt> rs_multiplicity;
};

// Exact fractional packing: maximize total weight over the enumerated cycles
// subject to per-vertex load at most 1, solved in rational arithmetic with a
// dual certificate (y >= 0, sum_{v in C} y_v >= 1 for each cycle C, and
// sum y = nu_star).
inline PackingResult pack_cycles(const PlanarDigraph& g, std::size_t limit) {
  PackingResult res;
  res.cycles = enumerate_cycles(g, limit);
  res.nu = nu_exact(g, res.cycles, &res.nu_witness);

  int nc = static_cast<int>(res.cycles.size());
  if (nc == 0) {
    res.nu_star = 0;
    res.rs_n = 0;
    res.rs_k = 1;
    return res;
  }
  std::vector<std::vector<Rat>> A(g.n(), std::vector<Rat>(nc, Rat(0)));
  for (int ci = 0; ci < nc; ++ci)
    for (int v : res.cycles[ci]) A[v][ci] = 1;
  std::vector<Rat> b(g.n(), Rat(1));
  std::vector<Rat> c(nc, Rat(1));
  auto lp = simplex_max(A, b, c);
  res.nu_star = lp.value;
  res.weights = lp.x;
  res.dual = lp.dual;

  // Certificate checks are exact; failure would be an implementation bug.
  {
    Rat dual_sum = 0;
    for (const auto& y : lp.dual) {
      if (y < 0) throw GuaranteeError("negative dual multiplier");
      dual_sum += y;
    }
    if (dual_sum != res.nu_star)
      throw GuaranteeError("dual objective does not match the LP optimum");
    for (int ci = 0; ci < nc; ++ci) {
      Rat cover = 0;
      for (int v : res.cycles[ci]) cover += lp.dual[v];
      if (cover < 1) throw GuaranteeError("dual certificate misses a cycle");
    }
    for (int v = 0; v < g.n(); ++v) {
      Rat load = 0;
      for (int ci = 0; ci < nc; ++ci)
        if (A[v][ci] == 1) load += lp.x[ci];
      if (load > 1) throw GuaranteeError("primal weights overload a vertex");
    }
  }

  // Common-denominator form: nu_star = rs_n / rs_k with an explicit multiset
  // of rs_n cycles where every vertex lies on at most rs_k of them.
  BigInt denom = 1;
  for (const auto& w : res.weights)
    denom = boost::multiprecision::lcm(denom,
                                       boost::multiprecision::denominator(w));
  denom = boost::multiprecision::lcm(
      denom, boost::multiprecision::denominator(res.nu_star));
  res.rs_k = denom;
  res.rs_n = 0;
  res.rs_multiplicity.assign(nc, 0);
  for (int ci = 0; ci < nc; ++ci) {
    Rat scaled = res.weights[ci] * denom;
    res.rs_multiplicity[ci] = boost::multiprecision::numerator(scaled);
    res.rs_n += res.rs_multiplicity[ci];
  }
  return res;
}

struct RatioReport {
  long long nu = 0;
  Rat nu_star;
  Rat ratio;  // nu_star / nu
  double ratio_double = 0.0;
  bool within_proved = true;       // ratio <= 15.95
  bool within_conjectured = true;  // ratio <= 10.22
};

// Ratio of fractional to integral packing; always at most 15.95 for planar
// digraphs, and at most 10.22 if the average-distance conjecture holds.
// A ratio above the proved threshold is a fatal inconsistency.
inline RatioReport ratio_report(const PlanarDigraph& g, std::size_t limit) {
  auto pk = pack_cycles(g, limit);
  if (pk.nu == 0) {
    if (pk.nu_star > 0)
      throw GuaranteeError("fractional packing positive on an acyclic digraph");
    throw std::invalid_argument("ratio undefined: no directed cycles");
  }
  RatioReport rep;
  rep.nu = pk.nu;
  rep.nu_star = pk.nu_star;
  rep.ratio = pk.nu_star / pk.nu;
  rep.ratio_double = to_double(rep.ratio);
  rep.within_proved = rep.ratio <= Rat(1595, 100);
  rep.within_conjectured = rep.ratio <= Rat(1022, 100);
  if (!rep.within_proved)
    throw GuaranteeError("packing ratio exceeds 15.95 on a planar digraph");
  return rep;
}

}  // namespace contactlab
