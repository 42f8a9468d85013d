#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include "contactlab/discharging.hpp"
#include "contactlab/family.hpp"
#include "contactlab/graph.hpp"

namespace contactlab {

struct Coloring {
  std::vector<int> color;  // per curve / vertex
  int palette_size = 0;

  void recount() {
    std::vector<int> used(color);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    palette_size = static_cast<int>(used.size());
  }
};

// Greedy coloring in the given order (smallest-last by default, which stays
// within degeneracy+1 colors).
inline Coloring greedy_coloring(const SimpleGraph& g,
                                const std::vector<int>* order = nullptr) {
  std::vector<int> ord;
  if (order) {
    ord = *order;
  } else {
    ord = smallest_last_order(g);
  }
  Coloring col;
  col.color.assign(g.n, -1);
  std::vector<int> forbidden(g.n, -1);
  for (int v : ord) {
    for (int u : g.adj[v])
      if (col.color[u] >= 0) forbidden[col.color[u]] = v;
    int c = 0;
    while (forbidden[c] == v) ++c;
    col.color[v] = c;
  }
  col.recount();
  return col;
}

// Independent properness verifier: scans every intersecting pair.
inline bool is_proper(const ContactFamily& f, const Coloring& col,
                      std::size_t* checked_pairs = nullptr) {
  std::size_t checked = 0;
  bool ok = true;
  for (auto [a, b] : intersecting_pairs(f)) {
    ++checked;
    if (col.color[a] == col.color[b]) ok = false;
  }
  if (checked_pairs) *checked_pairs = checked;
  return ok;
}

inline bool is_proper(const SimpleGraph& g, const Coloring& col) {
  for (auto [u, v] : g.edges)
    if (col.color[u] == col.color[v]) return false;
  return true;
}

namespace detail {

// Is the graph colorable with at most `k` colors? Backtracking over vertices
// in degree order, new colors introduced one at a time.
inline bool k_colorable(const SimpleGraph& g, int k, std::vector<int>& out) {
  int n = g.n;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
  });
  std::vector<int> color(n, -1);
  auto rec = [&](auto&& self, int idx, int used) -> bool {
    if (idx == n) return true;
    int v = order[idx];
    int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
      bool ok = true;
      for (int u : g.adj[v])
        if (color[u] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[v] = c;
      if (self(self, idx + 1, std::max(used, c + 1))) return true;
      color[v] = -1;
    }
    return false;
  };
  if (!rec(rec, 0, 0)) return false;
  out = color;
  return true;
}

inline int greedy_clique_lower_bound(const SimpleGraph& g) {
  // Grow a clique greedily from each vertex in degree order; lower bound only.
  int best = g.n > 0 ? 1 : 0;
  std::vector<int> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
  });
  for (int s : order) {
    std::vector<int> clique{s};
    for (int u : g.adj[s]) {
      bool ok = true;
      for (int c : clique) {
        bool adjacent = false;
        for (int x : g.adj[u])
          if (x == c) {
            adjacent = true;
            break;
          }
        if (!adjacent && c != u) {
          ok = false;
          break;
        }
      }
      if (ok) clique.push_back(u);
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

}  // namespace detail

// Exact chromatic number by iterative-deepening backtracking; guarded to
// small graphs, intended as a test oracle.
inline int exact_chromatic(const SimpleGraph& g) {
  if (g.n > 30)
    throw std::invalid_argument("exact chromatic number is guarded to <= 30 vertices");
  if (g.n == 0) return 0;
  int lb = detail::greedy_clique_lower_bound(g);
  int ub = greedy_coloring(g).palette_size;
  std::vector<int> tmp;
  for (int k = lb; k < ub; ++k)
    if (detail::k_colorable(g, k, tmp)) return k;
  return ub;
}

// Chooses a color from each list so that all pairs among (u, w, u2', w2')
// except (u, w2') receive distinct colors: list coloring of K4 minus an edge,
// which is degree-choosable, so sizes (2,3,3,2) always suffice. Exhaustive
// search over the truncated lists.
inline std::array<int, 4> extend_k4_minus_edge(
    const std::array<std::vector<int>, 4>& lists) {
  static constexpr std::array<std::size_t, 4> kNeed{2, 3, 3, 2};
  std::array<std::vector<int>, 4> trunc;
  for (int i = 0; i < 4; ++i) {
    if (lists[i].size() < kNeed[i])
      throw std::invalid_argument(
          "list sizes (2,3,3,2) are required for the K4-minus-edge extension");
    trunc[i].assign(lists[i].begin(), lists[i].begin() + kNeed[i]);
  }
  for (int a : trunc[0])
    for (int b : trunc[1])
      for (int c : trunc[2])
        for (int d : trunc[3]) {
          if (a == b || a == c || b == c || b == d || c == d) continue;
          return {a, b, c, d};  // the pair (a, d) may collide
        }
  throw GuaranteeError(
      "K4-minus-edge extension failed despite valid list sizes; "
      "this indicates a bug");
}

// Constructive coloring of a simple k-touching region family. For k >= 490,
// repeatedly delete a reducible configuration and extend the coloring on the
// way back: a low-degree disk has at most k forbidden colors among k+1, and
// the four-disk pattern extends by the list argument. Below the threshold
// this falls back to plain greedy (no k+1 guarantee).
inline Coloring color_regions(const ContactFamily& f, int k) {
  if (f.kind != FamilyKind::Regions)
    throw std::invalid_argument("region coloring requires a region family");
  require_valid(f, /*require_simple=*/true);
  for (const auto& p : f.contacts)
    if (p.members.size() > static_cast<std::size_t>(k))
      throw std::invalid_argument("family is not k-touching for the given k");

  if (k < DischargeConstants::k_threshold) {
    auto g = intersection_graph(f);
    return greedy_coloring(g);
  }

  struct Step {
    Reducible red;
    std::vector<int> curves;  // original indices removed at this step
  };
  auto points_of = detail::point_incidence(f);
  std::vector<char> present(f.n(), 1);
  int remaining = f.n();
  std::vector<Step> steps;
  detail::MarkBuf buf;

  while (remaining > 0) {
    // Cheap pass first: any present disk with at most k loose neighbors.
    int found = -1, found_count = -1;
    for (int c = 0; c < f.n() && found < 0; ++c) {
      if (!present[c]) continue;
      int lc = detail::loose_count_of(f, points_of, present, c, buf);
      if (lc <= k) {
        found = c;
        found_count = lc;
      }
    }
    Step step;
    if (found >= 0) {
      step.red.variant = Reducible::LowDegreeDisk;
      step.red.disk = found;
      step.red.loose_count = found_count;
      step.curves = {found};
    } else {
      // Materialize the restricted family to run the graph-level search.
      std::vector<char> drop(f.n(), 0);
      for (int c = 0; c < f.n(); ++c) drop[c] = present[c] ? 0 : 1;
      auto [sub, new_to_old] = remove_curves(f, drop);
      auto r = detail::find_reducible_unchecked(sub, k);
      if (r.variant != Reducible::BadQuad)
        throw GuaranteeError("inconsistent reduction search");
      step.red = r;
      for (int i = 0; i < 4; ++i) {
        step.red.quad[i] = new_to_old[r.quad[i]];
        step.curves.push_back(new_to_old[r.quad[i]]);
      }
    }
    for (int c : step.curves) {
      present[c] = 0;
      --remaining;
    }
    steps.push_back(std::move(step));
  }

  // Replay in reverse, extending the partial coloring.
  Coloring col;
  col.color.assign(f.n(), -1);
  int palette = k + 1;
  auto free_colors = [&](int c) {
    std::vector<char> used(palette, 0);
    buf.reset(f.n());
    for (int pi : points_of[c])
      for (int d : f.contacts[pi].members) {
        if (d == c || !present[d] || buf.test(d)) continue;
        buf.set(d);
        if (col.color[d] >= 0) used[col.color[d]] = 1;
      }
    std::vector<int> free;
    for (int x = 0; x < palette; ++x)
      if (!used[x]) free.push_back(x);
    return free;
  };

  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    if (it->red.variant == Reducible::LowDegreeDisk) {
      int c = it->red.disk;
      present[c] = 1;
      auto free = free_colors(c);
      if (free.empty())
        throw GuaranteeError("no free color for a low-degree disk");
      col.color[c] = free.front();
    } else {
      for (int c : it->red.quad) present[c] = 1;
      std::array<std::vector<int>, 4> lists;
      for (int i = 0; i < 4; ++i) lists[i] = free_colors(it->red.quad[i]);
      auto chosen = extend_k4_minus_edge(lists);
      for (int i = 0; i < 4; ++i) col.color[it->red.quad[i]] = chosen[i];
    }
  }

  col.recount();
  if (!is_proper(f, col))
    throw GuaranteeError("constructed region coloring failed the pair scan");
  return col;
}

}  // namespace contactlab
