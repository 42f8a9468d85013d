#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace contactlab {

// Plain undirected simple graph; vertices are dense indices.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, each unordered pair once
  std::vector<std::vector<int>> adj;

  static SimpleGraph from_pairs(int n, std::vector<std::pair<int, int>> pairs) {
    SimpleGraph g;
    g.n = n;
    for (auto& [u, v] : pairs)
      if (u > v) std::swap(u, v);
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    g.edges = std::move(pairs);
    g.adj.assign(n, {});
    for (auto [u, v] : g.edges) {
      g.adj[u].push_back(v);
      g.adj[v].push_back(u);
    }
    return g;
  }

  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  std::size_t m() const { return edges.size(); }
};

// Repeatedly extracts a minimum-degree vertex; the reverse extraction order is
// the smallest-last order. Also reports the degeneracy.
inline std::vector<int> smallest_last_order(const SimpleGraph& g,
                                            int* degeneracy_out = nullptr) {
  int n = g.n;
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  int maxdeg = 0;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    maxdeg = std::max(maxdeg, deg[v]);
  }
  std::vector<std::vector<int>> bucket(maxdeg + 1);
  for (int v = 0; v < n; ++v) bucket[deg[v]].push_back(v);
  std::vector<int> extraction;
  extraction.reserve(n);
  int degeneracy = 0;
  int cur = 0;
  for (int step = 0; step < n; ++step) {
    while (cur <= maxdeg && bucket[cur].empty()) ++cur;
    // Vertices whose degree dropped may sit in stale buckets; skip them.
    while (true) {
      while (cur <= maxdeg && bucket[cur].empty()) ++cur;
      int v = bucket[cur].back();
      if (removed[v] || deg[v] != cur) {
        bucket[cur].pop_back();
        if (!removed[v]) bucket[deg[v]].push_back(v);
        continue;
      }
      bucket[cur].pop_back();
      removed[v] = 1;
      degeneracy = std::max(degeneracy, cur);
      extraction.push_back(v);
      for (int u : g.adj[v])
        if (!removed[u]) {
          --deg[u];
          bucket[deg[u]].push_back(u);
          if (deg[u] < cur) cur = deg[u];
        }
      break;
    }
  }
  std::reverse(extraction.begin(), extraction.end());
  if (degeneracy_out) *degeneracy_out = degeneracy;
  return extraction;
}

inline int degeneracy(const SimpleGraph& g) {
  int d = 0;
  smallest_last_order(g, &d);
  return d;
}

}  // namespace contactlab
