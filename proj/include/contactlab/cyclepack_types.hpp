#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace contactlab {

// Directed graph assumed planar. Parallel arcs are forbidden, antiparallel
// pairs allowed. The optional rotation lists, per vertex, the incident arc
// indices (regardless of direction) in cyclic order; when present it is
// checked against Euler's formula.
struct PlanarDigraph {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> arcs;
  std::optional<std::vector<std::vector<int>>> rotation;

  int n() const { return static_cast<int>(labels.size()); }

  static PlanarDigraph from_arcs(int n, std::vector<std::pair<int, int>> a) {
    PlanarDigraph g;
    g.labels.reserve(n);
    for (int i = 0; i < n; ++i) g.labels.push_back("v" + std::to_string(i));
    g.arcs = std::move(a);
    return g;
  }
};

}  // namespace contactlab
