#pragma once

#include <string>
#include <vector>

#include "contactlab/family.hpp"
#include "contactlab/region_graph.hpp"

namespace fixtures {

using namespace contactlab;

// n regions in a ring, each touching the next at one point. The contact
// graph is a cycle of length 2n.
inline ContactFamily necklace(int n, int declared_k = 2) {
  ContactFamily f;
  f.kind = FamilyKind::Regions;
  f.declared_k = declared_k;
  for (int i = 0; i < n; ++i) f.curve_ids.push_back("r" + std::to_string(i));
  f.parent.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    ContactPoint p;
    p.id = "p" + std::to_string(i);
    p.members = {i, (i + 1) % n};
    p.cyclic_order = p.members;
    f.contacts.push_back(std::move(p));
  }
  f.boundary_order.assign(n, {});
  for (int i = 0; i < n; ++i)
    f.boundary_order[i] = {(i + n - 1) % n, i};
  return f;
}

// n regions in a row, consecutive ones touching once; the graph is a path.
inline ContactFamily chain(int n, int declared_k = 2) {
  ContactFamily f;
  f.kind = FamilyKind::Regions;
  f.declared_k = declared_k;
  for (int i = 0; i < n; ++i) f.curve_ids.push_back("r" + std::to_string(i));
  f.parent.assign(n, -1);
  for (int i = 0; i + 1 < n; ++i) {
    ContactPoint p;
    p.id = "p" + std::to_string(i);
    p.members = {i, i + 1};
    p.cyclic_order = p.members;
    f.contacts.push_back(std::move(p));
  }
  f.boundary_order.assign(n, {});
  for (int i = 0; i < n; ++i) {
    if (i > 0) f.boundary_order[i].push_back(i - 1);
    if (i + 1 < n) f.boundary_order[i].push_back(i);
  }
  return f;
}

inline ContactFamily two_regions(int declared_k = 2) { return chain(2, declared_k); }

// The ring gadget as a raw plane graph (usable below the k >= 490 floor of
// the family generator): hub contact vertex v over D bad disks t_i, a second
// hub y over D disks q_i, contact 2-vertices a_i {q_{i-1}, t_i} and
// b_i {t_i, q_i}. All faces have degree 6.
inline PlaneBipartiteGraph ring_gadget_graph(int D) {
  PlaneBipartiteGraph g;
  // vertex layout: t_0..t_{D-1}, q_0..q_{D-1} disks; v, y, a_0.., b_0.. contacts
  int t0 = 0, q0 = D, v = 2 * D, y = 2 * D + 1, a0 = 2 * D + 2, b0 = 3 * D + 2;
  auto t = [&](int i) { return t0 + ((i % D) + D) % D; };
  auto q = [&](int i) { return q0 + ((i % D) + D) % D; };
  auto a = [&](int i) { return a0 + ((i % D) + D) % D; };
  auto b = [&](int i) { return b0 + ((i % D) + D) % D; };
  for (int i = 0; i < 2 * D; ++i) g.vertices.push_back({VertexKind::Disk, i});
  for (int i = 0; i < 2 * D + 2; ++i)
    g.vertices.push_back({VertexKind::Contact, i});
  g.rot.assign(4 * D + 2, {});
  for (int i = 0; i < D; ++i) g.rot[t(i)] = {v, a(i), b(i)};
  for (int i = 0; i < D; ++i) g.rot[q(i)] = {b(i), y, a(i + 1)};
  for (int i = 0; i < D; ++i) g.rot[v].push_back(t(i));
  for (int i = D - 1; i >= 0; --i) g.rot[y].push_back(q(i));
  for (int i = 0; i < D; ++i) g.rot[a(i)] = {t(i), q(i - 1)};
  for (int i = 0; i < D; ++i) g.rot[b(i)] = {t(i), q(i)};
  g.index_twins();
  return g;
}

// Bipartite even cycle of length 2n as a plane graph (n disks, n contacts).
inline PlaneBipartiteGraph cycle_graph(int n) {
  PlaneBipartiteGraph g;
  for (int i = 0; i < n; ++i) g.vertices.push_back({VertexKind::Disk, i});
  for (int i = 0; i < n; ++i) g.vertices.push_back({VertexKind::Contact, i});
  g.rot.assign(2 * n, {});
  for (int i = 0; i < n; ++i) {
    // disk i sits between contacts i-1 and i
    g.rot[i] = {n + (i + n - 1) % n, n + i};
    g.rot[n + i] = {i, (i + 1) % n};
  }
  g.index_twins();
  return g;
}

// Path with e edges, alternating disk/contact, as a plane graph.
inline PlaneBipartiteGraph path_graph(int e) {
  PlaneBipartiteGraph g;
  int n = e + 1;
  for (int i = 0; i < n; ++i)
    g.vertices.push_back(
        {i % 2 == 0 ? VertexKind::Disk : VertexKind::Contact, i});
  g.rot.assign(n, {});
  for (int i = 0; i < n; ++i) {
    if (i > 0) g.rot[i].push_back(i - 1);
    if (i + 1 < n) g.rot[i].push_back(i + 1);
  }
  g.index_twins();
  return g;
}

}  // namespace fixtures
