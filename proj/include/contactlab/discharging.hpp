#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "contactlab/family.hpp"
#include "contactlab/rational.hpp"
#include "contactlab/region_graph.hpp"

namespace contactlab {

// epsilon = 1/4, big threshold b = 18/epsilon = 72, and the reduction
// guarantee holds from k >= 7b - 14 = 490 on.
struct DischargeConstants {
  static Rat epsilon() { return Rat(1, 4); }
  static constexpr int big_threshold = 72;
  static constexpr int k_threshold = 490;
};

struct Site {
  enum Kind { Vertex, Face };
  Kind kind;
  int index;
};

struct Transfer {
  int rule;  // 1..7
  Site from;
  Site to;
  Rat amount;
};

// Charges on vertices and faces plus the full transfer log. On a connected
// graph the total is exactly -12 and every rule application preserves it.
struct ChargeState {
  std::vector<Rat> vertex_charge;
  std::vector<Rat> face_charge;
  std::vector<Transfer> log;

  Rat total() const {
    Rat t = 0;
    for (const auto& c : vertex_charge) t += c;
    for (const auto& c : face_charge) t += c;
    return t;
  }
};

// Charges from the degree formulas alone: 2 d(v) - 6 on vertices, d(f) - 6 on
// faces. Totals are only meaningful per connected component (each sums to
// -12 by Euler's formula).
inline ChargeState formula_charges(const PlaneBipartiteGraph& g,
                                   const FaceSet& faces) {
  ChargeState s;
  s.vertex_charge.reserve(g.n());
  for (int v = 0; v < g.n(); ++v) s.vertex_charge.emplace_back(2 * g.degree(v) - 6);
  s.face_charge.reserve(faces.count());
  for (std::size_t fi = 0; fi < faces.count(); ++fi)
    s.face_charge.emplace_back(faces.degree(static_cast<int>(fi)) - 6);
  return s;
}

inline ChargeState initial_charges(const PlaneBipartiteGraph& g,
                                   const FaceSet& faces) {
  if (!is_connected(g))
    throw std::invalid_argument("initial charges require a connected graph");
  return formula_charges(g, faces);
}

// Per-component charge totals; rules are local, so each component of any
// graph must total -12 both before and after redistribution.
inline std::vector<Rat> component_totals(const PlaneBipartiteGraph& g,
                                         const FaceSet& faces,
                                         const ChargeState& s) {
  int comps = 0;
  auto comp = component_ids(g, &comps);
  std::vector<Rat> totals(comps, Rat(0));
  for (int v = 0; v < g.n(); ++v) totals[comp[v]] += s.vertex_charge[v];
  for (std::size_t fi = 0; fi < faces.count(); ++fi)
    if (!faces.faces[fi].empty())
      totals[comp[faces.faces[fi].front().v]] += s.face_charge[fi];
  return totals;
}

namespace detail {

inline bool is_disk(const PlaneBipartiteGraph& g, int v) {
  return g.vertices[v].kind == VertexKind::Disk;
}
inline bool is_contact(const PlaneBipartiteGraph& g, int v) {
  return g.vertices[v].kind == VertexKind::Contact;
}
inline bool is_big(const PlaneBipartiteGraph& g, int v) {
  return g.degree(v) >= DischargeConstants::big_threshold;
}

// The neighbor of a 2-vertex u other than v.
inline int other_neighbor(const PlaneBipartiteGraph& g, int u, int v) {
  return g.rot[u][0] == v ? g.rot[u][1] : g.rot[u][0];
}

}  // namespace detail

// A bad vertex is a disk 3-vertex adjacent to two contact 2-vertices whose
// far disks have degree 3, with all three incident faces of degree 6.
inline std::vector<char> classify_bad_vertices(const PlaneBipartiteGraph& g,
                                               const FaceSet& faces) {
  std::vector<char> bad(g.n(), 0);
  for (int v = 0; v < g.n(); ++v) {
    if (!detail::is_disk(g, v) || g.degree(v) != 3) continue;
    int qualifying = 0;
    for (int u : g.rot[v]) {
      if (g.degree(u) != 2) continue;
      int far = detail::other_neighbor(g, u, v);
      if (g.degree(far) == 3) ++qualifying;
    }
    if (qualifying < 2) continue;
    bool faces_ok = true;
    for (int s = 0; s < 3; ++s)
      if (faces.degree(faces.face_at[v][s]) != 6) {
        faces_ok = false;
        break;
      }
    if (faces_ok) bad[v] = 1;
  }
  return bad;
}

// Applies the seven redistribution rules. Every rule reads only the original
// graph (degrees, face degrees, badness), never intermediate charges, so the
// textual rule order cannot change the outcome.
//
//  R1  big contact v, each rotation window (u1,u2,u3): if v is the unique big
//      neighbor of u2, v gives 2-e to u2; otherwise v gives 1 to u2 and
//      (1-e)/2 to each of u1, u3.
//  R2  big contact vertices give e to each bad neighbor.
//  R3  small contact vertices of degree >= 4 give 1/2 to each neighbor.
//  R4  contact 3-vertices adjacent to some >=3-vertex give e to each
//      2-neighbor.
//  R5  disk vertices of degree >= 4 give 1+e to each neighbor of degree <= 3.
//  R6  disk 3-vertex v, neighbor u of degree <= 3: if u has degree 3, or
//      degree 2 with its far neighbor of degree >= 4, v gives 1-e, else 1.
//  R7  faces of degree >= 8 give 1/2 to each incident disk vertex.
inline ChargeState apply_rules(const PlaneBipartiteGraph& g,
                               const FaceSet& faces, const ChargeState& init) {
  const Rat eps = DischargeConstants::epsilon();
  ChargeState s = init;
  auto bad = classify_bad_vertices(g, faces);
  auto pay_vv = [&s](int rule, int from, int to, Rat amount) {
    s.vertex_charge[from] -= amount;
    s.vertex_charge[to] += amount;
    s.log.push_back({rule, {Site::Vertex, from}, {Site::Vertex, to}, std::move(amount)});
  };

  auto count_big_neighbors = [&g](int v) {
    int c = 0;
    for (int u : g.rot[v])
      if (detail::is_big(g, u)) ++c;
    return c;
  };

  // R1
  for (int v = 0; v < g.n(); ++v) {
    if (!detail::is_contact(g, v) || !detail::is_big(g, v)) continue;
    int d = g.degree(v);
    for (int i = 0; i < d; ++i) {
      int u1 = g.rot[v][(i + d - 1) % d];
      int u2 = g.rot[v][i];
      int u3 = g.rot[v][(i + 1) % d];
      if (count_big_neighbors(u2) == 1) {
        pay_vv(1, v, u2, 2 - eps);
      } else {
        pay_vv(1, v, u2, 1);
        pay_vv(1, v, u1, (1 - eps) / 2);
        pay_vv(1, v, u3, (1 - eps) / 2);
      }
    }
  }

  // R2
  for (int v = 0; v < g.n(); ++v) {
    if (!detail::is_contact(g, v) || !detail::is_big(g, v)) continue;
    for (int u : g.rot[v])
      if (bad[u]) pay_vv(2, v, u, eps);
  }

  // R3
  for (int v = 0; v < g.n(); ++v) {
    if (!detail::is_contact(g, v) || detail::is_big(g, v) || g.degree(v) < 4)
      continue;
    for (int u : g.rot[v]) pay_vv(3, v, u, Rat(1, 2));
  }

  // R4
  for (int v = 0; v < g.n(); ++v) {
    if (!detail::is_contact(g, v) || g.degree(v) != 3) continue;
    bool has_ge3 = false;
    for (int u : g.rot[v])
      if (g.degree(u) >= 3) has_ge3 = true;
    if (!has_ge3) continue;
    for (int u : g.rot[v])
      if (g.degree(u) == 2) pay_vv(4, v, u, eps);
  }

  // R5
  for (int v = 0; v < g.n(); ++v) {
    if (!detail::is_disk(g, v) || g.degree(v) < 4) continue;
    for (int u : g.rot[v])
      if (g.degree(u) <= 3) pay_vv(5, v, u, 1 + eps);
  }

  // R6
  for (int v = 0; v < g.n(); ++v) {
    if (!detail::is_disk(g, v) || g.degree(v) != 3) continue;
    for (int u : g.rot[v]) {
      if (g.degree(u) > 3) continue;
      bool reduced = g.degree(u) == 3 ||
                     (g.degree(u) == 2 &&
                      g.degree(detail::other_neighbor(g, u, v)) >= 4);
      pay_vv(6, v, u, reduced ? 1 - eps : Rat(1));
    }
  }

  // R7: once per distinct disk vertex on the face boundary.
  for (std::size_t fi = 0; fi < faces.count(); ++fi) {
    int f = static_cast<int>(fi);
    if (faces.degree(f) < 8) continue;
    std::vector<int> disks;
    for (const auto& d : faces.faces[fi])
      if (detail::is_disk(g, d.v)) disks.push_back(d.v);
    std::sort(disks.begin(), disks.end());
    disks.erase(std::unique(disks.begin(), disks.end()), disks.end());
    for (int v : disks) {
      s.face_charge[f] -= Rat(1, 2);
      s.vertex_charge[v] += Rat(1, 2);
      s.log.push_back({7, {Site::Face, f}, {Site::Vertex, v}, Rat(1, 2)});
    }
  }
  return s;
}

struct DischargeReport {
  Rat initial_total;
  Rat final_total;
  bool conserved = false;
  std::vector<std::pair<Site, Rat>> negative;  // sites with negative final charge
};

// Runs the full pipeline and reports the exact totals. On instances where all
// structural diagnostics hold and k >= 490, no negative site can remain; a
// negative site therefore always points at a violated diagnostic, i.e. at a
// reduction opportunity.
inline DischargeReport verify_discharging(const PlaneBipartiteGraph& g) {
  auto faces = trace_faces(g);
  auto init = initial_charges(g, faces);
  auto fin = apply_rules(g, faces, init);
  DischargeReport rep;
  rep.initial_total = init.total();
  rep.final_total = fin.total();
  rep.conserved = rep.initial_total == rep.final_total;
  for (int v = 0; v < g.n(); ++v)
    if (fin.vertex_charge[v] < 0)
      rep.negative.push_back({{Site::Vertex, v}, fin.vertex_charge[v]});
  for (std::size_t fi = 0; fi < fin.face_charge.size(); ++fi)
    if (fin.face_charge[fi] < 0)
      rep.negative.push_back(
          {{Site::Face, static_cast<int>(fi)}, fin.face_charge[fi]});
  return rep;
}

// A reducible configuration: either a disk with at most k loose neighbors
// (delete, recolor greedily) or the four-disk pattern hanging off a big
// contact vertex with three consecutive bad neighbors (delete, recolor by the
// degree-choosability of K4 minus an edge). Indices refer to family curves.
struct Reducible {
  enum Variant { LowDegreeDisk, BadQuad } variant;
  int disk = -1;            // LowDegreeDisk
  int loose_count = -1;     // LowDegreeDisk
  std::array<int, 4> quad{{-1, -1, -1, -1}};  // u, w, u2', w2'
  int anchor_point = -1;    // BadQuad: the big contact point
};

// Locates three consecutive bad neighbors u,w,x around a big contact vertex
// and derives the two far disks from the degree-6 corner faces:
// the face through darts (u->v),(v->w) reads v,u,...,s1,...,w with s1 the
// disk opposite v; likewise s2 on the (w,x) corner face. Returns disk vertex
// ids {u, w, s1, s2} and the anchor v.
inline std::optional<std::array<int, 5>> locate_bad_quad(
    const PlaneBipartiteGraph& g, const FaceSet& faces,
    const std::vector<char>& bad) {
  // Walks the face containing dart (v, slot) and returns the vertex three
  // darts ahead of v on the walk (the far disk of the 6-face). The corner
  // face between rotation-consecutive neighbors u,w of v is the face of the
  // dart v->w: its walk reads ..., u->v, v->w, w->w1, w1->s, ...
  auto far_disk = [&](int v, int slot) -> int {
    int fi = faces.face_at[v][slot];
    if (faces.degree(fi) != 6) return -1;
    int cv = v, cs = slot;
    for (int step = 0; step < 3; ++step) {
      int u = g.rot[cv][cs];
      int j = g.twin[cv][cs];
      cv = u;
      cs = (j + 1) % g.degree(u);
    }
    return cv;
  };
  for (int v = 0; v < g.n(); ++v) {
    if (!detail::is_contact(g, v) || !detail::is_big(g, v)) continue;
    int d = g.degree(v);
    for (int i = 0; i < d; ++i) {
      int u = g.rot[v][i];
      int w = g.rot[v][(i + 1) % d];
      int x = g.rot[v][(i + 2) % d];
      if (!bad[u] || !bad[w] || !bad[x]) continue;
      int s1 = far_disk(v, (i + 1) % d);  // corner (u,w)
      int s2 = far_disk(v, (i + 2) % d);  // corner (w,x)
      if (s1 < 0 || s2 < 0) continue;
      if (!detail::is_disk(g, s1) || !detail::is_disk(g, s2)) continue;
      if (g.degree(s1) != 3 || g.degree(s2) != 3) continue;
      if (s1 == s2 || s1 == u || s1 == w || s2 == u || s2 == w) continue;
      return std::array<int, 5>{u, w, s1, s2, v};
    }
  }
  return std::nullopt;
}

namespace detail {

// Loose-neighbor count of curve c inside the subfamily selected by `present`
// (empty = everything), scanning only the points incident to c.
inline int loose_count_of(const ContactFamily& f,
                          const std::vector<std::vector<int>>& points_of,
                          const std::vector<char>& present, int c,
                          MarkBuf& buf) {
  buf.reset(f.n());
  int count = 0;
  for (int pi : points_of[c]) {
    for (int d : f.contacts[pi].members) {
      if (d == c || (!present.empty() && !present[d])) continue;
      if (!buf.test(d)) {
        buf.set(d);
        ++count;
      }
    }
  }
  return count;
}

inline std::vector<std::vector<int>> point_incidence(const ContactFamily& f) {
  std::vector<std::vector<int>> points_of(f.n());
  for (int pi = 0; pi < static_cast<int>(f.contacts.size()); ++pi)
    for (int c : f.contacts[pi].members) points_of[c].push_back(pi);
  return points_of;
}

// Core search, preconditions already verified by the public wrapper.
inline Reducible find_reducible_unchecked(const ContactFamily& f, int k) {
  auto points_of = point_incidence(f);
  MarkBuf buf;
  std::vector<char> all;
  for (int c = 0; c < f.n(); ++c) {
    int lc = loose_count_of(f, points_of, all, c, buf);
    if (lc <= k) {
      Reducible r;
      r.variant = Reducible::LowDegreeDisk;
      r.disk = c;
      r.loose_count = lc;
      return r;
    }
  }
  auto g = build_contact_graph(f);
  auto faces = trace_faces(g);
  auto bad = classify_bad_vertices(g, faces);
  auto quad = locate_bad_quad(g, faces, bad);
  if (!quad)
    throw GuaranteeError(
        "no reducible configuration found in a simple k-touching region "
        "family with k >= 490; this indicates a bug or an invalid instance");
  Reducible r;
  r.variant = Reducible::BadQuad;
  for (int i = 0; i < 4; ++i) r.quad[i] = g.vertices[(*quad)[i]].ref;
  r.anchor_point = g.vertices[(*quad)[4]].ref;
  return r;
}

}  // namespace detail

// Every simple k-touching region family with k >= 490 contains one of the two
// reducible configurations; failing to find one is reported as a guarantee
// violation.
inline Reducible find_reducible(const ContactFamily& f, int k) {
  if (f.kind != FamilyKind::Regions)
    throw std::invalid_argument("reductions are defined for region families");
  if (k < DischargeConstants::k_threshold)
    throw std::invalid_argument("reduction guarantee requires k >= 490");
  if (f.n() == 0) throw std::invalid_argument("empty family");
  require_valid(f, /*require_simple=*/true);
  for (const auto& p : f.contacts)
    if (p.members.size() > static_cast<std::size_t>(k))
      throw std::invalid_argument("family is not k-touching for the given k");
  return detail::find_reducible_unchecked(f, k);
}

}  // namespace contactlab
