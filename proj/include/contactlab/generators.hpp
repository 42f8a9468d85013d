#pragma once

#include <string>
#include <vector>

#include "contactlab/family.hpp"
#include "contactlab/rng.hpp"

namespace contactlab {

// k regions through one shared point plus a wrapper region touching each of
// them at a private point. The intersection graph is complete on k+1
// vertices, the family is simple and k-touching, so chromatic number and
// clique number both equal k+1.
inline ContactFamily gen_point_clique(int k) {
  if (k < 2) throw std::invalid_argument("point clique requires k >= 2");
  ContactFamily f;
  f.kind = FamilyKind::Regions;
  f.declared_k = k;
  for (int i = 0; i < k; ++i) f.curve_ids.push_back("r" + std::to_string(i));
  f.curve_ids.push_back("w");
  int wrapper = k;
  f.parent.assign(k + 1, -1);

  ContactPoint center;
  center.id = "P";
  center.cyclic_order = std::vector<int>{};
  for (int i = 0; i < k; ++i) {
    center.members.push_back(i);
    center.cyclic_order->push_back(i);
  }
  f.contacts.push_back(std::move(center));
  for (int i = 0; i < k; ++i) {
    ContactPoint q;
    q.id = "q" + std::to_string(i);
    q.members = {i, wrapper};
    q.cyclic_order = std::vector<int>{i, wrapper};
    f.contacts.push_back(std::move(q));
  }

  f.boundary_order.assign(k + 1, {});
  for (int i = 0; i < k; ++i) f.boundary_order[i] = {0, i + 1};
  // The wrapper sees the private points in reversed order; together with the
  // center rotation this yields a genus-0 rotation system (k faces, Euler 2).
  for (int i = k - 1; i >= 0; --i) f.boundary_order[wrapper].push_back(i + 1);
  return f;
}

// Near-extremal crossing family: a distinguished curve c, two chains of k-2
// nested curves inside it, and n-2k+4 outside curves. Each outside curve
// touches each chain at one point containing the outside curve, c and the
// whole chain (multiplicity exactly k). The c-crossing pair count is
// 2(k-2)(n-2k+4), so the count divided by n approaches 2k-4 from below.
inline ContactFamily gen_fpb_extremal(int n, int k) {
  if (k < 3) throw std::invalid_argument("extremal family requires k >= 3");
  if (n < 2 * k - 2)
    throw std::invalid_argument("extremal family requires n >= 2k-2");
  ContactFamily f;
  f.kind = FamilyKind::Curves;
  f.declared_k = k;
  int outside = n - 2 * k + 4;
  f.curve_ids.push_back("c");
  for (int i = 1; i <= k - 2; ++i) f.curve_ids.push_back("a" + std::to_string(i));
  for (int i = 1; i <= k - 2; ++i) f.curve_ids.push_back("b" + std::to_string(i));
  for (int i = 0; i < outside; ++i) f.curve_ids.push_back("o" + std::to_string(i));
  auto nest_a = [k](int i) { return i; };          // a_i, 1-based
  auto nest_b = [k](int i) { return k - 2 + i; };  // b_i, 1-based
  int first_outside = 2 * k - 3;

  f.parent.assign(f.n(), -1);
  f.parent[nest_a(1)] = 0;
  f.parent[nest_b(1)] = 0;
  for (int i = 2; i <= k - 2; ++i) {
    f.parent[nest_a(i)] = nest_a(i - 1);
    f.parent[nest_b(i)] = nest_b(i - 1);
  }

  for (int j = 0; j < outside; ++j) {
    ContactPoint pa;
    pa.id = "pa" + std::to_string(j);
    pa.members.push_back(first_outside + j);
    pa.members.push_back(0);
    for (int i = 1; i <= k - 2; ++i) pa.members.push_back(nest_a(i));
    f.contacts.push_back(std::move(pa));
    ContactPoint pb;
    pb.id = "pb" + std::to_string(j);
    pb.members.push_back(first_outside + j);
    pb.members.push_back(0);
    for (int i = 1; i <= k - 2; ++i) pb.members.push_back(nest_b(i));
    f.contacts.push_back(std::move(pb));
  }
  return f;
}

// Random laminar curve family. Each curve nests under a uniformly random
// earlier curve with probability nest_prob. Contact points are grown from a
// sampled pair and closed under separation (a point on two curves lies on
// every curve separating them); candidates exceeding multiplicity k are
// rejected. Bounded retries, deterministic for a given seed.
inline ContactFamily gen_random_curves(int n, int k, std::uint64_t seed,
                                       double nest_prob) {
  if (n < 2 || k < 2)
    throw std::invalid_argument("random family requires n >= 2, k >= 2");
  ContactFamily f;
  f.kind = FamilyKind::Curves;
  f.declared_k = k;
  SplitMix64 rng = SplitMix64::stream(seed, 0);
  f.parent.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    f.curve_ids.push_back("c" + std::to_string(i));
    if (i > 0 && rng.bernoulli(nest_prob))
      f.parent[i] = static_cast<int>(rng.below(i));
  }

  auto close_under_separation = [&f](std::vector<int> s) {
    static thread_local detail::MarkBuf in;
    in.reset(f.n());
    for (int c : s) in.set(c);
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        for (int c : separators(f, s[i], s[j]))
          if (!in.test(c)) {
            in.set(c);
            s.push_back(c);  // grows the loop bounds; reruns against new members
          }
    return s;
  };

  int target = 2 * n;
  int attempts = 8 * n;
  int made = 0;
  while (made < target && attempts-- > 0) {
    int a = static_cast<int>(rng.below(n));
    int b = static_cast<int>(rng.below(n));
    if (a == b) continue;
    auto members = close_under_separation({a, b});
    if (static_cast<int>(members.size()) > k) continue;
    ContactPoint p;
    p.id = "p" + std::to_string(made);
    p.members = std::move(members);
    f.contacts.push_back(std::move(p));
    ++made;
  }
  return f;
}

// Region family realizing the irreducible local pattern: a hub contact point
// of multiplicity k whose k incident disks t_i are all bad (disk 3-vertices
// between contact 2-vertices whose far disks have degree 3, all faces of
// degree 6), interleaved with k disks q_i sharing a second hub. Every disk
// has exactly k+1 loose neighbors, so no single-disk reduction exists and the
// four-disk reduction is forced.
inline ContactFamily gen_bad_quad_fixture(int k) {
  if (k < 490) throw std::invalid_argument("bad-quad fixture requires k >= 490");
  int D = k;
  ContactFamily f;
  f.kind = FamilyKind::Regions;
  f.declared_k = k;
  for (int i = 0; i < D; ++i) f.curve_ids.push_back("t" + std::to_string(i));
  for (int i = 0; i < D; ++i) f.curve_ids.push_back("q" + std::to_string(i));
  auto t = [](int i) { return i; };
  auto q = [D](int i) { return D + ((i % D) + D) % D; };
  f.parent.assign(2 * D, -1);

  // Point indices: 0 = v hub (all t), 1 = y hub (all q),
  // 2+i = a_i {q_{i-1}, t_i}, 2+D+i = b_i {t_i, q_i}.
  ContactPoint hub_v;
  hub_v.id = "v";
  hub_v.cyclic_order = std::vector<int>{};
  for (int i = 0; i < D; ++i) {
    hub_v.members.push_back(t(i));
    hub_v.cyclic_order->push_back(t(i));
  }
  f.contacts.push_back(std::move(hub_v));
  ContactPoint hub_y;
  hub_y.id = "y";
  hub_y.cyclic_order = std::vector<int>{};
  for (int i = D - 1; i >= 0; --i) {  // reversed: opposite orientation
    hub_y.members.push_back(q(i));
    hub_y.cyclic_order->push_back(q(i));
  }
  f.contacts.push_back(std::move(hub_y));
  for (int i = 0; i < D; ++i) {
    ContactPoint a;
    a.id = "a" + std::to_string(i);
    a.members = {t(i), q(i - 1)};
    a.cyclic_order = std::vector<int>{t(i), q(i - 1)};
    f.contacts.push_back(std::move(a));
  }
  for (int i = 0; i < D; ++i) {
    ContactPoint b;
    b.id = "b" + std::to_string(i);
    b.members = {t(i), q(i)};
    b.cyclic_order = std::vector<int>{t(i), q(i)};
    f.contacts.push_back(std::move(b));
  }

  auto a_pt = [D](int i) { return 2 + ((i % D) + D) % D; };
  auto b_pt = [D](int i) { return 2 + D + ((i % D) + D) % D; };
  f.boundary_order.assign(2 * D, {});
  for (int i = 0; i < D; ++i) f.boundary_order[t(i)] = {0, a_pt(i), b_pt(i)};
  for (int i = 0; i < D; ++i) f.boundary_order[q(i)] = {b_pt(i), 1, a_pt(i + 1)};
  return f;
}

}  // namespace contactlab
