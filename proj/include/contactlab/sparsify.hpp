#pragma once

#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "contactlab/bounds.hpp"
#include "contactlab/family.hpp"
#include "contactlab/rng.hpp"

namespace contactlab {

struct SparsifyOutcome {
  double delta = 0.0;
  double p = 0.0;  // delta / k_effective
  std::uint64_t trials = 0;
  double mean_good_edges = 0.0;
  double std_err = 0.0;
  double lower_bound = 0.0;  // p^2 e^-delta m (1 + delta(1 - alpha - 2/k))
  double upper_bound = 0.0;  // 3 p n
  bool vacuous = false;      // lower > upper: nothing to verify
  std::size_t n = 0;
  std::size_t m = 0;
  int k_effective = 0;
  double alpha = 0.0;
};

// Monte-Carlo check of the sparsification step: keep each curve independently
// with probability p = delta/k and count the edges whose witness point kept
// a, b, at most one other curve and no separating curve. The witness x(a,b)
// is the first contact point (in file order) containing both, so runs are
// reproducible. The mean is compared against the analytic envelope.
inline SparsifyOutcome sparsify_experiment(const ContactFamily& f, double delta,
                                           std::uint64_t trials,
                                           std::uint64_t seed) {
  if (f.kind != FamilyKind::Curves)
    throw std::invalid_argument("sparsification applies to curve families");
  require_valid(f);
  auto pairs = intersecting_pairs(f);
  if (pairs.empty())
    throw std::invalid_argument("sparsification requires intersecting pairs");

  SparsifyOutcome out;
  out.delta = delta;
  out.trials = trials;
  out.n = static_cast<std::size_t>(f.n());
  out.m = pairs.size();
  for (const auto& p : f.contacts)
    out.k_effective =
        std::max(out.k_effective, static_cast<int>(p.members.size()));
  double k = static_cast<double>(out.k_effective);
  out.p = delta / k;
  if (out.p < 0.0 || out.p >= 1.0)
    throw std::domain_error("delta/k must lie in [0,1)");

  // Per-edge precomputation: witness point and its separating members.
  struct EdgeProbe {
    int a, b;
    int point;
    std::vector<int> seps;  // D(a,b), all of which lie on the witness point
  };
  std::vector<EdgeProbe> probes;
  probes.reserve(pairs.size());
  {
    // first contact point per pair, scanning points in file order
    std::unordered_map<std::uint64_t, int> witness;
    witness.reserve(pairs.size() * 2);
    for (int pi = 0; pi < static_cast<int>(f.contacts.size()); ++pi) {
      const auto& p = f.contacts[pi];
      for (std::size_t i = 0; i < p.members.size(); ++i)
        for (std::size_t j = i + 1; j < p.members.size(); ++j)
          witness.emplace(detail::pair_key(p.members[i], p.members[j]), pi);
    }
    for (auto [a, b] : pairs) {
      EdgeProbe e;
      e.a = a;
      e.b = b;
      e.point = witness.at(detail::pair_key(a, b));
      e.seps = separators(f, a, b);
      probes.push_back(std::move(e));
    }
  }

  // Analytic envelope.
  BigInt sum_d = 0;
  for (const auto& e : probes) sum_d += e.seps.size();
  out.alpha = to_double(Rat(sum_d, BigInt(out.m) * out.k_effective));
  double m = static_cast<double>(out.m);
  double n = static_cast<double>(out.n);
  out.lower_bound = out.p * out.p * std::exp(-delta) * m *
                    (1.0 + delta * (1.0 - out.alpha - 2.0 / k));
  out.upper_bound = 3.0 * out.p * n;
  out.vacuous = out.lower_bound > out.upper_bound;

  // Trials. Selected-member counts are accumulated per point, then each edge
  // is judged at its witness point.
  std::vector<char> selected(f.n(), 0);
  std::vector<int> sel_count(f.contacts.size(), 0);
  double sum = 0.0, sumsq = 0.0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    SplitMix64 rng = SplitMix64::stream(seed, t);
    for (int c = 0; c < f.n(); ++c) selected[c] = rng.bernoulli(out.p) ? 1 : 0;
    for (std::size_t pi = 0; pi < f.contacts.size(); ++pi) {
      int cnt = 0;
      for (int c : f.contacts[pi].members)
        if (selected[c]) ++cnt;
      sel_count[pi] = cnt;
    }
    long long good = 0;
    for (const auto& e : probes) {
      if (!selected[e.a] || !selected[e.b]) continue;
      int cnt = sel_count[e.point];
      if (cnt > 3) continue;
      if (cnt == 3) {
        bool sep_selected = false;
        for (int s : e.seps)
          if (selected[s]) {
            sep_selected = true;
            break;
          }
        if (sep_selected) continue;
      }
      ++good;
    }
    double x = static_cast<double>(good);
    sum += x;
    sumsq += x * x;
  }
  if (trials > 0) {
    out.mean_good_edges = sum / static_cast<double>(trials);
    if (trials > 1) {
      double var = (sumsq - sum * sum / static_cast<double>(trials)) /
                   static_cast<double>(trials - 1);
      if (var < 0.0) var = 0.0;
      out.std_err = std::sqrt(var / static_cast<double>(trials));
    }
  }
  return out;
}

}  // namespace contactlab
