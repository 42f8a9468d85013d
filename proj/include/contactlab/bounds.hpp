#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "contactlab/family.hpp"
#include "contactlab/rational.hpp"

namespace contactlab {

// delta(alpha) = (1 - 2a + sqrt(4a^2 - 8a + 5)) / (2 - 2a) for a < 1, with
// delta(1) = 1 (= the limit). Always in [1, 2); this is the probability scale
// minimizing beta below.
inline double delta_of_alpha(double alpha) {
  if (alpha < 0.0 || alpha > 1.0)
    throw std::domain_error("alpha must be in [0,1]");
  if (alpha == 1.0) return 1.0;
  return (1.0 - 2.0 * alpha + std::sqrt(4.0 * alpha * alpha - 8.0 * alpha + 5.0)) /
         (2.0 - 2.0 * alpha);
}

// beta(alpha) = 6 e^delta / (delta + delta^2 (1 - alpha)): families with
// average distance at most alpha*k are beta(alpha)*k-colorable.
inline double beta_of_alpha(double alpha) {
  double delta = delta_of_alpha(alpha);
  return 6.0 * std::exp(delta) /
         (delta + delta * delta * (1.0 - alpha));
}

struct BoundParams {
  double alpha;
  double delta;
  double beta;
};

inline BoundParams bound_params(double alpha) {
  return {alpha, delta_of_alpha(alpha), beta_of_alpha(alpha)};
}

// Largest possible average-distance fraction: 1 / (1 + 1/(16e)), about
// 0.977524. Every k-touching curve family satisfies alpha <= this.
inline double max_alpha_bound() {
  return 1.0 / (1.0 + 1.0 / (16.0 * std::exp(1.0)));
}

// Probability that, after keeping each curve independently with probability
// p, the point shared by a,b keeps a and b, at most one other curve, and no
// separating curve: p^2 (1-p)^(l-2) + p^3 (1-p)^(l-3) (l-d-2). The second
// term is 0 when l-d-2 = 0, which also covers l = 2.
template <class T>
T p_good(int ell, int d, T p) {
  if (ell < 2) throw std::domain_error("p_good requires ell >= 2");
  if (d < 0 || d > ell - 2) throw std::domain_error("p_good requires 0 <= d <= ell-2");
  if (p < T(0) || p >= T(1)) throw std::domain_error("p_good requires 0 <= p < 1");
  T q = T(1) - p;
  T first = p * p;
  for (int i = 0; i < ell - 2; ++i) first *= q;
  if (ell - d - 2 == 0) return first;
  T second = p * p * p * T(ell - d - 2);
  for (int i = 0; i < ell - 3; ++i) second *= q;
  return first + second;
}

struct BoundRow {
  std::string name;
  double value;
  bool applicable;
  std::string note;
};

// Named chromatic upper bounds with applicability flags. k is the effective
// touching bound from the stats.
inline std::vector<BoundRow> bound_table(const FamilyStats& stats,
                                         FamilyKind kind, bool simple) {
  std::vector<BoundRow> rows;
  double k = static_cast<double>(stats.k_effective);
  bool has_k = stats.k_effective >= 1;
  rows.push_back({"general-touching", 6.0 * std::exp(1.0) * k + 1.0, has_k,
                  "6ek+1, any k-touching family"});
  if (stats.alpha) {
    double alpha = to_double(*stats.alpha);
    rows.push_back({"average-distance", beta_of_alpha(alpha) * k, has_k,
                    "beta(alpha)k with measured alpha"});
  } else {
    rows.push_back({"average-distance", 0.0, false, "alpha undefined"});
  }
  bool regions = kind == FamilyKind::Regions;
  rows.push_back({"simple-regions-additive", k + 327.0, has_k && regions && simple,
                  "k+327, simple region families"});
  rows.push_back({"simple-regions-tight", k + 1.0,
                  has_k && regions && simple && stats.k_effective >= 490,
                  "k+1, simple region families with k >= 490"});
  rows.push_back({"one-sided-strings", std::ceil(4.0 * k / 3.0) + 6.0, false,
                  "ceil(4k/3)+6, context only (one-sided string systems)"});
  return rows;
}

}  // namespace contactlab
