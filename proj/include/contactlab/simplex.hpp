#pragma once

#include <vector>

#include "contactlab/errors.hpp"
#include "contactlab/rational.hpp"

namespace contactlab {

struct LpResult {
  Rat value;
  std::vector<Rat> x;     // primal solution
  std::vector<Rat> dual;  // one multiplier per constraint
};

// Exact primal simplex for max c^T x subject to A x <= b, x >= 0 with b >= 0,
// so the slack basis is feasible and no phase one is needed. Bland's rule
// (smallest eligible index) guards against cycling. Dense tableau over
// rationals; intended for small certificate-grade programs.
inline LpResult simplex_max(const std::vector<std::vector<Rat>>& A,
                            const std::vector<Rat>& b,
                            const std::vector<Rat>& c) {
  const int m = static_cast<int>(A.size());
  const int n = static_cast<int>(c.size());
  for (const auto& bi : b)
    if (bi < 0) throw std::invalid_argument("simplex_max requires b >= 0");

  // Columns: 0..n-1 structural, n..n+m-1 slack, last column = rhs.
  const int cols = n + m + 1;
  std::vector<std::vector<Rat>> T(m + 1, std::vector<Rat>(cols, Rat(0)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n + i] = 1;
    T[i][cols - 1] = b[i];
  }
  for (int j = 0; j < n; ++j) T[m][j] = -c[j];  // objective row: z - c^T x = 0
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  while (true) {
    int enter = -1;
    for (int j = 0; j < n + m; ++j)
      if (T[m][j] < 0) {
        enter = j;
        break;  // Bland: smallest index
      }
    if (enter < 0) break;
    int leave = -1;
    Rat best;
    for (int i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rat ratio = T[i][cols - 1] / T[i][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0)
      throw GuaranteeError("unbounded linear program in cycle packing");
    Rat pivot = T[leave][enter];
    for (int j = 0; j < cols; ++j) T[leave][j] /= pivot;
    for (int i = 0; i <= m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rat factor = T[i][enter];
      for (int j = 0; j < cols; ++j) T[i][j] -= factor * T[leave][j];
    }
    basis[leave] = enter;
  }

  LpResult res;
  res.value = T[m][cols - 1];
  res.x.assign(n, Rat(0));
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) res.x[basis[i]] = T[i][cols - 1];
  // Dual multipliers are the final objective-row entries on the slack columns.
  res.dual.assign(m, Rat(0));
  for (int i = 0; i < m; ++i) res.dual[i] = T[m][n + i];
  return res;
}

}  // namespace contactlab
