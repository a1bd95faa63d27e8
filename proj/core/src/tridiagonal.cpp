// Copyright (c) the ncpspec authors
// SPDX-License-Identifier: Apache-2.0

#include "ncpspec/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ncpspec {

namespace {

double pivot_floor(const SymTridiagonal& T) {
  double emax2 = 1.0;
  for (double e : T.offdiag) emax2 = std::max(emax2, e * e);
  return std::numeric_limits<double>::min() * emax2;
}

}  // namespace

int count_below(const SymTridiagonal& T, double x) {
  const double pivmin = pivot_floor(T);
  int count = 0;
  double d = T.diag[0] - x;
  if (d < 0.0) ++count;
  for (std::size_t i = 1; i < T.diag.size(); ++i) {
    if (std::abs(d) < pivmin) d = (d < 0.0 ? -pivmin : pivmin);
    d = (T.diag[i] - x) - T.offdiag[i - 1] * T.offdiag[i - 1] / d;
    if (d < 0.0) ++count;
  }
  return count;
}

std::pair<double, double> gershgorin_bounds(const SymTridiagonal& T) {
  const std::size_t n = T.diag.size();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    const double left = i > 0 ? std::abs(T.offdiag[i - 1]) : 0.0;
    const double right = i + 1 < n ? std::abs(T.offdiag[i]) : 0.0;
    lo = std::min(lo, T.diag[i] - left - right);
    hi = std::max(hi, T.diag[i] + left + right);
  }
  return {lo, hi};
}

double kth_eigenvalue(const SymTridiagonal& T, int k, double abs_tol) {
  if (T.diag.empty()) throw std::invalid_argument("kth_eigenvalue: empty matrix");
  if (T.offdiag.size() + 1 != T.diag.size()) {
    throw std::invalid_argument("kth_eigenvalue: inconsistent band sizes");
  }
  if (k < 0 || static_cast<std::size_t>(k) >= T.diag.size()) {
    throw std::invalid_argument("kth_eigenvalue: index out of range");
  }
  auto [lo, hi] = gershgorin_bounds(T);
  const double pad = 1e-12 * (std::abs(lo) + std::abs(hi)) +
                     std::numeric_limits<double>::min();
  lo -= pad;
  hi += pad;

  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int iter = 0; iter < 400; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double width = hi - lo;
    if (width <= abs_tol + 4.0 * eps * std::max(std::abs(lo), std::abs(hi))) break;
    if (mid == lo || mid == hi) break;
    if (count_below(T, mid) >= k + 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace ncpspec
