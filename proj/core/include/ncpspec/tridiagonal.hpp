// Copyright (c) the ncpspec authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace ncpspec {

/// Symmetric tridiagonal matrix; offdiag.size() == diag.size() - 1.
struct SymTridiagonal {
  std::vector<double> diag;
  std::vector<double> offdiag;

  std::size_t order() const { return diag.size(); }
};

/// Number of eigenvalues strictly below x (Sturm sequence via LDL^T pivots).
int count_below(const SymTridiagonal& T, double x);

/// [lower, upper] containing the whole spectrum (Gershgorin discs).
std::pair<double, double> gershgorin_bounds(const SymTridiagonal& T);

/// k-th eigenvalue (ascending, 0-based) by Sturm-sequence bisection, to
/// abs_tol or a few ulps of the bracket, whichever is coarser.
double kth_eigenvalue(const SymTridiagonal& T, int k, double abs_tol = 1e-12);

}  // namespace ncpspec
