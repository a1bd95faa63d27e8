// Copyright (c) the ncpspec authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

namespace ncpspec {

/// Composite 15-point Gauss-Legendre integral of f over [a, b], doubling the
/// panel count until two successive estimates agree to rel_tol (plus a small
/// absolute floor). Intended for smooth integrands.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-13, double abs_floor = 1e-300);

}  // namespace ncpspec
