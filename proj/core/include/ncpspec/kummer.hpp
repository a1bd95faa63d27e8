// Copyright (c) the ncpspec authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace ncpspec {

/// Terminating confluent hypergeometric series 1F1(-n, b, z): the degree-n
/// Kummer polynomial, evaluated as an exact (n+1)-term sum with a
/// running-ratio recurrence (no Gamma calls).
///
/// Throws std::domain_error if n < 0 or b is a non-positive integer.
double kummer_poly(int n, double b, double z);

/// d/dz 1F1(-n, b, z) = (-n/b) * 1F1(-n+1, b+1, z); zero for n = 0.
double kummer_poly_derivative(int n, double b, double z);

}  // namespace ncpspec
