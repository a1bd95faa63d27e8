// Copyright (c) the ncpspec authors
// SPDX-License-Identifier: Apache-2.0

#include "ncpspec/kummer.hpp"

#include <cmath>
#include <stdexcept>

namespace ncpspec {

double kummer_poly(int n, double b, double z) {
  if (n < 0) throw std::domain_error("kummer_poly: degree n must be >= 0");
  if (b <= 0.0 && b == std::floor(b)) {
    throw std::domain_error("kummer_poly: parameter b must not be a non-positive integer");
  }
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < n; ++k) {
    term *= (static_cast<double>(k) - n) * z / ((b + k) * (k + 1));
    sum += term;
  }
  return sum;
}

double kummer_poly_derivative(int n, double b, double z) {
  if (n < 0) throw std::domain_error("kummer_poly_derivative: degree n must be >= 0");
  if (n == 0) return 0.0;
  return (-static_cast<double>(n) / b) * kummer_poly(n - 1, b + 1.0, z);
}

}  // namespace ncpspec
