// Copyright (c) the ncpspec authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace ncpspec {

/// Bound-state label: radial node count n, polar index s, azimuthal m.
/// n and s are non-negative; m is any integer and enters only through m^2.
struct QuantumNumbers {
  int n = 0;
  int s = 0;
  int m = 0;

  friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;
};

/// Throws std::domain_error if n < 0 or s < 0.
void validate(const QuantumNumbers& qn);

}  // namespace ncpspec
