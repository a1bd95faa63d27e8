// Copyright (c) the ncpspec authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ncpspec/potentials.hpp"
#include "ncpspec/quantum_numbers.hpp"

namespace ncpspec {

/// Effective angular quantum number. A single convention is used everywhere:
/// the value feeds the radial equation through Lambda = value^2 - 1/4.
struct EffectiveL {
  double value = 0;
  /// True on the boundary of the reality condition (M*beta + m^2 == M*|gamma|
  /// with gamma != 0), where one square root degenerates to zero.
  bool degenerate = false;
};

/// Closed-form effective angular quantum number for a potential kind.
///
/// With c = M*beta + m^2 and d = M*gamma:
///   Makarov, ModifiedNonCentral: (sqrt(c+d) + sqrt(c-d))/2 + s + 1/2
///   ModKratzerRing:              sqrt((sqrt(c) + s + 1/2)^2 - M*beta)
///   DoubleRingKratzer:           sqrt(c) + sqrt(1/4 + d) + 2s + 1
///   RingOscillator:              sqrt(c) + s + 1/2
///
/// Throws std::domain_error when the kind's reality condition fails
/// (Makarov/ModifiedNonCentral need c >= |d|; DoubleRingKratzer needs
/// d >= -1/4; all need c >= 0).
EffectiveL effective_l(PotentialKind kind, double mass_parameter, double beta,
                       double gamma, int m, int s);

EffectiveL effective_l(const PotentialParams& p, double mass_parameter, int m, int s);
EffectiveL effective_l(const PotentialParams& p, double mass_parameter,
                       const QuantumNumbers& qn);

}  // namespace ncpspec
