// Copyright (c) the ncpspec authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "ncpspec/angular.hpp"
#include "ncpspec/potentials.hpp"
#include "ncpspec/quantum_numbers.hpp"

namespace ncpspec {

/// A bound-state energy together with the intermediate quantities needed to
/// build the eigenfunction.
struct SpectrumResult {
  std::optional<PotentialKind> kind;  // set by energy(); empty for bare radial solves
  QuantumNumbers qn;
  double l_eff = 0;
  double E = 0;
  RadialFamily family = RadialFamily::CoulombLike;
  /// Decay constant: mu1 = sqrt(M(E0-E)) [1/length] for CoulombLike,
  /// mu1 = sqrt(M*kappa) [1/length^2, acting on u = r^2] for OscillatorLike.
  double mu1 = 0;
  /// mu3 = sqrt(Lambda + 1/4) for CoulombLike; tau = sqrt(Lambda + 1/4) - 1/2
  /// for OscillatorLike.
  double mu3_or_tau = 0;
  /// Reality-condition boundary flag propagated from the angular solve.
  bool degenerate_angular = false;
};

/// n-th bound level of a Coulomb-like radial problem:
///   E = E0 - M*A^2 / (4*(n + 1/2 + mu3)^2),   mu3 = sqrt(Lambda + 1/4).
/// Requires an attractive tail A < 0 and Lambda >= -1/4.
SpectrumResult coulomb_like_energy(double mass_parameter, const RadialProblem& prob, int n);

/// n-th level of an oscillator-like radial problem:
///   E = 2*sqrt(kappa/M) * (2n + 1 + sqrt(Lambda + 1/4)).
/// Requires kappa > 0 and Lambda >= -1/4.
SpectrumResult oscillator_like_energy(double mass_parameter, const RadialProblem& prob, int n);

/// Full pipeline: effective_l -> decompose -> family solver, with all
/// diagnostics carried in the result.
SpectrumResult energy(const PotentialParams& p, double mass_parameter,
                      const QuantumNumbers& qn);

enum class SpecialCase { Hartmann, ModifiedKratzer, RingOscillatorPure };

/// Special-case spectrum formulas, each its own algebraic route:
///   Hartmann           = Makarov with gamma = 0,
///   ModifiedKratzer    = ModKratzerRing with beta = 0,
///   RingOscillatorPure = RingOscillator with omega = 0.
/// The matching reduced parameter must be exactly zero (std::invalid_argument
/// otherwise). Agrees with energy() of the parent potential to 1e-12 relative.
double special_case_energy(SpecialCase which, const PotentialParams& p,
                           double mass_parameter, const QuantumNumbers& qn);

/// Algebraic variant of the Kratzer-family spectrum that circulates in the
/// literature with a different mass-factor placement (an extra factor M on
/// the binding term). Coincides with the canonical form at M = 1. Empty for
/// kinds without such a variant.
std::optional<double> alternate_form_energy(const PotentialParams& p,
                                            double mass_parameter,
                                            const QuantumNumbers& qn);

/// Residual of the quantization condition for a computed level:
///   CoulombLike:    mu2^2/(2 mu1) + (2 mu3 + 1)/2 + n,  mu2^2 = M*A
///   OscillatorLike: mu2^2/(4 mu1) - (tau + 3/2)/2 - n,  mu2^2 = M*E
/// Exactly zero in exact arithmetic; |residual| <= 1e-10 in floating point.
double quantization_residual(double mass_parameter, const RadialProblem& prob,
                             const SpectrumResult& result);

}  // namespace ncpspec
