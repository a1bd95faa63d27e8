// Copyright (c) the ncpspec authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string_view>
#include <variant>

namespace ncpspec {

// Parameter records for the five non-central potentials. Energies are in eV
// and lengths in Angstrom under molecular units, or pure numbers under
// dimensionless units; beta and gamma always carry energy*length^2.

/// V(r,theta) = alpha/r + (beta + gamma*cos th)/(r^2 sin^2 th)
struct MakarovParams {
  double alpha = 0;
  double beta = 0;
  double gamma = 0;
};

/// V(r,theta) = D0*(1 - r0/r)^2 + beta*cot^2(th)/r^2
struct ModKratzerRingParams {
  double D0 = 0;
  double r0 = 0;
  double beta = 0;
};

/// V(r,theta) = -2*D0*(r0/r - r0^2/(2 r^2)) + (beta/sin^2 th + gamma/cos^2 th)/r^2
struct DoubleRingKratzerParams {
  double D0 = 0;
  double r0 = 0;
  double beta = 0;
  double gamma = 0;
};

/// V(r,theta) = D*(1 - a/r)^2 + (beta + gamma*cos th)/(r^2 sin^2 th)
struct ModifiedNonCentralParams {
  double D = 0;
  double a = 0;
  double beta = 0;
  double gamma = 0;
};

/// V(r,theta) = kappa*r^2 + omega/r^2 + beta/(r^2 sin^2 th)
struct RingOscillatorParams {
  double kappa = 0;
  double omega = 0;
  double beta = 0;
};

using PotentialParams = std::variant<MakarovParams, ModKratzerRingParams,
                                     DoubleRingKratzerParams, ModifiedNonCentralParams,
                                     RingOscillatorParams>;

enum class PotentialKind {
  Makarov,
  ModKratzerRing,
  DoubleRingKratzer,
  ModifiedNonCentral,
  RingOscillator,
};

PotentialKind kind_of(const PotentialParams& p);

/// CLI-facing names: "makarov", "mod-kratzer-ring", "double-ring-kratzer",
/// "modified-non-central", "ring-oscillator".
std::string_view kind_name(PotentialKind kind);
std::optional<PotentialKind> parse_kind(std::string_view name);

/// Throws std::domain_error when a parameter invariant is violated
/// (D0/D > 0, r0/a > 0, kappa > 0, omega >= 0, ring beta >= 0).
void validate(const PotentialParams& p);

/// Ring-term strengths of the polar equation; zero where a kind lacks them.
double ring_beta(const PotentialParams& p);
double ring_gamma(const PotentialParams& p);

/// The purely radial part V(r) of the potential (angular terms dropped).
double radial_potential(const PotentialParams& p, double r);

enum class RadialFamily { CoulombLike, OscillatorLike };

std::string_view family_name(RadialFamily family);

/// Canonical reduced radial problem after separation of variables:
///
///   CoulombLike:    R'' + [M(E - E0) - M*A/r - Lambda/r^2] R = 0
///   OscillatorLike: R'' + [M*E - M*kappa*r^2 - Lambda/r^2] R = 0
///
/// Lambda >= -1/4 so that mu3 = sqrt(Lambda + 1/4) is real.
struct RadialProblem {
  RadialFamily family = RadialFamily::CoulombLike;
  double E0 = 0;      // energy offset (CoulombLike only)
  double A = 0;       // 1/r strength, energy*length (CoulombLike only)
  double Lambda = 0;  // full 1/r^2 coefficient
  double kappa = 0;   // r^2 strength, energy/length^2 (OscillatorLike only)

  friend bool operator==(const RadialProblem&, const RadialProblem&) = default;
};

/// Reduce a potential to its canonical radial problem for a given effective
/// angular quantum number l_eff >= 0. The Kratzer-family expansion is
/// D0*(1 - r0/r)^2 = D0 - 2*D0*r0/r + D0*r0^2/r^2.
RadialProblem decompose(const PotentialParams& p, double mass_parameter, double l_eff);

}  // namespace ncpspec
