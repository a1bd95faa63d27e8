// Copyright (c) the ncpspec authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "ncpspec/angular.hpp"
#include "ncpspec/potentials.hpp"
#include "ncpspec/quantum_numbers.hpp"
#include "ncpspec/spectra.hpp"

namespace ncpspec {

/// Uniform finite-difference grid. Dirichlet boundary nodes sit at r_min and
/// r_max with `points` interior nodes between them; each refinement level
/// halves the step on the fixed interval [r_min, r_max]. Production runs use
/// points >= 200; anything >= 3 is accepted for experiments.
///
/// r_max == 0 requests automatic sizing from the target state's classical
/// region (radial solves only); r_min then defaults to 0, i.e. the physical
/// boundary of the half-line problem.
struct GridSpec {
  double r_min = 0;
  double r_max = 0;
  int points = 4000;
  int refinement_levels = 3;
};

/// Eigenvalue estimates across refinement levels with Richardson
/// extrapolation at the measured convergence order.
struct EigenEstimate {
  std::vector<double> per_level;
  double extrapolated = 0;
  /// Convergence order measured from the last three levels (2.0 is assumed
  /// when fewer than three levels are available or the measurement is
  /// outside [0.5, 4]).
  double order = 2.0;
  /// Level differences fell below the roundoff floor, so `order` carries no
  /// information (the estimate is already converged).
  bool at_roundoff = false;
};

/// k-th discrete eigenvalue of
///   -d^2/dr^2 + M*E0 + M*A/r + Lambda/r^2 + M*kappa*r^2
/// with Dirichlet ends, by Sturm-sequence bisection, returned as an energy
/// (the operator eigenvalue divided by M). Throws std::domain_error when the
/// problem admits no such bound state or the grid fails to capture it.
EigenEstimate radial_eigenvalue(double mass_parameter, const RadialProblem& prob, int k,
                                const GridSpec& grid);

/// s-th eigenvalue of the polar operator for the given kind, returned as the
/// ell^2 value comparable with effective_l(...)^2. The theta domain is fixed
/// by the kind ((0, pi), or (0, pi/2) for the double-ring kind); only
/// `points` and `refinement_levels` of the grid are used.
///
/// The universal -1/(4 sin^2 th) piece is absorbed by the substitution
/// Theta = sqrt(sin th) * f before discretizing, which restores clean
/// second-order convergence at the critical coupling.
EigenEstimate angular_eigenvalue(double mass_parameter, PotentialKind kind, double beta,
                                 double gamma, int m, int s, const GridSpec& grid);

/// Automatically sized radial grid covering >= 3x the outer turning point of
/// the k-th state, with the point count scaled up when the decay length is
/// short relative to the box.
GridSpec auto_radial_grid(double mass_parameter, const RadialProblem& prob, int k,
                          int base_points = 4000, int levels = 3);

/// Closed form vs finite-difference comparison for one bound state.
struct OracleReport {
  PotentialKind kind = PotentialKind::Makarov;
  QuantumNumbers qn;
  double mass_parameter = 1;

  double l_eff = 0;
  double l_eff_squared = 0;
  EigenEstimate angular;
  double angular_rel_dev = 0;

  double closed_energy = 0;
  EigenEstimate radial;
  double radial_rel_dev = 0;

  /// Literature-variant energy when it differs from the canonical form.
  std::optional<double> alternate_energy;

  bool pass = false;

  static constexpr double tolerance = 1e-5;
};

/// Run both oracle solves for one state and compare against the closed
/// forms. PASS iff both relative deviations are <= 1e-5 after extrapolation.
OracleReport verify(const PotentialParams& p, double mass_parameter,
                    const QuantumNumbers& qn, const GridSpec& grid = {});

}  // namespace ncpspec
