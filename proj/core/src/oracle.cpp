// Copyright (c) the ncpspec authors
// SPDX-License-Identifier: Apache-2.0

#include "ncpspec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ncpspec/tridiagonal.hpp"

namespace ncpspec {

namespace {

long level_points(const GridSpec& grid, int level) {
  return (static_cast<long>(grid.points) + 1) * (1L << level) - 1;
}

void check_grid(const GridSpec& grid) {
  if (grid.points < 3) throw std::domain_error("GridSpec: points must be >= 3");
  if (grid.refinement_levels < 1) {
    throw std::domain_error("GridSpec: refinement_levels must be >= 1");
  }
  if (!(grid.r_min >= 0.0)) throw std::domain_error("GridSpec: r_min must be >= 0");
  if (!(grid.r_max > grid.r_min)) throw std::domain_error("GridSpec: requires r_max > r_min");
}

SymTridiagonal radial_matrix(double M, const RadialProblem& prob, double r_lo, double r_hi,
                             long points) {
  const double h = (r_hi - r_lo) / static_cast<double>(points + 1);
  const double inv_h2 = 1.0 / (h * h);
  SymTridiagonal T;
  T.diag.resize(points);
  T.offdiag.assign(points - 1, -inv_h2);
  const bool coulomb = prob.family == RadialFamily::CoulombLike;
  for (long j = 1; j <= points; ++j) {
    const double r = r_lo + j * h;
    double W = prob.Lambda / (r * r);
    if (coulomb) {
      W += M * prob.E0 + M * prob.A / r;
    } else {
      W += M * prob.kappa * r * r;
    }
    T.diag[j - 1] = 2.0 * inv_h2 + W;
  }
  return T;
}

/// Richardson extrapolation at the measured convergence order, with a
/// roundoff guard: when the finest level differences are already at noise
/// level, the finest value is returned unmodified.
EigenEstimate extrapolate(std::vector<double> levels, double scale) {
  EigenEstimate out;
  out.per_level = std::move(levels);
  const std::size_t L = out.per_level.size();
  out.extrapolated = out.per_level.back();
  if (L < 2) return out;

  const double d_last = out.per_level[L - 1] - out.per_level[L - 2];
  const double noise = 1e-12 * std::max(std::abs(out.per_level.back()), scale);
  if (std::abs(d_last) <= noise) {
    out.at_roundoff = true;
    return out;
  }

  double p_used = 2.0;
  if (L >= 3) {
    const double d_prev = out.per_level[L - 2] - out.per_level[L - 3];
    const double ratio = d_prev / d_last;
    if (std::isfinite(ratio) && ratio > 1.0) {
      out.order = std::log2(ratio);
      p_used = std::clamp(out.order, 0.5, 4.0);
    }
  }
  out.extrapolated = out.per_level.back() + d_last / (std::pow(2.0, p_used) - 1.0);
  return out;
}

struct AngularProblem {
  double theta_hi;
  bool dirichlet_right;
};

AngularProblem angular_domain(PotentialKind kind) {
  if (kind == PotentialKind::DoubleRingKratzer) {
    // the sec^2 wall splits the domain at pi/2
    return {std::numbers::pi / 2.0, true};
  }
  return {std::numbers::pi, false};
}

/// Polar operator -d^2/dth^2 + [xi + M*beta (+ M*gamma cos th)]/sin^2 th (+ kind
/// extras), discretized after the substitution Theta = sqrt(sin th) * f. In
/// the f variable the problem is the generalized symmetric one
///   -(sin th f')' + q f = l^2 sin th f,
/// with q = (m^2 + M*beta [+ M*gamma cos th])/sin th + sin(th)/4 + extras,
/// which removes the universal -1/(4 sin^2 th) critical piece. Flux-form
/// finite differences on cell centers give natural (zero-flux) ends where
/// sin th vanishes; the double-ring kind gets a reflected Dirichlet ghost at
/// pi/2.
SymTridiagonal angular_matrix(double M, PotentialKind kind, double beta, double gamma, int m,
                              long cells) {
  const AngularProblem dom = angular_domain(kind);
  const double H = dom.theta_hi / static_cast<double>(cells);
  const double inv_H2 = 1.0 / (H * H);
  const double g = static_cast<double>(m) * m + M * beta;

  std::vector<double> face_w(cells + 1);
  for (long i = 0; i <= cells; ++i) face_w[i] = std::sin(i * H);

  SymTridiagonal T;
  T.diag.resize(cells);
  T.offdiag.resize(cells - 1);

  std::vector<double> center_w(cells);
  for (long j = 0; j < cells; ++j) {
    const double theta = (j + 0.5) * H;
    const double w = std::sin(theta);
    center_w[j] = w;
    double q = g / w + 0.25 * w;
    switch (kind) {
      case PotentialKind::Makarov:
      case PotentialKind::ModifiedNonCentral:
        q += M * gamma * std::cos(theta) / w;
        break;
      case PotentialKind::ModKratzerRing:
        q -= M * beta * w;
        break;
      case PotentialKind::DoubleRingKratzer: {
        const double c = std::cos(theta);
        q += M * gamma * w / (c * c);
        break;
      }
      case PotentialKind::RingOscillator:
        break;
    }
    T.diag[j] = (face_w[j] + face_w[j + 1]) * inv_H2 + q;
  }
  if (dom.dirichlet_right) {
    // antisymmetric ghost across the pi/2 face
    T.diag[cells - 1] += face_w[cells] * inv_H2;
  }
  for (long j = 0; j + 1 < cells; ++j) T.offdiag[j] = -face_w[j + 1] * inv_H2;

  // reduce the generalized problem A f = l^2 W f (W = diag(sin)) to standard form
  for (long j = 0; j < cells; ++j) T.diag[j] /= center_w[j];
  for (long j = 0; j + 1 < cells; ++j) {
    T.offdiag[j] /= std::sqrt(center_w[j] * center_w[j + 1]);
  }
  return T;
}

}  // namespace

GridSpec auto_radial_grid(double mass_parameter, const RadialProblem& prob, int k,
                          int base_points, int levels) {
  if (k < 0) throw std::domain_error("auto_radial_grid: state index k must be >= 0");
  const double M = mass_parameter;
  double r_max = 0.0;
  double needed_points = 0.0;  // grows with the decay rate so stiff states stay resolved

  if (prob.family == RadialFamily::CoulombLike) {
    if (!(prob.A < 0.0)) {
      throw std::domain_error("radial oracle requires an attractive tail (A < 0)");
    }
    const double mu3 = std::sqrt(prob.Lambda + 0.25);
    const double mu1 = -M * prob.A / (2.0 * (k + 0.5 + mu3));
    const double disc = M * M * prob.A * prob.A - 4.0 * mu1 * mu1 * prob.Lambda;
    const double r_tp = (-M * prob.A + std::sqrt(std::max(disc, 0.0))) / (2.0 * mu1 * mu1);
    r_max = std::max(3.0 * r_tp, r_tp + 18.0 / mu1);
    needed_points = 20.0 * mu1 * r_max;
  } else {
    if (!(prob.kappa > 0.0)) {
      throw std::domain_error("radial oracle requires kappa > 0");
    }
    const double stiffness = std::sqrt(M * prob.kappa);
    const double lambda = 2.0 * stiffness * (2.0 * k + 1.0 + std::sqrt(prob.Lambda + 0.25));
    const double r_tp = std::sqrt(lambda / (M * prob.kappa));
    r_max = std::max(3.0 * r_tp, std::sqrt(r_tp * r_tp + 50.0 / stiffness));
    needed_points = 10.0 * stiffness * r_max * r_max;
  }

  GridSpec grid;
  grid.r_min = 0.0;
  grid.r_max = r_max;
  grid.points = std::clamp(static_cast<int>(std::ceil(needed_points)), base_points, 2'000'000);
  grid.refinement_levels = levels;
  return grid;
}

EigenEstimate radial_eigenvalue(double mass_parameter, const RadialProblem& prob, int k,
                                const GridSpec& grid) {
  if (!(mass_parameter > 0.0)) {
    throw std::domain_error("radial_eigenvalue: mass parameter M must be > 0");
  }
  if (k < 0) throw std::domain_error("radial_eigenvalue: state index k must be >= 0");
  check_grid(grid);
  if (prob.Lambda < -0.25) {
    throw std::domain_error("sub-critical inverse-square coupling: Lambda < -1/4");
  }
  if (prob.family == RadialFamily::CoulombLike && !(prob.A < 0.0)) {
    throw std::domain_error("radial oracle requires an attractive tail (A < 0)");
  }
  if (prob.family == RadialFamily::OscillatorLike && !(prob.kappa > 0.0)) {
    throw std::domain_error("radial oracle requires kappa > 0");
  }

  const double M = mass_parameter;
  std::vector<double> levels;
  levels.reserve(grid.refinement_levels);
  for (int level = 0; level < grid.refinement_levels; ++level) {
    const long points = level_points(grid, level);
    if (k >= points) throw std::domain_error("radial_eigenvalue: k exceeds grid resolution");
    const SymTridiagonal T = radial_matrix(M, prob, grid.r_min, grid.r_max, points);
    levels.push_back(kth_eigenvalue(T, k) / M);
  }

  // capture checks on the finest level
  const double finest = levels.back();
  if (prob.family == RadialFamily::CoulombLike) {
    if (!(finest < prob.E0)) {
      throw std::domain_error("state not captured; enlarge grid");
    }
  } else {
    const double r_tp = std::sqrt(std::max(finest, 0.0) / prob.kappa);
    if (!(grid.r_max >= 2.0 * r_tp)) {
      throw std::domain_error("state not captured; enlarge grid");
    }
  }

  const double scale = std::max({std::abs(prob.E0), std::abs(finest), 1e-30});
  return extrapolate(std::move(levels), scale);
}

EigenEstimate angular_eigenvalue(double mass_parameter, PotentialKind kind, double beta,
                                 double gamma, int m, int s, const GridSpec& grid) {
  if (s < 0) throw std::domain_error("angular_eigenvalue: s must be >= 0");
  if (grid.points < 3) throw std::domain_error("GridSpec: points must be >= 3");
  if (grid.refinement_levels < 1) {
    throw std::domain_error("GridSpec: refinement_levels must be >= 1");
  }
  // reality conditions match the closed form; throws on violation
  (void)effective_l(kind, mass_parameter, beta, gamma, m, s);

  std::vector<double> levels;
  levels.reserve(grid.refinement_levels);
  for (int level = 0; level < grid.refinement_levels; ++level) {
    const long cells = static_cast<long>(grid.points) << level;
    if (s >= cells) throw std::domain_error("angular_eigenvalue: s exceeds grid resolution");
    const SymTridiagonal T = angular_matrix(mass_parameter, kind, beta, gamma, m, cells);
    levels.push_back(kth_eigenvalue(T, s));
  }
  const double scale = std::max(std::abs(levels.back()), 1.0);
  return extrapolate(std::move(levels), scale);
}

OracleReport verify(const PotentialParams& p, double mass_parameter, const QuantumNumbers& qn,
                    const GridSpec& grid) {
  OracleReport report;
  report.kind = kind_of(p);
  report.qn = qn;
  report.mass_parameter = mass_parameter;

  const SpectrumResult closed = energy(p, mass_parameter, qn);
  report.closed_energy = closed.E;
  report.l_eff = closed.l_eff;
  report.l_eff_squared = closed.l_eff * closed.l_eff;

  const RadialProblem prob = decompose(p, mass_parameter, closed.l_eff);
  GridSpec radial_grid = grid;
  if (!(grid.r_max > 0.0)) {
    radial_grid =
        auto_radial_grid(mass_parameter, prob, qn.n, grid.points, grid.refinement_levels);
  }
  report.radial = radial_eigenvalue(mass_parameter, prob, qn.n, radial_grid);
  report.radial_rel_dev = std::abs(report.radial.extrapolated - closed.E) /
                          std::max(std::abs(closed.E), 1e-300);

  report.angular = angular_eigenvalue(mass_parameter, report.kind, ring_beta(p), ring_gamma(p),
                                      qn.m, qn.s, grid);
  report.angular_rel_dev =
      std::abs(report.angular.extrapolated - report.l_eff_squared) / report.l_eff_squared;

  if (const auto alt = alternate_form_energy(p, mass_parameter, qn)) {
    if (std::abs(*alt - closed.E) > 1e-12 * std::max(1.0, std::abs(closed.E))) {
      report.alternate_energy = alt;
    }
  }

  report.pass = report.radial_rel_dev <= OracleReport::tolerance &&
                report.angular_rel_dev <= OracleReport::tolerance;
  return report;
}

}  // namespace ncpspec
