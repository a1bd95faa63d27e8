// Copyright (c) the ncpspec authors
// SPDX-License-Identifier: Apache-2.0

#include "ncpspec/wavefunction.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ncpspec/kummer.hpp"
#include "ncpspec/quadrature.hpp"

namespace ncpspec {

namespace {

double polynomial_b(const RadialWavefunction& w) {
  return w.family == RadialFamily::CoulombLike ? 2.0 * w.mu3_or_tau + 1.0
                                               : w.mu3_or_tau + 1.5;
}

double polynomial_argument(const RadialWavefunction& w, double r) {
  return w.family == RadialFamily::CoulombLike ? 2.0 * w.mu1 * r : w.mu1 * r * r;
}

/// accurate log(x/ref) given dx = x - ref: log1p keeps the exponent sharp
/// near the peak, the plain ratio form takes over away from it
double log_ratio(double x, double ref, double dx) {
  if (std::abs(dx) <= 0.5 * ref) return std::log1p(dx / ref);
  return std::log(x / ref);
}

/// log of the envelope relative to its peak; both terms stay O(mu1 |r - peak|)
/// so the exponent carries little cancellation even for stiff molecular states
double envelope_log_relative(const RadialWavefunction& w, double r) {
  if (w.family == RadialFamily::CoulombLike) {
    const double dr = r - w.peak_radius;
    return (w.mu3_or_tau + 0.5) * log_ratio(r, w.peak_radius, dr) - w.mu1 * dr;
  }
  const double u = r * r;
  const double u_ref = w.peak_radius * w.peak_radius;
  const double du = (r - w.peak_radius) * (r + w.peak_radius);
  return 0.5 * (w.mu3_or_tau + 1.0) * log_ratio(u, u_ref, du) - 0.5 * w.mu1 * du;
}

double envelope_peak_radius(const RadialWavefunction& w) {
  if (w.family == RadialFamily::CoulombLike) {
    return (w.mu3_or_tau + 0.5) / w.mu1;
  }
  return std::sqrt((w.mu3_or_tau + 1.0) / w.mu1);
}

/// cutoff past every polynomial root with a wide decay margin
double base_cutoff(const RadialWavefunction& w) {
  const double b = polynomial_b(w);
  const double root_bound = 4.0 * w.n + 2.0 * b + 2.0;
  if (w.family == RadialFamily::CoulombLike) {
    const double zc = std::max(root_bound, 4.0 * w.mu3_or_tau + 4.0) + 16.0 * w.n + 64.0;
    return zc / (2.0 * w.mu1);
  }
  const double zc = std::max(root_bound, 4.0 * w.mu3_or_tau + 4.0) + 16.0 * w.n + 64.0;
  return std::sqrt(zc / w.mu1);
}

/// integral of R~^2 past rc is below shape(rc)^2 times this factor
double tail_factor(const RadialWavefunction& w, double rc) {
  if (w.family == RadialFamily::CoulombLike) return 4.0 / (3.0 * w.mu1);
  return 4.0 / (5.0 * w.mu1 * rc);
}

}  // namespace

double RadialWavefunction::unnormalized(double r) const {
  if (r < 0.0) throw std::domain_error("RadialWavefunction: r must be >= 0");
  if (r == 0.0) return 0.0;
  return std::exp(envelope_log_relative(*this, r)) *
         kummer_poly(n, polynomial_b(*this), polynomial_argument(*this, r));
}

double RadialWavefunction::operator()(double r) const { return norm * unnormalized(r); }

double tail_radius(const RadialWavefunction& w) { return base_cutoff(w); }

RadialWavefunction radial_wavefunction(const PotentialParams& p, double mass_parameter,
                                       const QuantumNumbers& qn,
                                       const SpectrumResult& spectrum) {
  const SpectrumResult expected = energy(p, mass_parameter, qn);
  const double scale = std::max({std::abs(expected.E), std::abs(expected.mu1), 1.0});
  const bool consistent = spectrum.family == expected.family && spectrum.qn == qn &&
                          std::abs(spectrum.E - expected.E) <= 1e-9 * scale &&
                          std::abs(spectrum.mu1 - expected.mu1) <= 1e-9 * scale &&
                          std::abs(spectrum.mu3_or_tau - expected.mu3_or_tau) <=
                              1e-9 * (std::abs(expected.mu3_or_tau) + 1.0);
  if (!consistent) {
    throw std::invalid_argument(
        "radial_wavefunction: spectrum result does not correspond to the given potential "
        "and quantum numbers");
  }

  RadialWavefunction w;
  w.family = expected.family;
  w.n = qn.n;
  w.mu1 = expected.mu1;
  w.mu3_or_tau = expected.mu3_or_tau;
  w.norm = 1.0;
  w.peak_radius = envelope_peak_radius(w);

  auto shape_sq = [&w](double r) {
    const double value = w.unnormalized(r);
    return value * value;
  };

  double rc = base_cutoff(w);
  double integral = integrate(shape_sq, 0.0, rc, 1e-13);
  for (int i = 0; i < 200; ++i) {
    const double bound = shape_sq(rc) * tail_factor(w, rc);
    if (bound <= 1e-12 * integral) break;
    const double rc_next = 1.25 * rc;
    integral += integrate(shape_sq, rc, rc_next, 1e-13);
    rc = rc_next;
  }
  if (!(integral > 0.0) || !std::isfinite(integral)) {
    throw std::domain_error("radial_wavefunction: normalization integral is not finite");
  }
  w.norm = 1.0 / std::sqrt(integral);
  return w;
}

int node_count(const RadialWavefunction& w) {
  const double b = polynomial_b(w);
  if (w.n == 0) return 0;

  // all roots of 1F1(-n, b, .) lie in (0, 4n + 2b + 2)
  const double z_hi = 4.0 * w.n + 2.0 * b + 2.0;
  const int cells = 64 * (w.n + 1);
  const double dz = z_hi / cells;

  auto poly = [&](double z) { return kummer_poly(w.n, b, z); };

  int nodes = 0;
  double z_prev = dz * 1e-6;
  double f_prev = poly(z_prev);
  for (int i = 1; i <= cells; ++i) {
    const double z = i * dz;
    const double f = poly(z);
    if (f == 0.0) {
      ++nodes;
      z_prev = z + 0.5 * dz * 1e-6;
      f_prev = poly(z_prev);
      continue;
    }
    if (f_prev != 0.0 && ((f_prev < 0.0) != (f < 0.0))) {
      // bisection pin-down of the bracketed root
      double lo = z_prev, hi = z, flo = f_prev;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = poly(mid);
        if (fm == 0.0) break;
        if ((flo < 0.0) != (fm < 0.0)) {
          hi = mid;
        } else {
          lo = mid;
          flo = fm;
        }
      }
      ++nodes;
    }
    z_prev = z;
    f_prev = f;
  }
  return nodes;
}

}  // namespace ncpspec
