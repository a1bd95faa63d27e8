// Copyright (c) the ncpspec authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ncpspec/potentials.hpp"
#include "ncpspec/quantum_numbers.hpp"
#include "ncpspec/spectra.hpp"

namespace ncpspec {

/// Normalized reduced radial eigenfunction, evaluable at any r > 0:
///
///   CoulombLike:    R(r) = N * r^(mu3+1/2) * exp(-mu1*r) * 1F1(-n, 2*mu3+1, 2*mu1*r)
///   OscillatorLike: R(r) = N * u^((tau+1)/2) * exp(-mu1*u/2) * 1F1(-n, tau+3/2, mu1*u),
///                   u = r^2
///
/// with N fixed by the convention  integral_0^inf R(r)^2 dr = 1.
struct RadialWavefunction {
  RadialFamily family = RadialFamily::CoulombLike;
  int n = 0;
  double mu1 = 0;
  double mu3_or_tau = 0;
  /// Normalization constant applied on top of the internal shape function.
  double norm = 0;
  /// Peak of the nodeless envelope. The shape is evaluated relative to this
  /// point, which keeps deep molecular states away from underflow and keeps
  /// the envelope exponent small (low roundoff even at large mu1).
  double peak_radius = 0;

  /// Normalized R(r); r = 0 returns the limit 0.
  double operator()(double r) const;

  /// Shape function before normalization (peak-relative scaling).
  double unnormalized(double r) const;
};

/// Build the normalized eigenfunction for a state produced by the spectra
/// module. Throws std::invalid_argument if `spectrum` does not match
/// (p, M, qn). The norm is computed by adaptive panel-doubling Gauss
/// quadrature on [0, r_c] with an analytic exponential (or Gaussian) tail
/// bound below 1e-12 of the accumulated integral.
RadialWavefunction radial_wavefunction(const PotentialParams& p, double mass_parameter,
                                       const QuantumNumbers& qn,
                                       const SpectrumResult& spectrum);

/// Number of strict sign changes of R on (0, inf), found by scanning the
/// polynomial factor and bisecting each bracketed root. Equals n by the
/// Sturm oscillation theorem.
int node_count(const RadialWavefunction& w);

/// Radius beyond which the state is negligible; a convenient default
/// plotting and integration range.
double tail_radius(const RadialWavefunction& w);

}  // namespace ncpspec
