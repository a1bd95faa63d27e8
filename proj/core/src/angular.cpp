// Copyright (c) the ncpspec authors
// SPDX-License-Identifier: Apache-2.0

#include "ncpspec/angular.hpp"

#include <cmath>
#include <stdexcept>

namespace ncpspec {

EffectiveL effective_l(PotentialKind kind, double mass_parameter, double beta, double gamma,
                       int m, int s) {
  if (s < 0) throw std::domain_error("effective_l: polar quantum number s must be >= 0");
  if (!(mass_parameter > 0.0)) {
    throw std::domain_error("effective_l: mass parameter M must be > 0");
  }
  const double M = mass_parameter;
  const double c = M * beta + static_cast<double>(m) * m;
  const double d = M * gamma;

  switch (kind) {
    case PotentialKind::Makarov:
    case PotentialKind::ModifiedNonCentral: {
      double lo = c - std::abs(d);
      if (lo < 0.0) {
        // absorb pure rounding noise at the degeneracy boundary
        if (lo > -16.0 * std::abs(c) * 2.2e-16) {
          lo = 0.0;
        } else {
          throw std::domain_error(
              "complex angular eigenvalue: need M*beta + m^2 >= M*|gamma| (beta/gamma)");
        }
      }
      const bool degenerate = (lo == 0.0) && (d != 0.0);
      const double hi = c + std::abs(d);
      const double value = 0.5 * (std::sqrt(hi) + std::sqrt(lo)) + s + 0.5;
      return {value, degenerate};
    }
    case PotentialKind::ModKratzerRing: {
      if (c < 0.0) {
        throw std::domain_error("complex angular eigenvalue: need M*beta + m^2 >= 0 (beta)");
      }
      const double root = std::sqrt(c) + s + 0.5;
      // root^2 - M*beta = m^2 + 2*sqrt(c)*(s+1/2) + (s+1/2)^2 > 0 always
      return {std::sqrt(root * root - M * beta), false};
    }
    case PotentialKind::DoubleRingKratzer: {
      if (c < 0.0) {
        throw std::domain_error("complex angular eigenvalue: need M*beta + m^2 >= 0 (beta)");
      }
      if (0.25 + d < 0.0) {
        throw std::domain_error("complex angular eigenvalue: need M*gamma >= -1/4 (gamma)");
      }
      return {std::sqrt(c) + std::sqrt(0.25 + d) + 2.0 * s + 1.0, false};
    }
    case PotentialKind::RingOscillator: {
      if (c < 0.0) {
        throw std::domain_error("complex angular eigenvalue: need M*beta + m^2 >= 0 (beta)");
      }
      return {std::sqrt(c) + s + 0.5, false};
    }
  }
  throw std::logic_error("effective_l: unhandled potential kind");
}

EffectiveL effective_l(const PotentialParams& p, double mass_parameter, int m, int s) {
  return effective_l(kind_of(p), mass_parameter, ring_beta(p), ring_gamma(p), m, s);
}

EffectiveL effective_l(const PotentialParams& p, double mass_parameter,
                       const QuantumNumbers& qn) {
  return effective_l(p, mass_parameter, qn.m, qn.s);
}

}  // namespace ncpspec
