// Copyright (c) the ncpspec authors
// SPDX-License-Identifier: Apache-2.0

#include "ncpspec/spectra.hpp"

#include <cmath>
#include <stdexcept>

namespace ncpspec {

namespace {

void check_lambda(double Lambda) {
  if (Lambda < -0.25) {
    throw std::domain_error("sub-critical inverse-square coupling: Lambda < -1/4");
  }
}

}  // namespace

SpectrumResult coulomb_like_energy(double mass_parameter, const RadialProblem& prob, int n) {
  if (prob.family != RadialFamily::CoulombLike) {
    throw std::invalid_argument("coulomb_like_energy: radial problem is not Coulomb-like");
  }
  if (n < 0) throw std::domain_error("coulomb_like_energy: n must be >= 0");
  if (!(mass_parameter > 0.0)) {
    throw std::domain_error("coulomb_like_energy: mass parameter M must be > 0");
  }
  check_lambda(prob.Lambda);
  if (!(prob.A < 0.0)) {
    throw std::domain_error("repulsive or free tail: no bound states for A >= 0 (A)");
  }
  const double M = mass_parameter;
  const double mu3 = std::sqrt(prob.Lambda + 0.25);
  const double denom = n + 0.5 + mu3;

  SpectrumResult out;
  out.qn = {n, 0, 0};
  out.family = RadialFamily::CoulombLike;
  out.mu3_or_tau = mu3;
  out.mu1 = -M * prob.A / (2.0 * denom);  // equals sqrt(M*(E0 - E))
  out.E = prob.E0 - M * prob.A * prob.A / (4.0 * denom * denom);
  out.l_eff = mu3;  // placeholder; energy() overwrites with the true angular value
  return out;
}

SpectrumResult oscillator_like_energy(double mass_parameter, const RadialProblem& prob, int n) {
  if (prob.family != RadialFamily::OscillatorLike) {
    throw std::invalid_argument("oscillator_like_energy: radial problem is not oscillator-like");
  }
  if (n < 0) throw std::domain_error("oscillator_like_energy: n must be >= 0");
  if (!(mass_parameter > 0.0)) {
    throw std::domain_error("oscillator_like_energy: mass parameter M must be > 0");
  }
  check_lambda(prob.Lambda);
  if (!(prob.kappa > 0.0)) {
    throw std::domain_error("oscillator_like_energy: kappa must be > 0 (kappa)");
  }
  const double M = mass_parameter;
  const double root = std::sqrt(prob.Lambda + 0.25);

  SpectrumResult out;
  out.qn = {n, 0, 0};
  out.family = RadialFamily::OscillatorLike;
  out.mu3_or_tau = root - 0.5;  // tau, from tau*(tau+1) = Lambda
  out.mu1 = std::sqrt(M * prob.kappa);
  out.E = 2.0 * std::sqrt(prob.kappa / M) * (2.0 * n + 1.0 + root);
  out.l_eff = root;
  return out;
}

SpectrumResult energy(const PotentialParams& p, double mass_parameter,
                      const QuantumNumbers& qn) {
  validate(qn);
  validate(p);
  if (const auto* mk = std::get_if<MakarovParams>(&p); mk && !(mk->alpha < 0.0)) {
    throw std::domain_error("repulsive or free tail: no bound states for alpha >= 0 (alpha)");
  }
  const EffectiveL l = effective_l(p, mass_parameter, qn);
  const RadialProblem prob = decompose(p, mass_parameter, l.value);
  SpectrumResult out = prob.family == RadialFamily::CoulombLike
                           ? coulomb_like_energy(mass_parameter, prob, qn.n)
                           : oscillator_like_energy(mass_parameter, prob, qn.n);
  out.kind = kind_of(p);
  out.qn = qn;
  out.l_eff = l.value;
  out.degenerate_angular = l.degenerate;
  return out;
}

double special_case_energy(SpecialCase which, const PotentialParams& p,
                           double mass_parameter, const QuantumNumbers& qn) {
  validate(qn);
  validate(p);
  const double M = mass_parameter;
  const int n = qn.n;
  const int s = qn.s;
  const double m2 = static_cast<double>(qn.m) * qn.m;

  switch (which) {
    case SpecialCase::Hartmann: {
      const auto* mk = std::get_if<MakarovParams>(&p);
      if (!mk) throw std::invalid_argument("Hartmann special case expects Makarov parameters");
      if (mk->gamma != 0.0) {
        throw std::invalid_argument("Hartmann special case requires gamma == 0");
      }
      if (!(mk->alpha < 0.0)) {
        throw std::domain_error("repulsive or free tail: no bound states for alpha >= 0 (alpha)");
      }
      const double lp = 2.0 * std::sqrt(M * mk->beta + m2) + 2.0 * s + 1.0;
      const double denom = 2.0 * n + lp + 1.0;
      return -M * mk->alpha * mk->alpha / (denom * denom);
    }
    case SpecialCase::ModifiedKratzer: {
      const auto* kr = std::get_if<ModKratzerRingParams>(&p);
      if (!kr) {
        throw std::invalid_argument(
            "ModifiedKratzer special case expects ModKratzerRing parameters");
      }
      if (kr->beta != 0.0) {
        throw std::invalid_argument("ModifiedKratzer special case requires beta == 0");
      }
      // script-L satisfies L(L+1) = l^2(beta->0) - 1/4, i.e. L = |m| + s
      const double L = std::abs(qn.m) + s;
      const double root = std::sqrt(M * kr->D0 * kr->r0 * kr->r0 + L * (L + 1.0) + 0.25);
      const double denom = n + 0.5 + root;
      return kr->D0 - M * (kr->D0 * kr->r0) * (kr->D0 * kr->r0) / (denom * denom);
    }
    case SpecialCase::RingOscillatorPure: {
      const auto* ro = std::get_if<RingOscillatorParams>(&p);
      if (!ro) {
        throw std::invalid_argument(
            "RingOscillatorPure special case expects RingOscillator parameters");
      }
      if (ro->omega != 0.0) {
        throw std::invalid_argument("RingOscillatorPure special case requires omega == 0");
      }
      const double l = std::sqrt(M * ro->beta + m2) + s + 0.5;
      const double lp = 0.5 * l;
      return std::sqrt(16.0 * ro->kappa / M) * (n + lp + 0.5);
    }
  }
  throw std::logic_error("special_case_energy: unhandled case");
}

std::optional<double> alternate_form_energy(const PotentialParams& p, double mass_parameter,
                                            const QuantumNumbers& qn) {
  validate(qn);
  validate(p);
  const double M = mass_parameter;
  const double l = effective_l(p, M, qn).value;

  if (const auto* kr = std::get_if<ModKratzerRingParams>(&p)) {
    // variant with the binding term carrying M^2 instead of M
    const double root = std::sqrt(M * kr->D0 * kr->r0 * kr->r0 + l * l);
    const double denom = 2.0 * qn.n + 1.0 + 2.0 * root;
    const double num = 2.0 * M * kr->D0 * kr->r0;
    return kr->D0 - (num / denom) * (num / denom);
  }
  if (const auto* nc = std::get_if<ModifiedNonCentralParams>(&p)) {
    // variant written through l_ref*(l_ref+1) with l_ref = l - 1/2; algebraically
    // identical to the canonical form for every M
    const double l_ref = l - 0.5;
    const double root = std::sqrt(4.0 * M * nc->D * nc->a * nc->a +
                                  4.0 * l_ref * (l_ref + 1.0) + 1.0);
    const double denom = 2.0 * qn.n + 1.0 + root;
    const double num = 2.0 * std::sqrt(M) * nc->D * nc->a;
    return nc->D - (num / denom) * (num / denom);
  }
  return std::nullopt;
}

double quantization_residual(double mass_parameter, const RadialProblem& prob,
                             const SpectrumResult& result) {
  const double M = mass_parameter;
  if (result.family == RadialFamily::CoulombLike) {
    const double mu2_sq = M * prob.A;
    return mu2_sq / (2.0 * result.mu1) + (2.0 * result.mu3_or_tau + 1.0) / 2.0 + result.qn.n;
  }
  const double mu2_sq = M * result.E;
  return mu2_sq / (4.0 * result.mu1) - 0.5 * (result.mu3_or_tau + 1.5) - result.qn.n;
}

}  // namespace ncpspec
