// Copyright (c) the ncpspec authors
// SPDX-License-Identifier: Apache-2.0

#include "ncpspec/potentials.hpp"

#include <stdexcept>
#include <string>

#include "ncpspec/quantum_numbers.hpp"

namespace ncpspec {

void validate(const QuantumNumbers& qn) {
  if (qn.n < 0) throw std::domain_error("quantum number n must be >= 0");
  if (qn.s < 0) throw std::domain_error("quantum number s must be >= 0");
}

PotentialKind kind_of(const PotentialParams& p) {
  return std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, MakarovParams>) return PotentialKind::Makarov;
        if constexpr (std::is_same_v<T, ModKratzerRingParams>)
          return PotentialKind::ModKratzerRing;
        if constexpr (std::is_same_v<T, DoubleRingKratzerParams>)
          return PotentialKind::DoubleRingKratzer;
        if constexpr (std::is_same_v<T, ModifiedNonCentralParams>)
          return PotentialKind::ModifiedNonCentral;
        if constexpr (std::is_same_v<T, RingOscillatorParams>)
          return PotentialKind::RingOscillator;
      },
      p);
}

std::string_view kind_name(PotentialKind kind) {
  switch (kind) {
    case PotentialKind::Makarov: return "makarov";
    case PotentialKind::ModKratzerRing: return "mod-kratzer-ring";
    case PotentialKind::DoubleRingKratzer: return "double-ring-kratzer";
    case PotentialKind::ModifiedNonCentral: return "modified-non-central";
    case PotentialKind::RingOscillator: return "ring-oscillator";
  }
  return "unknown";
}

std::optional<PotentialKind> parse_kind(std::string_view name) {
  for (PotentialKind k :
       {PotentialKind::Makarov, PotentialKind::ModKratzerRing, PotentialKind::DoubleRingKratzer,
        PotentialKind::ModifiedNonCentral, PotentialKind::RingOscillator}) {
    if (name == kind_name(k)) return k;
  }
  return std::nullopt;
}

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0)) {
    throw std::domain_error(std::string("potential parameter ") + name + " must be > 0");
  }
}

void require_non_negative(double value, const char* name) {
  if (!(value >= 0.0)) {
    throw std::domain_error(std::string("potential parameter ") + name + " must be >= 0");
  }
}

}  // namespace

void validate(const PotentialParams& p) {
  std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ModKratzerRingParams>) {
          require_positive(v.D0, "D0");
          require_positive(v.r0, "r0");
        } else if constexpr (std::is_same_v<T, DoubleRingKratzerParams>) {
          require_positive(v.D0, "D0");
          require_positive(v.r0, "r0");
        } else if constexpr (std::is_same_v<T, ModifiedNonCentralParams>) {
          require_positive(v.D, "D");
          require_positive(v.a, "a");
        } else if constexpr (std::is_same_v<T, RingOscillatorParams>) {
          require_positive(v.kappa, "kappa");
          require_non_negative(v.omega, "omega");
          require_non_negative(v.beta, "beta");
        } else {
          (void)v;  // Makarov: bound-state condition alpha < 0 is enforced at spectrum time
        }
      },
      p);
}

double ring_beta(const PotentialParams& p) {
  return std::visit([](const auto& v) { return v.beta; }, p);
}

double ring_gamma(const PotentialParams& p) {
  return std::visit(
      [](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, MakarovParams> ||
                      std::is_same_v<T, DoubleRingKratzerParams> ||
                      std::is_same_v<T, ModifiedNonCentralParams>) {
          return v.gamma;
        } else {
          return 0.0;
        }
      },
      p);
}

double radial_potential(const PotentialParams& p, double r) {
  if (!(r > 0.0)) throw std::domain_error("radial_potential: r must be > 0");
  return std::visit(
      [r](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, MakarovParams>) {
          return v.alpha / r;
        } else if constexpr (std::is_same_v<T, ModKratzerRingParams>) {
          const double u = 1.0 - v.r0 / r;
          return v.D0 * u * u;
        } else if constexpr (std::is_same_v<T, DoubleRingKratzerParams>) {
          return -2.0 * v.D0 * (v.r0 / r - 0.5 * v.r0 * v.r0 / (r * r));
        } else if constexpr (std::is_same_v<T, ModifiedNonCentralParams>) {
          const double u = 1.0 - v.a / r;
          return v.D * u * u;
        } else {
          return v.kappa * r * r + v.omega / (r * r);
        }
      },
      p);
}

std::string_view family_name(RadialFamily family) {
  return family == RadialFamily::CoulombLike ? "coulomb-like" : "oscillator-like";
}

RadialProblem decompose(const PotentialParams& p, double mass_parameter, double l_eff) {
  validate(p);
  if (!(mass_parameter > 0.0)) {
    throw std::domain_error("decompose: mass parameter M must be > 0");
  }
  if (!(l_eff >= 0.0)) {
    throw std::domain_error("decompose: effective angular quantum number must be >= 0");
  }
  const double M = mass_parameter;
  const double centrifugal = l_eff * l_eff - 0.25;

  RadialProblem out = std::visit(
      [&](const auto& v) -> RadialProblem {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, MakarovParams>) {
          return {RadialFamily::CoulombLike, 0.0, v.alpha, centrifugal, 0.0};
        } else if constexpr (std::is_same_v<T, ModKratzerRingParams>) {
          return {RadialFamily::CoulombLike, v.D0, -2.0 * v.D0 * v.r0,
                  centrifugal + M * v.D0 * v.r0 * v.r0, 0.0};
        } else if constexpr (std::is_same_v<T, DoubleRingKratzerParams>) {
          return {RadialFamily::CoulombLike, 0.0, -2.0 * v.D0 * v.r0,
                  centrifugal + M * v.D0 * v.r0 * v.r0, 0.0};
        } else if constexpr (std::is_same_v<T, ModifiedNonCentralParams>) {
          return {RadialFamily::CoulombLike, v.D, -2.0 * v.D * v.a,
                  centrifugal + M * v.D * v.a * v.a, 0.0};
        } else {
          return {RadialFamily::OscillatorLike, 0.0, 0.0, centrifugal + M * v.omega, v.kappa};
        }
      },
      p);

  if (out.Lambda < -0.25) {
    throw std::domain_error("sub-critical inverse-square coupling: Lambda < -1/4");
  }
  return out;
}

}  // namespace ncpspec
