// Copyright (c) the ncpspec authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ncpspec/constants.hpp"
#include "ncpspec/potentials.hpp"
#include "ncpspec/quantum_numbers.hpp"

using namespace ncpspec;

TEST_CASE("quantum number validation") {
  CHECK_NOTHROW(validate(QuantumNumbers{0, 0, -3}));
  CHECK_THROWS_AS(validate(QuantumNumbers{-1, 0, 0}), std::domain_error);
  CHECK_THROWS_AS(validate(QuantumNumbers{0, -1, 0}), std::domain_error);
}

TEST_CASE("kind names round-trip") {
  for (PotentialKind k :
       {PotentialKind::Makarov, PotentialKind::ModKratzerRing, PotentialKind::DoubleRingKratzer,
        PotentialKind::ModifiedNonCentral, PotentialKind::RingOscillator}) {
    CHECK(parse_kind(kind_name(k)) == k);
  }
  CHECK(!parse_kind("coulomb"));
}

TEST_CASE("decompose: modified non-central trivial case") {
  const PotentialParams p = ModifiedNonCentralParams{1.0, 1.0, 0.0, 0.0};
  const RadialProblem prob = decompose(p, 1.0, 0.5);
  CHECK(prob.family == RadialFamily::CoulombLike);
  CHECK(prob.E0 == 1.0);
  CHECK(prob.A == -2.0);
  CHECK(prob.Lambda == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("decompose: makarov trivial case") {
  const PotentialParams p = MakarovParams{-1.0, 0.0, 0.0};
  const RadialProblem prob = decompose(p, 1.0, 1.5);
  CHECK(prob.family == RadialFamily::CoulombLike);
  CHECK(prob.E0 == 0.0);
  CHECK(prob.A == -1.0);
  CHECK(prob.Lambda == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("decompose: N2 molecular parameters") {
  const PotentialParams p = ModifiedNonCentralParams{11.9384, 1.0940, 0.0, 0.0};
  const double M = mass_parameter(7.00335, UnitSystem::molecular());
  const RadialProblem prob = decompose(p, M, 0.5);
  CHECK(prob.E0 == 11.9384);
  CHECK(prob.A == doctest::Approx(-26.1212192).epsilon(1e-9));
  CHECK(prob.Lambda == doctest::Approx(M * 11.9384 * 1.0940 * 1.0940).epsilon(1e-14));
  CHECK(prob.Lambda == doctest::Approx(4.7877e4).epsilon(1e-4));
}

TEST_CASE("decompose: ring oscillator folds omega into Lambda") {
  const PotentialParams p = RingOscillatorParams{2.0, 1.5, 0.0};
  const RadialProblem prob = decompose(p, 3.0, 0.5);
  CHECK(prob.family == RadialFamily::OscillatorLike);
  CHECK(prob.kappa == 2.0);
  CHECK(prob.Lambda == doctest::Approx(3.0 * 1.5).epsilon(1e-15));
  CHECK(prob.A == 0.0);
  CHECK(prob.E0 == 0.0);
}

TEST_CASE("expansion correctness: V(r) equals the decomposed radial form pointwise") {
  const double M = 2.37;
  const double l_eff = 1.3;
  const std::vector<PotentialParams> cases = {
      MakarovParams{-1.7, 0.4, 0.2},
      ModKratzerRingParams{1.3, 0.8, 0.5},
      DoubleRingKratzerParams{2.1, 1.1, 0.3, 0.2},
      ModifiedNonCentralParams{3.2, 0.9, 0.1, 0.05},
      RingOscillatorParams{1.4, 0.6, 0.2},
  };
  for (const auto& p : cases) {
    const RadialProblem prob = decompose(p, M, l_eff);
    for (double r = 0.05; r < 25.0; r *= 1.37) {
      double reconstructed = prob.E0 + prob.A / r +
                             (prob.Lambda - l_eff * l_eff + 0.25) / (M * r * r);
      if (prob.family == RadialFamily::OscillatorLike) {
        reconstructed = prob.kappa * r * r + (prob.Lambda - l_eff * l_eff + 0.25) / (M * r * r);
      }
      CHECK(radial_potential(p, r) ==
            doctest::Approx(reconstructed).epsilon(1e-12).scale(std::abs(prob.E0) + 1.0));
    }
  }
}

TEST_CASE("hartmann reduction: gamma does not enter the radial problem") {
  const PotentialParams with_gamma = MakarovParams{-2.0, 1.0, 0.7};
  const PotentialParams hartmann = MakarovParams{-2.0, 1.0, 0.0};
  CHECK(decompose(with_gamma, 1.0, 1.25) == decompose(hartmann, 1.0, 1.25));
}

TEST_CASE("parameter invariants") {
  CHECK_THROWS_AS(validate(PotentialParams(ModKratzerRingParams{0.0, 1.0, 0.0})),
                  std::domain_error);
  CHECK_THROWS_AS(validate(PotentialParams(ModKratzerRingParams{1.0, -1.0, 0.0})),
                  std::domain_error);
  CHECK_THROWS_AS(validate(PotentialParams(ModifiedNonCentralParams{-2.0, 1.0, 0.0, 0.0})),
                  std::domain_error);
  CHECK_THROWS_AS(validate(PotentialParams(RingOscillatorParams{0.0, 0.0, 0.0})),
                  std::domain_error);
  CHECK_THROWS_AS(validate(PotentialParams(RingOscillatorParams{1.0, -0.1, 0.0})),
                  std::domain_error);
  CHECK_THROWS_AS(validate(PotentialParams(RingOscillatorParams{1.0, 0.0, -0.5})),
                  std::domain_error);
  CHECK_NOTHROW(validate(PotentialParams(MakarovParams{3.0, -1.0, 0.0})));
}

TEST_CASE("decompose rejects invalid l_eff and mass parameter") {
  const PotentialParams p = MakarovParams{-1.0, 0.0, 0.0};
  CHECK_THROWS_AS(decompose(p, 1.0, -0.5), std::domain_error);
  CHECK_THROWS_AS(decompose(p, 0.0, 0.5), std::domain_error);
}
