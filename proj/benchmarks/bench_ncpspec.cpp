// Copyright (c) the ncpspec authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "ncpspec/kummer.hpp"
#include "ncpspec/oracle.hpp"
#include "ncpspec/spectra.hpp"
#include "ncpspec/wavefunction.hpp"

using namespace ncpspec;

static void BM_SpectrumBatch(benchmark::State& state) {
  const PotentialParams p = ModifiedNonCentralParams{1.0, 1.0, 1.0, 0.5};
  for (auto _ : state) {
    double sum = 0.0;
    for (int n = 0; n <= 8; ++n)
      for (int s = 0; s <= 8; ++s)
        for (int m = -4; m <= 4; ++m) sum += energy(p, 1.0, {n, s, m}).E;
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_SpectrumBatch);

static void BM_KummerPoly(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    double sum = 0.0;
    for (double z = 0.0; z < 30.0; z += 0.25) sum += kummer_poly(n, 2.5, z);
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_KummerPoly)->Arg(2)->Arg(8)->Arg(24);

static void BM_RadialOracle(benchmark::State& state) {
  const RadialProblem prob{RadialFamily::CoulombLike, 0.0, -2.0, 1.0, 0.0};
  GridSpec grid = auto_radial_grid(1.0, prob, 0, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(radial_eigenvalue(1.0, prob, 0, grid).extrapolated);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RadialOracle)->RangeMultiplier(2)->Range(1000, 16000)->Complexity();

static void BM_AngularOracle(benchmark::State& state) {
  GridSpec grid;
  grid.points = static_cast<int>(state.range(0));
  grid.refinement_levels = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        angular_eigenvalue(1.0, PotentialKind::Makarov, 1.0, 1.0, 1, 1, grid).extrapolated);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AngularOracle)->RangeMultiplier(2)->Range(1000, 16000)->Complexity();

static void BM_Normalization(benchmark::State& state) {
  const PotentialParams p = MakarovParams{-2.0, 1.0, 0.5};
  const QuantumNumbers qn{3, 1, 1};
  const auto spectrum = energy(p, 1.0, qn);
  for (auto _ : state) {
    benchmark::DoNotOptimize(radial_wavefunction(p, 1.0, qn, spectrum).norm);
  }
}
BENCHMARK(BM_Normalization);

static void BM_FullVerify(benchmark::State& state) {
  const PotentialParams p = RingOscillatorParams{1.0, 1.0, 2.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify(p, 1.0, {2, 1, 1}).pass);
  }
}
BENCHMARK(BM_FullVerify);

BENCHMARK_MAIN();
