// Copyright (c) the ncpspec authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite. Each criterion prints exactly one PASS/FAIL line; the
// process exits nonzero if any executed criterion fails. An optional argv[1]
// in 1..6 selects a single criterion.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "ncpspec/constants.hpp"
#include "ncpspec/oracle.hpp"
#include "ncpspec/quadrature.hpp"
#include "ncpspec/spectra.hpp"
#include "ncpspec/wavefunction.hpp"

using namespace ncpspec;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  std::string label;
  std::function<bool(std::string&)> run;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// --- criterion 1: published-table reproduction ------------------------------

bool criterion_table(std::string& detail) {
  const auto t0 = Clock::now();
  const PotentialParams n2 = ModifiedNonCentralParams{11.9384, 1.0940, 0.0, 0.0};
  const double M = mass_parameter(7.00335, UnitSystem::molecular());
  const std::array<QuantumNumbers, 10> rows = {{{0, 0, 0},
                                                {1, 0, 0},
                                                {1, 1, 1},
                                                {2, 0, 0},
                                                {2, 1, 1},
                                                {2, 2, 2},
                                                {3, 0, 0},
                                                {3, 1, 1},
                                                {3, 2, 2},
                                                {3, 3, 3}}};
  const std::array<double, 10> reference = {0.05443703, 0.16207785, 0.16354346, 0.26826281,
                                            0.26970864, 0.27308086, 0.37301804, 0.37444445,
                                            0.37777137, 0.38299550};
  double worst = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    worst = std::max(worst, std::abs(energy(n2, M, rows[i]).E - reference[i]));
  }
  const double elapsed = seconds_since(t0);
  char buf[128];
  std::snprintf(buf, sizeof(buf), "worst |dE| = %.3g eV, %.3f s", worst, elapsed);
  detail = buf;
  return worst <= 1e-3 && elapsed < 1.0;
}

// --- criterion 2: closed form vs finite-difference oracle -------------------

struct OracleCase {
  PotentialParams p;
  QuantumNumbers qn;
};

const std::vector<OracleCase>& oracle_matrix() {
  static const std::vector<OracleCase> cases = {
      {MakarovParams{-2.0, 0.0, 0.0}, {0, 0, 0}},
      {MakarovParams{-2.0, 0.0, 0.0}, {1, 0, 0}},
      {MakarovParams{-2.0, 0.0, 0.0}, {2, 1, 1}},
      {MakarovParams{-1.5, 1.0, 0.0}, {0, 0, 1}},
      {MakarovParams{-2.0, 1.0, 1.0}, {0, 0, 0}},
      {MakarovParams{-3.0, 2.0, 1.0}, {1, 1, -1}},
      {MakarovParams{-2.0, 2.0, -2.0}, {3, 2, 2}},
      {ModKratzerRingParams{1.0, 1.0, 0.0}, {0, 0, 0}},
      {ModKratzerRingParams{1.0, 1.0, 1.0}, {1, 0, 1}},
      {ModKratzerRingParams{2.0, 1.5, 2.0}, {2, 1, 0}},
      {ModKratzerRingParams{1.0, 2.0, 1.0}, {3, 2, -2}},
      {DoubleRingKratzerParams{1.0, 1.0, 0.0, 0.0}, {0, 0, 0}},
      {DoubleRingKratzerParams{1.0, 1.0, 1.0, 1.0}, {1, 0, 1}},
      {DoubleRingKratzerParams{2.0, 1.0, 1.0, 2.0}, {2, 1, 0}},
      {DoubleRingKratzerParams{1.5, 1.0, 2.0, 1.0}, {0, 2, -1}},
      {ModifiedNonCentralParams{1.0, 1.0, 0.0, 0.0}, {0, 0, 0}},
      {ModifiedNonCentralParams{1.0, 1.0, 0.0, 0.0}, {3, 0, 0}},
      {ModifiedNonCentralParams{1.0, 1.0, 1.0, 1.0}, {1, 1, 1}},
      {ModifiedNonCentralParams{2.0, 1.5, 2.0, 0.0}, {2, 0, -2}},
      {RingOscillatorParams{0.25, 0.0, 0.0}, {0, 0, 0}},
      {RingOscillatorParams{1.0, 1.0, 2.0}, {2, 1, 1}},
      {RingOscillatorParams{0.5, 2.0, 1.0}, {1, 2, 0}},
      {RingOscillatorParams{2.0, 0.5, 3.0}, {3, 0, 2}},
  };
  return cases;
}

bool criterion_oracle(std::string& detail) {
  const auto t0 = Clock::now();
  double worst_radial = 0.0;
  double worst_angular = 0.0;
  int failures = 0;
  for (const auto& c : oracle_matrix()) {
    const OracleReport report = verify(c.p, 1.0, c.qn);
    worst_radial = std::max(worst_radial, report.radial_rel_dev);
    worst_angular = std::max(worst_angular, report.angular_rel_dev);
    if (!report.pass) ++failures;
  }
  const double elapsed = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "%zu cases, worst radial %.2e, worst angular %.2e, %.2f s",
                oracle_matrix().size(), worst_radial, worst_angular, elapsed);
  detail = buf;
  return failures == 0 && elapsed < 60.0;
}

// --- criterion 3: special-case identities -----------------------------------

bool criterion_special_cases(std::string& detail) {
  double worst = 0.0;
  auto track = [&worst](double a, double b) {
    worst = std::max(worst, std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-30}));
  };
  for (double alpha : {-0.7, -2.0, -4.1}) {
    for (double beta : {0.0, 1.0, 3.0}) {
      for (int n : {0, 2}) {
        for (int s : {0, 2}) {
          for (int m : {0, -1, 2}) {
            const PotentialParams p = MakarovParams{alpha, beta, 0.0};
            track(special_case_energy(SpecialCase::Hartmann, p, 1.0, {n, s, m}),
                  energy(p, 1.0, {n, s, m}).E);
          }
        }
      }
    }
  }
  for (double D0 : {0.8, 1.0, 2.5}) {
    for (double r0 : {0.6, 1.0, 1.8}) {
      for (int n : {0, 1, 3}) {
        for (int s : {0, 1}) {
          for (int m : {0, 1, -2}) {
            const PotentialParams p = ModKratzerRingParams{D0, r0, 0.0};
            track(special_case_energy(SpecialCase::ModifiedKratzer, p, 1.0, {n, s, m}),
                  energy(p, 1.0, {n, s, m}).E);
          }
        }
      }
    }
  }
  for (double kappa : {0.25, 1.0, 2.7}) {
    for (double beta : {0.0, 1.0, 2.0}) {
      for (int n : {0, 1, 3}) {
        for (int s : {0, 2}) {
          for (int m : {0, 1, -2}) {
            const PotentialParams p = RingOscillatorParams{kappa, 0.0, beta};
            track(special_case_energy(SpecialCase::RingOscillatorPure, p, 1.0, {n, s, m}),
                  energy(p, 1.0, {n, s, m}).E);
          }
        }
      }
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf), "worst relative mismatch %.2e", worst);
  detail = buf;
  return worst <= 1e-12;
}

// --- criterion 4: exact ladder properties ------------------------------------

bool criterion_ladders(std::string& detail) {
  double worst = 0.0;
  for (int n = 0; n <= 5; ++n) {
    for (int s = 0; n + s <= 5; ++s) {
      for (int am = 0; n + s + am <= 5; ++am) {
        for (int sign : {1, -1}) {
          const int m = sign * am;
          if (m == 0 && sign < 0) continue;
          const int N = n + s + am + 1;
          const double hyd = energy(MakarovParams{-2.0, 0.0, 0.0}, 1.0, {n, s, m}).E;
          worst = std::max(worst, std::abs(hyd + 1.0 / (double(N) * N)));
          const double osc = energy(RingOscillatorParams{0.25, 0.0, 0.0}, 1.0, {n, s, m}).E;
          worst = std::max(worst, std::abs(osc - (2.0 * n + am + s + 1.5)));
        }
      }
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf), "worst absolute deviation %.2e", worst);
  detail = buf;
  return worst <= 1e-12;
}

// --- criterion 5: wavefunction suite -----------------------------------------

bool criterion_wavefunctions(std::string& detail) {
  struct State {
    PotentialParams p;
    double M;
    QuantumNumbers qn;
  };
  const double Mn2 = mass_parameter(7.00335, UnitSystem::molecular());
  const std::vector<State> states = {
      {MakarovParams{-2.0, 0.0, 0.0}, 1.0, {0, 0, 0}},
      {MakarovParams{-2.0, 0.0, 0.0}, 1.0, {1, 0, 0}},
      {MakarovParams{-2.0, 0.0, 0.0}, 1.0, {2, 0, 0}},
      {RingOscillatorParams{0.25, 0.0, 0.0}, 1.0, {0, 0, 0}},
      {RingOscillatorParams{0.25, 0.0, 0.0}, 1.0, {1, 0, 0}},
      {ModifiedNonCentralParams{11.9384, 1.0940, 0.0, 0.0}, Mn2, {1, 0, 0}},
  };

  bool ok = true;
  std::string why;

  // node counts and norms
  for (const auto& st : states) {
    const auto w = radial_wavefunction(st.p, st.M, st.qn, energy(st.p, st.M, st.qn));
    if (node_count(w) != st.qn.n) {
      ok = false;
      why += " node-count";
    }
    const double hi = 1.25 * tail_radius(w);
    const double norm = integrate([&](double r) { return w(r) * w(r); }, 0.0, hi, 1e-12);
    if (std::abs(norm - 1.0) > 1e-8) {
      ok = false;
      why += " norm";
    }
  }

  // ODE residual with second-order shrink
  double worst_residual = 0.0;
  for (const auto& st : states) {
    const auto spectrum = energy(st.p, st.M, st.qn);
    const auto w = radial_wavefunction(st.p, st.M, st.qn, spectrum);
    const RadialProblem prob = decompose(st.p, st.M, spectrum.l_eff);
    auto scan = [&](double h_rel) {
      const double r_hi = tail_radius(w);
      const double r_lo = r_hi * 1e-3;
      const double power = prob.family == RadialFamily::CoulombLike
                               ? w.mu3_or_tau + 0.5
                               : w.mu3_or_tau + 1.0;
      const double width = w.peak_radius / std::sqrt(power);
      double max_res = 0.0, max_rpp = 0.0;
      for (int i = 0; i <= 100; ++i) {
        const double r = r_lo * std::pow(r_hi / r_lo, i / 100.0);
        const double h = h_rel * std::min(r, width);
        const double rpp = (w(r - h) - 2.0 * w(r) + w(r + h)) / (h * h);
        const double bracket =
            prob.family == RadialFamily::CoulombLike
                ? st.M * (spectrum.E - prob.E0) - st.M * prob.A / r - prob.Lambda / (r * r)
                : st.M * spectrum.E - st.M * prob.kappa * r * r - prob.Lambda / (r * r);
        max_res = std::max(max_res, std::abs(rpp + bracket * w(r)));
        max_rpp = std::max(max_rpp, std::abs(rpp));
      }
      return max_res / max_rpp;
    };
    const double coarse = scan(3e-3);
    const double fine = scan(1.5e-3);
    worst_residual = std::max(worst_residual, coarse);
    if (coarse > 1e-5 || coarse / fine < 2.5 || coarse / fine > 6.0) {
      ok = false;
      why += " residual";
    }
  }

  // orthogonality at fixed l_eff
  const PotentialParams hyd = MakarovParams{-2.0, 0.0, 0.0};
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b <= 2; ++b) {
      const auto wa = radial_wavefunction(hyd, 1.0, {a, 0, 0}, energy(hyd, 1.0, {a, 0, 0}));
      const auto wb = radial_wavefunction(hyd, 1.0, {b, 0, 0}, energy(hyd, 1.0, {b, 0, 0}));
      const double hi = std::max(tail_radius(wa), tail_radius(wb));
      const double overlap =
          integrate([&](double r) { return wa(r) * wb(r); }, 0.0, hi, 1e-12);
      if (std::abs(overlap) > 1e-7) {
        ok = false;
        why += " orthogonality";
      }
    }
  }

  // Laplace image of the hydrogen case at t in {2, 3, 5} * mu1
  {
    const auto spectrum = energy(hyd, 1.0, {0, 0, 0});
    const auto w = radial_wavefunction(hyd, 1.0, {0, 0, 0}, spectrum);
    const double mu1 = spectrum.mu1;
    const double mu3 = spectrum.mu3_or_tau;
    auto numeric = [&](double t) {
      const double hi = 80.0 / (t + mu1) + 40.0 / mu1;
      return integrate(
          [&](double r) { return std::exp(-t * r) * w(r) * std::pow(r, mu3 - 0.5); }, 0.0, hi,
          1e-12);
    };
    auto closed = [&](double t) { return std::pow(t + mu1, -(2.0 * mu3 + 1.0)); };
    const double constant = numeric(2.0 * mu1) / closed(2.0 * mu1);
    for (double f : {3.0, 5.0}) {
      const double ratio = numeric(f * mu1) / closed(f * mu1) / constant;
      if (std::abs(ratio - 1.0) > 1e-6) {
        ok = false;
        why += " laplace";
      }
    }
  }

  char buf[160];
  std::snprintf(buf, sizeof(buf), "%zu states, worst residual %.2e%s", states.size(),
                worst_residual, why.empty() ? "" : (";" + why).c_str());
  detail = buf;
  return ok;
}

// --- criterion 6: CLI determinism --------------------------------------------

std::string capture(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return out;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, got);
  pclose(pipe);
  return out;
}

bool criterion_determinism(std::string& detail) {
#ifdef NCPSPEC_CLI_PATH
  const std::string cmd = std::string(NCPSPEC_CLI_PATH) + " table --preset n2-table1";
  const std::string a = capture(cmd);
  const std::string b = capture(cmd);
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%zu bytes per run", a.size());
  detail = buf;
  return !a.empty() && a == b;
#else
  detail = "CLI binary path not configured";
  return false;
#endif
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {"table reproduction (10 rows, |dE| <= 1e-3 eV, < 1 s)", criterion_table},
      {"closed form vs FD oracle (rel <= 1e-5, < 60 s)", criterion_oracle},
      {"special-case identities (rel <= 1e-12)", criterion_special_cases},
      {"hydrogen / oscillator ladders (<= 1e-12)", criterion_ladders},
      {"wavefunction suite (nodes, norm, residual, orthogonality, transform)",
       criterion_wavefunctions},
      {"CLI determinism (byte-identical table runs)", criterion_determinism},
  };

  int selected = 0;
  if (argc > 1) {
    selected = std::atoi(argv[1]);
    if (selected < 1 || selected > static_cast<int>(criteria.size())) {
      std::cerr << "usage: " << argv[0] << " [1.." << criteria.size() << "]\n";
      return 2;
    }
  }

  bool all_ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (selected && static_cast<int>(i + 1) != selected) continue;
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    all_ok = all_ok && ok;
    std::printf("[%zu] %-68s %s (%s)\n", i + 1, criteria[i].label.c_str(),
                ok ? "PASS" : "FAIL", detail.c_str());
  }
  return all_ok ? 0 : 1;
}
