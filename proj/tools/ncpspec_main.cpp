// Copyright (c) the ncpspec authors
// SPDX-License-Identifier: Apache-2.0
//
// ncpspec command-line front end: closed-form bound-state spectra for five
// non-central potentials, radial eigenfunction sampling, finite-difference
// verification reports, and the pinned physical constants.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncpspec/constants.hpp"
#include "ncpspec/oracle.hpp"
#include "ncpspec/serialize.hpp"
#include "ncpspec/spectra.hpp"
#include "ncpspec/wavefunction.hpp"

namespace {

using ncpspec::format_g9;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IntRange {
  int lo = 0;
  int hi = 0;
};

IntRange parse_range(const std::string& text, const char* flag) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (hi < lo) throw UsageError(std::string(flag) + ": empty range '" + text + "'");
    return {lo, hi};
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError(std::string(flag) + ": expected an integer or 'lo..hi', got '" + text +
                     "'");
  }
}

struct PotentialOpts {
  std::string potential;
  std::optional<double> alpha, beta, gamma, D0, r0, D, a, kappa, omega;
  std::string units = "dimensionless";
  std::optional<double> M;
  std::optional<double> mu;
};

void add_potential_options(CLI::App* cmd, PotentialOpts& o) {
  cmd->add_option("--potential", o.potential,
                  "makarov | mod-kratzer-ring | double-ring-kratzer | "
                  "modified-non-central | ring-oscillator")
      ->required();
  cmd->add_option("--alpha", o.alpha, "Coulomb strength (makarov)");
  cmd->add_option("--beta", o.beta, "ring strength beta");
  cmd->add_option("--gamma", o.gamma, "ring strength gamma");
  cmd->add_option("--D0", o.D0, "dissociation energy (Kratzer kinds)");
  cmd->add_option("--r0", o.r0, "equilibrium distance (Kratzer kinds)");
  cmd->add_option("--D", o.D, "dissociation energy (modified-non-central)");
  cmd->add_option("--a", o.a, "equilibrium distance (modified-non-central)");
  cmd->add_option("--kappa", o.kappa, "r^2 strength (ring-oscillator)");
  cmd->add_option("--omega", o.omega, "1/r^2 strength (ring-oscillator)");
  cmd->add_option("--units", o.units, "dimensionless | molecular (eV, Angstrom, amu)");
  cmd->add_option("--M", o.M, "mass parameter 2m/hbar^2 (dimensionless units only)");
  cmd->add_option("--mu", o.mu, "reduced mass in amu (molecular units only)");
}

double required_param(const std::optional<double>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required parameter ") + flag);
  return *v;
}

ncpspec::PotentialParams build_potential(const PotentialOpts& o) {
  const auto kind = ncpspec::parse_kind(o.potential);
  if (!kind) throw UsageError("unknown potential '" + o.potential + "'");
  switch (*kind) {
    case ncpspec::PotentialKind::Makarov:
      return ncpspec::MakarovParams{required_param(o.alpha, "--alpha"), o.beta.value_or(0.0),
                                    o.gamma.value_or(0.0)};
    case ncpspec::PotentialKind::ModKratzerRing:
      return ncpspec::ModKratzerRingParams{required_param(o.D0, "--D0"),
                                           required_param(o.r0, "--r0"), o.beta.value_or(0.0)};
    case ncpspec::PotentialKind::DoubleRingKratzer:
      return ncpspec::DoubleRingKratzerParams{required_param(o.D0, "--D0"),
                                              required_param(o.r0, "--r0"),
                                              o.beta.value_or(0.0), o.gamma.value_or(0.0)};
    case ncpspec::PotentialKind::ModifiedNonCentral:
      return ncpspec::ModifiedNonCentralParams{required_param(o.D, "--D"),
                                               required_param(o.a, "--a"),
                                               o.beta.value_or(0.0), o.gamma.value_or(0.0)};
    case ncpspec::PotentialKind::RingOscillator:
      return ncpspec::RingOscillatorParams{required_param(o.kappa, "--kappa"),
                                           o.omega.value_or(0.0), o.beta.value_or(0.0)};
  }
  throw UsageError("unknown potential '" + o.potential + "'");
}

double resolve_mass_parameter(const PotentialOpts& o) {
  if (o.units == "dimensionless") {
    if (o.mu) throw UsageError("--mu is a molecular-units input; not allowed with --units dimensionless");
    return o.M.value_or(1.0);
  }
  if (o.units == "molecular") {
    if (o.M) throw UsageError("--M is fixed by --mu in molecular units; pass --mu only");
    if (!o.mu) throw UsageError("molecular units require --mu (reduced mass in amu)");
    return ncpspec::mass_parameter(*o.mu, ncpspec::UnitSystem::molecular());
  }
  throw UsageError("unknown unit system '" + o.units + "' (dimensionless | molecular)");
}

void check_format(const std::string& format) {
  if (format != "csv" && format != "json") {
    throw UsageError("unknown format '" + format + "' (csv | json)");
  }
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file '" + output_path + "'");
  out << text;
}

unsigned worker_count(std::size_t items) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("NCPSPEC_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) hw = std::min<long>(hw, cap);
  }
  return static_cast<unsigned>(std::min<std::size_t>(hw, std::max<std::size_t>(items, 1)));
}

/// Deterministic fan-out: results land at their case index regardless of
/// which worker computed them.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const unsigned workers = worker_count(count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

std::vector<ncpspec::QuantumNumbers> expand_ranges(const IntRange& n, const IntRange& s,
                                                   const IntRange& m) {
  std::vector<ncpspec::QuantumNumbers> out;
  for (int in = n.lo; in <= n.hi; ++in)
    for (int is = s.lo; is <= s.hi; ++is)
      for (int im = m.lo; im <= m.hi; ++im) out.push_back({in, is, im});
  return out;
}

// ---------------------------------------------------------------------------
// subcommand payloads

struct SpectrumCmd {
  PotentialOpts pot;
  std::string n = "0", s = "0", m = "0";
  std::string format = "csv";
  std::string output;
};

int run_spectrum(const SpectrumCmd& cmd) {
  check_format(cmd.format);
  const auto params = build_potential(cmd.pot);
  const double M = resolve_mass_parameter(cmd.pot);
  const auto states = expand_ranges(parse_range(cmd.n, "--n"), parse_range(cmd.s, "--s"),
                                    parse_range(cmd.m, "--m"));
  if (states.empty()) throw UsageError("empty quantum-number ranges");

  std::vector<ncpspec::SpectrumResult> rows(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    rows[i] = ncpspec::energy(params, M, states[i]);
  }
  if (cmd.format == "json") {
    emit(ncpspec::spectrum_json(rows) + "\n", cmd.output);
  } else {
    std::string text = ncpspec::spectrum_csv_header() + "\n";
    for (const auto& r : rows) text += ncpspec::spectrum_csv_row(r) + "\n";
    emit(text, cmd.output);
  }
  return 0;
}

struct TableCmd {
  std::string preset;
  std::string format = "csv";
  std::string output;
};

int run_table(const TableCmd& cmd) {
  check_format(cmd.format);
  if (cmd.preset != "n2-table1") {
    throw UsageError("unknown preset '" + cmd.preset + "' (available: n2-table1)");
  }
  // Bundled N2 molecular preset: D = 11.9384 eV, a = 1.0940 Angstrom,
  // mu = 7.00335 amu, beta = gamma = 0.
  const ncpspec::PotentialParams params =
      ncpspec::ModifiedNonCentralParams{11.9384, 1.0940, 0.0, 0.0};
  const double M = ncpspec::mass_parameter(7.00335, ncpspec::UnitSystem::molecular());
  const std::vector<ncpspec::QuantumNumbers> states = {
      {0, 0, 0}, {1, 0, 0}, {1, 1, 1}, {2, 0, 0}, {2, 1, 1},
      {2, 2, 2}, {3, 0, 0}, {3, 1, 1}, {3, 2, 2}, {3, 3, 3},
  };
  std::vector<ncpspec::SpectrumResult> rows(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    rows[i] = ncpspec::energy(params, M, states[i]);
  }
  if (cmd.format == "json") {
    emit(ncpspec::spectrum_json(rows) + "\n", cmd.output);
  } else {
    std::string text = ncpspec::spectrum_csv_header() + "\n";
    for (const auto& r : rows) text += ncpspec::spectrum_csv_row(r) + "\n";
    emit(text, cmd.output);
  }
  return 0;
}

struct WavefunctionCmd {
  PotentialOpts pot;
  std::string n = "0", s = "0", m = "0";
  int samples = 200;
  std::optional<double> r_min, r_max;
  std::string format = "csv";
  std::string output;
};

int run_wavefunction(const WavefunctionCmd& cmd) {
  check_format(cmd.format);
  if (cmd.samples < 2) throw UsageError("--samples must be >= 2");
  const auto params = build_potential(cmd.pot);
  const double M = resolve_mass_parameter(cmd.pot);
  const auto nr = parse_range(cmd.n, "--n");
  const auto sr = parse_range(cmd.s, "--s");
  const auto mr = parse_range(cmd.m, "--m");
  if (nr.lo != nr.hi || sr.lo != sr.hi || mr.lo != mr.hi) {
    throw UsageError("wavefunction takes a single (n, s, m) state, not ranges");
  }
  const ncpspec::QuantumNumbers qn{nr.lo, sr.lo, mr.lo};

  const auto spectrum = ncpspec::energy(params, M, qn);
  const auto wf = ncpspec::radial_wavefunction(params, M, qn, spectrum);

  const double lo = cmd.r_min.value_or(0.0);
  const double hi = cmd.r_max.value_or(ncpspec::tail_radius(wf));
  if (!(hi > lo) || lo < 0.0) throw UsageError("wavefunction needs 0 <= --r-min < --r-max");

  std::string text;
  const bool json = cmd.format == "json";
  text += json ? "[" : "r,R\n";
  for (int i = 0; i < cmd.samples; ++i) {
    const double r = lo + (hi - lo) * i / (cmd.samples - 1);
    const double value = wf(r);
    if (json) {
      text += i ? ",\n  " : "\n  ";
      text += "{\"r\":" + format_g9(r) + ",\"R\":" + format_g9(value) + "}";
    } else {
      text += format_g9(r) + "," + format_g9(value) + "\n";
    }
  }
  if (json) text += "\n]\n";
  emit(text, cmd.output);
  return 0;
}

struct VerifyCmd {
  PotentialOpts pot;
  std::string n = "0", s = "0", m = "0";
  int points = 4000;
  int levels = 3;
  std::optional<double> r_min, r_max;
  std::string format = "csv";
  std::string output;
};

int run_verify(const VerifyCmd& cmd) {
  check_format(cmd.format);
  const auto params = build_potential(cmd.pot);
  const double M = resolve_mass_parameter(cmd.pot);
  const auto states = expand_ranges(parse_range(cmd.n, "--n"), parse_range(cmd.s, "--s"),
                                    parse_range(cmd.m, "--m"));
  if (states.empty()) throw UsageError("empty quantum-number ranges");

  if (cmd.r_min && !cmd.r_max) {
    throw UsageError("--r-min requires an explicit --r-max");
  }
  ncpspec::GridSpec grid;
  grid.points = cmd.points;
  grid.refinement_levels = cmd.levels;
  grid.r_min = cmd.r_min.value_or(0.0);
  grid.r_max = cmd.r_max.value_or(0.0);  // 0 => auto-sized radial box

  std::vector<ncpspec::OracleReport> reports(states.size());
  std::vector<std::exception_ptr> errors(states.size());
  parallel_for(states.size(), [&](std::size_t i) {
    try {
      reports[i] = ncpspec::verify(params, M, states[i], grid);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  });
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }

  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.pass;

  if (cmd.format == "json") {
    emit(ncpspec::report_json(reports) + "\n", cmd.output);
  } else {
    std::string text = ncpspec::report_csv_header() + "\n";
    for (const auto& r : reports) text += ncpspec::report_csv_row(r) + "\n";
    emit(text, cmd.output);
  }
  return all_pass ? 0 : 1;
}

struct ConstantsCmd {
  std::string format = "csv";
  std::string output;
};

int run_constants(const ConstantsCmd& cmd) {
  check_format(cmd.format);
  const auto table = ncpspec::constant_table();
  std::string text;
  if (cmd.format == "json") {
    text += "[";
    bool first = true;
    for (const auto& c : table) {
      if (!first) text += ',';
      first = false;
      text += "\n  {\"name\":\"" + std::string(c.name) + "\",\"value\":" + format_g9(c.value) +
              ",\"unit\":\"" + std::string(c.unit) + "\",\"release\":\"" +
              std::string(c.release) + "\"}";
    }
    text += "\n]\n";
  } else {
    text = "name,value,unit,release\n";
    for (const auto& c : table) {
      text += std::string(c.name) + "," + format_g9(c.value) + "," + std::string(c.unit) +
              "," + std::string(c.release) + "\n";
    }
  }
  emit(text, cmd.output);
  return 0;
}

// ---------------------------------------------------------------------------
// JSON config file: an object whose keys mirror the long flags (without the
// leading dashes). Values from the file are injected before the real
// command-line tokens, so explicit flags win.

std::vector<std::string> config_as_args(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw UsageError("config file '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw UsageError("config file must hold a JSON object");
  std::vector<std::string> args;
  for (const auto& [key, value] : j.items()) {
    if (key == "config") continue;
    args.push_back("--" + key);
    if (value.is_string()) {
      args.push_back(value.get<std::string>());
    } else {
      args.push_back(value.dump());
    }
  }
  return args;
}

std::vector<std::string> merge_config(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string config_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config_path = args[i + 1];
      args.erase(args.begin() + i, args.begin() + i + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
      args.erase(args.begin() + i);
      break;
    }
  }
  if (config_path.empty()) return args;

  const auto injected = config_as_args(config_path);
  // insert right after the subcommand token so the options bind to it
  auto sub = std::find_if(args.begin(), args.end(),
                          [](const std::string& a) { return !a.empty() && a[0] != '-'; });
  if (sub == args.end()) throw UsageError("--config requires a subcommand");
  args.insert(sub + 1, injected.begin(), injected.end());
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bound-state spectra and radial eigenfunctions for five exactly "
               "solvable non-central potentials, with finite-difference verification"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  SpectrumCmd spectrum_cmd;
  auto* spectrum = app.add_subcommand("spectrum", "closed-form energies over (n, s, m) ranges");
  add_potential_options(spectrum, spectrum_cmd.pot);
  spectrum->add_option("--n", spectrum_cmd.n, "radial range, e.g. 2 or 0..3");
  spectrum->add_option("--s", spectrum_cmd.s, "polar range");
  spectrum->add_option("--m", spectrum_cmd.m, "azimuthal range (use --m=-2..2 for signs)");
  spectrum->add_option("--format", spectrum_cmd.format, "csv | json");
  spectrum->add_option("--output", spectrum_cmd.output, "output path (default stdout)");

  TableCmd table_cmd;
  auto* table = app.add_subcommand("table", "bundled reference tables");
  table->add_option("--preset", table_cmd.preset, "preset name (n2-table1)")->required();
  table->add_option("--format", table_cmd.format, "csv | json");
  table->add_option("--output", table_cmd.output, "output path (default stdout)");

  WavefunctionCmd wavefn_cmd;
  auto* wavefn = app.add_subcommand("wavefunction", "sample a normalized radial eigenfunction");
  add_potential_options(wavefn, wavefn_cmd.pot);
  wavefn->add_option("--n", wavefn_cmd.n, "radial quantum number");
  wavefn->add_option("--s", wavefn_cmd.s, "polar quantum number");
  wavefn->add_option("--m", wavefn_cmd.m, "azimuthal quantum number");
  wavefn->add_option("--samples", wavefn_cmd.samples, "number of (r, R) samples");
  wavefn->add_option("--r-min", wavefn_cmd.r_min, "first sample radius");
  wavefn->add_option("--r-max", wavefn_cmd.r_max, "last sample radius (default: tail radius)");
  wavefn->add_option("--format", wavefn_cmd.format, "csv | json");
  wavefn->add_option("--output", wavefn_cmd.output, "output path (default stdout)");

  VerifyCmd verify_cmd;
  auto* verify = app.add_subcommand(
      "verify", "finite-difference oracle vs closed form (PASS/FAIL per state)");
  add_potential_options(verify, verify_cmd.pot);
  verify->add_option("--n", verify_cmd.n, "radial range");
  verify->add_option("--s", verify_cmd.s, "polar range");
  verify->add_option("--m", verify_cmd.m, "azimuthal range");
  verify->add_option("--points", verify_cmd.points, "base grid points (default 4000)");
  verify->add_option("--levels", verify_cmd.levels, "refinement levels (default 3)");
  verify->add_option("--r-min", verify_cmd.r_min, "radial grid lower Dirichlet boundary");
  verify->add_option("--r-max", verify_cmd.r_max, "radial grid upper boundary (default auto)");
  verify->add_option("--format", verify_cmd.format, "csv | json");
  verify->add_option("--output", verify_cmd.output, "output path (default stdout)");

  ConstantsCmd constants_cmd;
  auto* constants = app.add_subcommand("constants", "pinned physical constants");
  constants->add_option("--format", constants_cmd.format, "csv | json");
  constants->add_option("--output", constants_cmd.output, "output path (default stdout)");

  std::vector<std::string> args;
  try {
    args = merge_config(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    // CLI11 parses the reversed token vector
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*spectrum) return run_spectrum(spectrum_cmd);
    if (*table) return run_table(table_cmd);
    if (*wavefn) return run_wavefunction(wavefn_cmd);
    if (*verify) return run_verify(verify_cmd);
    if (*constants) return run_constants(constants_cmd);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
