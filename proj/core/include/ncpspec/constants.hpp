// Copyright (c) the ncpspec authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string_view>

namespace ncpspec {

/// Physical constants pinned to one CODATA release. All internal computation
/// is carried out in (eV, Angstrom, amu); there is no general unit algebra.
namespace codata_2018 {

inline constexpr std::string_view release = "CODATA 2018";

/// hbar*c in eV*Angstrom (197.3269804 MeV*fm).
inline constexpr double hbar_c_ev_angstrom = 1973.269804;

/// Energy equivalent of one atomic mass unit, in eV (931.49410242 MeV).
inline constexpr double amu_c2_ev = 931.49410242e6;

}  // namespace codata_2018

enum class UnitKind { Dimensionless, Molecular };

/// Unit system for a computation. Dimensionless fixes the mass parameter
/// M = 2m/hbar^2 to exactly 1; Molecular works in eV / Angstrom / amu and
/// derives M from the pinned constants.
struct UnitSystem {
  UnitKind kind = UnitKind::Dimensionless;

  static constexpr UnitSystem dimensionless() { return {UnitKind::Dimensionless}; }
  static constexpr UnitSystem molecular() { return {UnitKind::Molecular}; }
};

/// Mass parameter M = 2m/hbar^2.
///
/// Molecular systems return 2 * mu * amu_c2 / (hbar*c)^2 in 1/(eV*Angstrom^2)
/// and require mu > 0 (in amu). Dimensionless systems ignore mu and return
/// exactly 1.
double mass_parameter(double mu_amu, const UnitSystem& system);

struct ConstantRecord {
  std::string_view name;
  double value;
  std::string_view unit;
  std::string_view release;
};

/// The pinned constants (plus the derived per-amu mass parameter), for the
/// `constants` CLI subcommand.
std::array<ConstantRecord, 3> constant_table();

}  // namespace ncpspec
