// Copyright (c) the ncpspec authors
// SPDX-License-Identifier: Apache-2.0

#include "ncpspec/constants.hpp"

#include <stdexcept>

namespace ncpspec {

double mass_parameter(double mu_amu, const UnitSystem& system) {
  if (system.kind == UnitKind::Dimensionless) {
    return 1.0;
  }
  if (!(mu_amu > 0.0)) {
    throw std::domain_error("mass_parameter: reduced mass mu must be > 0 amu");
  }
  const double hc = codata_2018::hbar_c_ev_angstrom;
  return 2.0 * mu_amu * codata_2018::amu_c2_ev / (hc * hc);
}

std::array<ConstantRecord, 3> constant_table() {
  const double hc = codata_2018::hbar_c_ev_angstrom;
  return {{
      {"hbar_c", codata_2018::hbar_c_ev_angstrom, "eV*Angstrom", codata_2018::release},
      {"amu_c2", codata_2018::amu_c2_ev, "eV", codata_2018::release},
      {"mass_parameter_per_amu", 2.0 * codata_2018::amu_c2_ev / (hc * hc),
       "1/(eV*Angstrom^2*amu)", codata_2018::release},
  }};
}

}  // namespace ncpspec
