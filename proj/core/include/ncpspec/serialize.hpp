// Copyright (c) the ncpspec authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>

#include "ncpspec/oracle.hpp"
#include "ncpspec/spectra.hpp"

namespace ncpspec {

/// Fixed 9-significant-digit formatting used for every emitted number, so
/// identical runs produce byte-identical output and CSV and JSON carry
/// identical values.
std::string format_g9(double x);

// Spectrum rows: columns {potential, n, s, m, l_eff, E, family, mu1, mu3},
// in that order; "mu3" holds tau for oscillator-like states.
std::string spectrum_csv_header();
std::string spectrum_csv_row(const SpectrumResult& r);
std::string spectrum_json(std::span<const SpectrumResult> rows);

// Verification reports: a PASS/FAIL table in CSV, or full per-level detail
// in JSON.
std::string report_csv_header();
std::string report_csv_row(const OracleReport& r);
std::string report_json(std::span<const OracleReport> reports);

}  // namespace ncpspec
