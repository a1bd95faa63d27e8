// Copyright (c) the ncpspec authors
// SPDX-License-Identifier: Apache-2.0

#include "ncpspec/serialize.hpp"

#include <cstdio>

namespace ncpspec {

std::string format_g9(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

namespace {

std::string json_number(double x) { return format_g9(x); }

void append_estimate(std::string& out, const char* name, const EigenEstimate& est) {
  out += '"';
  out += name;
  out += "\":{\"per_level\":[";
  for (std::size_t i = 0; i < est.per_level.size(); ++i) {
    if (i) out += ',';
    out += json_number(est.per_level[i]);
  }
  out += "],\"extrapolated\":";
  out += json_number(est.extrapolated);
  out += ",\"order\":";
  out += json_number(est.order);
  out += ",\"at_roundoff\":";
  out += est.at_roundoff ? "true" : "false";
  out += '}';
}

}  // namespace

std::string spectrum_csv_header() { return "potential,n,s,m,l_eff,E,family,mu1,mu3"; }

std::string spectrum_csv_row(const SpectrumResult& r) {
  std::string out;
  out += r.kind ? kind_name(*r.kind) : std::string_view("radial-problem");
  out += ',';
  out += std::to_string(r.qn.n);
  out += ',';
  out += std::to_string(r.qn.s);
  out += ',';
  out += std::to_string(r.qn.m);
  out += ',';
  out += format_g9(r.l_eff);
  out += ',';
  out += format_g9(r.E);
  out += ',';
  out += family_name(r.family);
  out += ',';
  out += format_g9(r.mu1);
  out += ',';
  out += format_g9(r.mu3_or_tau);
  return out;
}

std::string spectrum_json(std::span<const SpectrumResult> rows) {
  std::string out = "[";
  bool first = true;
  for (const SpectrumResult& r : rows) {
    if (!first) out += ',';
    first = false;
    out += "\n  {\"potential\":\"";
    out += r.kind ? kind_name(*r.kind) : std::string_view("radial-problem");
    out += "\",\"n\":";
    out += std::to_string(r.qn.n);
    out += ",\"s\":";
    out += std::to_string(r.qn.s);
    out += ",\"m\":";
    out += std::to_string(r.qn.m);
    out += ",\"l_eff\":";
    out += json_number(r.l_eff);
    out += ",\"E\":";
    out += json_number(r.E);
    out += ",\"family\":\"";
    out += family_name(r.family);
    out += "\",\"mu1\":";
    out += json_number(r.mu1);
    out += ",\"mu3\":";
    out += json_number(r.mu3_or_tau);
    if (r.degenerate_angular) out += ",\"degenerate\":true";
    out += '}';
  }
  out += "\n]";
  return out;
}

std::string report_csv_header() {
  return "potential,n,s,m,l_eff,closed_E,oracle_E,rel_dev_E,order_E,closed_l2,oracle_l2,"
         "rel_dev_l2,order_l2,alt_E,status";
}

std::string report_csv_row(const OracleReport& r) {
  std::string out;
  out += kind_name(r.kind);
  out += ',';
  out += std::to_string(r.qn.n);
  out += ',';
  out += std::to_string(r.qn.s);
  out += ',';
  out += std::to_string(r.qn.m);
  out += ',';
  out += format_g9(r.l_eff);
  out += ',';
  out += format_g9(r.closed_energy);
  out += ',';
  out += format_g9(r.radial.extrapolated);
  out += ',';
  out += format_g9(r.radial_rel_dev);
  out += ',';
  out += format_g9(r.radial.order);
  out += ',';
  out += format_g9(r.l_eff_squared);
  out += ',';
  out += format_g9(r.angular.extrapolated);
  out += ',';
  out += format_g9(r.angular_rel_dev);
  out += ',';
  out += format_g9(r.angular.order);
  out += ',';
  out += r.alternate_energy ? format_g9(*r.alternate_energy) : std::string();
  out += ',';
  out += r.pass ? "PASS" : "FAIL";
  return out;
}

std::string report_json(std::span<const OracleReport> reports) {
  std::string out = "[";
  bool first = true;
  for (const OracleReport& r : reports) {
    if (!first) out += ',';
    first = false;
    out += "\n  {\"potential\":\"";
    out += kind_name(r.kind);
    out += "\",\"n\":";
    out += std::to_string(r.qn.n);
    out += ",\"s\":";
    out += std::to_string(r.qn.s);
    out += ",\"m\":";
    out += std::to_string(r.qn.m);
    out += ",\"M\":";
    out += json_number(r.mass_parameter);
    out += ",\"l_eff\":";
    out += json_number(r.l_eff);
    out += ",\"closed_energy\":";
    out += json_number(r.closed_energy);
    out += ",";
    append_estimate(out, "radial", r.radial);
    out += ",\"radial_rel_dev\":";
    out += json_number(r.radial_rel_dev);
    out += ",\"closed_l2\":";
    out += json_number(r.l_eff_squared);
    out += ",";
    append_estimate(out, "angular", r.angular);
    out += ",\"angular_rel_dev\":";
    out += json_number(r.angular_rel_dev);
    if (r.alternate_energy) {
      out += ",\"alternate_energy\":";
      out += json_number(*r.alternate_energy);
    }
    out += ",\"pass\":";
    out += r.pass ? "true" : "false";
    out += '}';
  }
  out += "\n]";
  return out;
}

}  // namespace ncpspec
