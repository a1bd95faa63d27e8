// Copyright (c) the ncpspec authors
// SPDX-License-Identifier: Apache-2.0

#include "ncpspec/quadrature.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace ncpspec {

namespace {

struct Node {
  double x;
  double w;
};

// 15-point Gauss-Legendre rule on [-1, 1]
constexpr std::array<Node, 15> kGauss15 = {{
    {-9.87992518020485377e-01, 3.07532419961186465e-02},
    {-9.37273392400705951e-01, 7.03660474881080689e-02},
    {-8.48206583410427206e-01, 1.07159220467171773e-01},
    {-7.24417731360170070e-01, 1.39570677926153908e-01},
    {-5.70972172608538830e-01, 1.66269205816993781e-01},
    {-3.94151347077563385e-01, 1.86161000015561878e-01},
    {-2.01194093997434514e-01, 1.98431485327111246e-01},
    {+0.00000000000000000e+00, 2.02578241925560898e-01},
    {+2.01194093997434514e-01, 1.98431485327111246e-01},
    {+3.94151347077563385e-01, 1.86161000015561878e-01},
    {+5.70972172608538830e-01, 1.66269205816993781e-01},
    {+7.24417731360170070e-01, 1.39570677926153908e-01},
    {+8.48206583410427206e-01, 1.07159220467171773e-01},
    {+9.37273392400705951e-01, 7.03660474881080689e-02},
    {+9.87992518020485377e-01, 3.07532419961186465e-02},
}};

double composite(const std::function<double(double)>& f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    double panel = 0.0;
    for (const Node& node : kGauss15) {
      panel += node.w * f(mid + 0.5 * h * node.x);
    }
    sum += 0.5 * h * panel;
  }
  return sum;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol,
                 double abs_floor) {
  if (!(b > a)) throw std::invalid_argument("integrate: requires b > a");
  double prev = composite(f, a, b, 4);
  for (int panels = 8; panels <= 4096; panels *= 2) {
    const double cur = composite(f, a, b, panels);
    if (std::abs(cur - prev) <= rel_tol * std::abs(cur) + abs_floor) {
      return cur;
    }
    prev = cur;
  }
  return prev;
}

}  // namespace ncpspec
