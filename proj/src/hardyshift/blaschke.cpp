/**
 * Copyright quasishift contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "quasishift/hardyshift.hpp"

namespace qs::hardy {

double ExponentialFamily::decay_sum() const {
  double s = 0.0;
  for (const Complex &l : lambdas) s -= l.real();
  return s;
}

Condition1Verdict validate_condition1(const ExponentialFamily &family) {
  Condition1Verdict v;
  for (std::size_t k = 0; k < family.size(); ++k) {
    const Complex l = family.lambdas[k];
    if (!(l.real() < 0.0)) {
      v = {false, Condition1Clause::negative_real_part, k,
           "Re lambda_" + std::to_string(k + 1) + " = " + std::to_string(l.real()) +
               " is not negative"};
      return v;
    }
    if (!(std::abs(l.imag()) < family.radius)) {
      v = {false, Condition1Clause::imaginary_part_below_radius, k,
           "|Im lambda_" + std::to_string(k + 1) + "| = " + std::to_string(std::abs(l.imag())) +
               " is not below radius " + std::to_string(family.radius)};
      return v;
    }
  }
  if (!std::isfinite(family.decay_sum())) {
    v = {false, Condition1Clause::summable_real_parts, family.size(),
         "sum of Re lambda_k is not finite"};
  }
  return v;
}

Complex blaschke_eval(const ExponentialFamily &family, Complex z) {
  Complex b = 1.0;
  for (const Complex &l : family.lambdas) {
    if (z == l) {
      throw std::domain_error("blaschke_eval: evaluation at pole (" + std::to_string(l.real()) +
                              ", " + std::to_string(l.imag()) + ")");
    }
    b *= (z + std::conj(l)) / (z - l);
  }
  return b;
}

std::vector<Complex> blaschke_residues(const ExponentialFamily &family) {
  const auto &ls = family.lambdas;
  std::vector<Complex> out(ls.size());
  for (std::size_t k = 0; k < ls.size(); ++k) {
    Complex c = 2.0 * ls[k].real();
    for (std::size_t j = 0; j < ls.size(); ++j) {
      if (j == k) continue;
      if (ls[j] == ls[k]) {
        throw std::invalid_argument("blaschke_residues: coincident lambdas at " +
                                    std::to_string(j + 1) + " and " + std::to_string(k + 1));
      }
      c *= (ls[k] + std::conj(ls[j])) / (ls[k] - ls[j]);
    }
    out[k] = c;
  }
  return out;
}

BlaschkeAsymptotics blaschke_asymptotics(const ExponentialFamily &family,
                                         std::span<const double> radii) {
  double cluster = 0.0;
  for (const Complex &l : family.lambdas) cluster = std::max(cluster, std::abs(l));
  if (radii.empty()) throw std::invalid_argument("blaschke_asymptotics: no radii");
  for (double r : radii) {
    if (!(r > 2.0 * cluster)) {
      throw std::invalid_argument("blaschke_asymptotics: radius " + std::to_string(r) +
                                  " inside pole cluster (need > " +
                                  std::to_string(2.0 * cluster) + ")");
    }
  }
  BlaschkeAsymptotics out;
  out.radii.assign(radii.begin(), radii.end());
  out.c3_expected = 2.0 * family.decay_sum();
  out.c2 = *std::min_element(radii.begin(), radii.end());
  for (const Complex &l : family.lambdas) {
    out.c1 *= (out.c2 + std::abs(l)) / (out.c2 - std::abs(l));
  }

  // z (1 - B(z)) = c3 + d / z + ..., least squares in (c3, d).
  const auto n = static_cast<Eigen::Index>(radii.size());
  Matrix a(n, 2);
  Vector y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double r = radii[static_cast<std::size_t>(i)];
    a(i, 0) = 1.0;
    a(i, 1) = 1.0 / r;
    y(i) = r * (1.0 - blaschke_eval(family, r));
  }
  if (n >= 2) {
    Vector c = a.colPivHouseholderQr().solve(y);
    out.c3 = c(0);
  } else {
    out.c3 = y(0);
  }

  constexpr int kAngles = 64;
  for (double r : radii) {
    for (int j = 0; j < kAngles; ++j) {
      const Complex z = std::polar(r, 2.0 * std::numbers::pi * j / kAngles);
      out.max_modulus = std::max(out.max_modulus, std::abs(blaschke_eval(family, z)));
    }
  }
  return out;
}

}  // namespace qs::hardy
