/**
 * Copyright quasishift contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>

#include "quasishift/hardyshift.hpp"

namespace qs::hardy {

namespace {

// Normalization making the window piece f1 - f2 a unit vector.
double window_normalization(Complex rate, double delta) {
  const double a = rate.real();
  return std::sqrt(-2.0 * a / -std::expm1(2.0 * a * delta));
}

Prop2Term evaluate_term(const ExponentialFamily &family, int k, double t, double delta) {
  const ExpCombination f1 = prop2_first(k, t, delta);
  const ExpCombination f2 = prop2_second(k, t, delta);
  const ExpCombination d1 = (theta_apply(family, f1) - f1).simplified();
  const ExpCombination d2 = (theta_apply(family, f2) - f2).simplified();
  Prop2Term term;
  term.k = k;
  term.first = inner_product(d1, d1).real();
  term.second = inner_product(d2, d2).real();
  const ExpCombination dw = d1 - d2;
  term.window = inner_product(dw, dw, t, t + delta).real();
  return term;
}

}  // namespace

Complex prop2_rate(int k, double delta) {
  if (k == 0) throw std::invalid_argument("prop2_rate: k = 0 has no window element");
  return {-1.0 / (2.0 * std::abs(k)), 2.0 * std::numbers::pi * k / delta};
}

ExpCombination prop2_first(int k, double t, double delta) {
  const Complex mu = prop2_rate(k, delta);
  return ExpCombination::exponential(mu, window_normalization(mu, delta), t);
}

ExpCombination prop2_second(int k, double t, double delta) {
  const Complex mu = prop2_rate(k, delta);
  return ExpCombination::exponential(mu, window_normalization(mu, delta) * std::exp(mu * delta),
                                     t + delta);
}

Prop2Result prop2_defect(const ExponentialFamily &family, double t, double delta, int k_max) {
  if (!(delta > 0.0)) throw std::invalid_argument("prop2_defect: delta must be positive");
  if (!(t >= 0.0)) throw std::invalid_argument("prop2_defect: negative t");
  if (k_max < 8) throw std::invalid_argument("prop2_defect: k_max must be at least 8");
  Prop2Result out;
  double bound = 0.0;
  double window = 0.0;
  double octave = 0.0;
  for (int k = -2 * k_max; k <= 2 * k_max; ++k) {
    if (k == 0) continue;
    const Prop2Term term = evaluate_term(family, k, t, delta);
    if (std::abs(k) <= k_max) {
      bound += term.first + term.second;
      window += term.window;
      out.terms.push_back(term);
    } else {
      octave += term.first + term.second;
    }
  }
  out.value = std::sqrt(2.0 * bound);
  out.window_value = std::sqrt(window);
  out.next_octave = std::sqrt(2.0 * octave);
  return out;
}

}  // namespace qs::hardy
