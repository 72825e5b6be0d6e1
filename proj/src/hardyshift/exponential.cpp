/**
 * Copyright quasishift contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

#include "quasishift/hardyshift.hpp"

namespace qs::hardy {

namespace {

// (e^z - 1) / z
Complex phi(Complex z) {
  if (std::abs(z) < 1e-5) return 1.0 + z / 2.0 + z * z / 6.0;
  return (std::exp(z) - 1.0) / z;
}

double max_delay(const ExpCombination &u) {
  double d = 0.0;
  for (const auto &term : u.terms()) d = std::max(d, term.delay);
  return d;
}

// Non-decaying rates must cancel past the last delay for the combination
// to lie in L2.
void require_tail_cancellation(const ExpCombination &u, const char *op) {
  std::map<std::pair<double, double>, Complex> sums;
  std::map<std::pair<double, double>, double> scale;
  for (const auto &term : u.terms()) {
    if (term.rate.real() < 0.0) continue;
    const auto key = std::make_pair(term.rate.real(), term.rate.imag());
    const Complex w = term.coef * std::exp(-term.rate * term.delay);
    sums[key] += w;
    scale[key] += std::abs(w);
  }
  for (const auto &[key, s] : sums) {
    if (std::abs(s) > 1e-10 * std::max(1.0, scale[key])) {
      throw std::domain_error(std::string(op) + ": combination is not square integrable");
    }
  }
}

// Integral over [lo, hi) of e^{rate (x - lo)}.
Complex segment(Complex rate, double lo, double hi) {
  if (std::isinf(hi)) {
    if (!(rate.real() < 0.0)) throw std::domain_error("divergent integral");
    return -1.0 / rate;
  }
  const double len = hi - lo;
  return len * phi(rate * len);
}

}  // namespace

ExpCombination ExpCombination::exponential(Complex rate, Complex coef, double delay) {
  return ExpCombination({{coef, rate, delay}});
}

ExpCombination ExpCombination::indicator(double a, double b) {
  return ExpCombination({{1.0, 0.0, a}, {-1.0, 0.0, b}});
}

Complex ExpCombination::operator()(double x) const {
  Complex s = 0.0;
  for (const auto &term : terms_) {
    if (x > term.delay) s += term.coef * std::exp(term.rate * (x - term.delay));
  }
  return s;
}

ExpCombination ExpCombination::shifted(double t) const {
  ExpCombination out = *this;
  for (auto &term : out.terms_) term.delay += t;
  return out;
}

ExpCombination ExpCombination::simplified() const {
  using Key = std::tuple<double, double, double>;
  std::map<Key, Complex> merged;
  std::vector<Key> order;
  for (const auto &term : terms_) {
    Key key{term.rate.real(), term.rate.imag(), term.delay};
    auto [it, inserted] = merged.emplace(key, 0.0);
    if (inserted) order.push_back(key);
    it->second += term.coef;
  }
  std::vector<DelayedExponential> out;
  for (const Key &key : order) {
    const Complex c = merged[key];
    if (c == 0.0) continue;
    out.push_back({c, Complex(std::get<0>(key), std::get<1>(key)), std::get<2>(key)});
  }
  return ExpCombination(std::move(out));
}

ExpCombination &ExpCombination::operator+=(const ExpCombination &other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

ExpCombination &ExpCombination::operator-=(const ExpCombination &other) {
  for (auto term : other.terms_) {
    term.coef = -term.coef;
    terms_.push_back(term);
  }
  return *this;
}

ExpCombination &ExpCombination::operator*=(Complex s) {
  for (auto &term : terms_) term.coef *= s;
  return *this;
}

ExpCombination operator+(ExpCombination a, const ExpCombination &b) { return a += b; }
ExpCombination operator-(ExpCombination a, const ExpCombination &b) { return a -= b; }
ExpCombination operator*(Complex s, ExpCombination a) { return a *= s; }

Complex inner_product(const ExpCombination &u, const ExpCombination &v, double a, double b) {
  const bool unbounded = std::isinf(b);
  double cutoff = b;
  if (unbounded) {
    require_tail_cancellation(u, "inner_product");
    require_tail_cancellation(v, "inner_product");
    cutoff = std::max({max_delay(u), max_delay(v), a});
  }
  Complex s = 0.0;
  for (const auto &p : u.terms()) {
    for (const auto &q : v.terms()) {
      const Complex rate = std::conj(p.rate) + q.rate;
      const double lo = std::max({a, p.delay, q.delay});
      const bool decays = rate.real() < 0.0 && p.rate.real() < 0.0 && q.rate.real() < 0.0;
      const double hi = unbounded && !decays ? cutoff : b;
      if (!(hi > lo)) continue;
      const Complex start =
          std::exp(std::conj(p.rate) * (lo - p.delay) + q.rate * (lo - q.delay));
      s += std::conj(p.coef) * q.coef * start * segment(rate, lo, hi);
    }
  }
  return s;
}

double norm(const ExpCombination &u, double a, double b) {
  const ExpCombination merged = u.simplified();
  return std::sqrt(std::max(0.0, inner_product(merged, merged, a, b).real()));
}

Complex integral(const ExpCombination &u, double a, double b) {
  const bool unbounded = std::isinf(b);
  double cutoff = b;
  if (unbounded) {
    require_tail_cancellation(u, "integral");
    cutoff = std::max(max_delay(u), a);
  }
  Complex s = 0.0;
  for (const auto &p : u.terms()) {
    const double lo = std::max(a, p.delay);
    const double hi = unbounded && !(p.rate.real() < 0.0) ? cutoff : b;
    if (!(hi > lo)) continue;
    s += p.coef * std::exp(p.rate * (lo - p.delay)) * segment(p.rate, lo, hi);
  }
  return s;
}

ExpCombination family_function(const ExponentialFamily &family, std::size_t n) {
  const Complex l = family.lambdas.at(n);
  return ExpCombination::exponential(l, std::sqrt(-2.0 * l.real()));
}

ExpCombination basis_function(const ExponentialBasis &basis, std::size_t n) {
  ExpCombination out;
  for (std::size_t m = 0; m <= n; ++m) {
    out += basis.coefficients()(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n)) *
           family_function(basis.family(), m);
  }
  return out.simplified();
}

ExpCombination theta_apply(const ExponentialFamily &family, const ExpCombination &u) {
  const std::vector<Complex> residues = blaschke_residues(family);
  std::vector<DelayedExponential> out;
  for (const auto &term : u.terms()) {
    if (term.rate.real() > 0.0) {
      throw std::domain_error("theta_apply: rate with positive real part");
    }
    for (const Complex &l : family.lambdas) {
      if (std::abs(term.rate - l) <= 1e-14 * std::max(1.0, std::abs(l))) {
        throw std::domain_error("theta_apply: input rate coincides with pole (" +
                                std::to_string(l.real()) + ", " + std::to_string(l.imag()) + ")");
      }
    }
    out.push_back({term.coef * blaschke_eval(family, term.rate), term.rate, term.delay});
    for (std::size_t k = 0; k < family.size(); ++k) {
      const Complex l = family.lambdas[k];
      out.push_back({term.coef * residues[k] / (l - term.rate), l, term.delay});
    }
  }
  return ExpCombination(std::move(out)).simplified();
}

}  // namespace qs::hardy
