/**
 * Copyright quasishift contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

#include <Eigen/QR>

#include "internal.hpp"

namespace qs::experiment {

namespace detail {

const std::vector<Kind> &kinds() {
  static const std::vector<Kind> table = [] {
    std::vector<Kind> all;
    for (auto part : {algebra_kinds(), criterion_kinds(), hardy_kinds()}) {
      for (auto &k : part) all.push_back(std::move(k));
    }
    return all;
  }();
  return table;
}

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

Vector random_vector(Eigen::Index n, Rng &rng) {
  std::normal_distribution<double> d;
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double re = d(rng);
    v(i) = Complex(re, d(rng));
  }
  return v;
}

Matrix random_covariance(Eigen::Index n, Rng &rng) {
  std::normal_distribution<double> d;
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) a(i, j) = d(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  const Eigen::MatrixXd q = qr.householderQ();
  std::uniform_real_distribution<double> u(0.1, 0.9);
  Eigen::VectorXd w(n);
  for (Eigen::Index i = 0; i < n; ++i) w(i) = u(rng);
  const Eigen::MatrixXd r = q * w.asDiagonal() * q.transpose();
  return (0.5 * (r + r.transpose())).cast<Complex>();
}

std::vector<std::size_t> as_sizes(const std::vector<std::int64_t> &values) {
  return {values.begin(), values.end()};
}

std::vector<double> powers_of_two(const std::vector<std::int64_t> &exponents) {
  std::vector<double> out;
  for (std::int64_t e : exponents) out.push_back(std::ldexp(1.0, static_cast<int>(e)));
  return out;
}

bogoliubov::Verdict expected_verdict(const Params &p, const std::string &key,
                                     bogoliubov::Verdict fallback) {
  const std::string v = p.choice(key, {"auto", "converges", "diverges", "inconclusive"});
  if (v == "converges") return bogoliubov::Verdict::converges;
  if (v == "diverges") return bogoliubov::Verdict::diverges;
  if (v == "inconclusive") return bogoliubov::Verdict::inconclusive;
  return fallback;
}

}  // namespace detail

ExperimentReport run(const ExperimentConfig &config) {
  const auto start = std::chrono::steady_clock::now();
  const auto &table = detail::kinds();
  auto it = std::find_if(table.begin(), table.end(),
                         [&](const detail::Kind &k) { return k.name == config.kind; });
  if (it == table.end()) throw ConfigError("kind", "unknown experiment kind '" + config.kind + "'");
  ExperimentReport report;
  report.config = config;
  const detail::Params params(report.config, it->schema);
  if (it->randomized && !config.seed) {
    throw ConfigError("seed", "kind '" + config.kind +
                                  "' draws random samples; set seed in [experiment] or pass --seed");
  }
  detail::Rng rng(config.seed.value_or(0));
  try {
    it->run(params, rng, report);
  } catch (const ConfigError &) {
    throw;
  } catch (const std::exception &e) {
    report.error = e.what();
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace qs::experiment
