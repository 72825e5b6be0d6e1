/**
 * Copyright quasishift contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef QUASISHIFT_EXPERIMENT_INTERNAL_HPP
#define QUASISHIFT_EXPERIMENT_INTERNAL_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "quasishift/bogoliubov.hpp"
#include "quasishift/experiment.hpp"

namespace qs::experiment::detail {

struct Field {
  std::string key;
  std::string type;  // human-readable type for `list`
  std::optional<std::string> fallback;  // nullopt: required
  std::string help;
};

// Typed, validated view of the [parameters] section for one kind.
class Params {
 public:
  Params(const ExperimentConfig &config, const std::vector<Field> &schema);

  std::string text(const std::string &key) const;
  double real(const std::string &key, double lo, double hi, bool open_lo = false,
              bool open_hi = false) const;
  std::int64_t integer(const std::string &key, std::int64_t lo, std::int64_t hi) const;
  // "a..b" (unit step), "a..b*f" (geometric factor f), or "a, b, c".
  std::vector<std::int64_t> integers(const std::string &key, std::int64_t lo, std::int64_t hi) const;
  std::vector<double> reals(const std::string &key) const;
  std::string choice(const std::string &key, const std::set<std::string> &allowed) const;
  std::filesystem::path path(const std::string &key) const;
  std::vector<std::filesystem::path> paths(const std::string &key) const;
  hardy::ExponentialFamily family(const std::string &key) const;

 private:
  const ExperimentConfig &config_;
  std::map<std::string, std::string> values_;
};

using Rng = std::mt19937_64;

struct Kind {
  std::string name;
  std::string summary;
  std::vector<Field> schema;
  bool randomized = false;  // needs an explicit seed
  std::function<void(const Params &, Rng &, ExperimentReport &)> run;
};

const std::vector<Kind> &kinds();

// Kind tables, one per source file.
std::vector<Kind> algebra_kinds();
std::vector<Kind> criterion_kinds();
std::vector<Kind> hardy_kinds();

std::string format_number(double x);  // %.4g
Vector random_vector(Eigen::Index n, Rng &rng);
// Real symmetric, spectrum uniform in [0.1, 0.9].
Matrix random_covariance(Eigen::Index n, Rng &rng);
std::vector<std::size_t> as_sizes(const std::vector<std::int64_t> &values);
std::vector<double> powers_of_two(const std::vector<std::int64_t> &exponents);
// "auto" keeps the fallback.
bogoliubov::Verdict expected_verdict(const Params &p, const std::string &key,
                                     bogoliubov::Verdict fallback);

void add_check(ExperimentReport &report, std::string name, int criterion, double value,
               double tolerance, bool pass, std::string detail = {});

}  // namespace qs::experiment::detail

#endif  // QUASISHIFT_EXPERIMENT_INTERNAL_HPP
