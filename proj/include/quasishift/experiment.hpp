/**
 * Copyright quasishift contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef QUASISHIFT_EXPERIMENT_HPP
#define QUASISHIFT_EXPERIMENT_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "quasishift/hardyshift.hpp"

namespace qs::experiment {

// Schema violation or unreadable input; maps to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string &message)
      : std::runtime_error(field.empty() ? message : "field '" + field + "': " + message),
        field_(std::move(field)) {}
  const std::string &field() const { return field_; }

 private:
  std::string field_;
};

struct ExperimentConfig {
  std::string kind;
  std::string name;  // output file stem
  std::optional<std::uint64_t> seed;
  std::map<std::string, std::string> params;
  std::filesystem::path base_dir;  // sidecar paths resolve against this
  std::filesystem::path output_dir;
};

// INI text: [experiment] kind/seed/name/output, [parameters] per kind.
ExperimentConfig parse_config(const std::string &text, const std::filesystem::path &base_dir);
ExperimentConfig load_config(const std::filesystem::path &path);

// "Re Im" per line, '#' comments, optional "radius R" line (default 1).
hardy::ExponentialFamily parse_family(const std::string &text);
hardy::ExponentialFamily load_family(const std::filesystem::path &path);

using Cell = std::variant<std::int64_t, double, std::string>;

struct Check {
  std::string name;
  int criterion = 0;  // acceptance criterion number
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, double>> fits;
  std::vector<std::pair<std::string, std::string>> notes;
  std::vector<Check> checks;
  std::string aborted_stage;  // empty unless a stage threw or failed
  std::string error;
  double wall_seconds = 0.0;

  bool passed() const;
};

ExperimentReport run(const ExperimentConfig &config);

std::string to_csv(const ExperimentReport &report);
std::string to_json(const ExperimentReport &report, int indent = 2);

struct OutputPaths {
  std::filesystem::path csv;
  std::filesystem::path json;
};
OutputPaths write_outputs(const ExperimentReport &report, const std::filesystem::path &dir);

// Kinds with their parameter schemas, one block per kind.
std::string describe_kinds();

}  // namespace qs::experiment

#endif  // QUASISHIFT_EXPERIMENT_HPP
