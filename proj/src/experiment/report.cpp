/**
 * Copyright quasishift contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "internal.hpp"

namespace qs::experiment {

namespace {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string csv_field(const Cell &cell) {
  if (const auto *i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  if (const auto *d = std::get_if<double>(&cell)) return format_double(*d);
  const std::string &s = std::get<std::string>(cell);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

nlohmann::ordered_json json_value(double x) {
  if (!std::isfinite(x)) return format_double(x);
  return x;
}

nlohmann::ordered_json json_cell(const Cell &cell) {
  if (const auto *i = std::get_if<std::int64_t>(&cell)) return *i;
  if (const auto *d = std::get_if<double>(&cell)) return json_value(*d);
  return std::get<std::string>(cell);
}

void write_text(const std::filesystem::path &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace

bool ExperimentReport::passed() const {
  return aborted_stage.empty() && error.empty() && !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.pass; });
}

std::string to_csv(const ExperimentReport &report) {
  std::string out;
  for (std::size_t i = 0; i < report.columns.size(); ++i) {
    out += (i ? "," : "") + report.columns[i];
  }
  out += '\n';
  for (const auto &row : report.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_field(row[i]);
    out += '\n';
  }
  return out;
}

std::string to_json(const ExperimentReport &report, int indent) {
  nlohmann::ordered_json j;
  const auto &cfg = report.config;
  j["config"]["kind"] = cfg.kind;
  j["config"]["name"] = cfg.name;
  j["config"]["seed"] = cfg.seed ? nlohmann::ordered_json(*cfg.seed) : nlohmann::ordered_json(nullptr);
  j["config"]["parameters"] = nlohmann::ordered_json::object();
  for (const auto &[k, v] : cfg.params) j["config"]["parameters"][k] = v;
  j["verdict"] = report.passed() ? "pass" : "fail";
  j["aborted_stage"] = report.aborted_stage.empty() ? nlohmann::ordered_json(nullptr)
                                                    : nlohmann::ordered_json(report.aborted_stage);
  j["error"] = report.error.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(report.error);
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto &c : report.checks) {
    j["checks"].push_back({{"name", c.name},
                           {"criterion", c.criterion},
                           {"value", json_value(c.value)},
                           {"tolerance", json_value(c.tolerance)},
                           {"verdict", c.pass ? "pass" : "fail"},
                           {"detail", c.detail}});
  }
  j["fits"] = nlohmann::ordered_json::object();
  for (const auto &[k, v] : report.fits) j["fits"][k] = json_value(v);
  j["notes"] = nlohmann::ordered_json::object();
  for (const auto &[k, v] : report.notes) j["notes"][k] = v;
  j["columns"] = report.columns;
  j["records"] = nlohmann::ordered_json::array();
  for (const auto &row : report.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const auto &cell : row) r.push_back(json_cell(cell));
    j["records"].push_back(std::move(r));
  }
  j["wall_seconds"] = report.wall_seconds;
  return j.dump(indent) + "\n";
}

OutputPaths write_outputs(const ExperimentReport &report, const std::filesystem::path &dir) {
  std::filesystem::create_directories(dir);
  OutputPaths paths{dir / (report.config.name + ".csv"), dir / (report.config.name + ".json")};
  write_text(paths.csv, to_csv(report));
  write_text(paths.json, to_json(report));
  return paths;
}

std::string describe_kinds() {
  std::string out;
  for (const auto &kind : detail::kinds()) {
    out += kind.name + ": " + kind.summary + "\n";
    for (const auto &f : kind.schema) {
      out += "  " + f.key + " (" + f.type + (f.fallback ? ", default " + *f.fallback : ", required") +
             "): " + f.help + "\n";
    }
  }
  return out;
}

}  // namespace qs::experiment
