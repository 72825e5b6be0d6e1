/**
 * Copyright quasishift contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "internal.hpp"

namespace qs::experiment {

namespace {

std::string trim(const std::string &s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string read_file(const std::filesystem::path &path, const std::string &field) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(field, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool parse_double(const std::string &s, double &out) {
  const std::string t = trim(s);
  if (t.empty()) return false;
  const char *first = t.data();
  const char *last = t.data() + t.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && std::isfinite(out);
}

bool parse_int(const std::string &s, std::int64_t &out) {
  const std::string t = trim(s);
  if (t.empty()) return false;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
  return ec == std::errc() && ptr == t.data() + t.size();
}

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  return out;
}

}  // namespace

ExperimentConfig parse_config(const std::string &text, const std::filesystem::path &base_dir) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    std::istringstream in(text);
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error &e) {
    throw ConfigError("", "config syntax: " + e.message() + " at line " + std::to_string(e.line()));
  }
  ExperimentConfig cfg;
  cfg.base_dir = base_dir;
  cfg.output_dir = base_dir;
  bool have_experiment = false;
  for (const auto &[section, body] : tree) {
    if (!body.data().empty() && body.empty()) {
      throw ConfigError(section, "keys must sit inside [experiment] or [parameters]");
    }
    if (section == "experiment") {
      have_experiment = true;
      for (const auto &[key, value] : body) {
        const std::string v = trim(value.data());
        if (key == "kind") {
          cfg.kind = v;
        } else if (key == "name") {
          cfg.name = v;
        } else if (key == "seed") {
          std::uint64_t seed = 0;
          auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), seed);
          if (ec != std::errc() || ptr != v.data() + v.size()) {
            throw ConfigError("seed", "expected unsigned 64-bit integer, got '" + v + "'");
          }
          cfg.seed = seed;
        } else if (key == "output") {
          cfg.output_dir = base_dir / v;
        } else {
          throw ConfigError(key, "unknown key in [experiment] (expected kind, name, seed, output)");
        }
      }
    } else if (section == "parameters") {
      for (const auto &[key, value] : body) cfg.params[key] = trim(value.data());
    } else {
      throw ConfigError(section, "unknown section (expected [experiment] or [parameters])");
    }
  }
  if (!have_experiment) throw ConfigError("experiment", "missing [experiment] section");
  if (cfg.kind.empty()) throw ConfigError("kind", "missing experiment kind");
  const auto &all = detail::kinds();
  if (std::none_of(all.begin(), all.end(), [&](const detail::Kind &k) { return k.name == cfg.kind; })) {
    throw ConfigError("kind", "unknown experiment kind '" + cfg.kind + "'");
  }
  if (cfg.name.empty()) cfg.name = cfg.kind;
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path &path) {
  ExperimentConfig cfg = parse_config(read_file(path, "config"), path.parent_path());
  if (cfg.name == cfg.kind) cfg.name = path.stem().string();
  return cfg;
}

hardy::ExponentialFamily parse_family(const std::string &text) {
  hardy::ExponentialFamily family;
  bool have_radius = false;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::istringstream tokens(line);
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    const std::string where = "line " + std::to_string(number) + ": ";
    if (words[0] == "radius") {
      double r = 0.0;
      if (words.size() != 2 || !parse_double(words[1], r) || !(r > 0.0)) {
        throw ConfigError("", where + "expected 'radius R' with R > 0");
      }
      if (have_radius) throw ConfigError("", where + "radius given twice");
      family.radius = r;
      have_radius = true;
      continue;
    }
    double re = 0.0, im = 0.0;
    if (words.size() != 2 || !parse_double(words[0], re) || !parse_double(words[1], im)) {
      throw ConfigError("", where + "expected 'Re Im', got '" + line + "'");
    }
    family.lambdas.emplace_back(re, im);
  }
  return family;
}

hardy::ExponentialFamily load_family(const std::filesystem::path &path) {
  return parse_family(read_file(path, ""));
}

namespace detail {

Params::Params(const ExperimentConfig &config, const std::vector<Field> &schema) : config_(config) {
  for (const auto &[key, value] : config.params) {
    if (std::none_of(schema.begin(), schema.end(), [&](const Field &f) { return f.key == key; })) {
      throw ConfigError(key, "unknown parameter for kind '" + config.kind + "'");
    }
  }
  for (const Field &f : schema) {
    auto it = config.params.find(f.key);
    if (it != config.params.end()) {
      values_[f.key] = it->second;
    } else if (f.fallback) {
      values_[f.key] = *f.fallback;
    } else {
      throw ConfigError(f.key, "required parameter missing (expected " + f.type + ")");
    }
  }
}

std::string Params::text(const std::string &key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw std::logic_error("parameter '" + key + "' not in schema");
  return it->second;
}

double Params::real(const std::string &key, double lo, double hi, bool open_lo, bool open_hi) const {
  const std::string v = text(key);
  double x = 0.0;
  const bool ok = parse_double(v, x) && (open_lo ? x > lo : x >= lo) && (open_hi ? x < hi : x <= hi);
  if (!ok) {
    std::ostringstream msg;
    msg << "expected real in " << (open_lo ? "(" : "[") << lo << ", " << hi << (open_hi ? ")" : "]")
        << ", got '" << v << "'";
    throw ConfigError(key, msg.str());
  }
  return x;
}

std::int64_t Params::integer(const std::string &key, std::int64_t lo, std::int64_t hi) const {
  const std::string v = text(key);
  std::int64_t x = 0;
  if (!parse_int(v, x) || x < lo || x > hi) {
    throw ConfigError(key, "expected integer in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                               "], got '" + v + "'");
  }
  return x;
}

std::vector<std::int64_t> Params::integers(const std::string &key, std::int64_t lo,
                                           std::int64_t hi) const {
  const std::string v = text(key);
  auto fail = [&](const std::string &why) {
    throw ConfigError(key, "expected integer list 'a..b', 'a..b*f' or 'a, b, c' within [" +
                               std::to_string(lo) + ", " + std::to_string(hi) + "]: " + why +
                               " (got '" + v + "')");
  };
  std::vector<std::int64_t> out;
  const auto dots = v.find("..");
  if (dots != std::string::npos) {
    std::string rest = v.substr(dots + 2);
    std::int64_t factor = 0;
    const auto star = rest.find('*');
    if (star != std::string::npos) {
      if (!parse_int(rest.substr(star + 1), factor) || factor < 2) fail("bad factor");
      rest = rest.substr(0, star);
    }
    std::int64_t a = 0, b = 0;
    if (!parse_int(v.substr(0, dots), a) || !parse_int(rest, b) || b < a) fail("bad range");
    if (factor == 0) {
      for (std::int64_t x = a; x <= b; ++x) out.push_back(x);
    } else {
      if (a < 1) fail("geometric range must start at 1 or more");
      for (std::int64_t x = a; x <= b; x *= factor) out.push_back(x);
    }
  } else {
    for (const std::string &item : split(v, ',')) {
      std::int64_t x = 0;
      if (!parse_int(item, x)) fail("bad entry '" + item + "'");
      out.push_back(x);
    }
  }
  if (out.empty()) fail("empty list");
  for (std::int64_t x : out) {
    if (x < lo || x > hi) fail("entry " + std::to_string(x) + " out of range");
  }
  return out;
}

std::vector<double> Params::reals(const std::string &key) const {
  const std::string v = text(key);
  std::vector<double> out;
  for (const std::string &item : split(v, ',')) {
    double x = 0.0;
    if (!parse_double(item, x)) {
      throw ConfigError(key, "expected comma-separated reals, bad entry '" + item + "'");
    }
    out.push_back(x);
  }
  if (out.empty()) throw ConfigError(key, "expected at least one value");
  return out;
}

std::string Params::choice(const std::string &key, const std::set<std::string> &allowed) const {
  const std::string v = text(key);
  if (!allowed.count(v)) {
    std::string list;
    for (const auto &a : allowed) list += (list.empty() ? "" : ", ") + a;
    throw ConfigError(key, "expected one of {" + list + "}, got '" + v + "'");
  }
  return v;
}

std::filesystem::path Params::path(const std::string &key) const {
  const std::string v = text(key);
  if (v.empty()) throw ConfigError(key, "expected a file path");
  std::filesystem::path p(v);
  return p.is_absolute() ? p : config_.base_dir / p;
}

std::vector<std::filesystem::path> Params::paths(const std::string &key) const {
  std::vector<std::filesystem::path> out;
  for (const std::string &item : split(text(key), ',')) {
    if (item.empty()) throw ConfigError(key, "empty path in list");
    std::filesystem::path p(item);
    out.push_back(p.is_absolute() ? p : config_.base_dir / p);
  }
  return out;
}

hardy::ExponentialFamily Params::family(const std::string &key) const {
  try {
    return load_family(path(key));
  } catch (const ConfigError &e) {
    throw ConfigError(key, std::string(e.what()));
  }
}

void add_check(ExperimentReport &report, std::string name, int criterion, double value,
               double tolerance, bool pass, std::string detail) {
  report.checks.push_back({std::move(name), criterion, value, tolerance, pass, std::move(detail)});
}

}  // namespace detail

}  // namespace qs::experiment
