/**
 * Copyright quasishift contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "internal.hpp"

namespace qs::experiment::detail {

namespace {

using bogoliubov::MatrixFamily;
using bogoliubov::MatrixPath;
using bogoliubov::Verdict;

Matrix identity(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  return Matrix::Identity(k, k);
}

MatrixFamily diagonal_unitary(std::function<double(std::size_t)> angle) {
  return [angle](std::size_t n) {
    Vector d(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) d(static_cast<Eigen::Index>(i)) = std::polar(1.0, angle(i));
    return Matrix(d.asDiagonal());
  };
}

MatrixFamily diagonal_covariance(std::function<double(std::size_t)> entry) {
  return [entry](std::size_t n) {
    Vector d(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) d(static_cast<Eigen::Index>(i)) = entry(i);
    return Matrix(d.asDiagonal());
  };
}

void record_fits(ExperimentReport &r, const std::string &prefix,
                 const bogoliubov::CriterionReport &rep) {
  if (rep.growth_exponent) r.fits.emplace_back(prefix + "growth_exponent", *rep.growth_exponent);
  if (rep.increment_exponent) {
    r.fits.emplace_back(prefix + "increment_exponent", *rep.increment_exponent);
  }
}

void run_innerness(const Params &p, Rng &, ExperimentReport &r) {
  const double nu = p.real("nu", 0.0, 1.0, true, true);
  const std::string w = p.choice("w", {"identity", "minus_identity", "single_phase", "finite_rank"});
  const double theta = p.real("theta", -10.0, 10.0);
  const auto rank = static_cast<std::size_t>(p.integer("rank", 1, 1 << 20));
  const auto sizes = as_sizes(p.integers("sizes", 1, 4096));
  const bool bounded = w != "minus_identity";
  const Verdict expect = expected_verdict(p, "expect", bounded ? Verdict::converges : Verdict::diverges);

  const double weight = std::sqrt(nu * (1.0 - nu));
  const double jump = std::abs(std::polar(1.0, theta) - 1.0);
  MatrixFamily family;
  std::function<double(std::size_t)> closed;
  if (w == "identity") {
    family = identity;
    closed = [](std::size_t) { return 0.0; };
  } else if (w == "minus_identity") {
    family = [](std::size_t n) { return Matrix(-identity(n)); };
    closed = [=](std::size_t n) { return 2.0 * weight * std::sqrt(static_cast<double>(n)); };
  } else {
    const std::size_t k = w == "single_phase" ? 1 : rank;
    family = diagonal_unitary([=](std::size_t i) { return i < k ? theta : 0.0; });
    closed = [=](std::size_t n) { return jump * weight * std::sqrt(static_cast<double>(std::min(n, k))); };
  }

  const auto rep = bogoliubov::innerness_norm(bogoliubov::scalar_covariance(nu), family, sizes);
  r.columns = {"n", "hs_value", "closed_form", "relative_error"};
  double worst = 0.0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const double expected = closed(sizes[i]);
    const double diff = std::abs(rep.hs_values[i] - expected);
    const double rel = expected > 0.0 ? diff / expected : diff;
    worst = std::max(worst, rel);
    r.rows.push_back({static_cast<std::int64_t>(sizes[i]), rep.hs_values[i], expected, rel});
  }
  record_fits(r, "", rep);
  r.notes.emplace_back("verdict", std::string(bogoliubov::to_string(rep.verdict)));
  add_check(r, "closed_form", 5, worst, 1e-13, worst <= 1e-13,
            "relative deviation from the closed form");
  add_check(r, "verdict", 5, 0.0, 0.0, rep.verdict == expect,
            std::string(bogoliubov::to_string(rep.verdict)) + ", expected " +
                std::string(bogoliubov::to_string(expect)));
}

void run_conjugacy(const Params &p, Rng &, ExperimentReport &r) {
  const double nu = p.real("nu", 0.0, 1.0, true, true);
  const std::string path = p.choice("path", {"equal", "rank_one", "phase"});
  const double omega = p.real("omega", -100.0, 100.0);
  const double strength = p.real("strength", -100.0, 100.0);
  const auto ts = p.reals("t");
  const auto sizes = as_sizes(p.integers("sizes", 2, 4096));
  const Verdict expect =
      expected_verdict(p, "expect", path == "phase" ? Verdict::diverges : Verdict::converges);

  auto generator = [strength](std::size_t n, bool perturbed) {
    const auto k = static_cast<Eigen::Index>(n);
    Matrix h = Matrix::Zero(k, k);
    for (Eigen::Index i = 0; i < k; ++i) h(i, i) = static_cast<double>(i);
    if (perturbed) {
      Vector v = Vector::Zero(k);
      v(0) = v(1) = 1.0 / std::sqrt(2.0);
      h += strength * v * v.adjoint();
    }
    return h;
  };
  MatrixPath u, v;
  if (path == "equal") {
    u = v = [&](std::size_t n, double t) { return hermitian_unitary_exp(generator(n, false), t); };
  } else if (path == "rank_one") {
    u = [&](std::size_t n, double t) { return hermitian_unitary_exp(generator(n, false), t); };
    v = [&](std::size_t n, double t) { return hermitian_unitary_exp(generator(n, true), t); };
  } else {
    u = [omega](std::size_t n, double t) { return Matrix(std::polar(1.0, omega * t) * identity(n)); };
    v = [](std::size_t n, double) { return identity(n); };
  }
  const auto reports =
      bogoliubov::conjugacy_criterion(bogoliubov::scalar_covariance(nu), u, v, ts, sizes);
  r.columns = {"t", "n", "hs_value"};
  for (const auto &tr : reports) {
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      r.rows.push_back({tr.t, static_cast<std::int64_t>(sizes[i]), tr.report.hs_values[i]});
    }
    const std::string tag = "t=" + format_number(tr.t);
    record_fits(r, tag + ":", tr.report);
    add_check(r, "verdict " + tag, 12, 0.0, 0.0, tr.report.verdict == expect,
              std::string(bogoliubov::to_string(tr.report.verdict)) + ", expected " +
                  std::string(bogoliubov::to_string(expect)));
  }
}

struct Family {
  std::string name;
  MatrixFamily r, v, w;
  Verdict expected;
};

std::vector<Family> extension_families() {
  const MatrixFamily one = identity;
  const MatrixFamily minus = [](std::size_t n) { return Matrix(-identity(n)); };
  const auto scalar = bogoliubov::scalar_covariance;
  return {
      {"equal_identity", scalar(0.3), one, one, Verdict::converges},
      {"equal_phases", scalar(0.3), diagonal_unitary([](std::size_t i) { return 0.7 * i; }),
       diagonal_unitary([](std::size_t i) { return 0.7 * i; }), Verdict::converges},
      {"opposite", scalar(0.3), minus, one, Verdict::diverges},
      {"opposite_trace_state", scalar(0.5), minus, one, Verdict::diverges},
      {"finite_rank_difference", scalar(0.25),
       diagonal_unitary([](std::size_t i) { return i < 3 ? 1.0 + static_cast<double>(i) : 0.0; }),
       one, Verdict::converges},
      {"square_summable_phases", scalar(0.3),
       diagonal_unitary([](std::size_t i) { return 1.0 / (static_cast<double>(i) + 1.0); }), one,
       Verdict::converges},
      {"slowly_decaying_phases", scalar(0.3),
       diagonal_unitary([](std::size_t i) { return 1.0 / std::sqrt(static_cast<double>(i) + 1.0); }),
       one, Verdict::diverges},
      {"constant_phase_offset", scalar(0.3), diagonal_unitary([](std::size_t) { return 0.1; }), one,
       Verdict::diverges},
      {"decaying_covariance", diagonal_covariance([](std::size_t i) {
         const double k = static_cast<double>(i) + 2.0;
         return 1.0 / (k * k);
       }),
       minus, one, Verdict::converges},
      {"borderline_covariance",
       diagonal_covariance([](std::size_t i) { return 0.5 / (static_cast<double>(i) + 1.0); }), minus,
       one, Verdict::diverges},
      {"block_rotation", scalar(0.3),
       [](std::size_t n) {
         Matrix m = identity(n);
         const auto k = static_cast<Eigen::Index>(n);
         for (Eigen::Index i = 0; i + 1 < k; i += 2) {
           const double a = 1.0 / (static_cast<double>(i) + 1.0);
           m(i, i) = m(i + 1, i + 1) = std::cos(a);
           m(i, i + 1) = -std::sin(a);
           m(i + 1, i) = std::sin(a);
         }
         return m;
       },
       one, Verdict::converges},
  };
}

void run_extension(const Params &p, Rng &, ExperimentReport &r) {
  const auto sizes = as_sizes(p.integers("sizes", 2, 2048));
  const std::string selection = p.text("families");
  auto all = extension_families();
  std::vector<Family> chosen;
  if (selection == "all") {
    chosen = all;
  } else {
    std::set<std::string> known;
    for (const auto &f : all) known.insert(f.name);
    std::string item;
    std::istringstream in(selection);
    while (std::getline(in, item, ',')) {
      item.erase(0, item.find_first_not_of(" \t"));
      item.erase(item.find_last_not_of(" \t") + 1);
      if (!known.count(item)) throw ConfigError("families", "unknown family '" + item + "'");
      for (const auto &f : all) {
        if (f.name == item) chosen.push_back(f);
      }
    }
  }
  r.columns = {"family", "n", "extension_value", "araki_value"};
  for (const auto &fam : chosen) {
    const auto ext = bogoliubov::extension_criterion(fam.r, fam.v, fam.w, sizes);
    const auto ara = bogoliubov::araki_report(fam.r, fam.v, fam.w, sizes);
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      r.rows.push_back({fam.name, static_cast<std::int64_t>(sizes[i]), ext.hs_values[i],
                        ara.hs_values[i]});
    }
    record_fits(r, fam.name + ":extension_", ext);
    record_fits(r, fam.name + ":araki_", ara);
    const std::string ev(bogoliubov::to_string(ext.verdict));
    const std::string av(bogoliubov::to_string(ara.verdict));
    add_check(r, fam.name + " agreement", 6, 0.0, 0.0, ext.verdict == ara.verdict,
              "extension " + ev + ", araki " + av);
    add_check(r, fam.name + " expected", 6, 0.0, 0.0, ext.verdict == fam.expected,
              ev + ", expected " + std::string(bogoliubov::to_string(fam.expected)));
  }
  if (selection == "all") {
    const auto n = static_cast<double>(chosen.size());
    add_check(r, "family_count", 6, n, 10.0, n >= 10.0, "families compared");
  }
}

}  // namespace

std::vector<Kind> criterion_kinds() {
  return {
      {"innerness",
       "HS norm of R^{1/2}(1-R)^{1/2}(W-1) over truncations, scalar R",
       {{"nu", "real in (0,1)", "0.3", "scalar covariance"},
        {"w", "identity|minus_identity|single_phase|finite_rank", "minus_identity", "unitary W"},
        {"theta", "real", "1.5707963267948966", "phase angle for single_phase and finite_rank"},
        {"rank", "integer", "3", "phased entries for finite_rank"},
        {"sizes", "integer list", "4..64", "truncation sizes"},
        {"expect", "auto|converges|diverges|inconclusive", "auto", "expected verdict"}},
       false,
       run_innerness},
      {"conjugacy",
       "HS norm of R^{1/2}(1-R)^{1/2}(U_t-V_t) over truncations for model paths",
       {{"nu", "real in (0,1)", "0.3", "scalar covariance"},
        {"path", "equal|rank_one|phase", "rank_one", "pair of unitary paths"},
        {"omega", "real", "1.3", "frequency for phase"},
        {"strength", "real", "0.8", "rank-one generator perturbation"},
        {"t", "real list", "0.25, 0.5, 1", "times"},
        {"sizes", "integer list", "4..64*2", "truncation sizes"},
        {"expect", "auto|converges|diverges|inconclusive", "auto", "expected verdict"}},
       false,
       run_conjugacy},
      {"extension",
       "extension criterion against the Araki commutator on built-in families",
       {{"families", "all or comma list", "all", "family names"},
        {"sizes", "integer list", "4..256*2", "truncation sizes"}},
       false,
       run_extension},
  };
}

}  // namespace qs::experiment::detail
