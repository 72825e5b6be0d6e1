/**
 * Copyright quasishift contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <algorithm>
#include <cmath>
#include <map>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "internal.hpp"

namespace qs::experiment::detail {

namespace {

using hardy::ExponentialFamily;

void require_condition1(const ExponentialFamily &family, const std::string &op) {
  const auto v = hardy::validate_condition1(family);
  if (!v.valid) throw std::invalid_argument(op + ": " + v.message);
}

double slope(const std::vector<double> &x, const std::vector<double> &y) {
  return loglog_fit(x, y).slope;
}

std::vector<double> log_grid(const Params &p, const std::string &key) {
  const auto exps = p.integers(key, -40, 0);
  if (exps.size() < 6) throw ConfigError(key, "slope fits need at least 6 points");
  return powers_of_two(exps);
}

std::string label(const std::filesystem::path &path) { return path.filename().string(); }

void run_blaschke(const Params &p, Rng &rng, ExperimentReport &r) {
  const auto files = p.paths("lambda_files");
  const auto samples = p.integer("samples", 1, 10000000);
  const double y_max = p.real("y_max", 0.0, 1e12, true);
  const auto radii = p.reals("radii");
  r.columns = {"family", "size",   "decay_sum", "c3_re",       "c3_im",
               "c3_expected", "c1", "c2",        "max_modulus", "unit_residual"};
  std::uniform_real_distribution<double> y(-y_max, y_max);
  for (const auto &file : files) {
    ExponentialFamily family;
    try {
      family = load_family(file);
    } catch (const ConfigError &e) {
      throw ConfigError("lambda_files", e.what());
    }
    require_condition1(family, "blaschke");
    double unit = 0.0;
    for (std::int64_t i = 0; i < samples; ++i) {
      unit = std::max(unit, std::abs(std::abs(hardy::blaschke_eval(family, Complex(0.0, y(rng)))) - 1.0));
    }
    const auto asym = hardy::blaschke_asymptotics(family, radii);
    const std::string name = label(file);
    r.rows.push_back({name, static_cast<std::int64_t>(family.size()), family.decay_sum(),
                      asym.c3.real(), asym.c3.imag(), asym.c3_expected, asym.c1, asym.c2,
                      asym.max_modulus, unit});
    add_check(r, name + " unit_modulus", 7, unit, 1e-12, unit <= 1e-12,
              std::to_string(samples) + " samples on the imaginary axis");
    const double c3_err = std::abs(asym.c3 - Complex(asym.c3_expected));
    const double c3_tol = 0.01 * asym.c3_expected;
    add_check(r, name + " c3_equals_2s", 7, c3_err, c3_tol, c3_err <= c3_tol,
              "fitted " + format_number(asym.c3.real()) + ", expected " +
                  format_number(asym.c3_expected));
    add_check(r, name + " c1_bound", 7, asym.max_modulus, asym.c1,
              asym.max_modulus <= asym.c1 * (1.0 + 1e-12),
              "|B| outside radius " + format_number(asym.c2));
  }
}

void run_approx(const Params &p, Rng &, ExperimentReport &r) {
  const auto family = p.family("lambda_file");
  require_condition1(family, "approx");
  const auto ts = log_grid(p, "t_log2");
  const auto deltas = powers_of_two(p.integers("delta_log2", -40, 4));
  const double t_inc = p.real("increment_t", 0.0, 1e6);
  const auto basis = hardy::orthogonalize(family);
  r.columns = {"quantity", "t", "delta", "value"};

  const double at_zero = hardy::defect_hs_norm(basis, 0.0);
  r.rows.push_back({std::string("defect"), 0.0, 0.0, at_zero});
  std::vector<double> defects, sums;
  for (double t : ts) {
    defects.push_back(hardy::defect_hs_norm(basis, t));
    r.rows.push_back({std::string("defect"), t, 0.0, defects.back()});
  }
  for (double t : ts) {
    sums.push_back(hardy::estimate_inequalities(basis, t).sum);
    r.rows.push_back({std::string("estimate_sum"), t, 0.0, sums.back()});
  }
  std::vector<double> sorted = deltas;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::size_t violations = 0;
  double previous = std::numeric_limits<double>::infinity();
  for (double d : sorted) {
    const double inc = hardy::defect_increment_hs_norm(basis, t_inc, d);
    if (!(inc < previous)) ++violations;
    previous = inc;
    r.rows.push_back({std::string("increment"), t_inc, d, inc});
  }
  const double s_defect = slope(ts, defects);
  const double s_sum = slope(ts, sums);
  r.fits.emplace_back("defect_slope", s_defect);
  r.fits.emplace_back("estimate_sum_slope", s_sum);
  add_check(r, "defect_at_zero", 8, at_zero, 0.0, at_zero == 0.0, "exact zero");
  add_check(r, "defect_slope", 8, s_defect, 0.1, std::abs(s_defect - 0.5) <= 0.1,
            "log-log slope, target 0.5");
  add_check(r, "increments_shrink", 8, static_cast<double>(violations), 0.0, violations == 0,
            "steps where the increment failed to decrease under refinement");
  add_check(r, "estimate_sum_slope", 9, s_sum, 0.1, std::abs(s_sum - 1.0) <= 0.1,
            "log-log slope of the summed head and tail terms, target 1");
}

// Fixed 61-point Gauss-Kronrod on pieces no longer than `piece` between
// sorted breakpoints.
template <class F>
Complex quadrature(F f, std::vector<double> points, double piece) {
  using boost::math::quadrature::gauss_kronrod;
  std::sort(points.begin(), points.end());
  Complex s = 0.0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const double a = points[i], b = points[i + 1];
    const int pieces = std::max(1, static_cast<int>(std::ceil((b - a) / piece)));
    for (int j = 0; j < pieces; ++j) {
      const double lo = a + (b - a) * j / pieces;
      const double hi = a + (b - a) * (j + 1) / pieces;
      const double re =
          gauss_kronrod<double, 61>::integrate([&](double x) { return f(x).real(); }, lo, hi, 0);
      const double im =
          gauss_kronrod<double, 61>::integrate([&](double x) { return f(x).imag(); }, lo, hi, 0);
      s += Complex(re, im);
    }
  }
  return s;
}

void run_prop2(const Params &p, Rng &, ExperimentReport &r) {
  const auto family = p.family("lambda_file");
  require_condition1(family, "prop2");
  const double t = p.real("t", 0.0, 1e6);
  const auto deltas = log_grid(p, "delta_log2");
  const auto k_max = static_cast<int>(p.integer("k_max", 8, 1 << 16));
  const double id_delta = p.real("identity_delta", 0.0, 1e3, true);
  const auto ks = p.integers("identity_k", -1000, 1000);
  r.columns = {"quantity", "k", "delta", "value", "reference", "residual"};

  std::vector<double> values;
  for (double d : deltas) {
    const auto res = hardy::prop2_defect(family, t, d, k_max);
    values.push_back(res.value);
    r.rows.push_back({std::string("defect"), std::int64_t{k_max}, d, res.value, 0.0, 0.0});
    r.rows.push_back({std::string("window_defect"), std::int64_t{k_max}, d, res.window_value, 0.0, 0.0});
    r.rows.push_back({std::string("next_octave"), std::int64_t{k_max}, d, res.next_octave, 0.0, 0.0});
  }
  const double s = slope(deltas, values);
  r.fits.emplace_back("defect_slope", s);
  if (family.size() != 1) r.notes.emplace_back("family", "not single-factor; slope target may not apply");
  add_check(r, "defect_slope", 10, s, 0.15, std::abs(s - 0.5) <= 0.15, "log-log slope in delta, target 0.5");

  // <Theta f, f> (linear in Theta f) against B(-conj mu) ||f||^2; the B(mu)
  // form is recorded for comparison.
  double worst = 0.0, literal = 0.0;
  for (std::int64_t k64 : ks) {
    if (k64 == 0) throw ConfigError("identity_k", "k = 0 has no window element");
    const int k = static_cast<int>(k64);
    const Complex mu = hardy::prop2_rate(k, id_delta);
    const double piece = std::min(0.05, id_delta / (4.0 * std::abs(k)));
    for (const auto &f : {hardy::prop2_first(k, t, id_delta), hardy::prop2_second(k, t, id_delta)}) {
      const auto tf = hardy::theta_apply(family, f);
      const double start = f.terms().front().delay;
      // The integrand decays at least like exp(-rate x).
      double slowest = -mu.real();
      for (const Complex &l : family.lambdas) slowest = std::min(slowest, -l.real());
      const double stop = start + 42.0 / (-mu.real() + slowest);
      std::vector<double> cuts{start, stop};
      if (t + id_delta > start && t + id_delta < stop) cuts.push_back(t + id_delta);
      const Complex q = quadrature([&](double x) { return tf(x) * std::conj(f(x)); }, cuts, piece);
      const double mass = std::pow(hardy::norm(f), 2);
      const Complex expected = hardy::blaschke_eval(family, -std::conj(mu)) * mass;
      const double res = std::abs(q - expected);
      const double lit = std::abs(q - hardy::blaschke_eval(family, mu) * mass);
      worst = std::max(worst, res);
      literal = std::max(literal, lit);
      r.rows.push_back({std::string(start > t ? "identity_second" : "identity_first"), k64, id_delta,
                        std::abs(q), std::abs(expected), res});
    }
  }
  r.notes.emplace_back("literal_rate_residual", format_number(literal));
  add_check(r, "transform_identity", 10, worst, 1e-8, worst <= 1e-8,
            "quadrature of <Theta f, f> against B(-conj mu) ||f||^2");
}

struct Dilations {
  Matrix shift;
  Matrix approximant;
  Matrix grid_shift;
  Matrix grid_approximant;
};

// Both dilations for one (grid, t); keyed by t.
class DilationSet {
 public:
  explicit DilationSet(hardy::ShiftModel model) : model_(std::move(model)) {}
  const hardy::ShiftModel &model() const { return model_; }
  const Dilations &at(double t) {
    auto it = cache_.find(t);
    if (it != cache_.end()) return it->second;
    Dilations d;
    d.shift = hardy::unitary_dilation(model_, hardy::DilationKind::shift, t);
    d.approximant = hardy::unitary_dilation(model_, hardy::DilationKind::approximant, t);
    d.grid_shift = hardy::grid_shift(model_.grid, t);
    d.grid_approximant = hardy::grid_approximant(model_, t).operator_on_grid;
    return cache_.emplace(t, std::move(d)).first->second;
  }

 private:
  hardy::ShiftModel model_;
  std::map<double, Dilations> cache_;
};

double unitarity_residual(const Matrix &u) {
  const auto n = u.rows();
  return (u.adjoint() * u - Matrix::Identity(n, n)).norm();
}

hardy::ShiftGrid make_grid(double step, double horizon, const std::string &field) {
  const double cells = horizon / step;
  if (std::abs(cells - std::round(cells)) > 1e-9 || cells < 2 || cells > 8192) {
    throw ConfigError(field, "horizon must be a multiple of the step with at most 8192 cells");
  }
  return hardy::ShiftGrid{step, static_cast<std::size_t>(std::round(cells))};
}

struct DilationSummary {
  double unitary_shift = 0.0;
  double unitary_approximant = 0.0;
  double compression_shift = 0.0;
  double compression_approximant = 0.0;
};

DilationSummary check_dilations(DilationSet &set, const std::vector<double> &ts,
                                ExperimentReport &r) {
  DilationSummary s;
  for (double t : ts) {
    const Dilations &d = set.at(t);
    const auto n = d.grid_shift.rows();
    const double us = unitarity_residual(d.shift);
    const double ua = unitarity_residual(d.approximant);
    const double cs = (d.shift.topLeftCorner(n, n) - d.grid_shift).norm();
    const double ca = (d.approximant.topLeftCorner(n, n) - d.grid_approximant).norm();
    s.unitary_shift = std::max(s.unitary_shift, us);
    s.unitary_approximant = std::max(s.unitary_approximant, ua);
    s.compression_shift = std::max(s.compression_shift, cs);
    s.compression_approximant = std::max(s.compression_approximant, ca);
    const double h = set.model().grid.step;
    r.rows.push_back({std::string("unitarity_shift"), h, t, us});
    r.rows.push_back({std::string("unitarity_approximant"), h, t, ua});
    r.rows.push_back({std::string("compression_shift"), h, t, cs});
    r.rows.push_back({std::string("compression_approximant"), h, t, ca});
  }
  return s;
}

bogoliubov::ApproximationReport approximation(DilationSet &set, const std::vector<double> &ts,
                                              double tol, ExperimentReport &r) {
  const auto n = static_cast<Eigen::Index>(set.model().grid.cells);
  const bogoliubov::SubspaceEmbedding k{Matrix::Identity(2 * n, n)};
  auto rep = bogoliubov::approximation_check([&](double t) { return set.at(t).shift; },
                                             [&](double t) { return set.at(t).approximant; }, k,
                                             ts, tol);
  const double h = set.model().grid.step;
  for (const auto &pt : rep.points) {
    r.rows.push_back({std::string("hs_difference"), h, pt.t, pt.hs_difference});
    r.rows.push_back({std::string("complement_deviation"), h, pt.t, pt.complement_deviation});
  }
  return rep;
}

double max_deviation(const bogoliubov::ApproximationReport &rep) {
  double m = 0.0;
  for (const auto &pt : rep.points) m = std::max(m, pt.complement_deviation);
  return m;
}

void run_dilation(const Params &p, Rng &, ExperimentReport &r) {
  const auto family = p.family("lambda_file");
  require_condition1(family, "dilation-check");
  const double step = std::ldexp(1.0, static_cast<int>(p.integer("step_log2", -13, -1)));
  const double horizon = p.real("horizon", 0.0, 1e4, true);
  const auto ts = p.reals("t");
  const double tol = p.real("tolerance", 0.0, 1.0, true);
  DilationSet set(hardy::ShiftModel{make_grid(step, horizon, "horizon"), hardy::orthogonalize(family)});
  r.columns = {"quantity", "step", "t", "value"};
  const auto s = check_dilations(set, ts, r);
  add_check(r, "shift_dilation_unitary", 11, s.unitary_shift, tol, s.unitary_shift <= tol,
            "||U*U - 1||_F");
  add_check(r, "approximant_dilation_unitary", 11, s.unitary_approximant, tol,
            s.unitary_approximant <= tol, "||V*V - 1||_F");
  add_check(r, "shift_compression", 11, s.compression_shift, tol, s.compression_shift <= tol,
            "first-summand corner against the grid shift");
  add_check(r, "approximant_compression", 11, s.compression_approximant, tol,
            s.compression_approximant <= tol, "first-summand corner against the grid approximant");
  const auto rep = approximation(set, ts, tol, r);
  add_check(r, "complement_identity", 11, max_deviation(rep), tol, rep.complement_identity,
            "HS deviation of U'V'* from 1 on the second summand");
  add_check(r, "approximation_verdict", 11, 0.0, 0.0, rep.approximates(),
            rep.approximates() ? "pass" : "fail");
}

// Stage bookkeeping: the first failing stage aborts the run.
class Stages {
 public:
  explicit Stages(ExperimentReport &r) : r_(r) {}
  bool ok() const { return r_.aborted_stage.empty(); }
  void finish(const std::string &stage, bool pass, const std::string &detail, double value = 0.0,
              double tol = 0.0) {
    add_check(r_, "stage " + stage, 12, value, tol, pass, detail);
    if (!pass) {
      r_.aborted_stage = stage;
      r_.error = "stage '" + stage + "' failed: " + detail;
    }
  }
  template <class F>
  void run(const std::string &stage, F body) {
    if (!ok()) return;
    try {
      body();
    } catch (const ConfigError &) {
      throw;
    } catch (const std::exception &e) {
      add_check(r_, "stage " + stage, 12, 0.0, 0.0, false, e.what());
      r_.aborted_stage = stage;
      r_.error = e.what();
    }
  }

 private:
  ExperimentReport &r_;
};

void run_pipeline(const Params &p, Rng &, ExperimentReport &r) {
  const auto family = p.family("lambda_file");
  const double nu = p.real("nu", 0.0, 0.5, true, false);
  const double horizon = p.real("horizon", 0.0, 1e4, true);
  const auto step_exps = p.integers("step_log2", -12, -1);
  const auto ts = p.reals("t");
  const auto defect_ts = log_grid(p, "defect_t_log2");
  const double tol = p.real("tolerance", 0.0, 1.0, true);
  if (step_exps.size() < 2) throw ConfigError("step_log2", "conjugacy needs at least two grids");
  std::vector<hardy::ShiftGrid> grids;
  for (double h : powers_of_two(step_exps)) grids.push_back(make_grid(h, horizon, "horizon"));
  std::sort(grids.begin(), grids.end(),
            [](const auto &a, const auto &b) { return a.cells < b.cells; });

  r.columns = {"quantity", "step", "t", "value"};
  r.notes.emplace_back("regime", nu == 0.5 ? "trace state, type II_1"
                                           : "type III_lambda, lambda = " +
                                                 format_number(nu / (1.0 - nu)));
  Stages stages(r);

  stages.run("condition1", [&] {
    const auto v = hardy::validate_condition1(family);
    stages.finish("condition1", v.valid, v.valid ? "family admissible" : v.message);
  });

  hardy::ExponentialBasis basis;
  stages.run("condition_N", [&] {
    basis = hardy::orthogonalize(family);
    const std::size_t n = family.size();
    auto frequency = [&](std::size_t size, std::size_t k) {
      return k < std::min(size, n) ? family.lambdas[k].imag() : 0.0;
    };
    const std::vector<std::size_t> sizes{std::max<std::size_t>(n, 1), 2 * std::max<std::size_t>(n, 1),
                                         4 * std::max<std::size_t>(n, 1)};
    const auto gen = hardy::condition_N_generator_check(
        [&](std::size_t size) {
          Vector d(static_cast<Eigen::Index>(size));
          for (std::size_t k = 0; k < size; ++k) d(static_cast<Eigen::Index>(k)) = frequency(size, k);
          return Matrix(d.asDiagonal());
        },
        sizes, family.radius);
    std::vector<double> grid;
    for (int i = 0; i <= 20; ++i) grid.push_back(0.05 * i);
    const auto path = hardy::condition_N_check(
        [&](std::size_t size, double t) {
          Vector d(static_cast<Eigen::Index>(size));
          for (std::size_t k = 0; k < size; ++k)
            d(static_cast<Eigen::Index>(k)) = std::polar(1.0, frequency(size, k) * t);
          return Matrix(d.asDiagonal());
        },
        grid, sizes, family.radius);
    stages.finish("condition_N", gen.passes && path.passes,
                  std::string("generator ") + (gen.passes ? "bounded" : "unbounded") +
                      ", path " + (path.passes ? "uniformly continuous" : "not uniformly continuous"));
  });

  stages.run("approximant", [&] {
    double worst = 0.0;
    for (double t : ts) {
      const auto data = hardy::build_Vt(basis, t);
      for (Eigen::Index i = 0; i < data.phases.size(); ++i) {
        worst = std::max(worst, std::abs(std::abs(data.phases(i)) - 1.0));
        worst = std::max(worst, std::max(0.0, std::abs(data.diagonal_overlap(i)) - 1.0));
      }
    }
    stages.finish("approximant", worst <= 1e-12,
                  "basis condition " + format_number(basis.condition_number()), worst, 1e-12);
  });

  stages.run("defect_slope", [&] {
    const double zero = hardy::defect_hs_norm(basis, 0.0);
    std::vector<double> values;
    for (double t : defect_ts) {
      values.push_back(hardy::defect_hs_norm(basis, t));
      r.rows.push_back({std::string("defect"), 0.0, t, values.back()});
    }
    const double s = slope(defect_ts, values);
    r.fits.emplace_back("defect_slope", s);
    stages.finish("defect_slope", zero == 0.0 && std::abs(s - 0.5) <= 0.1,
                  "slope " + format_number(s) + ", value at 0 " + format_number(zero), s, 0.1);
  });

  std::vector<DilationSet> sets;
  stages.run("dilations", [&] {
    DilationSummary worst;
    for (const auto &g : grids) {
      sets.emplace_back(hardy::ShiftModel{g, basis});
      const auto s = check_dilations(sets.back(), ts, r);
      worst.unitary_shift = std::max(worst.unitary_shift, s.unitary_shift);
      worst.unitary_approximant = std::max(worst.unitary_approximant, s.unitary_approximant);
      worst.compression_shift = std::max(worst.compression_shift, s.compression_shift);
      worst.compression_approximant =
          std::max(worst.compression_approximant, s.compression_approximant);
    }
    const double m = std::max({worst.unitary_shift, worst.unitary_approximant,
                               worst.compression_shift, worst.compression_approximant});
    stages.finish("dilations", m <= tol, "worst unitarity or compression residual " + format_number(m),
                  m, tol);
  });

  stages.run("approximation", [&] {
    const auto rep = approximation(sets.back(), ts, tol, r);
    stages.finish("approximation", rep.approximates(),
                  "complement deviation " + format_number(max_deviation(rep)), max_deviation(rep), tol);
  });

  stages.run("conjugacy", [&] {
    std::map<std::size_t, DilationSet *> by_size;
    std::vector<std::size_t> sizes;
    for (auto &s : sets) {
      const std::size_t n = 2 * s.model().grid.cells;
      by_size[n] = &s;
      sizes.push_back(n);
    }
    auto pick = [&](std::size_t n) -> DilationSet & {
      auto it = by_size.find(n);
      if (it == by_size.end()) throw std::logic_error("conjugacy: no grid of size " + std::to_string(n));
      return *it->second;
    };
    const auto reports = bogoliubov::conjugacy_criterion(
        bogoliubov::scalar_covariance(nu), [&](std::size_t n, double t) { return pick(n).at(t).shift; },
        [&](std::size_t n, double t) { return pick(n).at(t).approximant; }, ts, sizes);
    bool all = true;
    std::string detail;
    for (const auto &tr : reports) {
      for (std::size_t i = 0; i < sizes.size(); ++i) {
        r.rows.push_back({std::string("conjugacy_hs"), horizon / (sizes[i] / 2.0), tr.t,
                          tr.report.hs_values[i]});
      }
      const std::string tag = "t=" + format_number(tr.t);
      if (tr.report.increment_exponent) {
        r.fits.emplace_back("conjugacy " + tag + " increment_exponent", *tr.report.increment_exponent);
      }
      all = all && tr.report.verdict == bogoliubov::Verdict::converges;
      detail += (detail.empty() ? "" : ", ") + tag + " " + std::string(bogoliubov::to_string(tr.report.verdict));
    }
    stages.finish("conjugacy", all, detail);
  });

  const bool ok = stages.ok();
  r.notes.emplace_back("verdict", ok ? "hypotheses verified at scale" : "aborted at " + r.aborted_stage);
}

}  // namespace

std::vector<Kind> hardy_kinds() {
  return {
      {"blaschke",
       "unit modulus on the imaginary axis and large-z asymptotics of B",
       {{"lambda_files", "path list", std::nullopt, "lambda sidecar files"},
        {"samples", "integer", "1000", "random points iy per family"},
        {"y_max", "real", "50", "sample range for y"},
        {"radii", "real list", "1000, 2000, 4000, 8000, 16000", "radii for the C3 fit"}},
       true,
       run_blaschke},
      {"approx",
       "defect of the approximant, its increments, summed head and tail terms",
       {{"lambda_file", "path", std::nullopt, "lambda sidecar file"},
        {"t_log2", "integer list", "-12..-4", "log2 of t for the slope fits"},
        {"delta_log2", "integer list", "-14..-2", "log2 of the increment steps"},
        {"increment_t", "real", "0.5", "base time for increments"}},
       false,
       run_approx},
      {"prop2",
       "compression defect over window elements and the transform identity",
       {{"lambda_file", "path", std::nullopt, "lambda sidecar file"},
        {"t", "real", "1", "window start"},
        {"delta_log2", "integer list", "-10..-3", "log2 of window widths"},
        {"k_max", "integer", "64", "window frequencies per sign"},
        {"identity_delta", "real", "0.5", "window width for the identity"},
        {"identity_k", "integer list", "-3, -1, 1, 2", "frequencies for the identity"}},
       false,
       run_prop2},
      {"dilation-check",
       "unitary dilations of the shift and the approximant on a grid",
       {{"lambda_file", "path", std::nullopt, "lambda sidecar file"},
        {"step_log2", "integer", "-8", "log2 of the grid step"},
        {"horizon", "real", "4", "grid length"},
        {"t", "real list", "0.25", "times, multiples of the step"},
        {"tolerance", "real", "1e-8", "unitarity, compression and complement tolerance"}},
       false,
       run_dilation},
      {"pipeline",
       "condition checks, approximant, defect slope, dilations, approximation, conjugacy",
       {{"lambda_file", "path", std::nullopt, "lambda sidecar file"},
        {"nu", "real in (0,1/2]", "0.25", "scalar covariance"},
        {"horizon", "real", "4", "grid length"},
        {"step_log2", "integer list", "-5, -6, -7", "log2 of grid steps, at least two"},
        {"t", "real list", "0.25, 0.5", "times, multiples of every step"},
        {"defect_t_log2", "integer list", "-12..-4", "log2 of t for the defect slope"},
        {"tolerance", "real", "1e-8", "dilation and approximation tolerance"}},
       false,
       run_pipeline},
  };
}

}  // namespace qs::experiment::detail
