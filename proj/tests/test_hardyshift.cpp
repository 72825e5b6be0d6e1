/**
 * Copyright quasishift contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Eigenvalues>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "quasishift/hardyshift.hpp"
#include "support.hpp"

using namespace qs;
using namespace qs::hardy;
using qs::testing::Rng;

namespace {

ExponentialFamily family(std::vector<Complex> ls, double radius = 10.0) {
  return ExponentialFamily{std::move(ls), radius};
}

// Fixed 61-point Gauss-Kronrod on pieces of length <= piece between sorted
// breakpoints; real and imaginary parts separately.
template <class F>
Complex quad(F f, std::vector<double> points, double piece) {
  using boost::math::quadrature::gauss_kronrod;
  std::sort(points.begin(), points.end());
  Complex s = 0.0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const double a = points[i], b = points[i + 1];
    const int pieces = std::max(1, static_cast<int>(std::ceil((b - a) / piece)));
    for (int j = 0; j < pieces; ++j) {
      const double lo = a + (b - a) * j / pieces;
      const double hi = a + (b - a) * (j + 1) / pieces;
      const double re = gauss_kronrod<double, 61>::integrate(
          [&](double x) { return Complex(f(x)).real(); }, lo, hi, 0);
      const double im = gauss_kronrod<double, 61>::integrate(
          [&](double x) { return Complex(f(x)).imag(); }, lo, hi, 0);
      s += Complex(re, im);
    }
  }
  return s;
}

std::vector<double> log_grid(int lo_exp, int hi_exp) {
  std::vector<double> out;
  for (int e = lo_exp; e <= hi_exp; ++e) out.push_back(std::ldexp(1.0, e));
  return out;
}

double fitted_slope(const std::vector<double> &x, const std::vector<double> &y) {
  return loglog_fit(x, y).slope;
}

}  // namespace

TEST_CASE("condition (1) clauses") {
  std::vector<Complex> ls;
  for (int k = 1; k <= 20; ++k) ls.emplace_back(-1.0 / (k * k), -0.5);
  CHECK(validate_condition1(family(ls, 1.0)).valid);

  auto zero_real = validate_condition1(family({{-1.0, 0.0}, {0.0, 0.2}}, 1.0));
  CHECK_FALSE(zero_real.valid);
  CHECK(zero_real.clause == Condition1Clause::negative_real_part);
  CHECK(zero_real.index == 1);

  auto at_radius = validate_condition1(family({{-1.0, 1.0}}, 1.0));
  CHECK_FALSE(at_radius.valid);
  CHECK(at_radius.clause == Condition1Clause::imaginary_part_below_radius);
  CHECK(validate_condition1(family({}, 1.0)).valid);
}

TEST_CASE("Blaschke product values") {
  CHECK(blaschke_eval(family({{-1.0, 0.0}}), 1.0) == Complex(0.0));
  CHECK(blaschke_eval(family({}), Complex(3.0, 1.0)) == Complex(1.0));
  CHECK_THROWS_AS(blaschke_eval(family({{-1.0, 0.5}}), Complex(-1.0, 0.5)), std::domain_error);

  Rng rng(1);
  std::uniform_real_distribution<double> re(-3.0, -0.05), im(-2.0, 2.0), y(-50.0, 50.0);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Complex> ls;
    for (int k = 0; k < 1 + trial % 6; ++k) ls.emplace_back(re(rng), im(rng));
    CHECK(std::abs(std::abs(blaschke_eval(family(ls), Complex(0.0, y(rng)))) - 1.0) <= 1e-12);
  }

  const auto fam = family({{-1.0, 0.3}, {-0.5, -0.2}, {-2.0, 0.0}});
  const double z = 1e4;
  CHECK(std::abs((z * (1.0 - blaschke_eval(fam, z))).real() - 2.0 * fam.decay_sum()) <=
        0.01 * 2.0 * fam.decay_sum());
}

TEST_CASE("Blaschke partial fractions") {
  const auto fam = family({{-1.0, 0.3}, {-0.5, -0.2}, {-2.0, 0.0}});
  const auto res = blaschke_residues(fam);
  Rng rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const Complex z = qs::testing::random_vector(1, rng)(0);
    Complex sum = 1.0;
    for (std::size_t k = 0; k < fam.size(); ++k) sum += res[k] / (z - fam.lambdas[k]);
    CHECK(std::abs(sum - blaschke_eval(fam, z)) <= 1e-12 * std::max(1.0, std::abs(sum)));
  }
  CHECK_THROWS_AS(blaschke_residues(family({{-1.0, 0.0}, {-1.0, 0.0}})), std::invalid_argument);
}

TEST_CASE("Blaschke asymptotics") {
  const std::vector<double> radii{1e3, 2e3, 4e3, 8e3, 1.6e4};
  auto empty = blaschke_asymptotics(family({}), radii);
  CHECK(std::abs(empty.c3) <= 1e-12);

  auto single = blaschke_asymptotics(family({{-1.0, 0.0}}), radii);
  CHECK(std::abs(single.c3.real() - 2.0) <= 0.02);
  CHECK(single.c3_expected == 2.0);
  CHECK(single.max_modulus <= single.c1 * (1.0 + 1e-12));

  std::vector<Complex> geometric;
  double s = 0.0;
  for (int k = 1; k <= 10; ++k) {
    geometric.emplace_back(-std::ldexp(1.0, -k), 0.0);
    s += std::ldexp(1.0, -k);
  }
  auto geo = blaschke_asymptotics(family(geometric), radii);
  CHECK(std::abs(geo.c3.real() - 2.0 * s) <= 0.01 * 2.0 * s);

  auto mixed = blaschke_asymptotics(family({{-1.0, 0.7}, {-0.25, -0.4}, {-3.0, 1.5}}), radii);
  CHECK(std::abs(mixed.c3 - Complex(mixed.c3_expected)) <= 0.01 * mixed.c3_expected);

  const std::vector<double> close{1.5};
  CHECK_THROWS_AS(blaschke_asymptotics(family({{-1.0, 0.0}}), close), std::invalid_argument);
}

TEST_CASE("Gram matrix of normalized exponentials") {
  Matrix g = gram_exponentials(family({{-1.0, 0.0}, {-2.0, 0.0}}));
  CHECK(g(0, 0) == Complex(1.0));
  CHECK(g(1, 1) == Complex(1.0));
  CHECK(std::abs(g(0, 1) - 2.0 * std::sqrt(2.0) / 3.0) <= 1e-15);
  CHECK(std::abs(g(0, 1) - 0.942809) <= 1e-6);

  // Against quadrature with the first slot conjugated.
  const auto fam = family({{-1.0, 0.8}, {-0.6, -0.3}});
  Matrix h = gram_exponentials(fam);
  const auto f0 = family_function(fam, 0), f1 = family_function(fam, 1);
  const Complex q = quad([&](double x) { return std::conj(f0(x)) * f1(x); }, {0.0, 60.0}, 0.5);
  CHECK(std::abs(h(0, 1) - q) <= 1e-10);
  CHECK(std::abs(h(0, 1) - inner_product(f0, f1)) <= 1e-14);

  Rng rng(3);
  std::uniform_real_distribution<double> jitter(0.9, 1.1), im(-3.0, 3.0);
  for (int n : {5, 12, 30}) {
    std::vector<Complex> ls;
    for (int k = 0; k < n; ++k) ls.emplace_back(-std::pow(2.0, k - 5) * jitter(rng), im(rng));
    Eigen::SelfAdjointEigenSolver<Matrix> es(gram_exponentials(family(ls)), Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().minCoeff() > 0.0);
  }
}

TEST_CASE("orthogonalization") {
  const auto fam = family({{-1.0, 0.0}, {-2.0, 0.0}});
  ExponentialBasis b = orthogonalize(fam);
  CHECK(std::abs(b.coefficients()(0, 0) - 1.0) <= 1e-15);
  CHECK(b.coefficients()(1, 0) == Complex(0.0));
  CHECK(b.coefficients()(1, 1).real() > 0.0);
  const auto g0 = basis_function(b, 0), g1 = basis_function(b, 1);
  CHECK(std::abs(inner_product(g0, g1)) <= 1e-12);
  CHECK(std::abs(norm(g1) - 1.0) <= 1e-12);

  Rng rng(4);
  std::uniform_real_distribution<double> jitter(0.9, 1.1), im(-3.0, 3.0);
  for (int n : {3, 10, 30}) {
    std::vector<Complex> ls;
    for (int k = 0; k < n; ++k) ls.emplace_back(-std::pow(2.0, k - 5) * jitter(rng), im(rng));
    ExponentialBasis basis = orthogonalize(family(ls));
    const Matrix &c = basis.coefficients();
    const auto k = static_cast<Eigen::Index>(n);
    CHECK((c.adjoint() * basis.gram() * c - Matrix::Identity(k, k)).norm() <= 1e-10);
    CHECK((c - Matrix(c.triangularView<Eigen::Upper>())).norm() == 0.0);
    for (Eigen::Index i = 0; i < k; ++i) {
      CHECK(c(i, i).real() > 0.0);
      CHECK(c(i, i).imag() == 0.0);
    }
  }
  CHECK_THROWS_AS(orthogonalize(family({{-1.0, 0.0}, {-1.0 - 1e-9, 0.0}})), std::invalid_argument);
  CHECK_THROWS_AS(orthogonalize(family({{1.0, 0.0}})), std::invalid_argument);
}

TEST_CASE("backward shift on the orthogonalized system") {
  ExponentialBasis b = orthogonalize(family({{-1.0, 0.0}, {-2.0, 0.0}}));
  CHECK((backward_shift_matrix(b, 0.0) - Matrix::Identity(2, 2)).norm() <= 1e-14);
  Matrix m = backward_shift_matrix(b, 0.5);
  CHECK(std::abs(m(0, 0) - std::exp(-0.5)) <= 1e-10);
  CHECK(std::abs(m(1, 1) - std::exp(-1.0)) <= 1e-10);
  CHECK_THROWS_AS(backward_shift_matrix(b, -1.0), std::invalid_argument);

  ExponentialBasis c = orthogonalize(family({{-1.0, 0.4}, {-0.5, -0.7}, {-2.5, 1.1}}));
  const double s = 0.3, t = 0.45;
  CHECK((backward_shift_matrix(c, s) * backward_shift_matrix(c, t) - backward_shift_matrix(c, s + t))
            .norm() <= 1e-10);
  Matrix mt = backward_shift_matrix(c, t);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      // <g_i, S_t* g_j> = <S_t g_i, g_j>
      const Complex direct = inner_product(basis_function(c, i).shifted(t), basis_function(c, j));
      CHECK(std::abs(mt(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) - direct) <=
            1e-10);
    }
  }
}

TEST_CASE("exponential combination calculus") {
  const auto u = ExpCombination::exponential({-1.0, 2.0}, {0.5, -1.0}, 0.3);
  const auto v = ExpCombination::exponential({-0.4, -1.0}, 2.0) + ExpCombination::indicator(0.5, 1.5);
  const Complex q = quad([&](double x) { return std::conj(u(x)) * v(x); }, {0.0, 0.3, 0.5, 1.5, 80.0}, 0.25);
  CHECK(std::abs(inner_product(u, v) - q) <= 1e-10);
  const Complex w = quad([&](double x) { return std::conj(u(x)) * v(x); }, {0.7, 1.5, 1.9}, 0.1);
  CHECK(std::abs(inner_product(u, v, 0.7, 1.9) - w) <= 1e-12);
  CHECK(std::abs(integral(v, 0.2, 1.0) - quad(v, {0.2, 0.5, 1.0}, 0.1)) <= 1e-12);
  CHECK(std::abs(norm(ExpCombination::indicator(1.0, 3.0)) - std::sqrt(2.0)) <= 1e-14);
  CHECK_THROWS_AS(norm(ExpCombination::exponential(0.0)), std::domain_error);
  CHECK(((u - u).simplified()).terms().empty());
  CHECK(std::abs(u.shifted(0.2)(0.6) - u(0.4)) <= 1e-15);
}

TEST_CASE("theta is the isometric shift-commuting inner multiplier") {
  const auto fam = family({{-1.0, 0.4}, {-0.5, -0.7}});
  SUBCASE("empty family is the identity") {
    const auto u = ExpCombination::exponential({-2.0, 1.0});
    const auto out = theta_apply(family({}), u);
    CHECK(norm(out - u) <= 1e-15);
  }
  SUBCASE("single factor on e^{-2x} against quadrature") {
    const auto single = family({{-1.0, 0.0}});
    const auto u = ExpCombination::exponential(-2.0);
    const auto out = theta_apply(single, u);
    CHECK(out.terms().size() == 2);
    const Complex q = quad([&](double x) { return std::norm(out(x)); }, {0.0, 40.0}, 0.25);
    CHECK(std::abs(std::sqrt(q.real()) - norm(u)) <= 1e-10);
  }
  SUBCASE("Laplace transform oracle") {
    const auto u = ExpCombination::exponential({-1.5, 3.0}, {1.0, 0.5}) +
                   ExpCombination::exponential({-0.3, -1.0}, -0.7);
    const auto out = theta_apply(fam, u);
    for (Complex s : {Complex(0.5, 0.0), Complex(1.0, 2.0), Complex(2.0, -1.0)}) {
      const Complex lhs = quad([&](double x) { return out(x) * std::exp(-s * x); }, {0.0, 80.0}, 0.1);
      const Complex transform = Complex(1.0, 0.5) / (s - Complex(-1.5, 3.0)) - 0.7 / (s - Complex(-0.3, -1.0));
      CHECK(std::abs(lhs - blaschke_eval(fam, s) * transform) <= 1e-9);
    }
  }
  SUBCASE("isometry, intertwining and orthogonality") {
    Rng rng(5);
    std::uniform_real_distribution<double> re(-3.0, -0.1), im(-4.0, 4.0);
    for (int trial = 0; trial < 10; ++trial) {
      ExpCombination u;
      for (int j = 0; j < 3; ++j) {
        u += ExpCombination::exponential({re(rng), im(rng)}, qs::testing::random_vector(1, rng)(0));
      }
      const auto out = theta_apply(fam, u);
      CHECK(std::abs(norm(out) - norm(u)) <= 1e-10);
      const double t = 0.37;
      CHECK(norm(theta_apply(fam, u.shifted(t)) - theta_apply(fam, u).shifted(t)) <= 1e-10);
      for (std::size_t n = 0; n < fam.size(); ++n) {
        CHECK(std::abs(inner_product(family_function(fam, n), out)) <= 1e-10);
      }
    }
  }
  SUBCASE("window indicators") {
    const auto u = ExpCombination::indicator(0.2, 0.9);
    const auto out = theta_apply(fam, u);
    CHECK(std::abs(norm(out) - norm(u)) <= 1e-10);
  }
  SUBCASE("rejections") {
    CHECK_THROWS_AS(theta_apply(fam, ExpCombination::exponential({-1.0, 0.4})), std::domain_error);
    CHECK_THROWS_AS(theta_apply(fam, ExpCombination::exponential(0.5)), std::domain_error);
  }
}

TEST_CASE("approximant V_t") {
  ExponentialBasis basis = orthogonalize(family({{-1.0, 0.5}, {-2.0, -1.2}}));
  ApproximantData d0 = build_Vt(basis, 0.0);
  for (Eigen::Index i = 0; i < 2; ++i) CHECK(d0.phases(i) == Complex(1.0));
  ApproximantData real = build_Vt(orthogonalize(family({{-1.0, 0.0}, {-3.0, 0.0}})), 2.5);
  for (Eigen::Index i = 0; i < 2; ++i) CHECK(real.phases(i) == Complex(1.0));
  CHECK_THROWS_AS(build_Vt(basis, -0.1), std::invalid_argument);

  // Isometry on span{g_n} plus samples from the range of theta and elsewhere.
  const auto k0 = theta_apply(basis.family(), ExpCombination::exponential({-0.7, 0.3}));
  const auto other = ExpCombination::indicator(0.1, 0.6) + ExpCombination::exponential({-3.0, 2.0});
  std::vector<ExpCombination> samples{basis_function(basis, 0), basis_function(basis, 1), k0, other,
                                      Complex(0.3, 1.0) * basis_function(basis, 1) + k0};
  const double t = 0.8;
  for (const auto &u : samples) {
    for (const auto &v : samples) {
      CHECK(std::abs(inner_product(vt_apply(basis, t, u), vt_apply(basis, t, v)) - inner_product(u, v)) <=
            1e-10);
    }
  }
  CHECK(norm(vt_apply(basis, t, k0) - k0.shifted(t)) <= 1e-10);
  const auto g1 = basis_function(basis, 1);
  CHECK(norm(vt_apply(basis, t, g1) - std::polar(1.0, -1.2 * t) * g1) <= 1e-10);
}

TEST_CASE("defect norm of the approximant") {
  CHECK(defect_hs_norm(orthogonalize(family({})), 0.3) == 0.0);
  for (const auto &ls : {std::vector<Complex>{{-1.0, 0.0}}, std::vector<Complex>{{-1.0, 0.0}, {-2.0, 0.5}}}) {
    ExponentialBasis basis = orthogonalize(family(ls));
    CHECK(defect_hs_norm(basis, 0.0) == 0.0);

    // Closed form against the function calculus.
    for (double t : {0.01, 0.3, 1.7}) {
      double brute = 0.0;
      for (std::size_t n = 0; n < basis.size(); ++n) {
        const auto g = basis_function(basis, n);
        brute += std::pow(norm(vt_apply(basis, t, g) - g.shifted(t)), 2);
      }
      CHECK(std::abs(defect_hs_norm(basis, t) - std::sqrt(brute)) <= 1e-10);
    }

    const auto ts = log_grid(-12, -4);
    std::vector<double> values;
    for (double t : ts) values.push_back(defect_hs_norm(basis, t));
    CHECK(std::abs(fitted_slope(ts, values) - 0.5) <= 0.1);

    // Increments shrink as the step is refined.
    const double t = 0.5;
    double previous = std::numeric_limits<double>::infinity();
    auto deltas = log_grid(-14, -2);
    std::reverse(deltas.begin(), deltas.end());
    for (double delta : deltas) {
      const double inc = defect_increment_hs_norm(basis, t, delta);
      CHECK(inc < previous);
      previous = inc;
    }
    CHECK(previous < 0.05);
  }
  ExponentialBasis basis = orthogonalize(family({{-1.0, 0.7}, {-2.0, 0.5}}));
  const double t = 0.4, delta = 0.05;
  double brute = 0.0;
  for (std::size_t n = 0; n < basis.size(); ++n) {
    const auto g = basis_function(basis, n);
    const auto a = vt_apply(basis, t + delta, g) - g.shifted(t + delta);
    const auto b = vt_apply(basis, t, g) - g.shifted(t);
    brute += std::pow(norm(a - b), 2);
  }
  CHECK(std::abs(defect_increment_hs_norm(basis, t, delta) - std::sqrt(brute)) <= 1e-10);
}

TEST_CASE("estimates of the head and tail terms") {
  ExponentialBasis basis = orthogonalize(family({{-1.0, 0.0}, {-2.0, 0.5}}));
  const double t = 0.3;
  EstimateReport r = estimate_inequalities(basis, t);
  REQUIRE(r.terms.size() == 2);
  for (std::size_t n = 0; n < 2; ++n) {
    const auto g = basis_function(basis, n);
    const auto vg = vt_apply(basis, t, g);
    CHECK(std::abs(r.terms[n].tail_defect - std::pow(norm(vg - g.shifted(t), t, kInfinity), 2)) <= 1e-10);
    CHECK(std::abs(r.terms[n].head_mass - std::pow(norm(vg, 0.0, t), 2)) <= 1e-10);
  }

  const auto ts = log_grid(-12, -4);
  std::vector<double> sums;
  for (double s : ts) {
    EstimateReport e = estimate_inequalities(basis, s);
    sums.push_back(e.sum);
    for (const auto &term : e.terms) {
      CHECK(term.tail_defect <= term.tail_envelope + 1e-14);
      CHECK(term.head_mass <= term.head_envelope + 1e-14);
    }
  }
  CHECK(std::abs(fitted_slope(ts, sums) - 1.0) <= 0.1);
  CHECK_THROWS_AS(estimate_inequalities(basis, 0.0), std::invalid_argument);
}

TEST_CASE("window elements and their transform identity") {
  const auto single = family({{-1.0, 0.0}});
  const double t = 1.0, delta = 0.5;
  for (int k : {-3, -1, 1, 2}) {
    const auto f1 = prop2_first(k, t, delta);
    const auto f2 = prop2_second(k, t, delta);
    CHECK(std::abs(norm(f1 - f2) - 1.0) <= 1e-12);
    CHECK(norm(f1 - f2, t + delta, kInfinity) <= 1e-12);
    const Complex mu = prop2_rate(k, delta);
    for (const auto &f : {f1, f2}) {
      const auto tf = theta_apply(single, f);
      const double start = f.terms().front().delay;
      // (Theta f, f), linear in the first slot, against quadrature.
      const Complex q =
          quad([&](double x) { return tf(x) * std::conj(f(x)); }, {start, start + 45.0 * std::abs(k)}, 0.05);
      const double mass = std::pow(norm(f), 2);
      CHECK(std::abs(q - blaschke_eval(single, -std::conj(mu)) * mass) <= 1e-8);
      CHECK(std::abs(inner_product(f, tf) - q) <= 1e-8);
    }
  }
  CHECK_THROWS_AS(prop2_rate(0, 0.5), std::invalid_argument);
}

TEST_CASE("compression defect over window elements") {
  const auto single = family({{-1.0, 0.0}});
  auto empty = prop2_defect(family({}), 1.0, 0.25, 16);
  CHECK(empty.value == 0.0);
  CHECK(empty.window_value == 0.0);
  CHECK_THROWS_AS(prop2_defect(single, 1.0, 0.0, 16), std::invalid_argument);
  CHECK_THROWS_AS(prop2_defect(single, 1.0, 0.25, 4), std::invalid_argument);

  const auto deltas = log_grid(-10, -3);
  std::vector<double> values;
  for (double delta : deltas) {
    auto r = prop2_defect(single, 1.0, delta, 64);
    CHECK(r.terms.size() == 128);
    CHECK(r.window_value <= r.value + 1e-12);
    values.push_back(r.value);
  }
  CHECK(std::abs(fitted_slope(deltas, values) - 0.5) <= 0.15);
}

TEST_CASE("Wold decomposition") {
  SUBCASE("unitary") {
    Rng rng(6);
    auto w = wold_decompose(qs::testing::random_unitary(5, rng), 20);
    CHECK(w.deficiency == 0);
    CHECK((w.unitary_projector - Matrix::Identity(5, 5)).norm() <= 1e-8);
    CHECK(w.unitary_residual <= 1e-8);
  }
  SUBCASE("finite shift") {
    Matrix s = Matrix::Zero(4, 4);
    for (Eigen::Index i = 0; i + 1 < 4; ++i) s(i + 1, i) = 1.0;
    auto w = wold_decompose(s, 20);
    CHECK(w.deficiency == 1);
    CHECK(w.unitary_projector.norm() <= 1e-8);
    CHECK((w.shift_projector - Matrix::Identity(4, 4)).norm() <= 1e-8);
  }
  SUBCASE("unitary block plus shift block") {
    Rng rng(7);
    Matrix v = Matrix::Zero(7, 7);
    v.topLeftCorner(3, 3) = qs::testing::random_unitary(3, rng);
    for (Eigen::Index i = 3; i + 1 < 7; ++i) v(i + 1, i) = 1.0;
    Matrix mix = qs::testing::random_unitary(7, rng);
    auto w = wold_decompose(mix * v * mix.adjoint(), 20);
    Matrix expected = Matrix::Zero(7, 7);
    expected.topLeftCorner(3, 3).setIdentity();
    CHECK((w.unitary_projector - mix * expected * mix.adjoint()).norm() <= 1e-8);
    CHECK(w.deficiency == 1);
    CHECK(w.unitary_residual <= 1e-8);
  }
  SUBCASE("not a partial isometry") {
    CHECK_THROWS_AS(wold_decompose(2.0 * Matrix::Identity(3, 3), 5), std::invalid_argument);
  }
}

TEST_CASE("condition N") {
  const std::vector<std::size_t> sizes{4, 8, 16, 32};
  std::vector<double> grid;
  for (int i = 0; i <= 20; ++i) grid.push_back(0.05 * i);
  SUBCASE("constant path") {
    auto r = condition_N_check([](std::size_t n, double) {
      return Matrix(Matrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)));
    }, grid, sizes);
    CHECK(r.passes);
  }
  SUBCASE("bounded generator") {
    Rng rng(8);
    Matrix h = qs::testing::random_matrix(32, 32, rng);
    h = (h + h.adjoint()).eval();
    h /= operator_norm(h);
    auto path = [&](std::size_t n, double t) {
      const auto k = static_cast<Eigen::Index>(n);
      return hermitian_unitary_exp(h.topLeftCorner(k, k), t);
    };
    auto r = condition_N_check(path, grid, sizes, 1.0);
    CHECK(r.passes);
    for (const auto &pt : r.points) {
      const double a = operator_norm(h.topLeftCorner(static_cast<Eigen::Index>(pt.size),
                                                      static_cast<Eigen::Index>(pt.size)));
      CHECK(pt.modulus <= a * 0.05 + 1e-12);
      CHECK(pt.modulus >= 2.0 * std::sin(a * 0.05 / 2.0) - 1e-12);
    }
    auto g = condition_N_generator_check(
        [&](std::size_t n) {
          const auto k = static_cast<Eigen::Index>(n);
          return Matrix(h.topLeftCorner(k, k));
        },
        sizes, 1.0);
    CHECK(g.passes);
  }
  SUBCASE("unbounded diagonal frequencies") {
    auto path = [](std::size_t n, double t) {
      Vector d(static_cast<Eigen::Index>(n));
      for (std::size_t k = 0; k < n; ++k) d(static_cast<Eigen::Index>(k)) = std::polar(1.0, 0.1 * k * t);
      return Matrix(d.asDiagonal());
    };
    auto r = condition_N_check(path, grid, sizes);
    CHECK_FALSE(r.passes);
    CHECK(r.trend.verdict == bogoliubov::Verdict::diverges);
    auto g = condition_N_generator_check(
        [](std::size_t n) {
          Vector d(static_cast<Eigen::Index>(n));
          for (std::size_t k = 0; k < n; ++k) d(static_cast<Eigen::Index>(k)) = 0.1 * k;
          return Matrix(d.asDiagonal());
        },
        sizes, 1.0);
    CHECK_FALSE(g.passes);
  }
}

TEST_CASE("grid operators and unitary dilations") {
  ShiftModel model{ShiftGrid{1.0 / 64, 256}, orthogonalize(family({{-1.0, 0.0}}))};
  CHECK(model.grid.horizon() == 4.0);
  CHECK(model.grid.steps(0.25) == 16);
  CHECK_THROWS_AS(model.grid.steps(0.01), std::invalid_argument);
  CHECK_THROWS_AS(unitary_dilation(model, DilationKind::shift, 0.01), std::invalid_argument);

  const auto n = static_cast<Eigen::Index>(model.grid.cells);
  CHECK((unitary_dilation(model, DilationKind::shift, 0.0) - Matrix::Identity(2 * n, 2 * n)).norm() == 0.0);
  CHECK((unitary_dilation(model, DilationKind::approximant, 0.0) - Matrix::Identity(2 * n, 2 * n)).norm() <=
        1e-8);

  const double t = 0.25;
  const Matrix s = grid_shift(model.grid, t);
  Matrix sd = unitary_dilation(model, DilationKind::shift, t);
  Matrix vd = unitary_dilation(model, DilationKind::approximant, t);
  CHECK(is_unitary(sd, 1e-8));
  CHECK(is_unitary(vd, 1e-8));
  CHECK((sd.topLeftCorner(n, n) - s).norm() <= 1e-8);

  GridApproximant a = grid_approximant(model, t);
  CHECK((vd.topLeftCorner(n, n) - a.operator_on_grid).norm() <= 1e-8);
  CHECK(is_unitary(a.correction, 1e-8));
  CHECK((a.operator_on_grid - a.correction * s).norm() <= 1e-10);
  CHECK(a.discretization_defect <= 1e-2);

  // The approximant fixes the grid projection of g_1 up to its phase.
  const Vector g = grid_project(model.grid, basis_function(model.basis, 0));
  CHECK((a.operator_on_grid * g - g).norm() <= 5e-2);

  // On the second summand the two dilations agree.
  const Matrix second = Matrix::Identity(2 * n, 2 * n).rightCols(n);
  CHECK(((sd * vd.adjoint()) * second - second).norm() <= 1e-8);
}
