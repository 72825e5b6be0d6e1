/**
 * Copyright quasishift contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "quasishift/hardyshift.hpp"

namespace qs::hardy {

namespace {

void require_nonnegative_time(double t, const char *op) {
  if (!(t >= 0.0)) throw std::invalid_argument(std::string(op) + ": negative time " + std::to_string(t));
}

// 1 - Re e^{(a + ib) t}, accurate for small t.
double one_minus_re_exp(Complex rate, double t) {
  const double a = rate.real() * t;
  const double b = rate.imag() * t;
  const double s = std::sin(0.5 * b);
  return -std::expm1(a) * std::cos(b) + 2.0 * s * s;
}

Complex phase(const Complex &l, double t) { return std::polar(1.0, l.imag() * t); }

// <g_n, S_t g_n> = conj(e^{l_n t}).
Complex overlap(const Complex &l, double t) { return std::conj(std::exp(l * t)); }

}  // namespace

Matrix gram_exponentials(const ExponentialFamily &family) {
  const auto n = static_cast<Eigen::Index>(family.size());
  Matrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Complex li = family.lambdas[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < n; ++j) {
      const Complex lj = family.lambdas[static_cast<std::size_t>(j)];
      if (i != j && li == lj) {
        throw std::invalid_argument("gram_exponentials: coincident lambdas at " +
                                    std::to_string(i + 1) + " and " + std::to_string(j + 1));
      }
      g(i, j) = i == j ? Complex(1.0)
                       : -std::sqrt(-2.0 * li.real()) * std::sqrt(-2.0 * lj.real()) /
                             (std::conj(li) + lj);
    }
  }
  return g;
}

ExponentialBasis orthogonalize(const ExponentialFamily &family) {
  const Condition1Verdict v = validate_condition1(family);
  if (!v.valid) throw std::invalid_argument("orthogonalize: " + v.message);
  ExponentialBasis out;
  out.family_ = family;
  out.gram_ = gram_exponentials(family);
  const auto n = out.gram_.rows();
  if (n == 0) {
    out.coeffs_ = Matrix(0, 0);
    return out;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(out.gram_, Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  out.condition_ = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
  if (!(out.condition_ <= ExponentialBasis::kMaxCondition)) {
    throw std::invalid_argument("orthogonalize: Gram condition number " +
                                std::to_string(out.condition_) +
                                " exceeds 1e12, family too clustered");
  }
  Eigen::LLT<Matrix> llt(out.gram_);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument("orthogonalize: Gram matrix not positive definite");
  }
  Matrix linv = llt.matrixL().solve(Matrix::Identity(n, n));
  Matrix c = linv.adjoint();
  // Second Cholesky pass on the residual Gram matrix; keeps the triangular
  // shape and removes the condition-number loss of the first pass.
  const Matrix residual = c.adjoint() * out.gram_ * c;
  Eigen::LLT<Matrix> again(0.5 * (residual + residual.adjoint()));
  if (again.info() == Eigen::Success) {
    c = (c * again.matrixL().solve(Matrix::Identity(n, n)).adjoint()).eval();
  }
  out.coeffs_ = Matrix(c.triangularView<Eigen::Upper>());
  for (Eigen::Index i = 0; i < n; ++i) out.coeffs_(i, i) = out.coeffs_(i, i).real();
  return out;
}

Matrix backward_shift_matrix(const ExponentialBasis &basis, double t) {
  require_nonnegative_time(t, "backward_shift_matrix");
  const auto n = static_cast<Eigen::Index>(basis.size());
  Vector d(n);
  for (Eigen::Index i = 0; i < n; ++i) d(i) = std::exp(basis.family().lambdas[static_cast<std::size_t>(i)] * t);
  const Matrix &c = basis.coefficients();
  Matrix m = c.triangularView<Eigen::Upper>().solve(Matrix(d.asDiagonal() * c));
  return m.triangularView<Eigen::Upper>();
}

ApproximantData build_Vt(const ExponentialBasis &basis, double t) {
  require_nonnegative_time(t, "build_Vt");
  const auto n = static_cast<Eigen::Index>(basis.size());
  ApproximantData out;
  out.t = t;
  out.phases.resize(n);
  out.diagonal_overlap.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Complex l = basis.family().lambdas[static_cast<std::size_t>(i)];
    out.phases(i) = phase(l, t);
    out.diagonal_overlap(i) = overlap(l, t);
  }
  return out;
}

ExpCombination vt_apply(const ExponentialBasis &basis, double t, const ExpCombination &u) {
  require_nonnegative_time(t, "vt_apply");
  ExpCombination unitary_part;
  ExpCombination projection;
  for (std::size_t n = 0; n < basis.size(); ++n) {
    const ExpCombination g = basis_function(basis, n);
    const Complex a = inner_product(g, u);
    projection += a * g;
    unitary_part += a * phase(basis.family().lambdas[n], t) * g;
  }
  return (unitary_part + (u - projection).shifted(t)).simplified();
}

double defect_hs_norm(const ExponentialBasis &basis, double t) {
  require_nonnegative_time(t, "defect_hs_norm");
  double s = 0.0;
  for (const Complex &l : basis.family().lambdas) {
    // ||(V_t - S_t) g||^2 = 2 (1 - Re conj(p) <g, S_t g>)
    s += 2.0 * one_minus_re_exp(Complex(l.real(), -2.0 * l.imag()), t);
  }
  return std::sqrt(std::max(0.0, s));
}

double defect_increment_hs_norm(const ExponentialBasis &basis, double t, double delta) {
  require_nonnegative_time(t, "defect_increment_hs_norm");
  require_nonnegative_time(delta, "defect_increment_hs_norm");
  double s = 0.0;
  for (const Complex &l : basis.family().lambdas) {
    const Complex dp = phase(l, t + delta) - phase(l, t);
    const Complex dov = overlap(l, t + delta) - overlap(l, t);
    const double shift_part = 2.0 * one_minus_re_exp(std::conj(l), delta);
    s += std::norm(dp) + shift_part - 2.0 * (std::conj(dp) * dov).real();
  }
  return std::sqrt(std::max(0.0, s));
}

EstimateReport estimate_inequalities(const ExponentialBasis &basis, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("estimate_inequalities: t must be positive");
  const auto n = static_cast<Eigen::Index>(basis.size());
  const auto &ls = basis.family().lambdas;
  Matrix tail_gram(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      tail_gram(i, j) = basis.gram()(i, j) *
                        std::exp((std::conj(ls[static_cast<std::size_t>(i)]) +
                                  ls[static_cast<std::size_t>(j)]) * t);
    }
  }
  EstimateReport out;
  out.t = t;
  for (Eigen::Index k = 0; k < n; ++k) {
    const Vector c = basis.coefficients().col(k);
    const double tail_mass = c.dot(tail_gram * c).real();
    const Complex l = ls[static_cast<std::size_t>(k)];
    EstimateTerm term;
    term.tail_defect = std::max(
        0.0, tail_mass + 1.0 - 2.0 * (std::conj(phase(l, t)) * overlap(l, t)).real());
    term.head_mass = std::max(0.0, 1.0 - tail_mass);
    term.tail_envelope = -2.0 * std::expm1(l.real() * t);
    term.head_envelope = -std::expm1(2.0 * l.real() * t);
    out.sum += term.tail_defect + term.head_mass;
    out.terms.push_back(term);
  }
  return out;
}

}  // namespace qs::hardy
