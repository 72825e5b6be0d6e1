/**
 * Copyright quasishift contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "quasishift/quasifree.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace qs::quasifree {

namespace {

void check_length(const Vector &f, std::size_t modes, const char *op) {
  if (static_cast<std::size_t>(f.size()) != modes) {
    throw std::invalid_argument(std::string(op) + ": vector length " + std::to_string(f.size()) +
                                " does not match modes " + std::to_string(modes));
  }
}

Vector conj_of(const Matrix &m, const Vector &f) { return (m * f).conjugate(); }

}  // namespace

CovarianceState CovarianceState::from_matrix(const Matrix &r) {
  if (r.rows() != r.cols()) {
    throw InvariantViolation("square", "covariance is " + std::to_string(r.rows()) + "x" +
                                           std::to_string(r.cols()));
  }
  if (r.imag().cwiseAbs().maxCoeff() > 1e-14 * std::max(1.0, r.cwiseAbs().maxCoeff()) &&
      r.size() > 0) {
    throw InvariantViolation("real_entries", "covariance has non-real entries");
  }
  if (!is_hermitian(r, 1e-12)) {
    throw InvariantViolation("self_adjoint", "covariance is not symmetric");
  }
  CovarianceState s;
  s.r_ = Matrix(0.5 * (r.real() + r.real().transpose())).cast<Complex>();
  if (r.size() == 0) {
    s.sqrt_r_ = s.r_;
    s.sqrt_one_minus_r_ = s.r_;
    return s;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s.r_.real());
  const auto &w = es.eigenvalues();
  if (w.minCoeff() <= 0.0 || w.maxCoeff() >= 1.0) {
    throw InvariantViolation("spectrum_in_open_unit_interval",
                             "covariance spectrum [" + std::to_string(w.minCoeff()) + ", " +
                                 std::to_string(w.maxCoeff()) + "] leaves (0,1)");
  }
  const Eigen::MatrixXd &q = es.eigenvectors();
  Eigen::VectorXd sr = w.cwiseSqrt();
  Eigen::VectorXd sc = (Eigen::VectorXd::Ones(w.size()) - w).cwiseSqrt();
  s.sqrt_r_ = Eigen::MatrixXd(q * sr.asDiagonal() * q.transpose()).cast<Complex>();
  s.sqrt_one_minus_r_ = Eigen::MatrixXd(q * sc.asDiagonal() * q.transpose()).cast<Complex>();
  return s;
}

CovarianceState CovarianceState::scalar(std::size_t modes, double nu) {
  const auto n = static_cast<Eigen::Index>(modes);
  CovarianceState s = from_matrix(nu * Matrix::Identity(n, n));
  s.nu_ = nu;
  return s;
}

std::optional<double> CovarianceState::type_parameter() const {
  if (!nu_) return std::nullopt;
  return *nu_ / (1.0 - *nu_);
}

Complex quasifree_expectation(const CovarianceState &state, std::span<const Vector> fs,
                              std::span<const Vector> gs) {
  for (const auto &f : fs) check_length(f, state.modes(), "quasifree_expectation");
  for (const auto &g : gs) check_length(g, state.modes(), "quasifree_expectation");
  if (fs.size() != gs.size()) return 0.0;
  const auto m = static_cast<Eigen::Index>(fs.size());
  if (m == 0) return 1.0;
  Matrix gram(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    Vector rf = state.covariance() * fs[i];
    for (Eigen::Index j = 0; j < m; ++j) gram(i, j) = gs[j].dot(rf);
  }
  return gram.determinant();
}

Matrix purification_projection(const CovarianceState &state) {
  const auto n = static_cast<Eigen::Index>(state.modes());
  const Matrix &r = state.covariance();
  Matrix off = state.sqrt_r() * state.sqrt_one_minus_r();
  Matrix p(2 * n, 2 * n);
  p.topLeftCorner(n, n) = r;
  p.topRightCorner(n, n) = off;
  p.bottomLeftCorner(n, n) = off;
  p.bottomRightCorner(n, n) = Matrix::Identity(n, n) - r;
  return p;
}

DoubledRepresentation::DoubledRepresentation(CovarianceState state)
    : state_(std::move(state)),
      factor_(state_.modes() <= kMaxModes ? state_.modes() : 0),
      space_(2 * factor_.modes()) {
  if (state_.modes() > kMaxModes) {
    throw std::invalid_argument("doubled_representation: modes " +
                                std::to_string(state_.modes()) + " exceeds " +
                                std::to_string(kMaxModes));
  }
}

Matrix DoubledRepresentation::annihilator_left(const Vector &f) const {
  check_length(f, modes(), "doubled_representation");
  const Matrix g = fock::parity(factor_);
  const auto d = static_cast<Eigen::Index>(factor_.dim());
  return kron(fock::annihilator(factor_, state_.sqrt_one_minus_r() * f), g) +
         kron(Matrix::Identity(d, d), fock::creator(factor_, conj_of(state_.sqrt_r(), f)));
}

Matrix DoubledRepresentation::annihilator_right(const Vector &f) const {
  check_length(f, modes(), "doubled_representation");
  const Matrix g = fock::parity(factor_);
  const auto d = static_cast<Eigen::Index>(factor_.dim());
  return -kron(fock::annihilator(factor_, state_.sqrt_r() * f), g) +
         kron(Matrix::Identity(d, d),
              fock::creator(factor_, conj_of(state_.sqrt_one_minus_r(), f)));
}

Matrix DoubledRepresentation::annihilator(const Vector &f, const Vector &g) const {
  return annihilator_left(f) + annihilator_right(g);
}

Matrix DoubledRepresentation::creator(const Vector &f, const Vector &g) const {
  return annihilator(f, g).adjoint();
}

Matrix DoubledRepresentation::total_parity() const { return fock::parity(space_); }

Matrix DoubledRepresentation::first_factor_parity() const {
  const auto d = static_cast<Eigen::Index>(factor_.dim());
  return kron(fock::parity(factor_), Matrix::Identity(d, d));
}

Complex DoubledRepresentation::vacuum_expectation(const Matrix &x) const { return x(0, 0); }

DoubledRepresentation gns_representation(const CovarianceState &state) {
  return DoubledRepresentation(state);
}

DoubledRepresentation doubled_representation(const CovarianceState &state) {
  return DoubledRepresentation(state);
}

std::vector<Matrix> left_monomials(const DoubledRepresentation &rep) {
  const std::size_t n = rep.modes();
  const auto d = static_cast<Eigen::Index>(rep.dim());
  std::vector<Matrix> ann(n);
  for (std::size_t i = 0; i < n; ++i) {
    ann[i] = rep.annihilator_left(Vector::Unit(static_cast<Eigen::Index>(n),
                                               static_cast<Eigen::Index>(i)));
  }
  auto product = [&](std::uint32_t subset, bool adjoint) {
    Matrix out = Matrix::Identity(d, d);
    for (std::size_t i = 0; i < n; ++i) {
      if (!(subset & (std::uint32_t{1} << i))) continue;
      out = adjoint ? Matrix(out * ann[i].adjoint()) : Matrix(out * ann[i]);
    }
    return out;
  };
  std::vector<Matrix> out;
  out.reserve(std::size_t{1} << (2 * n));
  for (std::uint32_t a = 0; a < (std::uint32_t{1} << n); ++a) {
    Matrix create = product(a, true);
    for (std::uint32_t b = 0; b < (std::uint32_t{1} << n); ++b) {
      out.push_back(create * product(b, false));
    }
  }
  return out;
}

CyclicityReport vacuum_cyclicity(const DoubledRepresentation &rep,
                                 std::span<const Matrix> monomials) {
  Matrix images(static_cast<Eigen::Index>(rep.dim()), static_cast<Eigen::Index>(monomials.size()));
  for (std::size_t k = 0; k < monomials.size(); ++k) {
    images.col(static_cast<Eigen::Index>(k)) = monomials[k].col(0);
  }
  return {numerical_rank(images), rep.dim()};
}

SeparationReport vacuum_separation(const DoubledRepresentation &rep,
                                   std::span<const Matrix> monomials) {
  const auto d = static_cast<Eigen::Index>(rep.dim());
  const auto m = static_cast<Eigen::Index>(monomials.size());
  Matrix flat(d * d, m);
  Matrix images(d, m);
  for (Eigen::Index k = 0; k < m; ++k) {
    flat.col(k) = monomials[static_cast<std::size_t>(k)].reshaped();
    images.col(k) = monomials[static_cast<std::size_t>(k)].col(0);
  }
  return {numerical_rank(flat), numerical_rank(images)};
}

}  // namespace qs::quasifree
