/**
 * Copyright quasishift contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "quasishift/opalg.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace qs {

double hs_norm(const Matrix &a) { return a.norm(); }

double operator_norm(const Matrix &a) {
  if (a.size() == 0) return 0.0;
  // Top eigenvalue of the smaller Gram matrix; relative accuracy is kept for
  // the largest singular value.
  const Matrix gram = a.rows() < a.cols() ? Matrix(a * a.adjoint()) : Matrix(a.adjoint() * a);
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

PolarDecomposition polar_decompose(const Matrix &a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("polar_decompose: non-square input " + std::to_string(a.rows()) +
                                "x" + std::to_string(a.cols()));
  }
  if (a.size() == 0) return {Matrix(0, 0), Matrix(0, 0)};
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Matrix &u = svd.matrixU();
  const Matrix &v = svd.matrixV();
  PolarDecomposition out;
  out.isometric = u * v.adjoint();
  out.positive = v * svd.singularValues().cast<Complex>().asDiagonal() * v.adjoint();
  out.positive = 0.5 * (out.positive + out.positive.adjoint()).eval();
  return out;
}

Matrix psd_sqrt(const Matrix &h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  Eigen::VectorXd w = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Matrix &q = es.eigenvectors();
  return q * w.cast<Complex>().asDiagonal() * q.adjoint();
}

Matrix hermitian_unitary_exp(const Matrix &h, double t) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const Matrix &q = es.eigenvectors();
  Vector phases(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < phases.size(); ++i) {
    phases(i) = std::polar(1.0, es.eigenvalues()(i) * t);
  }
  return q * phases.asDiagonal() * q.adjoint();
}

Matrix kron(const Matrix &a, const Matrix &b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

bool is_unitary(const Matrix &u, double tol) {
  if (u.rows() != u.cols()) return false;
  Matrix id = Matrix::Identity(u.rows(), u.cols());
  return (u.adjoint() * u - id).norm() <= tol && (u * u.adjoint() - id).norm() <= tol;
}

bool is_hermitian(const Matrix &h, double tol) {
  return h.rows() == h.cols() && (h - h.adjoint()).norm() <= tol;
}

Matrix range_basis(const Matrix &columns, double rel_tol) {
  if (columns.cols() == 0 || columns.rows() == 0) return Matrix(columns.rows(), 0);
  Eigen::JacobiSVD<Matrix> svd(columns, Eigen::ComputeThinU);
  const auto &s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return Matrix(columns.rows(), 0);
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > rel_tol * s(0)) ++r;
  return svd.matrixU().leftCols(r);
}

std::size_t numerical_rank(const Matrix &a, double rel_tol) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(a);
  const auto &s = svd.singularValues();
  if (s(0) == 0.0) return 0;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > rel_tol * s(0)) ++r;
  }
  return r;
}

Matrix compose(const AntilinearOperator &a, const AntilinearOperator &b) {
  return a.matrix() * b.matrix().conjugate();
}

LogLogFit loglog_fit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("loglog_fit: need at least two paired samples");
  }
  const auto n = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd a(n, 2);
  Eigen::VectorXd b(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
      throw std::invalid_argument("loglog_fit: samples must be positive");
    }
    a(i, 0) = std::log(x[i]);
    a(i, 1) = 1.0;
    b(i) = std::log(y[i]);
  }
  Eigen::Vector2d c = a.colPivHouseholderQr().solve(b);
  LogLogFit fit;
  fit.slope = c(0);
  fit.intercept = c(1);
  fit.residual = std::sqrt((a * c - b).squaredNorm() / static_cast<double>(n));
  return fit;
}

}  // namespace qs
