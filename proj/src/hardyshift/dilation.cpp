/**
 * Copyright quasishift contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/QR>

#include "quasishift/hardyshift.hpp"

namespace qs::hardy {

namespace {

// Thin QR with a positive diagonal in R.
void positive_qr(const Matrix &a, Matrix &q, Matrix &r) {
  const auto k = a.cols();
  Eigen::HouseholderQR<Matrix> qr(a);
  q = qr.householderQ() * Matrix::Identity(a.rows(), k);
  r = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < k; ++i) {
    const Complex d = r(i, i);
    if (std::abs(d) == 0.0) continue;
    const Complex s = d / std::abs(d);
    q.col(i) *= s;
    r.row(i) /= s;
  }
}

Matrix shift_rows(const Matrix &a, Eigen::Index m) {
  Matrix out = Matrix::Zero(a.rows(), a.cols());
  if (m < a.rows()) out.bottomRows(a.rows() - m) = a.topRows(a.rows() - m);
  return out;
}

}  // namespace

std::size_t ShiftGrid::steps(double t) const {
  if (!(t >= 0.0)) throw std::invalid_argument("shift grid: negative time " + std::to_string(t));
  const double m = std::round(t / step);
  if (std::abs(m * step - t) > 1e-12 * std::max(1.0, t)) {
    throw std::invalid_argument("shift grid: t = " + std::to_string(t) +
                                " is not a multiple of the step " + std::to_string(step));
  }
  if (m > static_cast<double>(cells)) {
    throw std::invalid_argument("shift grid: t = " + std::to_string(t) + " beyond horizon");
  }
  return static_cast<std::size_t>(m);
}

Vector grid_project(const ShiftGrid &grid, const ExpCombination &u) {
  const auto n = static_cast<Eigen::Index>(grid.cells);
  const double scale = 1.0 / std::sqrt(grid.step);
  Vector out(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double a = static_cast<double>(j) * grid.step;
    out(j) = scale * integral(u, a, a + grid.step);
  }
  return out;
}

Matrix grid_shift(const ShiftGrid &grid, double t) {
  const auto n = static_cast<Eigen::Index>(grid.cells);
  const auto m = static_cast<Eigen::Index>(grid.steps(t));
  Matrix s = Matrix::Zero(n, n);
  for (Eigen::Index j = 0; j + m < n; ++j) s(j + m, j) = 1.0;
  return s;
}

GridApproximant grid_approximant(const ShiftModel &model, double t) {
  const ShiftGrid &grid = model.grid;
  const ExponentialBasis &basis = model.basis;
  const auto n = static_cast<Eigen::Index>(grid.cells);
  const auto m = static_cast<Eigen::Index>(grid.steps(t));
  const auto k = static_cast<Eigen::Index>(basis.size());

  Matrix raw(n, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    raw.col(i) = grid_project(grid, basis_function(basis, static_cast<std::size_t>(i)));
  }
  Matrix g, unused;
  positive_qr(raw, g, unused);
  Matrix q2, r2;
  positive_qr(shift_rows(g, m), q2, r2);

  // Theta of the first cell; later cells are its translates.
  const ExpCombination cell = (1.0 / std::sqrt(grid.step)) * ExpCombination::indicator(0.0, grid.step);
  const Vector theta_cell = grid_project(grid, theta_apply(basis.family(), cell));

  const Eigen::Index r = m + k;
  Matrix qd = Matrix::Zero(n, r);
  Matrix images(n, r);
  for (Eigen::Index j = 0; j < m; ++j) {
    qd(j, j) = 1.0;
    images.col(j).setZero();
    images.col(j).tail(n - j) = theta_cell.head(n - j);
  }
  qd.rightCols(k) = q2;
  if (k > 0) {
    Vector p(k);
    for (Eigen::Index i = 0; i < k; ++i) {
      p(i) = std::polar(1.0, basis.family().lambdas[static_cast<std::size_t>(i)].imag() * t);
    }
    Matrix r2inv = r2.triangularView<Eigen::Upper>().solve(Matrix::Identity(k, k));
    images.rightCols(k) = g * p.asDiagonal() * r2inv;
  }

  GridApproximant out;
  const Matrix mm = qd.adjoint() * images;
  const PolarDecomposition polar = polar_decompose(mm);
  out.subspace = qd;
  out.subspace_unitary = polar.isometric;
  out.discretization_defect = (mm - polar.isometric).norm();
  out.image_residual = (images - qd * mm).norm();
  out.correction = Matrix::Identity(n, n) +
                   (qd * (polar.isometric - Matrix::Identity(r, r))) * qd.adjoint();
  out.operator_on_grid = Matrix::Zero(n, n);
  if (m < n) out.operator_on_grid.leftCols(n - m) = out.correction.rightCols(n - m);
  return out;
}

Matrix unitary_dilation(const ShiftModel &model, DilationKind which, double t) {
  const ShiftGrid &grid = model.grid;
  const auto n = static_cast<Eigen::Index>(grid.cells);
  const auto m = static_cast<Eigen::Index>(grid.steps(t));
  const Eigen::Index ring = 2 * n;
  // Ring positions: first-summand cell j at j, second-summand cell j at 2n-1-j.
  auto index_at = [&](Eigen::Index pos) { return pos < n ? pos : n + (ring - 1 - pos); };
  auto position_of = [&](Eigen::Index idx) { return idx < n ? idx : ring - 1 - (idx - n); };

  Matrix out = Matrix::Zero(ring, ring);
  Matrix x;
  if (which == DilationKind::approximant) x = grid_approximant(model, t).correction;
  for (Eigen::Index idx = 0; idx < ring; ++idx) {
    const Eigen::Index target = index_at((position_of(idx) + m) % ring);
    if (which == DilationKind::approximant && target < n) {
      out.col(idx).head(n) = x.col(target);
    } else {
      out(target, idx) = 1.0;
    }
  }
  return out;
}

}  // namespace qs::hardy
