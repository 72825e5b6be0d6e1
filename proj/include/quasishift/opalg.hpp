/**
 * Copyright quasishift contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef QUASISHIFT_OPALG_HPP
#define QUASISHIFT_OPALG_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace qs {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;

inline constexpr double kAlgebraicTol = 1e-10;
inline constexpr double kSpectralTol = 1e-8;

// Input broke a named type invariant.
class InvariantViolation : public std::invalid_argument {
 public:
  InvariantViolation(std::string invariant, const std::string &detail)
      : std::invalid_argument(invariant + ": " + detail),
        invariant_(std::move(invariant)) {}
  const std::string &invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

double hs_norm(const Matrix &a);
double operator_norm(const Matrix &a);

struct PolarDecomposition {
  Matrix isometric;
  Matrix positive;
};

// a = isometric * positive, positive = (a* a)^{1/2}.
PolarDecomposition polar_decompose(const Matrix &a);

// Square root and functional calculus for Hermitian matrices.  Negative
// eigenvalues within rounding are clamped to zero.
Matrix psd_sqrt(const Matrix &h);
Matrix hermitian_unitary_exp(const Matrix &h, double t);  // e^{iht}

Matrix kron(const Matrix &a, const Matrix &b);

bool is_unitary(const Matrix &u, double tol = kAlgebraicTol);
bool is_hermitian(const Matrix &h, double tol = kAlgebraicTol);

// Orthonormal basis of the column span, rank decided relative to the
// largest singular value.
Matrix range_basis(const Matrix &columns, double rel_tol = kAlgebraicTol);
std::size_t numerical_rank(const Matrix &a, double rel_tol = kAlgebraicTol);

// Acts as v -> m * conj(v).
class AntilinearOperator {
 public:
  AntilinearOperator() = default;
  explicit AntilinearOperator(Matrix m) : m_(std::move(m)) {}

  const Matrix &matrix() const { return m_; }
  Eigen::Index rows() const { return m_.rows(); }
  Eigen::Index cols() const { return m_.cols(); }

  Vector apply(const Vector &v) const { return m_ * v.conjugate(); }

  // Antilinear adjoint: <A v, w> = conj <v, A* w>.
  AntilinearOperator adjoint() const { return AntilinearOperator(m_.transpose()); }

  // x -> A x A, a linear operator.
  Matrix conjugate_by(const Matrix &x) const { return m_ * x.conjugate() * m_.conjugate(); }

  // A after a linear operator.
  AntilinearOperator after(const Matrix &l) const { return AntilinearOperator(m_ * l.conjugate()); }

 private:
  Matrix m_;
};

// Linear product of two antilinear maps.
Matrix compose(const AntilinearOperator &a, const AntilinearOperator &b);

// Least-squares slope of log(y) against log(x).
struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // rms of log residuals
};

LogLogFit loglog_fit(std::span<const double> x, std::span<const double> y);

}  // namespace qs

#endif  // QUASISHIFT_OPALG_HPP
