/**
 * Copyright quasishift contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "quasishift/bogoliubov.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/QR>

#include "quasishift/fock.hpp"

namespace qs::bogoliubov {

namespace {

constexpr double kIsometryTol = 1e-12;
constexpr double kZeroValue = 1e-12;
constexpr double kFlatTail = 1e-10;

void require_unitary(const Matrix &u, const char *op, const std::string &what) {
  if (!is_unitary(u, kAlgebraicTol * std::max<double>(1.0, std::sqrt(u.rows())))) {
    throw std::invalid_argument(std::string(op) + ": " + what + " is not unitary");
  }
}

void require_square(const Matrix &m, std::size_t n, const char *op, const char *what) {
  if (static_cast<std::size_t>(m.rows()) != n || static_cast<std::size_t>(m.cols()) != n) {
    throw std::invalid_argument(std::string(op) + ": " + what + " is " +
                                std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                ", expected " + std::to_string(n) + "x" + std::to_string(n));
  }
}

Vector diagonal_weight(const Matrix &r) {
  Vector w(r.rows());
  for (Eigen::Index i = 0; i < r.rows(); ++i) {
    const double x = std::clamp(r(i, i).real(), 0.0, 1.0);
    w(i) = std::sqrt(x * (1.0 - x));
  }
  return w;
}

Matrix weight(const Matrix &r) {
  const auto n = r.rows();
  if (r.isDiagonal(0.0)) return diagonal_weight(r).asDiagonal();
  return psd_sqrt(r) * psd_sqrt(Matrix::Identity(n, n) - r);
}

}  // namespace

Lifting::Lifting(const quasifree::DoubledRepresentation &rep, Matrix v)
    : rep_(rep), v_(std::move(v)) {
  const auto n = static_cast<Eigen::Index>(rep.modes());
  require_square(v_, rep.modes(), "lift", "V");
  if ((v_.adjoint() * v_ - Matrix::Identity(n, n)).norm() > kIsometryTol * std::max<double>(1, n)) {
    throw std::invalid_argument("lift: V is not isometric");
  }
  const Matrix &r = rep.state().covariance();
  if ((v_ * r - r * v_).norm() > kAlgebraicTol) {
    throw std::invalid_argument("lift: V does not commute with R");
  }
  if (is_unitary(v_, kIsometryTol * std::max<double>(1, n))) {
    implementer_ = kron(fock::second_quantization(rep.factor(), v_),
                        fock::second_quantization(rep.factor(), v_.conjugate()));
  }
}

Matrix Lifting::image_annihilator(const Vector &f) const { return rep_.annihilator_left(v_ * f); }

Matrix Lifting::implement(const Matrix &x) const {
  if (!implementer_) throw std::logic_error("Lifting::implement: no implementer for a proper isometry");
  return *implementer_ * x * implementer_->adjoint();
}

Lifting lift(const quasifree::DoubledRepresentation &rep, const Matrix &v) {
  return Lifting(rep, v);
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::converges: return "converges";
    case Verdict::diverges: return "diverges";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

CriterionReport classify_truncations(std::vector<std::size_t> sizes, std::vector<double> values) {
  if (sizes.size() != values.size()) {
    throw std::invalid_argument("classify_truncations: sizes and values differ in length");
  }
  CriterionReport out;
  out.sizes = std::move(sizes);
  out.hs_values = std::move(values);
  const auto &x = out.sizes;
  const auto &y = out.hs_values;
  if (y.empty()) return out;
  const double top = *std::max_element(y.begin(), y.end());
  if (top <= kZeroValue) {
    out.verdict = Verdict::converges;
    return out;
  }
  if (y.size() < 2) return out;

  std::vector<double> inc_x, inc_y;
  for (std::size_t i = 1; i < y.size(); ++i) {
    const double d = std::abs(y[i] - y[i - 1]);
    const double octaves =
        std::log2(static_cast<double>(x[i]) / static_cast<double>(std::max<std::size_t>(x[i - 1], 1)));
    if (d > kFlatTail * top && octaves > 0.0) {
      inc_x.push_back(static_cast<double>(x[i]));
      inc_y.push_back(d / octaves);
    }
  }
  const double last = std::abs(y.back() - y[y.size() - 2]);
  if (last <= kFlatTail * top) {
    out.verdict = Verdict::converges;
    return out;
  }
  if (inc_x.size() >= 2) {
    out.increment_exponent = loglog_fit(inc_x, inc_y).slope;
    if (*out.increment_exponent < -0.5) {
      out.verdict = Verdict::converges;
      return out;
    }
  }
  std::vector<double> px, py;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] > kZeroValue) {
      px.push_back(static_cast<double>(x[i]));
      py.push_back(y[i]);
    }
  }
  if (px.size() >= 2) {
    out.growth_exponent = loglog_fit(px, py).slope;
    out.verdict = *out.growth_exponent >= 0.0 ? Verdict::diverges : Verdict::inconclusive;
  }
  return out;
}

MatrixFamily scalar_covariance(double nu) {
  return [nu](std::size_t n) {
    const auto k = static_cast<Eigen::Index>(n);
    return Matrix(nu * Matrix::Identity(k, k));
  };
}

double weighted_hs_norm(const Matrix &r, const Matrix &x) {
  if (r.isDiagonal(0.0)) return (diagonal_weight(r).asDiagonal() * x).norm();
  return (weight(r) * x).norm();
}

CriterionReport innerness_norm(const MatrixFamily &r, const MatrixFamily &w,
                               std::span<const std::size_t> sizes) {
  std::vector<double> values;
  for (std::size_t n : sizes) {
    const Matrix rn = r(n);
    const Matrix wn = w(n);
    require_square(rn, n, "innerness_norm", "R");
    require_square(wn, n, "innerness_norm", "W");
    const auto k = static_cast<Eigen::Index>(n);
    values.push_back(weighted_hs_norm(rn, wn - Matrix::Identity(k, k)));
  }
  return classify_truncations({sizes.begin(), sizes.end()}, std::move(values));
}

std::vector<TimedReport> conjugacy_criterion(const MatrixFamily &r, const MatrixPath &u,
                                             const MatrixPath &v, std::span<const double> t_grid,
                                             std::span<const std::size_t> sizes) {
  std::vector<TimedReport> out;
  for (double t : t_grid) {
    std::vector<double> values;
    for (std::size_t n : sizes) {
      const Matrix rn = r(n);
      const Matrix un = u(n, t);
      const Matrix vn = v(n, t);
      require_square(un, n, "conjugacy_criterion", "U_t");
      require_square(vn, n, "conjugacy_criterion", "V_t");
      require_unitary(un, "conjugacy_criterion", "U_t sample");
      require_unitary(vn, "conjugacy_criterion", "V_t sample");
      values.push_back(weighted_hs_norm(rn, un - vn));
    }
    out.push_back({t, classify_truncations({sizes.begin(), sizes.end()}, std::move(values))});
  }
  return out;
}

CriterionReport extension_criterion(const MatrixFamily &rp, const MatrixFamily &vp,
                                    const MatrixFamily &wp, std::span<const std::size_t> sizes) {
  std::vector<double> values;
  for (std::size_t n : sizes) {
    const Matrix rn = rp(n);
    const Matrix vn = vp(n);
    const Matrix wn = wp(n);
    require_square(vn, n, "extension_criterion", "V'");
    require_square(wn, n, "extension_criterion", "W'");
    require_unitary(vn, "extension_criterion", "V'");
    require_unitary(wn, "extension_criterion", "W'");
    values.push_back(weighted_hs_norm(rn, vn - wn));
  }
  return classify_truncations({sizes.begin(), sizes.end()}, std::move(values));
}

double araki_commutator(const Matrix &p, const Matrix &vp, const Matrix &wp) {
  const auto n = vp.rows();
  if (p.rows() != 2 * n || p.cols() != 2 * n || wp.rows() != n) {
    throw std::invalid_argument("araki_commutator: P' must act on K' + K'");
  }
  if ((p * p - p).norm() > kAlgebraicTol || !is_hermitian(p, kAlgebraicTol)) {
    throw std::invalid_argument("araki_commutator: P' is not an orthogonal projection");
  }
  Matrix d = Matrix::Zero(2 * n, 2 * n);
  d.topLeftCorner(n, n) = vp;
  d.bottomRightCorner(n, n) = wp;
  return (d * p - p * d).norm();
}

CriterionReport araki_report(const MatrixFamily &rp, const MatrixFamily &vp,
                             const MatrixFamily &wp, std::span<const std::size_t> sizes) {
  std::vector<double> values;
  for (std::size_t n : sizes) {
    const Matrix rn = rp(n);
    const auto k = static_cast<Eigen::Index>(n);
    const Matrix off = weight(rn);
    Matrix p(2 * k, 2 * k);
    p << rn, off, off, Matrix::Identity(k, k) - rn;
    values.push_back(araki_commutator(p, vp(n), wp(n)));
  }
  return classify_truncations({sizes.begin(), sizes.end()}, std::move(values));
}

ApproximationReport approximation_check(const UnitaryPath &u, const UnitaryPath &v,
                                        const SubspaceEmbedding &k, std::span<const double> t_grid,
                                        double tol) {
  ApproximationReport out;
  out.tolerance = tol;
  out.hs_bounded = true;
  out.complement_identity = true;
  Matrix complement;
  for (double t : t_grid) {
    const Matrix ut = u(t);
    const Matrix vt = v(t);
    if (ut.rows() != vt.rows() || ut.rows() != k.basis.rows() || ut.rows() != ut.cols()) {
      throw std::invalid_argument("approximation_check: embedding dimension " +
                                  std::to_string(k.basis.rows()) + " does not match dilation " +
                                  std::to_string(ut.rows()));
    }
    if (complement.size() == 0) {
      Eigen::HouseholderQR<Matrix> qr(k.basis);
      Matrix q = qr.householderQ();
      complement = q.rightCols(ut.rows() - k.basis.cols());
    }
    ApproximationPoint pt;
    pt.t = t;
    pt.hs_difference = (ut - vt).norm();
    pt.complement_deviation = (ut * (vt.adjoint() * complement) - complement).norm();
    out.hs_bounded = out.hs_bounded && std::isfinite(pt.hs_difference);
    out.complement_identity = out.complement_identity && pt.complement_deviation <= tol;
    out.points.push_back(pt);
  }
  return out;
}

}  // namespace qs::bogoliubov
