/**
 * Copyright quasishift contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef QUASISHIFT_BOGOLIUBOV_HPP
#define QUASISHIFT_BOGOLIUBOV_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "quasishift/opalg.hpp"
#include "quasishift/quasifree.hpp"

namespace qs::bogoliubov {

class Lifting {
 public:
  Lifting(const quasifree::DoubledRepresentation &rep, Matrix v);

  const Matrix &one_particle() const { return v_; }
  const std::optional<Matrix> &implementer() const { return implementer_; }

  // pi(a(f + 0)) -> pi(a(Vf + 0)).
  Matrix image_annihilator(const Vector &f) const;

  // U pi(a(f + 0)) U*; requires an implementer.
  Matrix implement(const Matrix &x) const;

 private:
  quasifree::DoubledRepresentation rep_;
  Matrix v_;
  std::optional<Matrix> implementer_;
};

// Implementer, when V is unitary, is Gamma(V) (x) Gamma(JVJ).
Lifting lift(const quasifree::DoubledRepresentation &rep, const Matrix &v);

enum class Verdict { converges, diverges, inconclusive };
std::string_view to_string(Verdict v);

struct CriterionReport {
  std::vector<std::size_t> sizes;
  std::vector<double> hs_values;
  Verdict verdict = Verdict::inconclusive;
  std::optional<double> growth_exponent;     // slope of log value vs log size
  std::optional<double> increment_exponent;  // slope of log per-octave increment vs log size
};

// Summable increments (exponent below -0.5) or a flat tail give
// "converges"; non-negative growth exponent gives "diverges".
CriterionReport classify_truncations(std::vector<std::size_t> sizes, std::vector<double> values);

// Truncation n -> n x n matrix.
using MatrixFamily = std::function<Matrix(std::size_t)>;
// (truncation n, time t) -> n x n matrix.
using MatrixPath = std::function<Matrix(std::size_t, double)>;

MatrixFamily scalar_covariance(double nu);

// ||R^{1/2}(1-R)^{1/2} X||_2.
double weighted_hs_norm(const Matrix &r, const Matrix &x);

CriterionReport innerness_norm(const MatrixFamily &r, const MatrixFamily &w,
                               std::span<const std::size_t> sizes);

struct TimedReport {
  double t;
  CriterionReport report;
};

std::vector<TimedReport> conjugacy_criterion(const MatrixFamily &r, const MatrixPath &u,
                                             const MatrixPath &v, std::span<const double> t_grid,
                                             std::span<const std::size_t> sizes);

CriterionReport extension_criterion(const MatrixFamily &rp, const MatrixFamily &vp,
                                    const MatrixFamily &wp, std::span<const std::size_t> sizes);

// ||diag(V', W') P' - P' diag(V', W')||_2.
double araki_commutator(const Matrix &p, const Matrix &vp, const Matrix &wp);

// araki_commutator over truncations with P' the purification of R'.
CriterionReport araki_report(const MatrixFamily &rp, const MatrixFamily &vp,
                             const MatrixFamily &wp, std::span<const std::size_t> sizes);

// Orthonormal columns spanning K inside K'.
struct SubspaceEmbedding {
  Matrix basis;
};

using UnitaryPath = std::function<Matrix(double)>;

struct ApproximationPoint {
  double t = 0.0;
  double hs_difference = 0.0;         // ||U' - V'||_2
  // ||(U'V'* - 1) restricted to K' - K||_2, an upper bound for the sup norm
  double complement_deviation = 0.0;
};

struct ApproximationReport {
  std::vector<ApproximationPoint> points;
  double tolerance = 0.0;
  bool hs_bounded = false;
  bool complement_identity = false;
  bool approximates() const { return hs_bounded && complement_identity; }
};

ApproximationReport approximation_check(const UnitaryPath &u, const UnitaryPath &v,
                                        const SubspaceEmbedding &k, std::span<const double> t_grid,
                                        double tol = kAlgebraicTol);

}  // namespace qs::bogoliubov

#endif  // QUASISHIFT_BOGOLIUBOV_HPP
