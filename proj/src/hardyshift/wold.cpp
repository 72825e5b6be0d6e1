/**
 * Copyright quasishift contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "quasishift/hardyshift.hpp"

namespace qs::hardy {

WoldDecomposition wold_decompose(const Matrix &v, std::size_t max_iter) {
  if (v.rows() != v.cols()) throw std::invalid_argument("wold_decompose: non-square input");
  const auto n = v.rows();
  const Matrix p = v.adjoint() * v;
  if ((p * p - p).norm() > kAlgebraicTol * std::max<double>(1.0, std::sqrt(n))) {
    throw std::invalid_argument("wold_decompose: input is not a partial isometry");
  }
  WoldDecomposition out;
  out.deficiency = static_cast<std::size_t>(n) - numerical_rank(v);

  Matrix q = Matrix::Identity(n, n);
  Matrix proj = Matrix::Identity(n, n);
  for (std::size_t it = 0; it < max_iter; ++it) {
    Matrix next = range_basis(v * q);
    Matrix next_proj = next * next.adjoint();
    const double change = (next_proj - proj).norm();
    q = std::move(next);
    proj = std::move(next_proj);
    out.iterations = it + 1;
    if (change <= kAlgebraicTol) break;
  }
  out.unitary_projector = proj;
  out.shift_projector = Matrix::Identity(n, n) - proj;
  if (q.cols() > 0) {
    const Matrix restricted = q.adjoint() * v * q;
    const auto r = restricted.rows();
    out.unitary_residual = (v * q - q * restricted).norm() +
                           (restricted.adjoint() * restricted - Matrix::Identity(r, r)).norm();
  }
  return out;
}

ConditionNReport condition_N_check(const bogoliubov::MatrixPath &path,
                                   std::span<const double> t_grid,
                                   std::span<const std::size_t> sizes,
                                   std::optional<double> lipschitz_bound) {
  if (t_grid.size() < 2) throw std::invalid_argument("condition_N_check: need two grid points");
  ConditionNReport out;
  out.bound = lipschitz_bound;
  std::vector<double> values;
  for (std::size_t size : sizes) {
    ContinuityPoint pt;
    pt.size = size;
    Matrix prev = path(size, t_grid[0]);
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
      Matrix cur = path(size, t_grid[i]);
      const double d = operator_norm(cur - prev);
      const double step = std::abs(t_grid[i] - t_grid[i - 1]);
      pt.modulus = std::max(pt.modulus, d);
      if (step > 0.0) pt.lipschitz = std::max(pt.lipschitz, d / step);
      prev = std::move(cur);
    }
    values.push_back(pt.lipschitz);
    out.points.push_back(pt);
  }
  out.trend = bogoliubov::classify_truncations({sizes.begin(), sizes.end()}, values);
  if (lipschitz_bound) {
    out.passes = std::all_of(values.begin(), values.end(), [&](double x) {
      return x <= *lipschitz_bound * (1.0 + 1e-9) + 1e-12;
    });
  } else {
    out.passes = out.trend.verdict == bogoliubov::Verdict::converges;
  }
  return out;
}

ConditionNReport condition_N_generator_check(const bogoliubov::MatrixFamily &generator,
                                             std::span<const std::size_t> sizes,
                                             std::optional<double> bound) {
  ConditionNReport out;
  out.bound = bound;
  std::vector<double> values;
  for (std::size_t size : sizes) {
    ContinuityPoint pt;
    pt.size = size;
    pt.lipschitz = operator_norm(generator(size));
    pt.modulus = pt.lipschitz;
    values.push_back(pt.lipschitz);
    out.points.push_back(pt);
  }
  out.trend = bogoliubov::classify_truncations({sizes.begin(), sizes.end()}, values);
  if (bound) {
    out.passes = std::all_of(values.begin(), values.end(),
                             [&](double x) { return x <= *bound * (1.0 + 1e-9) + 1e-12; });
  } else {
    out.passes = out.trend.verdict == bogoliubov::Verdict::converges;
  }
  return out;
}

}  // namespace qs::hardy
