/**
 * Copyright quasishift contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef QUASISHIFT_TESTS_SUPPORT_HPP
#define QUASISHIFT_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>

#include <Eigen/QR>

#include "quasishift/opalg.hpp"

namespace qs::testing {

using Rng = std::mt19937_64;

inline Vector random_vector(Eigen::Index n, Rng &rng) {
  std::normal_distribution<double> d;
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = Complex(d(rng), d(rng));
  return v;
}

inline Matrix random_matrix(Eigen::Index r, Eigen::Index c, Rng &rng) {
  std::normal_distribution<double> d;
  Matrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = Complex(d(rng), d(rng));
  return m;
}

inline Matrix random_unitary(Eigen::Index n, Rng &rng) {
  Eigen::HouseholderQR<Matrix> qr(random_matrix(n, n, rng));
  return qr.householderQ();
}

inline Matrix random_orthogonal(Eigen::Index n, Rng &rng) {
  std::normal_distribution<double> d;
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = d(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  return q.cast<Complex>();
}

// Real symmetric with spectrum in [lo, hi].
inline Matrix random_covariance(Eigen::Index n, Rng &rng, double lo = 0.1, double hi = 0.9) {
  std::uniform_real_distribution<double> u(lo, hi);
  Eigen::VectorXd w(n);
  for (Eigen::Index i = 0; i < n; ++i) w(i) = u(rng);
  Matrix q = random_orthogonal(n, rng);
  return q * w.cast<Complex>().asDiagonal() * q.adjoint();
}

}  // namespace qs::testing

#endif  // QUASISHIFT_TESTS_SUPPORT_HPP
