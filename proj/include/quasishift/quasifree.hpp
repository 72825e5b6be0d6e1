/**
 * Copyright quasishift contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef QUASISHIFT_QUASIFREE_HPP
#define QUASISHIFT_QUASIFREE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "quasishift/fock.hpp"
#include "quasishift/opalg.hpp"

namespace qs::quasifree {

// Covariance 0 < R < 1 with real entries.  J is entrywise conjugation.
class CovarianceState {
 public:
  static CovarianceState from_matrix(const Matrix &r);
  static CovarianceState scalar(std::size_t modes, double nu);

  std::size_t modes() const { return static_cast<std::size_t>(r_.rows()); }
  const Matrix &covariance() const { return r_; }
  const std::optional<double> &nu() const { return nu_; }
  const Matrix &sqrt_r() const { return sqrt_r_; }
  const Matrix &sqrt_one_minus_r() const { return sqrt_one_minus_r_; }

  // nu / (1 - nu) for scalar states.
  std::optional<double> type_parameter() const;

 private:
  CovarianceState() = default;
  Matrix r_;
  Matrix sqrt_r_;
  Matrix sqrt_one_minus_r_;
  std::optional<double> nu_;
};

// Expectation of a*(f_m)...a*(f_1) a(g_1)...a(g_n): zero unless m = n,
// otherwise det[(g_j, R f_i)].
Complex quasifree_expectation(const CovarianceState &state, std::span<const Vector> fs,
                              std::span<const Vector> gs);

// [[R, sqrt(R(1-R))], [sqrt(R(1-R)), 1-R]] on K + K.
Matrix purification_projection(const CovarianceState &state);

// Representation of the CAR algebra over K + K on F(K) (x) F(K).  The
// first factor holds the high-order bits.
class DoubledRepresentation {
 public:
  static constexpr std::size_t kMaxModes = fock::FockSpace::kMaxModes / 2;

  explicit DoubledRepresentation(CovarianceState state);

  const CovarianceState &state() const { return state_; }
  const fock::FockSpace &factor() const { return factor_; }
  const fock::FockSpace &space() const { return space_; }
  std::size_t modes() const { return factor_.modes(); }
  std::size_t dim() const { return space_.dim(); }

  // pi(a(f + g)) and its adjoint.
  Matrix annihilator(const Vector &f, const Vector &g) const;
  Matrix creator(const Vector &f, const Vector &g) const;
  Matrix annihilator_left(const Vector &f) const;   // pi(a(f + 0))
  Matrix annihilator_right(const Vector &f) const;  // pi(a(0 + f))

  Vector vacuum() const { return space_.vacuum(); }
  Matrix total_parity() const;  // Gamma (x) Gamma
  Matrix first_factor_parity() const;  // Gamma (x) 1
  Complex vacuum_expectation(const Matrix &x) const;

 private:
  CovarianceState state_;
  fock::FockSpace factor_;
  fock::FockSpace space_;
};

DoubledRepresentation gns_representation(const CovarianceState &state);
DoubledRepresentation doubled_representation(const CovarianceState &state);

// pi(a*(e_I)) pi(a(e_J)) over all subset pairs (I, J) of the first summand,
// with a*(e_I) = a*(e_{i_1}) ... a*(e_{i_k}) in increasing order.  Spans
// the algebra generated by pi(a(f + 0)).
std::vector<Matrix> left_monomials(const DoubledRepresentation &rep);

// Rank of {x Omega : x in the monomial family} against the full dimension.
struct CyclicityReport {
  std::size_t rank = 0;
  std::size_t dim = 0;
  bool cyclic() const { return rank == dim; }
};
CyclicityReport vacuum_cyclicity(const DoubledRepresentation &rep,
                                 std::span<const Matrix> monomials);

// x Omega = 0 forces x = 0 on the span iff both dimensions agree.
struct SeparationReport {
  std::size_t algebra_dim = 0;
  std::size_t image_rank = 0;
  bool separating() const { return algebra_dim == image_rank; }
};
SeparationReport vacuum_separation(const DoubledRepresentation &rep,
                                   std::span<const Matrix> monomials);

}  // namespace qs::quasifree

#endif  // QUASISHIFT_QUASIFREE_HPP
