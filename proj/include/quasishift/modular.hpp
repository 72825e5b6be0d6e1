/**
 * Copyright quasishift contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef QUASISHIFT_MODULAR_HPP
#define QUASISHIFT_MODULAR_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "quasishift/fock.hpp"
#include "quasishift/opalg.hpp"
#include "quasishift/quasifree.hpp"

namespace qs::modular {

enum class ParityPlacement { left, right };

// Gamma(x)Gamma pi(a#(0 + f)) for left placement, pi(a#(0 + f)) Gamma(x)Gamma
// for right.  The two placements differ by a sign.
Matrix commutant_generator(const quasifree::DoubledRepresentation &rep, const Vector &f,
                           fock::FieldKind kind = fock::FieldKind::annihilation,
                           ParityPlacement placement = ParityPlacement::left);

class NonCyclicVacuum : public std::runtime_error {
 public:
  NonCyclicVacuum(std::size_t rank, std::size_t dim)
      : std::runtime_error("tomita_operator: vacuum not cyclic, rank deficit " +
                           std::to_string(dim - rank)),
        rank_(rank),
        dim_(dim) {}
  std::size_t deficit() const { return dim_ - rank_; }

 private:
  std::size_t rank_;
  std::size_t dim_;
};

struct ModularData {
  quasifree::DoubledRepresentation rep;
  AntilinearOperator tomita;     // x Omega -> x* Omega
  AntilinearOperator involution;
  Matrix modular_operator;       // Delta
  Matrix modular_operator_sqrt;  // Delta^{1/2}
  std::size_t cyclic_rank = 0;
};

ModularData tomita_operator(const quasifree::DoubledRepresentation &rep);

// Closed-form involution for J = entrywise conjugation:
// e_I (x) e_J -> (-1)^{k(k-1)/2} (-1)^{m(m-1)/2} e_J (x) e_I, k = |I|, m = |J|.
AntilinearOperator modular_involution_formula(const fock::FockSpace &factor);

// Residuals of Jpi(a(f + 0))J against the right-placed adjoint generator
// (pi(a*(0 + f)) Gamma(x)Gamma) and the left-placed one
// (Gamma(x)Gamma pi(a*(0 + f))).
struct InvolutionIdentity {
  double right_placed = 0.0;
  double left_placed = 0.0;
};
InvolutionIdentity involution_identity(const ModularData &data, const Vector &f);

// Dimension of {X : [X, A] = 0 for all generators}.  No generators gives dim^2.
std::size_t commutant_dimension(std::span<const Matrix> generators, std::size_t dim,
                                double rel_tol = kAlgebraicTol);

// Linear span dimension of a family of matrices.
std::size_t span_dimension(std::span<const Matrix> family, double rel_tol = kAlgebraicTol);

struct CommutantReport {
  std::size_t commutant_dim = 0;
  std::size_t generated_dim = 0;
  std::size_t full_dim = 0;
  double max_residual = 0.0;
  bool equal() const { return commutant_dim == generated_dim && max_residual <= kAlgebraicTol; }
};

// Algebra generated by b(f), b*(f), 1 against the commutant of the algebra
// generated by pi(a(f + 0)).
CommutantReport commutant_check(const quasifree::DoubledRepresentation &rep);

// Monomials b*(e_I) b(e_J) over subset pairs.
std::vector<Matrix> commutant_monomials(const quasifree::DoubledRepresentation &rep);

// Largest distance of J x J (x a left monomial, unit HS norm) from the
// span of commutant monomials.
double involution_commutant_residual(const ModularData &data);

// |<Omega, x y Omega> - <Omega, y Delta x Omega>|.
double kms_residual(const ModularData &data, const Matrix &x, const Matrix &y);

std::vector<double> modular_spectrum(const ModularData &data);

}  // namespace qs::modular

#endif  // QUASISHIFT_MODULAR_HPP
