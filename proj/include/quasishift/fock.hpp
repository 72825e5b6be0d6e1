/**
 * Copyright quasishift contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef QUASISHIFT_FOCK_HPP
#define QUASISHIFT_FOCK_HPP

#include <cstddef>
#include <cstdint>
#include <span>

#include "quasishift/opalg.hpp"

namespace qs::fock {

// Occupation bitstrings in lexicographic order.  Mode i is the bit
// (modes - 1 - i) of the basis index, so index 0 is the vacuum and mode 0
// is the most significant digit.
class FockSpace {
 public:
  static constexpr std::size_t kMaxModes = 12;

  explicit FockSpace(std::size_t modes);

  std::size_t modes() const { return modes_; }
  std::size_t dim() const { return std::size_t{1} << modes_; }
  std::uint32_t mode_bit(std::size_t mode) const {
    return std::uint32_t{1} << (modes_ - 1 - mode);
  }
  bool occupied(std::uint32_t state, std::size_t mode) const {
    return (state & mode_bit(mode)) != 0;
  }
  // (-1)^(number of occupied modes below `mode`).
  int jw_sign(std::uint32_t state, std::size_t mode) const;

  Vector vacuum() const;
  Vector basis_vector(std::uint32_t state) const;

 private:
  std::size_t modes_;
};

FockSpace build_space(std::size_t modes);

enum class FieldKind { creation, annihilation };

struct FieldOperator {
  FieldKind kind;
  Vector argument;
  Matrix matrix;
};

// a(f) = sum_i conj(f_i) a_i; antilinear in f.
Matrix annihilator(const FockSpace &space, const Vector &f);
// a*(f) = sum_i f_i a_i^*; linear in f.
Matrix creator(const FockSpace &space, const Vector &f);
FieldOperator field_operator(const FockSpace &space, FieldKind kind, const Vector &f);

Matrix parity(const FockSpace &space);

// Matrix-free actions, O(dim * modes).
Vector apply_annihilator(const FockSpace &space, const Vector &f, const Vector &psi);
Vector apply_creator(const FockSpace &space, const Vector &f, const Vector &psi);

// a*(f_1) ... a*(f_k) vacuum.
Vector wedge_vector(const FockSpace &space, std::span<const Vector> vectors);

// Second quantization of a one-particle operator v: e_J -> wedge of the
// columns of v indexed by J.  Unitary when v is.
Matrix second_quantization(const FockSpace &space, const Matrix &v);

}  // namespace qs::fock

#endif  // QUASISHIFT_FOCK_HPP
