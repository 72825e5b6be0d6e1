/**
 * Copyright quasishift contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "quasishift/fock.hpp"

#include <bit>
#include <string>
#include <vector>

namespace qs::fock {

namespace {

void check_argument(const FockSpace &space, const Vector &f, const char *op) {
  if (static_cast<std::size_t>(f.size()) != space.modes()) {
    throw std::invalid_argument(std::string(op) + ": vector length " + std::to_string(f.size()) +
                                " does not match modes " + std::to_string(space.modes()));
  }
}

}  // namespace

FockSpace::FockSpace(std::size_t modes) : modes_(modes) {
  if (modes > kMaxModes) {
    throw std::invalid_argument("build_space: modes " + std::to_string(modes) + " exceeds " +
                                std::to_string(kMaxModes));
  }
}

int FockSpace::jw_sign(std::uint32_t state, std::size_t mode) const {
  // lower-index modes occupy the higher bits
  std::uint32_t above = ~((mode_bit(mode) << 1) - 1) & ((std::uint32_t{1} << modes_) - 1);
  return (std::popcount(state & above) & 1) ? -1 : 1;
}

Vector FockSpace::vacuum() const { return basis_vector(0); }

Vector FockSpace::basis_vector(std::uint32_t state) const {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dim()));
  v(state) = 1.0;
  return v;
}

FockSpace build_space(std::size_t modes) { return FockSpace(modes); }

Matrix annihilator(const FockSpace &space, const Vector &f) {
  check_argument(space, f, "annihilator");
  const auto d = static_cast<Eigen::Index>(space.dim());
  Matrix a = Matrix::Zero(d, d);
  for (std::uint32_t s = 0; s < space.dim(); ++s) {
    for (std::size_t i = 0; i < space.modes(); ++i) {
      if (!space.occupied(s, i) || f(i) == 0.0) continue;
      a(s ^ space.mode_bit(i), s) += static_cast<double>(space.jw_sign(s, i)) * std::conj(f(i));
    }
  }
  return a;
}

Matrix creator(const FockSpace &space, const Vector &f) {
  check_argument(space, f, "creator");
  return annihilator(space, f).adjoint();
}

FieldOperator field_operator(const FockSpace &space, FieldKind kind, const Vector &f) {
  return {kind, f, kind == FieldKind::creation ? creator(space, f) : annihilator(space, f)};
}

Matrix parity(const FockSpace &space) {
  const auto d = static_cast<Eigen::Index>(space.dim());
  Matrix g = Matrix::Zero(d, d);
  for (std::uint32_t s = 0; s < space.dim(); ++s) {
    g(s, s) = (std::popcount(s) & 1) ? -1.0 : 1.0;
  }
  return g;
}

Vector apply_annihilator(const FockSpace &space, const Vector &f, const Vector &psi) {
  check_argument(space, f, "apply_annihilator");
  Vector out = Vector::Zero(psi.size());
  for (std::uint32_t s = 0; s < space.dim(); ++s) {
    if (psi(s) == 0.0) continue;
    for (std::size_t i = 0; i < space.modes(); ++i) {
      if (!space.occupied(s, i)) continue;
      out(s ^ space.mode_bit(i)) +=
          static_cast<double>(space.jw_sign(s, i)) * std::conj(f(i)) * psi(s);
    }
  }
  return out;
}

Vector apply_creator(const FockSpace &space, const Vector &f, const Vector &psi) {
  check_argument(space, f, "apply_creator");
  Vector out = Vector::Zero(psi.size());
  for (std::uint32_t s = 0; s < space.dim(); ++s) {
    if (psi(s) == 0.0) continue;
    for (std::size_t i = 0; i < space.modes(); ++i) {
      if (space.occupied(s, i)) continue;
      out(s | space.mode_bit(i)) += static_cast<double>(space.jw_sign(s, i)) * f(i) * psi(s);
    }
  }
  return out;
}

Vector wedge_vector(const FockSpace &space, std::span<const Vector> vectors) {
  if (vectors.size() > space.modes()) return Vector::Zero(static_cast<Eigen::Index>(space.dim()));
  Vector psi = space.vacuum();
  for (auto it = vectors.rbegin(); it != vectors.rend(); ++it) {
    psi = apply_creator(space, *it, psi);
  }
  return psi;
}

Matrix second_quantization(const FockSpace &space, const Matrix &v) {
  const auto n = static_cast<Eigen::Index>(space.modes());
  if (v.rows() != n || v.cols() != n) {
    throw std::invalid_argument("second_quantization: operator is not " + std::to_string(n) + "x" +
                                std::to_string(n));
  }
  const auto d = static_cast<Eigen::Index>(space.dim());
  Matrix out(d, d);
  std::vector<Vector> cols;
  for (std::uint32_t s = 0; s < space.dim(); ++s) {
    cols.clear();
    for (std::size_t i = 0; i < space.modes(); ++i) {
      if (space.occupied(s, i)) cols.emplace_back(v.col(static_cast<Eigen::Index>(i)));
    }
    out.col(s) = wedge_vector(space, cols);
  }
  return out;
}

}  // namespace qs::fock
