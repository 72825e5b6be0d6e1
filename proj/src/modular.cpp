/**
 * Copyright quasishift contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "quasishift/modular.hpp"

#include <algorithm>
#include <bit>

#include <Eigen/Eigenvalues>

namespace qs::modular {

using quasifree::DoubledRepresentation;

Matrix commutant_generator(const DoubledRepresentation &rep, const Vector &f, fock::FieldKind kind,
                           ParityPlacement placement) {
  if (static_cast<std::size_t>(f.size()) != rep.modes()) {
    throw std::invalid_argument("commutant_generator: vector length " + std::to_string(f.size()) +
                                " does not match modes " + std::to_string(rep.modes()));
  }
  const Vector zero = Vector::Zero(f.size());
  Matrix field = kind == fock::FieldKind::annihilation ? rep.annihilator(zero, f)
                                                       : rep.creator(zero, f);
  const Matrix gg = rep.total_parity();
  return placement == ParityPlacement::left ? Matrix(gg * field) : Matrix(field * gg);
}

ModularData tomita_operator(const DoubledRepresentation &rep) {
  const std::vector<Matrix> monomials = quasifree::left_monomials(rep);
  const auto d = static_cast<Eigen::Index>(rep.dim());
  const auto m = static_cast<Eigen::Index>(monomials.size());
  Matrix v(d, m);
  Matrix w(d, m);
  for (Eigen::Index k = 0; k < m; ++k) {
    v.col(k) = monomials[static_cast<std::size_t>(k)].col(0);
    w.col(k) = monomials[static_cast<std::size_t>(k)].adjoint().col(0);
  }
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(v.conjugate().transpose());
  cod.setThreshold(kAlgebraicTol);
  const auto rank = static_cast<std::size_t>(cod.rank());
  if (rank < rep.dim()) throw NonCyclicVacuum(rank, rep.dim());

  // S conj(V) = W, solved as conj(V)^T S^T = W^T.
  Matrix s = cod.solve(w.transpose()).transpose();
  PolarDecomposition polar = polar_decompose(s);
  Matrix root = polar.positive.conjugate();

  ModularData out{rep, AntilinearOperator(s), AntilinearOperator(polar.isometric),
                  root * root, root, rank};
  return out;
}

AntilinearOperator modular_involution_formula(const fock::FockSpace &factor) {
  const std::size_t n = factor.modes();
  const std::uint32_t half = std::uint32_t{1} << n;
  const auto d = static_cast<Eigen::Index>(half) * static_cast<Eigen::Index>(half);
  Matrix u = Matrix::Zero(d, d);
  auto reversal = [](int k) { return ((k * (k - 1) / 2) & 1) ? -1.0 : 1.0; };
  for (std::uint32_t first = 0; first < half; ++first) {
    for (std::uint32_t second = 0; second < half; ++second) {
      const double sign = reversal(std::popcount(first)) * reversal(std::popcount(second));
      u((second << n) | first, (first << n) | second) = sign;
    }
  }
  return AntilinearOperator(u);
}

InvolutionIdentity involution_identity(const ModularData &data, const Vector &f) {
  const Vector zero = Vector::Zero(f.size());
  Matrix image = data.involution.conjugate_by(data.rep.annihilator(f, zero));
  InvolutionIdentity out;
  out.right_placed = (image - commutant_generator(data.rep, f, fock::FieldKind::creation,
                                                  ParityPlacement::right))
                         .norm();
  out.left_placed = (image - commutant_generator(data.rep, f, fock::FieldKind::creation,
                                                 ParityPlacement::left))
                        .norm();
  return out;
}

std::size_t commutant_dimension(std::span<const Matrix> generators, std::size_t dim,
                                double rel_tol) {
  const auto d = static_cast<Eigen::Index>(dim);
  if (generators.empty()) return dim * dim;
  const Matrix id = Matrix::Identity(d, d);
  Matrix gram = Matrix::Zero(d * d, d * d);
  for (const Matrix &a : generators) {
    // vec(XA - AX) = (A^T (x) I - I (x) A) vec X
    Matrix k = kron(a.transpose(), id) - kron(id, a);
    gram.noalias() += k.adjoint() * k;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram, Eigen::EigenvaluesOnly);
  const auto &ev = es.eigenvalues();
  const double top = std::max(ev.maxCoeff(), 1.0);
  std::size_t null = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) <= rel_tol * top) ++null;
  }
  return null;
}

std::size_t span_dimension(std::span<const Matrix> family, double rel_tol) {
  if (family.empty()) return 0;
  const Eigen::Index rows = family.front().size();
  Matrix flat(rows, static_cast<Eigen::Index>(family.size()));
  for (std::size_t k = 0; k < family.size(); ++k) {
    flat.col(static_cast<Eigen::Index>(k)) = family[k].reshaped();
  }
  return numerical_rank(flat, rel_tol);
}

std::vector<Matrix> commutant_monomials(const DoubledRepresentation &rep) {
  const std::size_t n = rep.modes();
  const auto d = static_cast<Eigen::Index>(rep.dim());
  std::vector<Matrix> gens(n);
  for (std::size_t i = 0; i < n; ++i) {
    gens[i] = commutant_generator(
        rep, Vector::Unit(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(i)));
  }
  auto product = [&](std::uint32_t subset, bool adjoint) {
    Matrix out = Matrix::Identity(d, d);
    for (std::size_t i = 0; i < n; ++i) {
      if (!(subset & (std::uint32_t{1} << i))) continue;
      out = adjoint ? Matrix(out * gens[i].adjoint()) : Matrix(out * gens[i]);
    }
    return out;
  };
  std::vector<Matrix> out;
  for (std::uint32_t a = 0; a < (std::uint32_t{1} << n); ++a) {
    Matrix create = product(a, true);
    for (std::uint32_t b = 0; b < (std::uint32_t{1} << n); ++b) {
      out.push_back(create * product(b, false));
    }
  }
  return out;
}

CommutantReport commutant_check(const DoubledRepresentation &rep) {
  const std::size_t n = rep.modes();
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix a = rep.annihilator_left(
        Vector::Unit(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(i)));
    gens.push_back(a.adjoint());
    gens.push_back(std::move(a));
  }
  const std::vector<Matrix> generated = commutant_monomials(rep);
  CommutantReport report;
  report.full_dim = rep.dim() * rep.dim();
  report.commutant_dim = commutant_dimension(gens, rep.dim());
  report.generated_dim = span_dimension(generated);
  for (const Matrix &x : generated) {
    const double scale = std::max(1.0, x.norm());
    for (const Matrix &a : gens) {
      report.max_residual = std::max(report.max_residual, (x * a - a * x).norm() / scale);
    }
  }
  return report;
}

double involution_commutant_residual(const ModularData &data) {
  const std::vector<Matrix> target = commutant_monomials(data.rep);
  const Eigen::Index rows = target.front().size();
  Matrix flat(rows, static_cast<Eigen::Index>(target.size()));
  for (std::size_t k = 0; k < target.size(); ++k) {
    flat.col(static_cast<Eigen::Index>(k)) = target[k].reshaped();
  }
  const Matrix q = range_basis(flat);
  double worst = 0.0;
  for (const Matrix &x : quasifree::left_monomials(data.rep)) {
    Vector y = data.involution.conjugate_by(x).reshaped();
    const double norm = y.norm();
    if (norm == 0.0) continue;
    y /= norm;
    worst = std::max(worst, (y - q * (q.adjoint() * y)).norm());
  }
  return worst;
}

double kms_residual(const ModularData &data, const Matrix &x, const Matrix &y) {
  const Vector omega = data.rep.vacuum();
  const Complex lhs = omega.dot(x * (y * omega));
  const Complex rhs = omega.dot(y * (data.modular_operator * (x * omega)));
  return std::abs(lhs - rhs);
}

std::vector<double> modular_spectrum(const ModularData &data) {
  Matrix h = 0.5 * (data.modular_operator + data.modular_operator.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  const auto &ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

}  // namespace qs::modular
