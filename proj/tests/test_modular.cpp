/**
 * Copyright quasishift contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <doctest.h>

#include <cmath>
#include <vector>

#include "quasishift/modular.hpp"
#include "support.hpp"

using namespace qs;
using namespace qs::modular;
using qs::quasifree::CovarianceState;
using qs::quasifree::doubled_representation;
using qs::testing::Rng;

TEST_CASE("commutant generators commute with the left algebra") {
  Rng rng(1);
  auto rep = doubled_representation(
      CovarianceState::from_matrix(qs::testing::random_covariance(3, rng)));
  const Vector zero = Vector::Zero(3);
  for (int trial = 0; trial < 4; ++trial) {
    Vector f = qs::testing::random_vector(3, rng);
    Vector g = qs::testing::random_vector(3, rng);
    Matrix b = commutant_generator(rep, f);
    Matrix a = rep.annihilator(g, zero);
    CHECK((b * a - a * b).norm() <= 1e-12);
    CHECK((b * a.adjoint() - a.adjoint() * b).norm() <= 1e-12);
    Matrix bg = commutant_generator(rep, g);
    CHECK((b * bg + bg * b).norm() <= 1e-12);
  }
  CHECK_THROWS_AS(commutant_generator(rep, Vector::Zero(2)), std::invalid_argument);
}

TEST_CASE("parity placement flips the sign of the commutant generator") {
  Rng rng(2);
  auto rep = doubled_representation(CovarianceState::scalar(2, 0.3));
  Vector f = qs::testing::random_vector(2, rng);
  Matrix left = commutant_generator(rep, f, fock::FieldKind::annihilation, ParityPlacement::left);
  Matrix right = commutant_generator(rep, f, fock::FieldKind::annihilation, ParityPlacement::right);
  CHECK((left + right).norm() <= 1e-13);
  CHECK(left.norm() > 0.1);
}

TEST_CASE("tomita operator defining relations") {
  Rng rng(3);
  auto rep = doubled_representation(
      CovarianceState::from_matrix(qs::testing::random_covariance(2, rng)));
  ModularData data = tomita_operator(rep);
  const Vector omega = rep.vacuum();
  CHECK(data.cyclic_rank == rep.dim());
  CHECK((data.tomita.apply(omega) - omega).norm() <= 1e-10);
  Vector f = qs::testing::random_vector(2, rng);
  const Vector zero = Vector::Zero(2);
  Matrix a = rep.annihilator(f, zero);
  CHECK((data.tomita.apply(a.adjoint() * omega) - a * omega).norm() <= 1e-10);

  // S = J Delta^{1/2}, J an involution fixing the vacuum.
  CHECK((data.involution.after(data.modular_operator_sqrt).matrix() - data.tomita.matrix()).norm() <=
        1e-9);
  const auto d = static_cast<Eigen::Index>(rep.dim());
  CHECK((compose(data.involution, data.involution) - Matrix::Identity(d, d)).norm() <= 1e-9);
  CHECK(is_unitary(data.involution.matrix(), 1e-9));
  CHECK((data.involution.apply(omega) - omega).norm() <= 1e-9);
  CHECK((data.modular_operator * omega - omega).norm() <= 1e-9);
}

TEST_CASE("involution agrees with the wedge formula") {
  Rng rng(4);
  for (std::size_t modes = 1; modes <= 3; ++modes) {
    const auto n = static_cast<Eigen::Index>(modes);
    auto rep = doubled_representation(
        CovarianceState::from_matrix(qs::testing::random_covariance(n, rng)));
    ModularData data = tomita_operator(rep);
    AntilinearOperator formula = modular_involution_formula(rep.factor());
    CHECK((data.involution.matrix() - formula.matrix()).norm() <= 1e-9);
  }
}

TEST_CASE("wedge formula on simple vectors") {
  fock::FockSpace factor(2);
  AntilinearOperator j = modular_involution_formula(factor);
  Vector vac = Vector::Unit(16, 0);
  CHECK(j.apply(vac) == vac);

  // f1 ^ f2 (x) g1 -> J g1 (x) J f2 ^ J f1
  Rng rng(5);
  Vector f1 = qs::testing::random_vector(2, rng);
  Vector f2 = qs::testing::random_vector(2, rng);
  Vector g1 = qs::testing::random_vector(2, rng);
  std::vector<Vector> left{f1, f2}, right{g1};
  std::vector<Vector> image_left{g1.conjugate()}, image_right{f2.conjugate(), f1.conjugate()};
  Vector input = kron(fock::wedge_vector(factor, left), fock::wedge_vector(factor, right));
  Vector expected =
      kron(fock::wedge_vector(factor, image_left), fock::wedge_vector(factor, image_right));
  CHECK((j.apply(input) - expected).norm() <= 1e-12);
}

TEST_CASE("involution maps left fields to the left-placed adjoint generator") {
  Rng rng(6);
  auto rep = doubled_representation(
      CovarianceState::from_matrix(qs::testing::random_covariance(2, rng)));
  ModularData data = tomita_operator(rep);
  for (int trial = 0; trial < 3; ++trial) {
    InvolutionIdentity id = involution_identity(data, qs::testing::random_vector(2, rng));
    CHECK(id.left_placed <= 1e-10);
    CHECK(id.right_placed > 1e-3);
  }
}

TEST_CASE("modular spectrum is a power of the type parameter") {
  for (std::size_t modes = 1; modes <= 2; ++modes) {
    auto rep = doubled_representation(CovarianceState::scalar(modes, 0.25));
    ModularData data = tomita_operator(rep);
    for (double ev : modular_spectrum(data)) {
      REQUIRE(ev > 0.0);
      const double k = std::log(ev) / std::log(1.0 / 3.0);
      CHECK(std::abs(ev - std::pow(1.0 / 3.0, std::round(k))) <= 1e-8);
    }
  }
}

TEST_CASE("modular operator commutes with number operators for scalar covariance") {
  Rng rng(7);
  auto rep = doubled_representation(CovarianceState::scalar(2, 0.3));
  ModularData data = tomita_operator(rep);
  const Vector zero = Vector::Zero(2);
  Vector f = qs::testing::random_vector(2, rng);
  Matrix a = rep.annihilator(f, zero);
  Matrix number = a.adjoint() * a;
  CHECK((data.modular_operator * number - number * data.modular_operator).norm() <= 1e-9);
}

TEST_CASE("KMS symmetry of the vacuum state") {
  Rng rng(8);
  auto rep = doubled_representation(
      CovarianceState::from_matrix(qs::testing::random_covariance(2, rng)));
  ModularData data = tomita_operator(rep);
  auto monomials = quasifree::left_monomials(rep);
  std::uniform_int_distribution<std::size_t> pick(0, monomials.size() - 1);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix x = monomials[pick(rng)] + Complex(0.5, 0.2) * monomials[pick(rng)];
    Matrix y = monomials[pick(rng)] - Complex(0.1, 0.7) * monomials[pick(rng)];
    CHECK(kms_residual(data, x, y) <= 1e-8);
  }
}

TEST_CASE("commutant check") {
  SUBCASE("no generators") {
    CHECK(commutant_dimension({}, 4) == 16);
  }
  for (std::size_t modes = 1; modes <= 2; ++modes) {
    auto rep = doubled_representation(CovarianceState::scalar(modes, 0.3));
    CommutantReport report = commutant_check(rep);
    CHECK(report.commutant_dim == std::size_t{1} << (2 * modes));
    CHECK(report.generated_dim == report.commutant_dim);
    CHECK(report.max_residual <= 1e-10);
    CHECK(report.equal());
  }
}

TEST_CASE("involution maps the algebra onto its commutant") {
  Rng rng(9);
  auto rep = doubled_representation(
      CovarianceState::from_matrix(qs::testing::random_covariance(2, rng)));
  CHECK(involution_commutant_residual(tomita_operator(rep)) <= 1e-9);
}
