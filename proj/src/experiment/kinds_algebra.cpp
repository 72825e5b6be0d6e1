/**
 * Copyright quasishift contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <algorithm>
#include <cmath>

#include "internal.hpp"
#include "quasishift/fock.hpp"
#include "quasishift/modular.hpp"
#include "quasishift/quasifree.hpp"

namespace qs::experiment::detail {

namespace {

void run_car(const Params &p, Rng &rng, ExperimentReport &r) {
  const auto modes = p.integers("modes", 1, 8);
  const auto trials = p.integer("trials", 1, 100000);
  r.columns = {"modes", "trial", "anticommutator", "car_residual", "norm_residual"};
  double anti_max = 0.0, car_max = 0.0, norm_max = 0.0;
  for (std::int64_t m : modes) {
    const fock::FockSpace space(static_cast<std::size_t>(m));
    const auto d = static_cast<Eigen::Index>(space.dim());
    const Matrix id = Matrix::Identity(d, d);
    for (std::int64_t trial = 0; trial < trials; ++trial) {
      const Vector f = random_vector(m, rng);
      const Vector g = random_vector(m, rng);
      const Matrix af = fock::annihilator(space, f);
      const Matrix ag = fock::annihilator(space, g);
      const Matrix cg = fock::creator(space, g);
      const double anti = (af * ag + ag * af).norm();
      const double car = (af * cg + cg * af - f.dot(g) * id).norm();
      const double nres = std::abs(operator_norm(af) - f.norm());
      anti_max = std::max(anti_max, anti);
      car_max = std::max(car_max, car);
      norm_max = std::max(norm_max, nres);
      r.rows.push_back({m, trial, anti, car, nres});
    }
  }
  add_check(r, "annihilators_anticommute", 1, anti_max, 1e-12, anti_max <= 1e-12,
            "max ||{a(f), a(g)}||_F");
  add_check(r, "canonical_anticommutator", 1, car_max, 1e-12, car_max <= 1e-12,
            "max ||{a(f), a*(g)} - <f,g>||_F");
  add_check(r, "annihilator_norm", 1, norm_max, 1e-10, norm_max <= 1e-10, "max | ||a(f)|| - ||f|| |");
}

// <Omega, a*(f_m)...a*(f_1) a(g_1)...a(g_k) Omega> in the representation.
Complex represented_moment(const quasifree::DoubledRepresentation &rep,
                           const std::vector<Vector> &fs, const std::vector<Vector> &gs) {
  const Vector zero = Vector::Zero(static_cast<Eigen::Index>(rep.modes()));
  Vector psi = rep.vacuum();
  for (auto it = gs.rbegin(); it != gs.rend(); ++it) psi = rep.annihilator(*it, zero) * psi;
  for (const auto &f : fs) psi = rep.creator(f, zero) * psi;
  return rep.vacuum().dot(psi);
}

void run_quasifree(const Params &p, Rng &rng, ExperimentReport &r) {
  const auto modes = p.integers("modes", 1, 6);
  const auto trials = p.integer("trials", 1, 100000);
  const auto max_degree = p.integer("max_degree", 0, 3);
  const auto pmodes = p.integer("purification_modes", 1, 6);
  const auto ptrials = p.integer("purification_trials", 1, 100000);
  r.columns = {"check",    "modes",    "trial",       "creators",    "annihilators",
               "value_re", "value_im", "expected_re", "expected_im", "residual"};
  std::uniform_int_distribution<std::int64_t> degree(0, max_degree);
  const std::int64_t per_mode = (trials + static_cast<std::int64_t>(modes.size()) - 1) /
                                static_cast<std::int64_t>(modes.size());
  double moment_max = 0.0;
  std::int64_t done = 0;
  for (std::int64_t m : modes) {
    for (std::int64_t trial = 0; trial < per_mode && done < trials; ++trial, ++done) {
      auto state = quasifree::CovarianceState::from_matrix(random_covariance(m, rng));
      auto rep = quasifree::gns_representation(state);
      const std::int64_t c = degree(rng);
      // Every fourth trial lets the degrees differ; those moments vanish.
      const std::int64_t k = trial % 4 == 0 ? degree(rng) : c;
      std::vector<Vector> fs, gs;
      for (std::int64_t i = 0; i < c; ++i) fs.push_back(random_vector(m, rng));
      for (std::int64_t i = 0; i < k; ++i) gs.push_back(random_vector(m, rng));
      const Complex expected = quasifree::quasifree_expectation(state, fs, gs);
      const Complex value = represented_moment(rep, fs, gs);
      const double res = std::abs(value - expected);
      moment_max = std::max(moment_max, res);
      r.rows.push_back({std::string("moment"), m, trial, c, k, value.real(), value.imag(),
                        expected.real(), expected.imag(), res});
    }
  }
  add_check(r, "determinant_vs_representation", 2, moment_max, 1e-9, moment_max <= 1e-9,
            std::to_string(done) + " monomials");

  const auto state = quasifree::CovarianceState::from_matrix(random_covariance(pmodes, rng));
  const Matrix proj = quasifree::purification_projection(state);
  const double idem = (proj * proj - proj).norm();
  const double herm = (proj - proj.adjoint()).norm();
  r.rows.push_back({std::string("projection_idempotent"), pmodes, std::int64_t{0}, std::int64_t{0},
                    std::int64_t{0}, idem, 0.0, 0.0, 0.0, idem});
  r.rows.push_back({std::string("projection_selfadjoint"), pmodes, std::int64_t{0},
                    std::int64_t{0}, std::int64_t{0}, herm, 0.0, 0.0, 0.0, herm});
  add_check(r, "projection_idempotent", 3, idem, 1e-12, idem <= 1e-12, "||P^2 - P||_F");
  add_check(r, "projection_selfadjoint", 3, herm, 1e-12, herm <= 1e-12, "||P - P*||_F");

  const auto rep = quasifree::doubled_representation(state);
  double two_point_max = 0.0;
  for (std::int64_t trial = 0; trial < ptrials; ++trial) {
    const Vector f = random_vector(2 * pmodes, rng);
    const Vector g = random_vector(2 * pmodes, rng);
    const Complex value = rep.vacuum_expectation(rep.creator(f.head(pmodes), f.tail(pmodes)) *
                                                 rep.annihilator(g.head(pmodes), g.tail(pmodes)));
    const Complex expected = g.dot(proj * f);
    const double res = std::abs(value - expected);
    two_point_max = std::max(two_point_max, res);
    r.rows.push_back({std::string("pure_two_point"), pmodes, trial, std::int64_t{1},
                      std::int64_t{1}, value.real(), value.imag(), expected.real(),
                      expected.imag(), res});
  }
  add_check(r, "pure_two_point", 3, two_point_max, 1e-10, two_point_max <= 1e-10,
            "omega_P(a*(F) a(G)) against <G, P F>, antilinear in the first slot");
}

struct Candidate {
  std::string label;
  fock::FieldKind kind;
  modular::ParityPlacement placement;
  double worst = 0.0;
};

void run_modular(const Params &p, Rng &rng, ExperimentReport &r) {
  const auto modes = p.integers("modes", 1, 3);
  const double nu = p.real("nu", 0.0, 1.0, true, true);
  const auto trials = p.integer("identity_trials", 1, 1000);
  r.columns = {"check", "modes", "trial", "value"};

  double wedge_max = 0.0;
  std::vector<Candidate> candidates{
      {"b*(f), parity left", fock::FieldKind::creation, modular::ParityPlacement::left},
      {"b*(f), parity right", fock::FieldKind::creation, modular::ParityPlacement::right},
      {"b(f), parity left", fock::FieldKind::annihilation, modular::ParityPlacement::left},
      {"b(f), parity right", fock::FieldKind::annihilation, modular::ParityPlacement::right},
  };
  for (std::int64_t m : modes) {
    auto rep = quasifree::doubled_representation(
        quasifree::CovarianceState::from_matrix(random_covariance(m, rng)));
    const modular::ModularData data = modular::tomita_operator(rep);
    const double wedge =
        (data.involution.matrix() - modular::modular_involution_formula(rep.factor()).matrix())
            .norm();
    wedge_max = std::max(wedge_max, wedge);
    r.rows.push_back({std::string("wedge_vs_polar"), m, std::int64_t{0}, wedge});
    const Vector zero = Vector::Zero(m);
    for (std::int64_t trial = 0; trial < trials; ++trial) {
      const Vector f = random_vector(m, rng);
      const Matrix image = data.involution.conjugate_by(rep.annihilator(f, zero));
      for (auto &c : candidates) {
        const double res = (image - modular::commutant_generator(rep, f, c.kind, c.placement)).norm();
        c.worst = std::max(c.worst, res);
        r.rows.push_back({"identity: " + c.label, m, trial, res});
      }
    }
  }
  add_check(r, "involution_wedge_vs_polar", 4, wedge_max, 1e-9, wedge_max <= 1e-9,
            "||J_formula - J_polar||_F");

  int passing = 0;
  const Candidate *best = &candidates.front();
  std::string others;
  for (const auto &c : candidates) {
    if (c.worst <= 1e-10) ++passing;
    if (c.worst < best->worst) best = &c;
  }
  for (const auto &c : candidates) {
    if (&c != best) others += (others.empty() ? "" : "; ") + c.label + " " + format_number(c.worst);
  }
  r.notes.emplace_back("involution_identity", passing == 1 ? best->label : "none unique");
  add_check(r, "involution_maps_left_field", 4, best->worst, 1e-10, passing == 1,
            "J pi(a(f+0)) J = " + best->label + "; others: " + others);

  const double lambda = nu / (1.0 - nu);
  double spectrum_max = 0.0;
  for (std::int64_t m : modes) {
    auto rep = quasifree::doubled_representation(
        quasifree::CovarianceState::scalar(static_cast<std::size_t>(m), nu));
    const auto spectrum = modular::modular_spectrum(modular::tomita_operator(rep));
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
      const double ev = spectrum[i];
      if (ev <= 1e-12) continue;
      const double k = std::round(std::log(ev) / std::log(lambda));
      const double res = std::abs(ev - std::pow(lambda, k));
      spectrum_max = std::max(spectrum_max, res);
      r.rows.push_back({std::string("spectrum"), m, static_cast<std::int64_t>(i), ev});
    }
  }
  add_check(r, "modular_spectrum_powers", 4, spectrum_max, 1e-8, spectrum_max <= 1e-8,
            "eigenvalues of Delta against integer powers of " + format_number(lambda));
}

}  // namespace

std::vector<Kind> algebra_kinds() {
  return {
      {"car-check",
       "anticommutation relations and annihilator norms on Fock space",
       {{"modes", "integer list", "1..5", "mode counts"},
        {"trials", "integer", "100", "random (f, g) pairs per mode count"}},
       true,
       run_car},
      {"quasifree-verify",
       "determinant formula against the doubled representation; purification",
       {{"modes", "integer list", "1..4", "mode counts for moments"},
        {"trials", "integer", "100", "total moment trials"},
        {"max_degree", "integer", "3", "creators and annihilators per side, at most 3"},
        {"purification_modes", "integer", "3", "modes for the pure extension"},
        {"purification_trials", "integer", "20", "random (F, G) pairs"}},
       true,
       run_quasifree},
      {"modular-verify",
       "modular involution, its action on fields, modular spectrum",
       {{"modes", "integer list", "1..3", "mode counts"},
        {"nu", "real in (0,1)", "0.25", "scalar covariance for the spectrum"},
        {"identity_trials", "integer", "3", "random f per mode count"}},
       true,
       run_modular},
  };
}

}  // namespace qs::experiment::detail
