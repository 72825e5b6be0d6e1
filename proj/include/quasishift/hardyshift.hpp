/**
 * Copyright quasishift contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef QUASISHIFT_HARDYSHIFT_HPP
#define QUASISHIFT_HARDYSHIFT_HPP

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quasishift/bogoliubov.hpp"
#include "quasishift/opalg.hpp"

namespace qs::hardy {

struct ExponentialFamily {
  std::vector<Complex> lambdas;
  double radius = 1.0;

  std::size_t size() const { return lambdas.size(); }
  double decay_sum() const;  // s = -sum Re lambda_k
};

enum class Condition1Clause {
  none = 0,
  negative_real_part = 1,
  imaginary_part_below_radius = 2,
  summable_real_parts = 3,
};

struct Condition1Verdict {
  bool valid = true;
  Condition1Clause clause = Condition1Clause::none;
  std::size_t index = 0;
  std::string message;
};

Condition1Verdict validate_condition1(const ExponentialFamily &family);

// prod (z + conj(l_k)) / (z - l_k).  Throws std::domain_error at a pole.
Complex blaschke_eval(const ExponentialFamily &family, Complex z);

// B(z) = 1 + sum_k residue_k / (z - l_k) for distinct l_k.
std::vector<Complex> blaschke_residues(const ExponentialFamily &family);

struct BlaschkeAsymptotics {
  Complex c3;                 // fitted limit of z (1 - B(z)), z -> +inf
  double c3_expected = 0.0;   // 2s
  double c1 = 1.0;            // |B| < c1 for |z| > c2
  double c2 = 0.0;
  double max_modulus = 0.0;   // largest |B| sampled outside c2
  std::vector<double> radii;
};

BlaschkeAsymptotics blaschke_asymptotics(const ExponentialFamily &family,
                                         std::span<const double> radii);

// (f_m, f_n) for f_n = sqrt(-2 Re l_n) e^{l_n x} on (0, inf).
Matrix gram_exponentials(const ExponentialFamily &family);

class ExponentialBasis {
 public:
  static constexpr double kMaxCondition = 1e12;

  const ExponentialFamily &family() const { return family_; }
  const Matrix &gram() const { return gram_; }
  // g_n = sum_m coefficients(m, n) f_m, upper triangular.
  const Matrix &coefficients() const { return coeffs_; }
  double condition_number() const { return condition_; }
  std::size_t size() const { return family_.size(); }

 private:
  friend ExponentialBasis orthogonalize(const ExponentialFamily &family);
  ExponentialFamily family_;
  Matrix gram_;
  Matrix coeffs_;
  double condition_ = 1.0;
};

ExponentialBasis orthogonalize(const ExponentialFamily &family);

// Matrix of S_t* on span{g_n} in the g basis.
Matrix backward_shift_matrix(const ExponentialBasis &basis, double t);

// Finite sums of coef * e^{rate (x - delay)} 1_{x > delay} on (0, inf).
struct DelayedExponential {
  Complex coef;
  Complex rate;
  double delay = 0.0;
};

class ExpCombination {
 public:
  ExpCombination() = default;
  explicit ExpCombination(std::vector<DelayedExponential> terms) : terms_(std::move(terms)) {}

  static ExpCombination exponential(Complex rate, Complex coef = 1.0, double delay = 0.0);
  // Indicator of [a, b).
  static ExpCombination indicator(double a, double b);

  const std::vector<DelayedExponential> &terms() const { return terms_; }
  Complex operator()(double x) const;

  ExpCombination shifted(double t) const;  // (S_t u)(x) = u(x - t)
  // Merge terms sharing rate and delay; drop zero coefficients.
  ExpCombination simplified() const;

  ExpCombination &operator+=(const ExpCombination &other);
  ExpCombination &operator-=(const ExpCombination &other);
  ExpCombination &operator*=(Complex s);

 private:
  std::vector<DelayedExponential> terms_;
};

ExpCombination operator+(ExpCombination a, const ExpCombination &b);
ExpCombination operator-(ExpCombination a, const ExpCombination &b);
ExpCombination operator*(Complex s, ExpCombination a);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Integral of conj(u) v over [a, b), antilinear in u.
Complex inner_product(const ExpCombination &u, const ExpCombination &v, double a = 0.0,
                      double b = kInfinity);
double norm(const ExpCombination &u, double a = 0.0, double b = kInfinity);
Complex integral(const ExpCombination &u, double a, double b);

ExpCombination family_function(const ExponentialFamily &family, std::size_t n);  // f_n
ExpCombination basis_function(const ExponentialBasis &basis, std::size_t n);     // g_n

// Theta = inverse Laplace of multiplication by B.  Zero-rate terms are
// accepted as long as they cancel at infinity.
ExpCombination theta_apply(const ExponentialFamily &family, const ExpCombination &u);

// V_t: phases e^{i Im l_n t} on span{g_n}, S_t on its complement.
struct ApproximantData {
  double t = 0.0;
  Vector phases;
  Vector diagonal_overlap;  // <g_n, S_t g_n>
};

ApproximantData build_Vt(const ExponentialBasis &basis, double t);
ExpCombination vt_apply(const ExponentialBasis &basis, double t, const ExpCombination &u);

double defect_hs_norm(const ExponentialBasis &basis, double t);
// ||(V_{t+d} - S_{t+d}) - (V_t - S_t)||_2.
double defect_increment_hs_norm(const ExponentialBasis &basis, double t, double delta);

struct EstimateTerm {
  double tail_defect = 0.0;  // ||P_[t,inf) (V_t - S_t) g_n||^2
  double head_mass = 0.0;    // ||P_[0,t] V_t g_n||^2
  double tail_envelope = 0.0;
  double head_envelope = 0.0;
};

struct EstimateReport {
  double t = 0.0;
  std::vector<EstimateTerm> terms;
  double sum = 0.0;
};

EstimateReport estimate_inequalities(const ExponentialBasis &basis, double t);

struct Prop2Term {
  int k = 0;
  double first = 0.0;   // ||(Theta - 1) f1_k||^2
  double second = 0.0;  // ||(Theta - 1) f2_k||^2
  double window = 0.0;  // ||P (Theta - 1) P f_k||^2
};

struct Prop2Result {
  double value = 0.0;  // sqrt(2 sum_k (first + second))
  double window_value = 0.0;
  double next_octave = 0.0;  // same bound over k_max < |k| <= 2 k_max
  std::vector<Prop2Term> terms;
};

Complex prop2_rate(int k, double delta);
// Window element on (t, t + delta) and its two pieces.
ExpCombination prop2_first(int k, double t, double delta);
ExpCombination prop2_second(int k, double t, double delta);
Prop2Result prop2_defect(const ExponentialFamily &family, double t, double delta, int k_max);

struct WoldDecomposition {
  Matrix unitary_projector;
  Matrix shift_projector;
  std::size_t deficiency = 0;
  std::size_t iterations = 0;
  double unitary_residual = 0.0;
};

// Accepts any partial isometry.
WoldDecomposition wold_decompose(const Matrix &v, std::size_t max_iter);

struct ContinuityPoint {
  std::size_t size = 0;
  double modulus = 0.0;    // max ||U_t - U_s|| over adjacent grid points
  double lipschitz = 0.0;  // modulus / smallest step
};

struct ConditionNReport {
  std::vector<ContinuityPoint> points;
  bogoliubov::CriterionReport trend;
  std::optional<double> bound;
  bool passes = false;
};

ConditionNReport condition_N_check(const bogoliubov::MatrixPath &path,
                                   std::span<const double> t_grid,
                                   std::span<const std::size_t> sizes,
                                   std::optional<double> lipschitz_bound = std::nullopt);

// ||A_n|| over truncations; bounded generators give uniform continuity.
ConditionNReport condition_N_generator_check(const bogoliubov::MatrixFamily &generator,
                                             std::span<const std::size_t> sizes,
                                             std::optional<double> bound = std::nullopt);

struct ShiftGrid {
  double step = 1.0 / 256;
  std::size_t cells = 1024;

  double horizon() const { return step * static_cast<double>(cells); }
  std::size_t steps(double t) const;  // throws off-grid
};

struct ShiftModel {
  ShiftGrid grid;
  ExponentialBasis basis;
};

// Orthonormal cell functions e_j = 1_{[jh,(j+1)h)} / sqrt(h).
Vector grid_project(const ShiftGrid &grid, const ExpCombination &u);
Matrix grid_shift(const ShiftGrid &grid, double t);

struct GridApproximant {
  Matrix operator_on_grid;    // V_t on the grid
  Matrix correction;          // X with V_t = X S_t
  Matrix subspace;            // orthonormal basis of the moved subspace
  Matrix subspace_unitary;    // X restricted to it
  double discretization_defect = 0.0;
  double image_residual = 0.0;
};

GridApproximant grid_approximant(const ShiftModel &model, double t);

enum class DilationKind { shift, approximant };

// Unitary on the doubled grid space; first summand first.
Matrix unitary_dilation(const ShiftModel &model, DilationKind which, double t);

}  // namespace qs::hardy

#endif  // QUASISHIFT_HARDYSHIFT_HPP
