/**
 * Copyright quasishift contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <exception>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "quasishift/bogoliubov.hpp"
#include "quasishift/experiment.hpp"
#include "quasishift/hardyshift.hpp"
#include "quasishift/quasifree.hpp"
#include "quasishift/quasishift.h"

struct qs_family {
  qs::hardy::ExponentialFamily family;
  // Built on first use.
  std::optional<qs::hardy::ExponentialBasis> basis;
};

struct qs_state {
  qs::quasifree::CovarianceState state;
};

struct qs_report {
  qs::experiment::ExperimentReport report;
  std::string json;
  std::string csv;
  std::string summary;
  std::string csv_path;
  std::string json_path;
};

namespace {

thread_local std::string last_error;

qs_status fail(qs_status s, std::string message) {
  last_error = std::move(message);
  return s;
}

// Runs body, mapping exceptions onto status codes.
template <class F>
qs_status guarded(F body) {
  try {
    body();
    last_error.clear();
    return QS_OK;
  } catch (const qs::experiment::ConfigError &e) {
    return fail(QS_CONFIG_ERROR, e.what());
  } catch (const std::invalid_argument &e) {
    return fail(QS_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error &e) {
    return fail(QS_INVALID_ARGUMENT, e.what());
  } catch (const std::runtime_error &e) {
    return fail(QS_NUMERICAL_ERROR, e.what());
  } catch (const std::exception &e) {
    return fail(QS_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(QS_INTERNAL_ERROR, "unknown exception");
  }
}

qs::Vector unpack(const double *data, std::size_t modes) {
  qs::Vector v(static_cast<Eigen::Index>(modes));
  for (std::size_t i = 0; i < modes; ++i) {
    v(static_cast<Eigen::Index>(i)) = qs::Complex(data[2 * i], data[2 * i + 1]);
  }
  return v;
}

const qs::hardy::ExponentialBasis &basis_of(const qs_family *family) {
  auto *f = const_cast<qs_family *>(family);
  if (!f->basis) f->basis = qs::hardy::orthogonalize(f->family);
  return *f->basis;
}

std::string summarize(const qs::experiment::ExperimentReport &r) {
  std::ostringstream out;
  for (const auto &c : r.checks) {
    out << (c.pass ? "PASS" : "FAIL") << " [" << c.criterion << "] " << c.name << ": value "
        << c.value << ", tolerance " << c.tolerance;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << '\n';
  }
  for (const auto &[key, value] : r.notes) out << key << ": " << value << '\n';
  if (!r.aborted_stage.empty()) out << "aborted at stage " << r.aborted_stage << '\n';
  if (!r.error.empty()) out << "error: " << r.error << '\n';
  out << (r.passed() ? "verdict: pass" : "verdict: fail") << '\n';
  return out.str();
}

}  // namespace

extern "C" {

const char *qs_last_error(void) { return last_error.c_str(); }

const char *qs_version(void) { return "0.1.0"; }

qs_status qs_family_create(const double *re, const double *im, size_t count, double radius,
                           qs_family **out) {
  if (!out || (count > 0 && (!re || !im))) return fail(QS_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto f = std::make_unique<qs_family>();
    for (size_t i = 0; i < count; ++i) f->family.lambdas.emplace_back(re[i], im[i]);
    f->family.radius = radius;
    *out = f.release();
  });
}

qs_status qs_family_load(const char *path, qs_family **out) {
  if (!path || !out) return fail(QS_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto f = std::make_unique<qs_family>();
    f->family = qs::experiment::load_family(path);
    *out = f.release();
  });
}

void qs_family_destroy(qs_family *family) { delete family; }

size_t qs_family_size(const qs_family *family) { return family ? family->family.size() : 0; }

qs_status qs_family_admissible(const qs_family *family, int *out) {
  if (!family || !out) return fail(QS_INVALID_ARGUMENT, "null argument");
  std::string reason;
  const qs_status s = guarded([&] {
    const auto v = qs::hardy::validate_condition1(family->family);
    *out = v.valid ? 1 : 0;
    reason = v.message;
  });
  if (s == QS_OK && *out == 0) last_error = reason;
  return s;
}

qs_status qs_blaschke_eval(const qs_family *family, double re, double im, double *out_re,
                           double *out_im) {
  if (!family || !out_re || !out_im) return fail(QS_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const qs::Complex b = qs::hardy::blaschke_eval(family->family, qs::Complex(re, im));
    *out_re = b.real();
    *out_im = b.imag();
  });
}

qs_status qs_defect_hs_norm(const qs_family *family, double t, double *out) {
  if (!family || !out) return fail(QS_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = qs::hardy::defect_hs_norm(basis_of(family), t); });
}

qs_status qs_prop2_defect(const qs_family *family, double t, double delta, int k_max, double *out) {
  if (!family || !out) return fail(QS_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = qs::hardy::prop2_defect(family->family, t, delta, k_max).value; });
}

qs_status qs_state_scalar(size_t modes, double nu, qs_state **out) {
  if (!out) return fail(QS_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new qs_state{qs::quasifree::CovarianceState::scalar(modes, nu)};
  });
}

qs_status qs_state_create(const double *covariance, size_t modes, qs_state **out) {
  if (!out || !covariance) return fail(QS_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto n = static_cast<Eigen::Index>(modes);
    qs::Matrix r(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) r(i, j) = covariance[i * n + j];
    *out = new qs_state{qs::quasifree::CovarianceState::from_matrix(r)};
  });
}

void qs_state_destroy(qs_state *state) { delete state; }

size_t qs_state_modes(const qs_state *state) { return state ? state->state.modes() : 0; }

qs_status qs_state_moment(const qs_state *state, const double *fs, size_t m, const double *gs,
                          size_t k, double *out_re, double *out_im) {
  if (!state || !out_re || !out_im || (m > 0 && !fs) || (k > 0 && !gs)) {
    return fail(QS_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    const std::size_t n = state->state.modes();
    std::vector<qs::Vector> f, g;
    for (size_t i = 0; i < m; ++i) f.push_back(unpack(fs + 2 * n * i, n));
    for (size_t i = 0; i < k; ++i) g.push_back(unpack(gs + 2 * n * i, n));
    const qs::Complex v = qs::quasifree::quasifree_expectation(state->state, f, g);
    *out_re = v.real();
    *out_im = v.imag();
  });
}

qs_status qs_innerness_norm(const qs_state *state, const double *angles, double *out) {
  if (!state || !angles || !out) return fail(QS_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const std::size_t n = state->state.modes();
    qs::Vector d(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
      d(static_cast<Eigen::Index>(i)) = std::polar(1.0, angles[i]) - 1.0;
    }
    *out = qs::bogoliubov::weighted_hs_norm(state->state.covariance(), qs::Matrix(d.asDiagonal()));
  });
}

qs_status qs_run_config(const char *config_path, const char *out_dir, const uint64_t *seed,
                        qs_report **out) {
  if (!config_path || !out) return fail(QS_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  qs_status status = guarded([&] {
    auto config = qs::experiment::load_config(config_path);
    if (seed) config.seed = *seed;
    if (out_dir) config.output_dir = out_dir;
    auto rep = std::make_unique<qs_report>();
    rep->report = qs::experiment::run(config);
    rep->json = qs::experiment::to_json(rep->report);
    rep->csv = qs::experiment::to_csv(rep->report);
    rep->summary = summarize(rep->report);
    const auto paths = qs::experiment::write_outputs(rep->report, config.output_dir);
    rep->csv_path = paths.csv.string();
    rep->json_path = paths.json.string();
    *out = rep.release();
  });
  if (status != QS_OK) return status;
  if (!(*out)->report.passed()) {
    const auto &r = (*out)->report;
    return fail(QS_VERDICT_FAILURE, r.error.empty() ? "one or more checks failed" : r.error);
  }
  return QS_OK;
}

void qs_report_destroy(qs_report *report) { delete report; }

int qs_report_passed(const qs_report *report) { return report && report->report.passed() ? 1 : 0; }

const char *qs_report_json(const qs_report *report) { return report ? report->json.c_str() : ""; }

const char *qs_report_csv(const qs_report *report) { return report ? report->csv.c_str() : ""; }

const char *qs_report_summary(const qs_report *report) {
  return report ? report->summary.c_str() : "";
}

const char *qs_report_csv_path(const qs_report *report) {
  return report ? report->csv_path.c_str() : "";
}

const char *qs_report_json_path(const qs_report *report) {
  return report ? report->json_path.c_str() : "";
}

const char *qs_describe_kinds(void) {
  static const std::string text = [] {
    try {
      return qs::experiment::describe_kinds();
    } catch (const std::exception &e) {
      return std::string("error: ") + e.what();
    }
  }();
  return text.c_str();
}

}  // extern "C"
