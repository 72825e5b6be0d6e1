/**
 * Copyright quasishift contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef QUASISHIFT_H
#define QUASISHIFT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define QS_API __attribute__((visibility("default")))
#else
#define QS_API
#endif

typedef enum qs_status {
  QS_OK = 0,
  QS_VERDICT_FAILURE = 1, /* ran to completion, some check failed */
  QS_CONFIG_ERROR = 2,
  QS_INVALID_ARGUMENT = 3,
  QS_NUMERICAL_ERROR = 4,
  QS_INTERNAL_ERROR = 5
} qs_status;

/* Message for the last non-OK status on this thread; never NULL. */
QS_API const char *qs_last_error(void);
QS_API const char *qs_version(void);

/* Exponential family: rates lambda_k = re[k] + i im[k] and a radius. */
typedef struct qs_family qs_family;

QS_API qs_status qs_family_create(const double *re, const double *im, size_t count, double radius,
                                  qs_family **out);
/* Sidecar file: "Re Im" per line, '#' comments, optional "radius R". */
QS_API qs_status qs_family_load(const char *path, qs_family **out);
QS_API void qs_family_destroy(qs_family *family);
QS_API size_t qs_family_size(const qs_family *family);
/* 1 when the family is admissible; otherwise 0 and the reason in qs_last_error. */
QS_API qs_status qs_family_admissible(const qs_family *family, int *out);
QS_API qs_status qs_blaschke_eval(const qs_family *family, double re, double im, double *out_re,
                                  double *out_im);
/* HS norm of the approximant minus the shift at time t. */
QS_API qs_status qs_defect_hs_norm(const qs_family *family, double t, double *out);
/* Compression defect over window elements of width delta starting at t. */
QS_API qs_status qs_prop2_defect(const qs_family *family, double t, double delta, int k_max,
                                 double *out);

/* Quasifree state with scalar covariance nu on `modes` modes. */
typedef struct qs_state qs_state;

QS_API qs_status qs_state_scalar(size_t modes, double nu, qs_state **out);
/* Row-major real symmetric covariance of size modes x modes. */
QS_API qs_status qs_state_create(const double *covariance, size_t modes, qs_state **out);
QS_API void qs_state_destroy(qs_state *state);
QS_API size_t qs_state_modes(const qs_state *state);
/* <Omega, a*(f_m)..a*(f_1) a(g_1)..a(g_k) Omega>; vectors are interleaved
 * (re, im) arrays of length 2 * modes, stored back to back. */
QS_API qs_status qs_state_moment(const qs_state *state, const double *fs, size_t m,
                                 const double *gs, size_t k, double *out_re, double *out_im);
/* ||R^{1/2}(1-R)^{1/2}(W - 1)||_2 for W = diag(exp(i angles)). */
QS_API qs_status qs_innerness_norm(const qs_state *state, const double *angles, double *out);

/* Experiment runs. */
typedef struct qs_report qs_report;

/* out_dir may be NULL (config's output setting or its directory); seed may
 * be NULL (config's seed). The report is returned even on verdict failure. */
QS_API qs_status qs_run_config(const char *config_path, const char *out_dir, const uint64_t *seed,
                               qs_report **out);
QS_API void qs_report_destroy(qs_report *report);
QS_API int qs_report_passed(const qs_report *report);
QS_API const char *qs_report_json(const qs_report *report);
QS_API const char *qs_report_csv(const qs_report *report);
/* One line per check. */
QS_API const char *qs_report_summary(const qs_report *report);
QS_API const char *qs_report_csv_path(const qs_report *report);
QS_API const char *qs_report_json_path(const qs_report *report);

/* Kinds and parameter schemas, human-readable. */
QS_API const char *qs_describe_kinds(void);

#ifdef __cplusplus
}
#endif

#endif /* QUASISHIFT_H */
