/**
 * Copyright quasishift contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <math.h>
#include <stdio.h>
#include <string.h>

#include "quasishift/quasishift.h"

#ifndef M_PI
#define M_PI 3.14159265358979323846
#endif

static int failures = 0;

#define EXPECT(cond)                                                       \
  do {                                                                     \
    if (!(cond)) {                                                         \
      fprintf(stderr, "%s:%d: expectation failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                          \
    }                                                                      \
  } while (0)

static void families(void) {
  const double re[] = {-1.0, -2.0};
  const double im[] = {0.0, 0.5};
  qs_family *f = NULL;
  EXPECT(qs_family_create(re, im, 2, 1.0, &f) == QS_OK);
  EXPECT(qs_family_size(f) == 2);
  int ok = 0;
  EXPECT(qs_family_admissible(f, &ok) == QS_OK && ok == 1);

  double br = 0.0, bi = 0.0;
  for (int i = -20; i <= 20; ++i) {
    EXPECT(qs_blaschke_eval(f, 0.0, 0.37 * i, &br, &bi) == QS_OK);
    EXPECT(fabs(hypot(br, bi) - 1.0) <= 1e-12);
  }
  EXPECT(qs_blaschke_eval(f, -1.0, 0.0, &br, &bi) == QS_INVALID_ARGUMENT);
  EXPECT(strlen(qs_last_error()) > 0);

  double d = -1.0;
  EXPECT(qs_defect_hs_norm(f, 0.0, &d) == QS_OK && d == 0.0);
  EXPECT(qs_defect_hs_norm(f, 0.01, &d) == QS_OK && d > 0.0);
  EXPECT(qs_prop2_defect(f, 1.0, 0.0, 16, &d) == QS_INVALID_ARGUMENT);
  qs_family_destroy(f);

  const double bad_im[] = {0.0, 1.5};
  EXPECT(qs_family_create(re, bad_im, 2, 1.0, &f) == QS_OK);
  EXPECT(qs_family_admissible(f, &ok) == QS_OK && ok == 0);
  EXPECT(strstr(qs_last_error(), "radius") != NULL);
  qs_family_destroy(f);

  EXPECT(qs_family_load("/nonexistent/family.txt", &f) == QS_CONFIG_ERROR);
}

static void states(void) {
  qs_state *s = NULL;
  EXPECT(qs_state_scalar(2, 1.5, &s) == QS_INVALID_ARGUMENT);
  EXPECT(qs_state_scalar(16, 0.3, &s) == QS_OK);
  EXPECT(qs_state_modes(s) == 16);
  double angles[16];
  for (int i = 0; i < 16; ++i) angles[i] = M_PI;
  double v = 0.0;
  EXPECT(qs_innerness_norm(s, angles, &v) == QS_OK);
  EXPECT(fabs(v - 2.0 * sqrt(0.21 * 16)) <= 1e-13);
  qs_state_destroy(s);

  const double r[] = {0.4, 0.1, 0.1, 0.3};
  EXPECT(qs_state_create(r, 2, &s) == QS_OK);
  /* two-point function <g, R f> */
  const double f[] = {1.0, 0.0, 0.0, 1.0};
  const double g[] = {0.5, 0.0, 2.0, 0.0};
  double re = 0.0, im = 0.0;
  EXPECT(qs_state_moment(s, f, 1, g, 1, &re, &im) == QS_OK);
  /* R f = (0.4 + 0.1i, 0.1 + 0.3i); <g, R f> = 0.5 (0.4 + 0.1i) + 2 (0.1 + 0.3i) */
  EXPECT(fabs(re - 0.4) <= 1e-14 && fabs(im - 0.65) <= 1e-14);
  EXPECT(qs_state_moment(s, f, 1, NULL, 0, &re, &im) == QS_OK && re == 0.0 && im == 0.0);
  qs_state_destroy(s);
}

static void runs(const char *configs, const char *tests, const char *out) {
  char path[4096];
  qs_report *rep = NULL;
  snprintf(path, sizeof path, "%s/innerness.ini", configs);
  EXPECT(qs_run_config(path, out, NULL, &rep) == QS_OK);
  EXPECT(rep != NULL && qs_report_passed(rep) == 1);
  if (rep) {
    EXPECT(strstr(qs_report_json(rep), "\"verdict\": \"pass\"") != NULL);
    EXPECT(strncmp(qs_report_csv(rep), "n,hs_value,", 11) == 0);
    EXPECT(strstr(qs_report_summary(rep), "PASS [5] closed_form") != NULL);
    FILE *csv = fopen(qs_report_csv_path(rep), "r");
    EXPECT(csv != NULL);
    if (csv) fclose(csv);
    qs_report_destroy(rep);
  }

  uint64_t seed = 99;
  snprintf(path, sizeof path, "%s/missing-seed.ini", tests);
  EXPECT(qs_run_config(path, out, NULL, &rep) == QS_CONFIG_ERROR);
  EXPECT(rep == NULL);
  EXPECT(strstr(qs_last_error(), "seed") != NULL);
  EXPECT(qs_run_config(path, out, &seed, &rep) == QS_OK);
  qs_report_destroy(rep);

  snprintf(path, sizeof path, "%s/wrong-expectation.ini", tests);
  EXPECT(qs_run_config(path, out, NULL, &rep) == QS_VERDICT_FAILURE);
  EXPECT(rep != NULL && qs_report_passed(rep) == 0);
  qs_report_destroy(rep);

  snprintf(path, sizeof path, "%s/unknown-parameter.ini", tests);
  EXPECT(qs_run_config(path, out, NULL, &rep) == QS_CONFIG_ERROR);
  EXPECT(strstr(qs_last_error(), "mystery") != NULL);
  EXPECT(qs_run_config(NULL, out, NULL, &rep) == QS_INVALID_ARGUMENT);

  EXPECT(strstr(qs_describe_kinds(), "pipeline") != NULL);
  EXPECT(strcmp(qs_version(), "0.1.0") == 0);
}

int main(int argc, char **argv) {
  if (argc != 4) {
    fprintf(stderr, "usage: %s <configs dir> <test configs dir> <output dir>\n", argv[0]);
    return 2;
  }
  families();
  states();
  runs(argv[1], argv[2], argv[3]);
  if (failures) fprintf(stderr, "%d expectation(s) failed\n", failures);
  return failures ? 1 : 0;
}
