/* include/jacscat.h */

/* Copyright 2026  The jacscat authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *  http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the jacscat shared library.
 *
 * All objects are opaque handles created by the library and released with
 * the matching *_free function.  Every fallible call returns a
 * jacscat_status; on failure jacscat_last_error() describes the problem for
 * the calling thread.  Strings returned through char** are heap-allocated
 * and must be released with jacscat_string_free().
 *
 * Serialized formats (JSON):
 *   spectral measure  {"gamma1","gamma2","log_rho0":{"grid_log2","samples":
 *                      [[re,im],...]},"masses":[{"z","sigma"},...],
 *                      "normalized"}
 *   scattering data   {"gamma1","gamma2","zeros":[...],"mus":[...],
 *                      "s":{"grid_log2","samples":[[re,im],...]}}
 *   jacobi params     {"a":[...],"b":[...],"tail":"free"}
 */

#ifndef JACSCAT_H
#define JACSCAT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  JACSCAT_OK = 0,
  JACSCAT_ERR_INVALID_ARGUMENT = 1, /* null handle / bad buffer */
  JACSCAT_ERR_PARSE = 2,            /* malformed serialized input */
  JACSCAT_ERR_DOMAIN = 3,           /* argument outside documented domain */
  JACSCAT_ERR_INADMISSIBLE = 4,     /* scattering data fails admissibility */
  JACSCAT_ERR_NUMERIC = 5,          /* degenerate / unresolved numerics */
  JACSCAT_ERR_UNSUPPORTED = 6,      /* valid input outside the feature set */
  JACSCAT_ERR_INTERNAL = 7
} jacscat_status;

typedef struct jacscat_measure jacscat_measure;       /* spectral measure */
typedef struct jacscat_scattering jacscat_scattering; /* scattering data */
typedef struct jacscat_jacobi jacscat_jacobi;         /* jacobi parameters */

/* Resolution knobs shared by the pipeline entry points. */
typedef struct {
  int grid_log2; /* circle grid has 2^grid_log2 nodes (default 12) */
  int n_max;     /* recurrence truncation length (default 256) */
  double tol;    /* verification tolerance (default 1e-8) */
} jacscat_options;

jacscat_options jacscat_options_default(void);

/* Thread-local message for the most recent failure in this thread. */
const char* jacscat_last_error(void);
const char* jacscat_version(void);
void jacscat_string_free(char* s);

/* ---- scattering data ---------------------------------------------------- */

jacscat_status jacscat_scattering_from_json(const char* text,
                                            jacscat_scattering** out);
jacscat_status jacscat_scattering_to_json(const jacscat_scattering* data,
                                          char** out);
/* s_samples holds 2^grid_log2 interleaved (re, im) pairs on the nodes
 * t_j = exp(2*pi*i*j/2^grid_log2). */
jacscat_status jacscat_scattering_create(int gamma1, int gamma2,
                                         const double* zeros,
                                         const double* mus, int n_masses,
                                         const double* s_samples,
                                         int grid_log2,
                                         jacscat_scattering** out);
void jacscat_scattering_free(jacscat_scattering* data);

jacscat_status jacscat_scattering_size(const jacscat_scattering* data,
                                       int* n_masses, int* grid_log2);
jacscat_status jacscat_scattering_get(const jacscat_scattering* data,
                                      int* gamma1, int* gamma2, double* zeros,
                                      double* mus, double* s_samples);

/* ---- spectral measure --------------------------------------------------- */

jacscat_status jacscat_measure_from_json(const char* text,
                                         jacscat_measure** out);
jacscat_status jacscat_measure_to_json(const jacscat_measure* m, char** out);
void jacscat_measure_free(jacscat_measure* m);

jacscat_status jacscat_measure_size(const jacscat_measure* m, int* n_masses,
                                    int* grid_log2);
jacscat_status jacscat_measure_get_masses(const jacscat_measure* m, double* z,
                                          double* sigma);
jacscat_status jacscat_measure_gammas(const jacscat_measure* m, int* gamma1,
                                      int* gamma2);
jacscat_status jacscat_measure_total_mass(const jacscat_measure* m,
                                          double* out);
/* a.c. density f(x) at x in (-2,2) */
jacscat_status jacscat_measure_density(const jacscat_measure* m, double x,
                                       double* out);

/* ---- jacobi parameters -------------------------------------------------- */

jacscat_status jacscat_jacobi_to_json(const jacscat_jacobi* p, int n_rows,
                                      char** out);
jacscat_status jacscat_jacobi_to_csv(const jacscat_jacobi* p, int n_rows,
                                     char** out);
void jacscat_jacobi_free(jacscat_jacobi* p);
/* entries a_n, b_n for n = 1..n_rows (free-tail values past the head) */
jacscat_status jacscat_jacobi_get(const jacscat_jacobi* p, int n_rows,
                                  double* a, double* b);

/* ---- pipeline ----------------------------------------------------------- */

/* spectral measure -> scattering data */
jacscat_status jacscat_forward(const jacscat_measure* m,
                               const jacscat_options* opts,
                               jacscat_scattering** out);

/* scattering data -> normalized spectral measure */
jacscat_status jacscat_inverse(const jacscat_scattering* data,
                               const jacscat_options* opts,
                               jacscat_measure** out);

/* spectral measure -> jacobi parameters (gamma1 = gamma2 = 0) */
jacscat_status jacscat_reconstruct(const jacscat_measure* m,
                                   const jacscat_options* opts, int n_rows,
                                   jacscat_jacobi** out);

/* Verblunsky coefficients of the circle transform of a mass-free measure */
jacscat_status jacscat_verblunsky(const jacscat_measure* m,
                                  const jacscat_options* opts, int n_alphas,
                                  double* alphas);

/* Admissibility report for scattering data (JSON; never fails on
 * inadmissible input, the report carries the verdict). */
jacscat_status jacscat_validate(const jacscat_scattering* data,
                                char** report_json);

/* Full round trip data -> measure -> data with deviations measured against
 * opts->tol; the JSON report carries per-item deviations and pass flags.
 * Inadmissible input still produces a report (with the violated item) and
 * returns JACSCAT_ERR_INADMISSIBLE. */
jacscat_status jacscat_roundtrip_report(const jacscat_scattering* data,
                                        const jacscat_options* opts,
                                        char** report_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* JACSCAT_H */
