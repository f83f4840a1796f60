/* Copyright 2026 The sxlab Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

/* C interface of libsxlab.
 *
 * Every fallible call returns an sxlab_status. On failure the message is
 * available from sxlab_last_error() until the next call on the same thread.
 * Strings returned through char** out-parameters are owned by the caller
 * and released with sxlab_string_free(). */

#ifndef SXLAB_SXLAB_H
#define SXLAB_SXLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SXLAB_API __declspec(dllexport)
#else
#define SXLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sxlab_status {
  SXLAB_OK = 0,
  SXLAB_E_USAGE = 2,    /* bad option combination */
  SXLAB_E_DOMAIN = 3,   /* precondition violated (m = 0, bad payoffs, ...) */
  SXLAB_E_CHECK = 4,    /* a proof was rejected */
  SXLAB_E_PARSE = 5,    /* unreadable formula or transcript */
  SXLAB_E_IO = 6,
  SXLAB_E_INTERNAL = 7
} sxlab_status;

typedef enum sxlab_format {
  SXLAB_FORMAT_TEXT = 0,
  SXLAB_FORMAT_JSON = 1,
  SXLAB_FORMAT_CSV = 2
} sxlab_format;

typedef struct sxlab_render_options {
  sxlab_format format;
  int full_codes; /* nonzero: print Goedel numbers in full in text output */
} sxlab_render_options;

typedef struct sxlab_formula sxlab_formula;
typedef struct sxlab_schedule sxlab_schedule;

SXLAB_API const char* sxlab_version(void);
SXLAB_API const char* sxlab_last_error(void);
SXLAB_API void sxlab_string_free(char* s);

/* "text", "json", "csv" */
SXLAB_API sxlab_status sxlab_format_parse(const char* name, sxlab_format* out);

/* Formulas. */
SXLAB_API sxlab_status sxlab_formula_parse(const char* text, sxlab_formula** out);
SXLAB_API void sxlab_formula_free(sxlab_formula* f);
SXLAB_API sxlab_status sxlab_formula_print(const sxlab_formula* f, char** out);
SXLAB_API int sxlab_formula_equal(const sxlab_formula* a, const sxlab_formula* b);
/* Decimal Goedel number. */
SXLAB_API sxlab_status sxlab_formula_encode(const sxlab_formula* f, char** out);
SXLAB_API sxlab_status sxlab_formula_decode(const char* code, sxlab_formula** out);
/* Code of the formula coded by m with its variable replaced by n. */
SXLAB_API sxlab_status sxlab_diag(const char* m, const char* n, char** out);

/* Surprise schedules. */
SXLAB_API sxlab_status sxlab_schedule_narveson(uint32_t m, sxlab_schedule** out);
SXLAB_API sxlab_status sxlab_schedule_from_distribution(const double* p, size_t m,
                                                        sxlab_schedule** out);
SXLAB_API void sxlab_schedule_free(sxlab_schedule* s);
SXLAB_API uint32_t sxlab_schedule_days(const sxlab_schedule* s);
/* Day k in 1..m; NaN when out of range. */
SXLAB_API double sxlab_schedule_p(const sxlab_schedule* s, uint32_t k);
SXLAB_API double sxlab_schedule_hazard(const sxlab_schedule* s, uint32_t k);
SXLAB_API sxlab_status sxlab_schedule_expected_surprise(const sxlab_schedule* s,
                                                        double* out);

/* Reports. opts may be NULL for plain text. */
SXLAB_API sxlab_status sxlab_render_fitch(uint32_t m, int exclusive_or,
                                          const sxlab_render_options* opts, char** out);
/* agents: NULL or "" for the default labels, "students" for the student
 * names, or a comma-separated list of m ids. */
SXLAB_API sxlab_status sxlab_render_epistemic(uint32_t m, const char* agents,
                                              int lemma_only,
                                              const sxlab_render_options* opts,
                                              char** out);
SXLAB_API sxlab_status sxlab_render_knower(const sxlab_render_options* opts, char** out);
/* payoffs: NULL for the default, else "T,R,P,S". */
SXLAB_API sxlab_status sxlab_render_ipd(uint32_t n, const char* payoffs,
                                        const sxlab_render_options* opts, char** out);
SXLAB_API sxlab_status sxlab_render_surprise(uint32_t m, int oracle,
                                             const sxlab_render_options* opts,
                                             char** out);

/* Re-checks a transcript or report. rules: NULL to use the document's own.
 * days > 0 (with agents as above) overrides the epistemic system. The
 * report is set on SXLAB_OK and on SXLAB_E_CHECK. */
SXLAB_API sxlab_status sxlab_check(const char* document, const char* rules,
                                   uint32_t days, const char* agents, char** report);

SXLAB_API sxlab_status sxlab_write_goldens(const char* dir);

#ifdef __cplusplus
}
#endif

#endif /* SXLAB_SXLAB_H */
