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

/* Exercises the C interface from C. */

#include <math.h>
#include <stdio.h>
#include <string.h>

#include "sxlab/sxlab.h"

static int failures = 0;

#define EXPECT(cond)                                            \
  do {                                                          \
    if (!(cond)) {                                              \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                               \
    }                                                           \
  } while (0)

int main(void) {
  sxlab_formula* f = NULL;
  sxlab_formula* g = NULL;
  char* s = NULL;

  EXPECT(sxlab_formula_parse("Q1", &f) == SXLAB_OK);
  EXPECT(sxlab_formula_encode(f, &s) == SXLAB_OK);
  EXPECT(strcmp(s, "5321006") == 0);
  EXPECT(sxlab_formula_decode(s, &g) == SXLAB_OK);
  EXPECT(sxlab_formula_equal(f, g) == 1);
  sxlab_string_free(s);
  sxlab_formula_free(f);
  sxlab_formula_free(g);

  EXPECT(sxlab_formula_parse("Q1 &", &f) == SXLAB_E_PARSE);
  EXPECT(strstr(sxlab_last_error(), "offset 4") != NULL);

  sxlab_schedule* h = NULL;
  EXPECT(sxlab_schedule_narveson(2, &h) == SXLAB_OK);
  EXPECT(sxlab_schedule_days(h) == 2);
  EXPECT(fabs(sxlab_schedule_p(h, 1) - exp(-1.0)) < 1e-15);
  EXPECT(isnan(sxlab_schedule_p(h, 3)));
  sxlab_schedule_free(h);

  sxlab_render_options json = {SXLAB_FORMAT_JSON, 0};
  EXPECT(sxlab_render_knower(&json, &s) == SXLAB_OK);
  char* report = NULL;
  EXPECT(sxlab_check(s, NULL, 0, NULL, &report) == SXLAB_OK);
  sxlab_string_free(report);
  sxlab_string_free(s);

  EXPECT(sxlab_render_fitch(0, 0, NULL, &s) == SXLAB_E_DOMAIN);
  EXPECT(sxlab_render_ipd(2, "1,2,3,4", NULL, &s) == SXLAB_E_DOMAIN);

  if (failures == 0) puts("capi_smoke: ok");
  return failures == 0 ? 0 : 1;
}
