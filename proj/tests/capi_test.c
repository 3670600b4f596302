/* Copyright (C) 2026 The maclane authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
/* Exercises the C interface only. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "maclane/maclane.h"

static int failures = 0;

#define CHECK(cond)                                              \
  do {                                                           \
    if (!(cond)) {                                               \
      fprintf(stderr, "%s:%d: check failed: %s (last error: %s)\n", \
              __FILE__, __LINE__, #cond, ml_last_error());        \
      ++failures;                                                \
    }                                                            \
  } while (0)

static const char* kGauss =
    "{\"field\":{\"kind\":\"Qp\",\"p\":2},"
    "\"chain\":[{\"type\":\"depth0\",\"a\":\"0\",\"gamma\":[\"0\"]},"
    "{\"type\":\"ordinary\",\"phi\":\"x\",\"gamma\":[\"1/2\"]}]}";

int main(void) {
  ml_chain* c = NULL;
  char* out = NULL;

  CHECK(ml_chain_open(kGauss, &c) == ML_OK);
  CHECK(ml_chain_eval(c, "x^3+2*x+4", "text", &out) == ML_OK);
  CHECK(out != NULL && strcmp(out, "(3/2)") == 0);
  ml_string_free(out);

  CHECK(ml_chain_eval(c, "x^^2", "text", &out) == ML_ERR_PARSE);
  CHECK(strlen(ml_last_error()) > 0);
  CHECK(ml_chain_eval(c, "0", "text", &out) == ML_ERR_DOMAIN);
  CHECK(ml_chain_eval(c, "x", "yaml", &out) == ML_ERR_INVALID_ARGUMENT);
  CHECK(ml_chain_eval(NULL, "x", "text", &out) == ML_ERR_INVALID_ARGUMENT);

  CHECK(ml_chain_polygon(c, NULL, "x^3+2*x+4", "json", &out) == ML_OK);
  CHECK(strstr(out, "\"principal\"") != NULL);
  ml_string_free(out);

  CHECK(ml_chain_kp_check(c, "x^2+2", 11, &out) == ML_OK);
  CHECK(strstr(out, "\"minimal\": true") != NULL);
  ml_string_free(out);

  /* the chain ends with a finite gamma */
  CHECK(ml_chain_defect(c, "text", &out) == ML_ERR_DOMAIN);
  ml_chain_free(c);

  ml_scenario* s = NULL;
  CHECK(ml_scenario_build("artin-schreier-1", "{\"p\":3}", &s) == ML_OK);
  int ok = 0;
  CHECK(ml_scenario_run(s, NULL, &out, &ok) == ML_OK);
  CHECK(ok == 1);
  ml_string_free(out);
  CHECK(ml_scenario_chain(s, &c) == ML_OK);
  CHECK(ml_chain_defect(c, "text", &out) == ML_OK);
  CHECK(strstr(out, "d=3 e=1 f=1 efd=3") != NULL);
  ml_string_free(out);
  CHECK(ml_chain_probe(c, 1, "x", 2, &out) == ML_OK);
  CHECK(strstr(out, "\"stable\": true") != NULL);
  ml_string_free(out);
  CHECK(ml_chain_probe(c, 0, "x", 2, &out) == ML_ERR_INVALID_ARGUMENT);
  ml_chain_free(c);
  ml_scenario_free(s);

  CHECK(ml_scenario_build("artin-schreier-1", "{\"precision\":2}", &s) == ML_ERR_INVALID_ARGUMENT);
  CHECK(strstr(ml_last_error(), "precision insufficient") != NULL);
  CHECK(strstr(ml_last_error(), "/chain/1/family/horizon") != NULL);
  CHECK(ml_scenario_build("nope", NULL, &s) == ML_ERR_INVALID_ARGUMENT);
  CHECK(ml_chain_open_file("/nonexistent/chain.json", &c) == ML_ERR_IO);

  if (failures == 0) printf("capi: all checks passed\n");
  return failures == 0 ? 0 : 1;
}
