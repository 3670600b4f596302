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
#ifndef MACLANE_H
#define MACLANE_H

/*
 * C interface to libmaclane.
 *
 * Every call returns ML_OK or an error status; on error ml_last_error()
 * returns the message for the calling thread. Strings handed out through
 * `char** out` are owned by the caller and released with ml_string_free.
 * Handles are immutable after creation and may be shared between threads.
 */

#include <stdint.h>

#if defined(_WIN32)
#define ML_API __declspec(dllexport)
#else
#define ML_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ml_status {
  ML_OK = 0,
  ML_ERR_INVALID_ARGUMENT = 1,
  ML_ERR_PARSE = 2,
  ML_ERR_DOMAIN = 3,
  ML_ERR_UNDETERMINED = 4,
  ML_ERR_IO = 5,
  ML_ERR_INTERNAL = 6
} ml_status;

typedef struct ml_chain ml_chain;
typedef struct ml_scenario ml_scenario;

ML_API const char* ml_version(void);
ML_API const char* ml_last_error(void);
ML_API void ml_string_free(char* s);

/* Chains: {"field":{...},"chain":[...]} */
ML_API ml_status ml_chain_open(const char* json, ml_chain** out);
ML_API ml_status ml_chain_open_file(const char* path, ml_chain** out);
ML_API void ml_chain_free(ml_chain* c);
/* Arrow diagram, e.g. "v →^{x,(0,0)} μ_0 → ...". */
ML_API ml_status ml_chain_describe(const ml_chain* c, char** out);
ML_API ml_status ml_chain_to_json(const ml_chain* c, char** out);

/* format: "text" gives the value alone ("(1,0)", "inf"); "json" an object. */
ML_API ml_status ml_chain_eval(const ml_chain* c, const char* poly, const char* format, char** out);
/* phi may be NULL for the key polynomial of the chain. format: json|text|svg. */
ML_API ml_status ml_chain_polygon(const ml_chain* c, const char* phi, const char* poly, const char* format,
                                  char** out);
/* Minimality and the randomized key screen of phi over the chain (JSON). */
ML_API ml_status ml_chain_kp_check(const ml_chain* c, const char* phi, uint64_t seed, char** out);
/* Stability probe of poly along the family of limit step `step` (JSON). */
ML_API ml_status ml_chain_probe(const ml_chain* c, uint32_t step, const char* poly, uint32_t window, char** out);
/* Defect formula; format json|text. */
ML_API ml_status ml_chain_defect(const ml_chain* c, const char* format, char** out);

/* Scenarios */
ML_API ml_status ml_scenario_list(char** out_json);
/* params_json may be NULL; keys "p", "horizon", "precision". */
ML_API ml_status ml_scenario_build(const char* name, const char* params_json, ml_scenario** out);
ML_API ml_status ml_scenario_open_file(const char* path, ml_scenario** out);
ML_API void ml_scenario_free(ml_scenario* s);
/* Writes the bundle into out_dir unless it is NULL. */
ML_API ml_status ml_scenario_run(const ml_scenario* s, const char* out_dir, char** out_report, int* all_ok);
ML_API ml_status ml_scenario_save(const ml_scenario* s, char** out_json);
ML_API ml_status ml_scenario_chain(const ml_scenario* s, ml_chain** out);

ML_API ml_status ml_selftest(uint64_t seed, int quick, char** out_json, int* all_ok);
/* MACLANE_SEED if set, else the built-in default. */
ML_API uint64_t ml_default_seed(void);

#ifdef __cplusplus
}
#endif

#endif
