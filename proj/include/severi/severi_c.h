// Copyright 2026 The Severi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the severi library. Requests and results are JSON text;
 * every handle is opaque and owned by the caller once returned. */

#ifndef SEVERI_SEVERI_C_H
#define SEVERI_SEVERI_C_H

#include <stdint.h>

#if defined(_WIN32)
#define SEV_API __declspec(dllexport)
#else
#define SEV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sev_context sev_context;
typedef struct sev_result sev_result;

typedef enum sev_status {
  SEV_OK = 0,
  SEV_ERR_MALFORMED_INPUT,
  SEV_ERR_SHAPE,
  SEV_ERR_DEGENERATE_INPUT,
  SEV_ERR_DEGREE,
  SEV_ERR_FIELD_MISMATCH,
  SEV_ERR_UNSUPPORTED_CHARACTERISTIC,
  SEV_ERR_MODE,
  SEV_ERR_DIAGONAL_VIOLATION,
  SEV_ERR_EXHAUSTION,
  SEV_ERR_DEGENERATE_CONFIGURATION,
  SEV_ERR_DEGENERATE_FAMILY,
  SEV_ERR_INFEASIBLE,
  SEV_ERR_INCONCLUSIVE,
  SEV_ERR_NOT_FOUND,
  SEV_ERR_TOO_LARGE,
  SEV_ERR_PARSE,
  SEV_ERR_USAGE,
  SEV_ERR_INTERNAL,
  SEV_ERR_NULL_ARGUMENT
} sev_status;

SEV_API const char* sev_version(void);
/* Stable lowercase name such as "degenerate-configuration". */
SEV_API const char* sev_status_name(sev_status status);

SEV_API sev_context* sev_context_new(void);
SEV_API void sev_context_free(sev_context* ctx);
/* Message of the last failed call on ctx; empty after a success. */
SEV_API const char* sev_last_error(const sev_context* ctx);

/* Runs a subcommand (dim, table, kd, plucker, flag, limit, synth, certify,
 * verify, fiber, selftest) on a JSON request object. On SEV_OK, *out
 * receives a result the caller releases with sev_result_free. */
SEV_API sev_status sev_run(sev_context* ctx, const char* command, const char* request_json,
                           sev_result** out);

/* Pretty-printed JSON document, stable across runs and job counts. */
SEV_API const char* sev_result_json(const sev_result* r);
/* Short human-readable summary. */
SEV_API const char* sev_result_text(const sev_result* r);
/* 0 when the report succeeded, 1 for refutations and failed checks. */
SEV_API int sev_result_verdict(const sev_result* r);
SEV_API void sev_result_free(sev_result* r);

SEV_API sev_status sev_expected_dims(unsigned s, unsigned d, long* n_s, long* expected_proj_dim,
                                     long* bundle_rank);
SEV_API sev_status sev_genus(long n, long d, long* out);

#ifdef __cplusplus
}
#endif

#endif
