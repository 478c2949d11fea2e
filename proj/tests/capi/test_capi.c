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

#include <stdio.h>
#include <string.h>

#include "severi/severi_c.h"

static int failures = 0;

#define EXPECT(cond)                                                \
  do {                                                              \
    if (!(cond)) {                                                  \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                   \
    }                                                               \
  } while (0)

int main(void) {
  sev_context* ctx = sev_context_new();
  sev_result* r = NULL;
  long a = 0, b = 0, c = 0;

  EXPECT(ctx != NULL);
  EXPECT(strcmp(sev_version(), "0.1.0") == 0);
  EXPECT(strcmp(sev_status_name(SEV_OK), "ok") == 0);
  EXPECT(strcmp(sev_status_name(SEV_ERR_DEGENERATE_CONFIGURATION), "degenerate-configuration") == 0);

  EXPECT(sev_run(ctx, "dim", "{\"s\": 2, \"points\": [[\"0\",\"0\",\"1\"]]}", &r) == SEV_OK);
  EXPECT(r != NULL);
  EXPECT(sev_result_verdict(r) == 0);
  EXPECT(strstr(sev_result_json(r), "\"proj_dim\": 2") != NULL);
  EXPECT(strstr(sev_result_json(r), "\"header\"") != NULL);
  EXPECT(strstr(sev_result_text(r), "proj_dim 2") != NULL);
  EXPECT(sev_last_error(ctx)[0] == '\0');
  sev_result_free(r);

  r = NULL;
  EXPECT(sev_run(ctx, "plucker", "{\"k\": 2, \"points\": [[1,0,1],[0,1,1]]}", &r) ==
         SEV_ERR_DEGENERATE_CONFIGURATION);
  EXPECT(r == NULL);
  EXPECT(strstr(sev_last_error(ctx), "rank 5") != NULL);

  EXPECT(sev_run(ctx, "nope", "{}", &r) == SEV_ERR_USAGE);
  EXPECT(sev_run(ctx, "dim", "{\"s\": 2,", &r) == SEV_ERR_PARSE);
  EXPECT(sev_run(ctx, "dim", "{\"s\": 2}", &r) == SEV_ERR_MALFORMED_INPUT);
  EXPECT(sev_run(ctx, "dim", "{\"s\": 2, \"points\": [[0,0,1],[0,0,2]]}", &r) ==
         SEV_ERR_DIAGONAL_VIOLATION);
  EXPECT(sev_run(NULL, "dim", "{}", &r) == SEV_ERR_NULL_ARGUMENT);
  EXPECT(sev_run(ctx, "dim", "{}", NULL) == SEV_ERR_NULL_ARGUMENT);

  EXPECT(sev_run(ctx, "certify",
                 "{\"curve\": {\"degree\": 3, \"coeffs\": [\"-1\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\",\"1\",\"0\",\"0\"]},"
                 " \"nodes\": [[0,0,1]]}",
                 &r) == SEV_OK);
  EXPECT(sev_result_verdict(r) == 1);
  EXPECT(strstr(sev_result_json(r), "degenerate-singularity") != NULL);
  sev_result_free(r);

  EXPECT(sev_genus(3, 1, &a) == SEV_OK && a == 0);
  EXPECT(sev_genus(5, 6, &a) == SEV_OK && a == 0);
  EXPECT(sev_genus(2, 2, &a) == SEV_ERR_INFEASIBLE);
  EXPECT(sev_genus(3, 1, NULL) == SEV_ERR_NULL_ARGUMENT);
  EXPECT(sev_expected_dims(4, 5, &a, &b, &c) == SEV_OK);
  EXPECT(a == 14 && b == -1 && c == 0);

  sev_result_free(NULL);
  sev_context_free(ctx);
  if (failures) fprintf(stderr, "%d failures\n", failures);
  else printf("c api: all checks passed\n");
  return failures ? 1 : 0;
}
