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

#include "severi/severi_c.h"

#include <new>
#include <string>

#include "commands.hpp"

struct sev_context {
  std::string last_error;
};

struct sev_result {
  std::string json;
  std::string text;
  int verdict = 0;
};

namespace {

sev_status status_of(severi::ErrorCode c) { return static_cast<sev_status>(static_cast<int>(c) + 1); }

template <class Fn>
sev_status guarded(sev_context* ctx, Fn&& fn) {
  try {
    fn();
    if (ctx) ctx->last_error.clear();
    return SEV_OK;
  } catch (const severi::Error& e) {
    if (ctx) ctx->last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::parse_error& e) {
    if (ctx) ctx->last_error = e.what();
    return SEV_ERR_PARSE;
  } catch (const nlohmann::json::exception& e) {
    if (ctx) ctx->last_error = e.what();
    return SEV_ERR_MALFORMED_INPUT;
  } catch (const std::bad_alloc&) {
    if (ctx) ctx->last_error = "out of memory";
    return SEV_ERR_TOO_LARGE;
  } catch (const std::exception& e) {
    if (ctx) ctx->last_error = e.what();
    return SEV_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* sev_version(void) { return severi::api::kVersion; }

const char* sev_status_name(sev_status status) {
  if (status == SEV_OK) return "ok";
  if (status == SEV_ERR_NULL_ARGUMENT) return "null_argument";
  if (status < SEV_OK || status > SEV_ERR_NULL_ARGUMENT) return "unknown";
  return severi::error_code_name(static_cast<severi::ErrorCode>(status - 1)).data();
}

sev_context* sev_context_new(void) { return new (std::nothrow) sev_context(); }

void sev_context_free(sev_context* ctx) { delete ctx; }

const char* sev_last_error(const sev_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

sev_status sev_run(sev_context* ctx, const char* command, const char* request_json, sev_result** out) {
  if (!ctx || !command || !request_json || !out) {
    if (ctx) ctx->last_error = "null argument";
    return SEV_ERR_NULL_ARGUMENT;
  }
  *out = nullptr;
  return guarded(ctx, [&] {
    auto req = severi::io::Json::parse(request_json);
    auto res = severi::api::run_command(command, req);
    auto* r = new sev_result();
    r->json = res.json.dump(2);
    r->json += '\n';
    r->text = std::move(res.text);
    r->verdict = res.verdict;
    *out = r;
  });
}

const char* sev_result_json(const sev_result* r) { return r ? r->json.c_str() : ""; }
const char* sev_result_text(const sev_result* r) { return r ? r->text.c_str() : ""; }
int sev_result_verdict(const sev_result* r) { return r ? r->verdict : 1; }
void sev_result_free(sev_result* r) { delete r; }

sev_status sev_expected_dims(unsigned s, unsigned d, long* n_s, long* expected_proj_dim, long* bundle_rank) {
  if (!n_s || !expected_proj_dim || !bundle_rank) return SEV_ERR_NULL_ARGUMENT;
  return guarded(nullptr, [&] {
    auto e = severi::expected_dims(s, d);
    *n_s = e.n_s;
    *expected_proj_dim = e.expected_proj_dim;
    *bundle_rank = e.bundle_rank;
  });
}

sev_status sev_genus(long n, long d, long* out) {
  if (!out) return SEV_ERR_NULL_ARGUMENT;
  return guarded(nullptr, [&] { *out = severi::genus(n, d); });
}

}  // extern "C"
