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

#pragma once

#include <string>

#include "json_io.hpp"

namespace severi::api {

inline constexpr const char* kVersion = "0.1.0";

struct CommandOutput {
  io::Json json;
  int verdict = 0;  // 0 success, 1 refutation or failed report
  std::string text;
};

/// Runs one subcommand on a JSON request. The output object holds a
/// reproducibility header followed by the result.
CommandOutput run_command(const std::string& name, const io::Json& request);

/// Invariant suites used by `selftest`; verdict 1 when any check fails.
CommandOutput run_selftest(std::uint64_t seed, unsigned jobs);

}  // namespace severi::api
