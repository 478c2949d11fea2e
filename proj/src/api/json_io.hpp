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

// JSON encodings of the library types. Object keys are emitted in a fixed
// order so that equal values always serialize to identical bytes.

#pragma once

#include <json.hpp>

#include "degeneration.hpp"
#include "grassmann.hpp"
#include "linear_systems.hpp"
#include "severi.hpp"

namespace severi::io {

using Json = nlohmann::ordered_json;

Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, Field field);

Json to_json(const Form& f);
Form form_from_json(const Json& j);

Json to_json(const ProjPoint& p);
ProjPoint point_from_json(const Json& j, Field field);

Json to_json(const PointConfig& c);
/// Accepts {"field", "ordered", "points"} or a bare array of points.
PointConfig config_from_json(const Json& j, bool default_ordered = false);

Json to_json(const PluckerPoint& p);
PluckerPoint plucker_from_json(const Json& j);
Json to_json(const FlagPoint& f);
FlagPoint flag_from_json(const Json& j);

Json to_json(const FamilyConfig& f);
FamilyConfig family_from_json(const Json& j);

Json to_json(const LinearSystemResult& r);
Json to_json(const StratumSpec& s);
Json to_json(const Witness& w);
Json to_json(const CriticalDegreeReport& r);
Json to_json(const MonotoneCheck& m);

Json to_json(const LimitReport& r);
Json to_json(const FlagLimitReport& r);

Json to_json(const NodalCertificate& c);
NodalCertificate certificate_from_json(const Json& j);
Json to_json(const SigmaPoint& s);
SigmaPoint sigma_from_json(const Json& j);
Json to_json(const SynthReport& r);
Json to_json(const EPoint& e);
Json to_json(const FPoint& f);
Json to_json(const FiberReport& r);

/// Required member lookup; throws malformed_input naming the key.
const Json& member(const Json& j, const char* key);

}  // namespace severi::io
