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

#include "commands.hpp"

#include <cstdio>

#include "linalg.hpp"
#include "random.hpp"

namespace severi::api {

using io::Json;
using io::member;

namespace {

template <class T>
T get_or(const Json& req, const char* key, T fallback) {
  auto it = req.find(key);
  if (it == req.end() || it->is_null()) return fallback;
  try {
    return it->get<T>();
  } catch (const nlohmann::json::exception&) {
    fail(ErrorCode::malformed_input, std::string("field \"") + key + "\" has the wrong type");
  }
}

Field field_of(const Json& req) { return Field::parse(get_or<std::string>(req, "field", "rational")); }

PointConfig points_in_field(const Json& req, bool ordered) {
  PointConfig cfg = io::config_from_json(member(req, "points"), ordered);
  const Field f = field_of(req);
  if (f.is_prime() && cfg.field().is_rational()) return cfg.reduced_mod(f.modulus);
  if (f != cfg.field()) fail(ErrorCode::field_mismatch, "points are over " + cfg.field().to_string());
  return cfg;
}

Json header(const std::string& name, const Json& req, Json bounds) {
  return Json{{"tool", "severi"},
              {"version", kVersion},
              {"command", name},
              {"seed", get_or<std::uint64_t>(req, "seed", 0)},
              {"field", get_or<std::string>(req, "field", "rational")},
              {"bounds", std::move(bounds)}};
}

unsigned jobs_of(const Json& req) { return std::max(1u, get_or<unsigned>(req, "jobs", 1)); }

std::string pad(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

CommandOutput table(const Json& req) {
  const unsigned s_max = get_or<unsigned>(req, "s_max", 6);
  const std::size_t d_max = get_or<std::size_t>(req, "d_max", 5);
  const std::uint64_t seed = get_or<std::uint64_t>(req, "seed", 0);
  if (s_max < 1 || d_max < 1) fail(ErrorCode::malformed_input, "s_max and d_max must be positive");
  if (s_max > kMaxSystemDegree || d_max > kMaxPoints) fail(ErrorCode::too_large, "table beyond the desk-scale caps");
  CommandOutput out;
  Json rows = Json::array();
  std::string text = pad("d\\s", 4);
  for (unsigned s = 1; s <= s_max; ++s) text += pad(std::to_string(s), 5);
  text += '\n';
  for (std::size_t d = 1; d <= d_max; ++d) {
    StratumSpec spec;
    spec.seed = derive_seed(seed, d);
    spec.box_lo = get_or<long>(req, "box_lo", -50);
    spec.box_hi = get_or<long>(req, "box_hi", 50);
    PointConfig cfg = stratum_sample(d, spec);
    text += pad(std::to_string(d), 4);
    for (unsigned s = 1; s <= s_max; ++s) {
      const std::size_t rank = mat_rank(condition_matrix(s, cfg));
      const auto e = expected_dims(s, d);
      const long pd = e.n_s - static_cast<long>(rank);
      rows.push_back(Json{{"d", d},
                          {"s", s},
                          {"rank", rank},
                          {"proj_dim", pd},
                          {"expected_proj_dim", e.expected_proj_dim},
                          {"superabundance", std::max(0L, pd - e.expected_proj_dim)}});
      text += pad(std::to_string(pd) + (pd > std::max(-1L, e.expected_proj_dim) ? "*" : " "), 5);
    }
    text += '\n';
  }
  text += "proj_dim of L_s at one generic configuration; * marks superabundance\n";
  out.json = Json{{"stratum", "generic"}, {"rows", std::move(rows)}};
  out.text = std::move(text);
  return out;
}

CommandOutput kd(const Json& req) {
  const std::size_t d = member(req, "d").get<std::size_t>();
  const unsigned s_max = get_or<unsigned>(req, "s_max", 8);
  const std::uint64_t seed = get_or<std::uint64_t>(req, "seed", 0);
  const std::size_t samples = get_or<std::size_t>(req, "samples", 10);
  const auto strata = default_strata(d, seed, get_or<long>(req, "box_lo", -50), get_or<long>(req, "box_hi", 50));
  auto rep = critical_degree(d, s_max, strata, samples, jobs_of(req),
                             get_or<std::uint32_t>(req, "modulus", 65521));
  CommandOutput out;
  out.json = io::to_json(rep);
  out.verdict = rep.k_hat ? 0 : 1;
  if (rep.k_hat) {
    const unsigned r_max = std::min<unsigned>(kMaxSystemDegree, *rep.k_hat + get_or<unsigned>(req, "monotone_span", 4));
    auto mc = monotone_independence_check(d, *rep.k_hat, r_max, strata, samples, jobs_of(req));
    out.json["monotone"] = io::to_json(mc);
    if (!mc.ok) out.verdict = 1;
    out.text = "k_hat(" + std::to_string(d) + ") = " + std::to_string(*rep.k_hat) + "\n";
  } else {
    out.text = "k_hat(" + std::to_string(d) + ") not found up to s = " + std::to_string(s_max) + "\n";
  }
  return out;
}

CommandOutput synth(const Json& req) {
  SynthOptions o;
  o.max_attempts = get_or<std::size_t>(req, "max_attempts", 50);
  o.coeff_bound = get_or<long>(req, "coeff_bound", 20);
  o.jobs = jobs_of(req);
  auto rep = synth_nodal(member(req, "n").get<unsigned>(), member(req, "d").get<std::size_t>(),
                         get_or<std::uint64_t>(req, "seed", 0), o);
  CommandOutput out;
  out.json = io::to_json(rep);
  out.verdict = rep.ok ? 0 : 1;
  if (rep.ok && req.contains("k")) {
    const unsigned k = member(req, "k").get<unsigned>();
    out.json["e_point"] = io::to_json(make_E_point(*rep.point, k));
    out.json["f_point"] = io::to_json(make_F_point(*rep.point, {}, k));
  }
  out.text = rep.ok ? "certified: " + rep.point->curve.to_string() + "\n"
                    : "no certified curve in " + std::to_string(rep.attempts) + " attempts\n";
  return out;
}

}  // namespace

CommandOutput run_command(const std::string& name, const Json& req) {
  if (!req.is_object()) fail(ErrorCode::malformed_input, "request must be a JSON object");
  CommandOutput out;
  Json bounds = Json::object();
  if (name == "dim") {
    const unsigned s = member(req, "s").get<unsigned>();
    bounds["s"] = s;
    auto r = linear_system(s, points_in_field(req, false));
    out.json = io::to_json(r);
    out.text = "proj_dim " + std::to_string(r.proj_dim) + " (expected " + std::to_string(r.expected_proj_dim) + ")\n";
  } else if (name == "table") {
    out = table(req);
    bounds = Json{{"s_max", get_or<unsigned>(req, "s_max", 6)}, {"d_max", get_or<std::size_t>(req, "d_max", 5)}};
  } else if (name == "kd") {
    out = kd(req);
    bounds = Json{{"s_max", get_or<unsigned>(req, "s_max", 8)}, {"samples", get_or<std::size_t>(req, "samples", 10)},
                  {"box", Json::array({get_or<long>(req, "box_lo", -50), get_or<long>(req, "box_hi", 50)})},
                  {"modulus", get_or<std::uint32_t>(req, "modulus", 65521)}};
  } else if (name == "plucker") {
    const unsigned k = member(req, "k").get<unsigned>();
    bounds["k"] = k;
    auto p = gamma(points_in_field(req, false), k);
    out.json = io::to_json(p);
    out.text = std::to_string(p.nnz()) + " nonzero coordinates\n";
  } else if (name == "flag") {
    const unsigned k = member(req, "k").get<unsigned>();
    bounds["k"] = k;
    auto f = flag(points_in_field(req, true), k);
    out.json = io::to_json(f);
    out.text = std::to_string(f.chain.size()) + " nested subspaces\n";
  } else if (name == "limit") {
    const unsigned k = member(req, "k").get<unsigned>();
    bounds["k"] = k;
    auto fam = io::family_from_json(member(req, "family"));
    if (get_or<bool>(req, "flag", false)) {
      auto r = limit_flag(fam, k);
      out.json = io::to_json(r);
      out.verdict = r.nested ? 0 : 1;
      out.text = std::string(r.nested ? "nested" : "not nested") + " limit flag\n";
    } else {
      auto r = limit_gamma(fam, k);
      out.json = io::to_json(r);
      out.verdict = r.decomposable ? 0 : 1;
      out.text = "valuation " + std::to_string(r.valuation) + ", kernel_dim " + std::to_string(r.kernel_dim) +
                 (r.decomposable ? ", decomposable\n" : ", not decomposable\n");
    }
  } else if (name == "synth") {
    out = synth(req);
    bounds = Json{{"n", member(req, "n")}, {"d", member(req, "d")},
                  {"max_attempts", get_or<std::size_t>(req, "max_attempts", 50)},
                  {"coeff_bound", get_or<long>(req, "coeff_bound", 20)}};
  } else if (name == "certify") {
    if (field_of(req).is_prime()) fail(ErrorCode::mode, "certification runs over Q");
    CertifyOptions o;
    o.first_prime = get_or<std::uint32_t>(req, "first_prime", 1009);
    bounds["first_prime"] = o.first_prime;
    auto c = certify_member(io::form_from_json(member(req, "curve")),
                            io::config_from_json(member(req, "nodes")), o);
    out.json = io::to_json(c);
    out.verdict = c.certified ? 0 : 1;
    out.text = c.certified ? "certified\n" : "refuted: " + c.refutation + "\n";
  } else if (name == "verify") {
    auto c = io::certificate_from_json(member(req, "certificate"));
    const std::string problem = verify_certificate(c);
    out.json = Json{{"ok", problem.empty()}, {"problem", problem}};
    out.verdict = problem.empty() ? 0 : 1;
    out.text = problem.empty() ? "certificate reproduces\n" : problem + "\n";
  } else if (name == "fiber") {
    const unsigned n = member(req, "n").get<unsigned>();
    const std::size_t d = member(req, "d").get<std::size_t>();
    const unsigned k_hat = member(req, "k_hat").get<unsigned>();
    const std::uint64_t seed = get_or<std::uint64_t>(req, "seed", 0);
    const std::size_t samples = get_or<std::size_t>(req, "samples", 10);
    bounds = Json{{"n", n}, {"d", d}, {"k_hat", k_hat}, {"samples", samples}};
    auto r = bundle_fiber_check(n, d, k_hat, default_strata(d, seed), samples, jobs_of(req));
    out.json = io::to_json(r);
    out.verdict = (r.constant || r.below_critical) ? 0 : 1;
    out.text = r.constant ? "constant fiber dimension\n"
                          : std::to_string(r.violations.size()) + " fiber violations\n";
  } else if (name == "selftest") {
    out = run_selftest(get_or<std::uint64_t>(req, "seed", 0), jobs_of(req));
  } else {
    fail(ErrorCode::usage, "unknown command \"" + name + "\"");
  }
  Json full{{"header", header(name, req, std::move(bounds))}, {"result", std::move(out.json)}};
  out.json = std::move(full);
  return out;
}

}  // namespace severi::api
