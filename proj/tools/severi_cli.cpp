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

// severi command-line front end. Builds a JSON request from flags and input
// files and hands it to the shared library through its C interface.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "severi/severi_c.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct InputError {
  std::string message;
};

Json read_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{path + ": cannot open file"};
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw InputError{path + ":" + std::to_string(line) + ":" + std::to_string(col) + ": parse error: " + what};
  }
}

bool usage_status(sev_status s) {
  switch (s) {
    case SEV_ERR_MALFORMED_INPUT:
    case SEV_ERR_SHAPE:
    case SEV_ERR_DEGREE:
    case SEV_ERR_MODE:
    case SEV_ERR_FIELD_MISMATCH:
    case SEV_ERR_PARSE:
    case SEV_ERR_USAGE:
    case SEV_ERR_NULL_ARGUMENT:
      return true;
    default:
      return false;
  }
}

struct Options {
  std::string field = "rational";
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::string format = "json";
  std::string out;
};

int emit(const std::string& command, const Json& request, const Options& opt) {
  std::unique_ptr<sev_context, decltype(&sev_context_free)> ctx(sev_context_new(), sev_context_free);
  if (!ctx) {
    std::cerr << "severi: cannot allocate a context\n";
    return kExitFailure;
  }
  sev_result* raw = nullptr;
  const std::string body = request.dump();
  const sev_status st = sev_run(ctx.get(), command.c_str(), body.c_str(), &raw);
  if (st != SEV_OK) {
    std::cerr << "severi: " << sev_status_name(st) << ": " << sev_last_error(ctx.get()) << "\n";
    return usage_status(st) ? kExitUsage : kExitFailure;
  }
  std::unique_ptr<sev_result, decltype(&sev_result_free)> res(raw, sev_result_free);
  std::string payload;
  if (opt.format == "text") {
    payload = "# severi " + std::string(sev_version()) + " " + command + " seed=" + std::to_string(opt.seed) +
              " field=" + opt.field + "\n" + sev_result_text(res.get());
  } else {
    payload = sev_result_json(res.get());
  }
  if (opt.out.empty()) {
    std::cout << payload;
    std::cout.flush();
  } else {
    std::ofstream f(opt.out, std::ios::binary);
    f << payload;
    if (!f) {
      std::cerr << "severi: cannot write " << opt.out << "\n";
      return kExitFailure;
    }
  }
  return sev_result_verdict(res.get()) == 0 ? kExitOk : kExitFailure;
}

std::uint32_t default_modulus() {
  if (const char* env = std::getenv("SEVERI_MODULUS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 2 && v < (1UL << 31)) return static_cast<std::uint32_t>(v);
    throw InputError{"SEVERI_MODULUS must be a prime below 2^31, got \"" + std::string(env) + "\""};
  }
  return 65521;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear systems of singular plane curves, their Grassmannian images, and nodal curves"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(sev_version()));
  Options opt;
  app.add_option("--field", opt.field, "rational or fp:<p>")->capture_default_str();
  app.add_option("--seed", opt.seed, "64-bit seed")->capture_default_str();
  app.add_option("--jobs", opt.jobs, "worker threads; output does not depend on it")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  app.add_option("--format", opt.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--out", opt.out, "write output to this file instead of stdout");

  Json req = Json::object();
  std::string points, family, curve, nodes, certificate;
  unsigned s = 0, k = 0, n = 0, s_max = 0, d_max = 5, k_hat = 0;
  std::size_t d = 0, samples = 10, max_attempts = 50;
  long coeff_bound = 20, box_lo = -50, box_hi = 50;
  std::uint32_t modulus = 0, first_prime = 1009;
  bool limit_flag = false;
  std::optional<unsigned> synth_k;

  auto* dim = app.add_subcommand("dim", "linear system of degree-s curves singular at the points");
  dim->add_option("--s", s, "degree")->required();
  dim->add_option("--points", points, "points JSON file")->required()->check(CLI::ExistingFile);

  auto* table = app.add_subcommand("table", "proj_dim grid at generic configurations");
  table->add_option("--s-max", s_max, "largest degree")->default_val(6);
  table->add_option("--d-max", d_max, "largest number of points")->capture_default_str();

  auto* kd = app.add_subcommand("kd", "critical degree scan over the default strata");
  kd->add_option("--d", d, "number of points")->required();
  kd->add_option("--s-max", s_max, "largest degree")->default_val(8);
  kd->add_option("--samples", samples, "samples per stratum")->capture_default_str();
  kd->add_option("--box-lo", box_lo, "sampling box lower bound")->capture_default_str();
  kd->add_option("--box-hi", box_hi, "sampling box upper bound")->capture_default_str();
  kd->add_option("--modulus", modulus, "cross-check prime (default $SEVERI_MODULUS or 65521)");

  auto* plucker = app.add_subcommand("plucker", "dual Plucker point of the configuration");
  plucker->add_option("--k", k, "degree")->required();
  plucker->add_option("--points", points, "points JSON file")->required()->check(CLI::ExistingFile);

  auto* flag = app.add_subcommand("flag", "flag of an ordered configuration");
  flag->add_option("--k", k, "degree")->required();
  flag->add_option("--points", points, "points JSON file")->required()->check(CLI::ExistingFile);

  auto* limit = app.add_subcommand("limit", "limit along a one-parameter family");
  limit->add_option("--k", k, "degree")->required();
  limit->add_option("--family", family, "family JSON file")->required()->check(CLI::ExistingFile);
  limit->add_flag("--flag", limit_flag, "limit of the flag instead of the Plucker point");

  auto* synth = app.add_subcommand("synth", "synthesize a certified nodal curve");
  synth->add_option("--n", n, "curve degree")->required();
  synth->add_option("--d", d, "number of nodes")->required();
  synth->add_option("--max-attempts", max_attempts, "attempt budget")->capture_default_str();
  synth->add_option("--coeff-bound", coeff_bound, "combination coefficients lie in [-b, b]")->capture_default_str();
  synth->add_option("--k", synth_k, "also emit the E- and F-points at this degree");

  auto* certify = app.add_subcommand("certify", "certify a curve with claimed nodes");
  certify->add_option("--curve", curve, "form JSON file")->required()->check(CLI::ExistingFile);
  certify->add_option("--nodes", nodes, "points JSON file")->required()->check(CLI::ExistingFile);
  certify->add_option("--first-prime", first_prime, "smallest scan prime")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "re-run the checks stored in a certificate");
  verify->add_option("--certificate", certificate, "certificate JSON (or certify/synth output)")
      ->required()
      ->check(CLI::ExistingFile);

  auto* fiber = app.add_subcommand("fiber", "fiber dimension of L_n over sampled configurations");
  fiber->add_option("--n", n, "curve degree")->required();
  fiber->add_option("--d", d, "number of points")->required();
  fiber->add_option("--k-hat", k_hat, "critical degree")->required();
  fiber->add_option("--samples", samples, "samples per stratum")->capture_default_str();

  auto* selftest = app.add_subcommand("selftest", "run the invariant suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "severi: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    req["seed"] = opt.seed;
    req["field"] = opt.field;
    req["jobs"] = opt.jobs;
    std::string command;
    if (dim->parsed()) {
      command = "dim";
      req["s"] = s;
      req["points"] = read_json(points);
    } else if (table->parsed()) {
      command = "table";
      req["s_max"] = s_max;
      req["d_max"] = d_max;
    } else if (kd->parsed()) {
      command = "kd";
      req["d"] = d;
      req["s_max"] = s_max;
      req["samples"] = samples;
      req["box_lo"] = box_lo;
      req["box_hi"] = box_hi;
      req["modulus"] = modulus ? modulus : default_modulus();
    } else if (plucker->parsed() || flag->parsed()) {
      command = plucker->parsed() ? "plucker" : "flag";
      req["k"] = k;
      req["points"] = read_json(points);
    } else if (limit->parsed()) {
      command = "limit";
      req["k"] = k;
      req["flag"] = limit_flag;
      req["family"] = read_json(family);
    } else if (synth->parsed()) {
      command = "synth";
      req["n"] = n;
      req["d"] = d;
      req["max_attempts"] = max_attempts;
      req["coeff_bound"] = coeff_bound;
      if (synth_k) req["k"] = *synth_k;
    } else if (certify->parsed()) {
      command = "certify";
      req["curve"] = read_json(curve);
      req["nodes"] = read_json(nodes);
      req["first_prime"] = first_prime;
    } else if (verify->parsed()) {
      command = "verify";
      Json c = read_json(certificate);
      if (c.contains("result")) c = c["result"];
      if (c.contains("point") && c["point"].is_object()) c = c["point"];
      if (c.contains("certificate")) c = c["certificate"];
      req["certificate"] = std::move(c);
    } else if (fiber->parsed()) {
      command = "fiber";
      req["n"] = n;
      req["d"] = d;
      req["k_hat"] = k_hat;
      req["samples"] = samples;
    } else if (selftest->parsed()) {
      command = "selftest";
    }
    return emit(command, req, opt);
  } catch (const InputError& e) {
    std::cerr << "severi: " << e.message << "\n";
    return kExitUsage;
  }
}
