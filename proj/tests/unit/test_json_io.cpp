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

#include <doctest.h>

#include "commands.hpp"
#include "json_io.hpp"
#include "test_support.hpp"

using namespace severi;
using namespace severi::io;
using severi::testing::P;

namespace {

PointConfig generic(std::size_t d, std::uint64_t seed) {
  StratumSpec spec;
  spec.seed = seed;
  return stratum_sample(d, spec);
}

Json run(const std::string& name, Json req) { return api::run_command(name, req).json; }

}  // namespace

TEST_CASE("scalar and form encodings") {
  Form f = Form::from_terms({{3, {2, 0, 0}}, {-1, {0, 1, 1}}});
  f[1] = Scalar(Rational(-2, 7));
  Json j = to_json(f);
  CHECK(j["coeffs"][1] == "-2/7");
  CHECK(j["field"] == "rational");
  CHECK(form_from_json(j) == f);

  Form g = f.reduced_mod(101);
  CHECK(form_from_json(to_json(g)) == g);
  CHECK(to_json(g)["field"] == "fp:101");

  Json ints = Json::parse(R"({"degree": 1, "coeffs": [1, "2", "-3/4"]})");
  CHECK(form_from_json(ints)[2] == Scalar(Rational(-3, 4)));
  CHECK_THROWS_AS(form_from_json(Json::parse(R"({"degree": 2, "coeffs": ["1"]})")), Error);
  try {
    form_from_json(Json::parse(R"({"degree": 1, "coeffs": ["1", "x", "0"]})"));
    FAIL("bad coefficient accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parse);
  }
}

TEST_CASE("point and configuration encodings") {
  ProjPoint p = ProjPoint::of_ints(2, 4, 6);
  CHECK(to_json(p) == Json::array({"1/3", "2/3", "1"}));
  CHECK(point_from_json(to_json(p), Field::rational()) == p);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    PointConfig c = generic(1 + seed % 5, seed);
    CHECK(config_from_json(to_json(c)) == c);
    PointConfig o(c.points(), true);
    CHECK(config_from_json(to_json(o)) == o);
    PointConfig r = c.reduced_mod(10007);
    CHECK(config_from_json(to_json(r)) == r);
  }
  auto bare = config_from_json(Json::parse(R"([["0","0","1"], [1, 0, 1]])"));
  CHECK(bare.size() == 2);
  CHECK(!bare.ordered());
}

TEST_CASE("Plucker and flag encodings") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto cfg = PointConfig(generic(2, seed).points(), true);
    auto pp = gamma(cfg, 3);
    Json j = to_json(pp);
    CHECK(j["coords"].size() == pp.nnz());
    CHECK(plucker_from_json(j) == pp);
    CHECK(to_json(plucker_from_json(j)) == j);
    auto fl = flag(cfg, 3);
    CHECK(flag_from_json(to_json(fl)) == fl);
    auto fp = gamma(cfg.reduced_mod(10007), 3);
    CHECK(plucker_from_json(to_json(fp)) == fp);
  }
  auto pp = gamma(PointConfig({ProjPoint::of_ints(0, 0, 1)}, true), 2);
  // At (0:0:1) the three conditions read off the xz, yz and z^2 coefficients.
  auto coords = to_json(pp)["coords"];
  REQUIRE(coords.size() == 1);
  CHECK(coords.begin().key() == "2,4,5");
}

TEST_CASE("family and certificate encodings") {
  FamilyConfig fam({{P({0}), P({0}), P({1})}, {P({0, 1}), P({0}), P({1})}}, Rational(1, 2));
  Json j = to_json(fam);
  auto back = family_from_json(j);
  CHECK(back.paths() == fam.paths());
  CHECK(back.t_star() == fam.t_star());
  CHECK(to_json(back) == j);

  auto r = synth_nodal(4, 2, 1);
  REQUIRE(r.ok);
  Json c = to_json(r.point->cert);
  auto cert = certificate_from_json(c);
  CHECK(to_json(cert) == c);
  CHECK(verify_certificate(cert).empty());
  auto sp = sigma_from_json(to_json(*r.point));
  CHECK(sp.curve == r.point->curve);
  CHECK(sp.nodes == r.point->nodes);
  CHECK(to_json(sp) == to_json(*r.point));

  auto bad = c;
  bad["witnesses"][0]["discriminant"] = "12345";
  CHECK(!verify_certificate(certificate_from_json(bad)).empty());
}

TEST_CASE("command outputs round-trip and carry a header") {
  Json pts = to_json(PointConfig({ProjPoint::of_ints(0, 0, 1)}, false));
  std::vector<std::pair<std::string, Json>> cmds{
      {"dim", {{"s", 2}, {"points", pts}}},
      {"table", {{"s_max", 4}, {"d_max", 3}, {"seed", 3}}},
      {"kd", {{"d", 2}, {"s_max", 6}, {"seed", 42}, {"samples", 3}}},
      {"plucker", {{"k", 2}, {"points", pts}}},
      {"flag", {{"k", 2}, {"points", pts}}},
      {"limit", {{"k", 3}, {"family", to_json(FamilyConfig({{P({0}), P({0}), P({1})}, {P({0, 1}), P({0}), P({1})}}))}}},
      {"synth", {{"n", 3}, {"d", 1}, {"seed", 7}, {"k", 3}}},
      {"fiber", {{"n", 3}, {"d", 2}, {"k_hat", 3}, {"samples", 2}}},
  };
  for (const auto& [name, req] : cmds) {
    auto out = api::run_command(name, req);
    CHECK(out.verdict == 0);
    CHECK(out.json["header"]["command"] == name);
    CHECK(out.json["header"]["version"] == api::kVersion);
    const std::string text = out.json.dump(2);
    CHECK(Json::parse(text).dump(2) == text);
    CHECK(!out.text.empty());
  }
  auto dim = run("dim", {{"s", 2}, {"points", pts}});
  CHECK(dim["result"]["proj_dim"] == 2);
  auto d = run("dim", {{"s", 2}, {"points", pts}, {"field", "fp:7"}});
  CHECK(d["result"]["config"]["field"] == "fp:7");
  CHECK(run("kd", {{"d", 2}, {"s_max", 8}, {"seed", 42}})["result"]["k_hat"] == 3);

  auto lim = run("limit", {{"k", 3}, {"family", to_json(FamilyConfig({{P({0}), P({0}), P({1})}, {P({0, 1}), P({0}), P({1})}}))}});
  CHECK(plucker_from_json(lim["result"]["limit"]).rows == 6);
  CHECK(lim["result"]["kernel_dim"] == 4);

  auto cert = run("synth", {{"n", 3}, {"d", 1}, {"seed", 7}})["result"]["point"]["certificate"];
  auto v = api::run_command("verify", {{"certificate", cert}});
  CHECK(v.verdict == 0);
  auto cusp = api::run_command(
      "certify", {{"curve", to_json(Form::from_terms({{1, {0, 2, 1}}, {-1, {3, 0, 0}}}))}, {"nodes", pts}});
  CHECK(cusp.verdict == 1);
  CHECK(cusp.json["result"]["failed_check"] == "node");

  CHECK_THROWS_AS(api::run_command("nope", Json::object()), Error);
  CHECK_THROWS_AS(api::run_command("dim", {{"s", 2}}), Error);
}

TEST_CASE("outputs do not depend on the job count") {
  std::vector<std::pair<std::string, Json>> cmds{
      {"kd", {{"d", 3}, {"s_max", 6}, {"seed", 9}, {"samples", 3}}},
      {"synth", {{"n", 4}, {"d", 3}, {"seed", 2}}},
      {"fiber", {{"n", 4}, {"d", 3}, {"k_hat", 5}, {"samples", 3}, {"seed", 1}}},
  };
  for (auto [name, req] : cmds) {
    const std::string one = api::run_command(name, req).json.dump(2);
    req["jobs"] = 4;
    CHECK(api::run_command(name, req).json.dump(2) == one);
  }
}
