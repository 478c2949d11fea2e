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

#include "linalg.hpp"
#include "random.hpp"
#include "severi.hpp"
#include "test_support.hpp"

using namespace severi;

namespace {

Form T(std::initializer_list<std::pair<long, Monomial>> terms) { return Form::from_terms(terms); }

PointConfig nodes_of(std::initializer_list<std::array<long, 3>> pts) {
  std::vector<ProjPoint> v;
  for (const auto& p : pts) v.push_back(ProjPoint::of_ints(p[0], p[1], p[2]));
  return PointConfig(v, false);
}

// y^2 z - x^3 - x^2 z
Form nodal_cubic() { return T({{1, {0, 2, 1}}, {-1, {3, 0, 0}}, {-1, {2, 0, 1}}}); }

bool in_kernel(const Form& f, const PointConfig& nodes) {
  for (const auto& v : condition_matrix(f.degree(), nodes).multiply(f.coeffs()))
    if (!v.is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("genus examples") {
  CHECK(genus(3, 1) == 0);
  CHECK(genus(4, 0) == 3);
  CHECK(genus(5, 6) == 0);
  CHECK_THROWS_AS(genus(2, 1), Error);
  CHECK_THROWS_AS(genus(0, 0), Error);
  for (long n = 1; n <= 12; ++n)
    for (long d = 0; d <= (n - 1) * (n - 2) / 2; ++d) CHECK(genus(n, d) + d == (n - 1) * (n - 2) / 2);
}

TEST_CASE("certify examples") {
  CertifyOptions small;
  small.first_prime = 101;
  auto cert = certify_member(nodal_cubic(), nodes_of({{0, 0, 1}}), small);
  CHECK(cert.certified);
  CHECK(cert.refutation.empty());
  REQUIRE(cert.witnesses.size() == 1);
  CHECK(cert.witnesses[0].discriminant == Scalar(Rational(4)));
  REQUIRE(cert.scans.size() == 2);
  CHECK(cert.scans[0].p == 101);
  CHECK(cert.scans[0].found.size() == 1);
  CHECK(cert.scans[0].clean());
  CHECK(cert.squarefree);
  CHECK(cert.genus == 0);
  CHECK(cert.irreducibility == Irreducibility::certified);
  CHECK(verify_certificate(cert).empty());

  auto cusp = certify_member(T({{1, {0, 2, 1}}, {-1, {3, 0, 0}}}), nodes_of({{0, 0, 1}}));
  CHECK(!cusp.certified);
  CHECK(cusp.failed_check == "node");
  CHECK(cusp.refutation.find("degenerate") != std::string::npos);

  const Form conic = T({{1, {2, 0, 0}}, {1, {0, 2, 0}}, {-1, {0, 0, 2}}});
  auto tangent = certify_member(conic * T({{1, {1, 0, 0}}, {-1, {0, 0, 1}}}),
                                nodes_of({{1, 0, 1}, {-1, 0, 1}}));
  CHECK(!tangent.certified);

  auto split = certify_member(conic * Form::variable(1), nodes_of({{1, 0, 1}, {-1, 0, 1}}));
  CHECK(!split.certified);
  CHECK(split.failed_check == "genus");
  CHECK(split.irreducibility == Irreducibility::refuted);

  auto missing = certify_member(nodal_cubic(), nodes_of({{1, 1, 1}}));
  CHECK(missing.failed_check == "node");
  CHECK(missing.refutation.find("not-on-curve") != std::string::npos);
}

TEST_CASE("reducible curves are refuted") {
  // y * (y^2 z - x^3 + x z^2): a line through three nodes of a smooth cubic.
  const Form cubic = T({{1, {0, 2, 1}}, {-1, {3, 0, 0}}, {1, {1, 0, 2}}});
  auto c = certify_member(Form::variable(1) * cubic, nodes_of({{0, 0, 1}, {1, 0, 1}, {-1, 0, 1}}));
  CHECK(!c.certified);
  CHECK(c.failed_check == "factor");
  REQUIRE(c.factor.has_value());
  CHECK(*c.factor == Form::variable(1));
  CHECK(verify_certificate(c).empty());

  // Conic x z - y^2 times a cubic through six of its points.
  std::vector<std::array<long, 3>> on_conic{{0, 0, 1}};
  for (long t = -2; t <= 2; ++t) on_conic.push_back({1, t, t * t});
  std::vector<ProjPoint> pts;
  for (const auto& p : on_conic) pts.push_back(ProjPoint::of_ints(p[0], p[1], p[2]));
  Matrix ev(6, 10, Field::rational());
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 10; ++j) {
      Form m(3, Field::rational());
      m[j] = Scalar(Rational(1));
      ev(i, j) = evaluate(m, pts[i]);
    }
  auto ker = kernel_basis(ev);
  REQUIRE(ker.size() == 4);
  const Form q = T({{1, {1, 0, 1}}, {-1, {0, 2, 0}}});
  SplitMix64 g(3);
  bool seen = false;
  for (int attempt = 0; attempt < 20 && !seen; ++attempt) {
    Form cub(3, Field::rational());
    for (const auto& v : ker) cub = cub + Form(3, Field::rational(), v).scaled(Scalar(Rational(g.uniform(-9, 9))));
    if (cub.is_zero()) continue;
    auto r = certify_member(q * cub, PointConfig(pts, false));
    if (r.failed_check != "factor") continue;
    seen = true;
    CHECK(r.irreducibility == Irreducibility::refuted);
    CHECK(divide_form(r.curve, *r.factor).has_value());
  }
  CHECK(seen);
}

TEST_CASE("certificates detect tampering") {
  auto cert = certify_member(nodal_cubic(), nodes_of({{0, 0, 1}}));
  REQUIRE(cert.certified);
  auto bad = cert;
  bad.witnesses[0].discriminant = Scalar(Rational(5));
  CHECK(!verify_certificate(bad).empty());
  bad = cert;
  bad.curve = bad.curve + T({{1, {1, 0, 2}}});
  CHECK(!verify_certificate(bad).empty());
  bad = cert;
  bad.scans[1].found.clear();
  CHECK(!verify_certificate(bad).empty());
}

TEST_CASE("synthesis examples") {
  auto r = synth_nodal(3, 1, 7);
  REQUIRE(r.ok);
  CHECK(r.point->cert.irreducibility == Irreducibility::certified);
  CHECK(r.point->nodes == r.config.unordered());
  CHECK(in_kernel(r.point->curve, r.point->nodes));
  CHECK(r.proj_dim == 6);

  auto q = synth_nodal(4, 3, 1);
  REQUIRE(q.ok);
  CHECK(q.point->cert.genus == 0);
  CHECK(verify_certificate(q.point->cert).empty());

  try {
    synth_nodal(2, 2, 0);
    FAIL("negative genus accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::infeasible);
  }
}

TEST_CASE("synthesized points re-verify") {
  const std::vector<std::pair<unsigned, std::size_t>> cases{{3, 1}, {4, 2}, {4, 3}, {5, 4}};
  for (const auto& [n, d] : cases)
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      auto r = synth_nodal(n, d, seed);
      REQUIRE(r.ok);
      CHECK(r.attempts <= 50);
      const auto& sp = *r.point;
      CHECK(sp.nodes.size() == d);
      CHECK(in_kernel(sp.curve, sp.nodes));
      CHECK(verify_certificate(sp.cert).empty());
      CHECK(sp.cert.scans.size() == 2);
      CHECK(sp.cert.irreducibility == Irreducibility::certified);
    }
}

TEST_CASE("synthesis is independent of the job count") {
  SynthOptions four;
  four.jobs = 4;
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    auto a = synth_nodal(4, 2, seed);
    auto b = synth_nodal(4, 2, seed, four);
    CHECK(a.attempts == b.attempts);
    REQUIRE(a.ok == b.ok);
    CHECK(a.point->curve == b.point->curve);
  }
}

TEST_CASE("E and F points") {
  auto r = synth_nodal(3, 1, 7);
  REQUIRE(r.ok);
  auto e = make_E_point(*r.point, 2);
  CHECK(e.plucker == gamma(r.point->nodes, 2));
  CHECK(make_F_point(*r.point, {}, 2).flag == make_F_point(*r.point, {0}, 2).flag);
  CHECK(make_E_point(*r.point, 3).plucker == gamma(r.point->nodes, 3));

  auto r2 = synth_nodal(4, 2, 3);
  REQUIRE(r2.ok);
  auto f01 = make_F_point(*r2.point, {0, 1}, 3);
  auto f10 = make_F_point(*r2.point, {1, 0}, 3);
  CHECK(f01.flag.chain[0] != f10.flag.chain[0]);
  CHECK(f01.flag.chain[1] == f10.flag.chain[1]);
  CHECK(project(f01).plucker == project(f10).plucker);
  CHECK(project(f01).plucker == make_E_point(*r2.point, 3).plucker);
  CHECK_THROWS_AS(make_E_point(*r2.point, 2), Error);
}

TEST_CASE("fiber constancy") {
  auto strata2 = default_strata(2, 5);
  auto a = bundle_fiber_check(3, 2, 3, strata2, 20);
  CHECK(a.constant);
  CHECK(a.expected_proj_dim == 3);
  CHECK(!a.below_critical);

  auto b = bundle_fiber_check(4, 3, 5, default_strata(3, 5), 10);
  CHECK(!b.constant);
  CHECK(b.below_critical);
  for (const auto& w : b.violations) {
    // At d = 3 the 3-collinear stratum is the all-collinear one.
    CHECK((w.stratum == "all-collinear" || w.stratum == "3-collinear"));
    CHECK(w.proj_dim == 6);
    CHECK(w.expected_proj_dim == 5);
  }
  CHECK(b.violations.size() == 20);

  for (unsigned n = 2; n <= 6; ++n) CHECK(bundle_fiber_check(n, 1, 1, default_strata(1, 2), 10).constant);
}
