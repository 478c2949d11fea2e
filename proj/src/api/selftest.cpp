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

#include <algorithm>
#include <numeric>

#include "commands.hpp"
#include "linalg.hpp"
#include "parallel.hpp"
#include "random.hpp"

namespace severi::api {

using io::Json;

namespace {

struct Suite {
  explicit Suite(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (notes.size() < 5) notes.push_back(what);
  }
};

PointConfig generic(std::size_t d, std::uint64_t seed) {
  StratumSpec spec;
  spec.seed = seed;
  return stratum_sample(d, spec);
}

Suite formulas() {
  Suite s{"formulas"};
  for (unsigned n = 1; n <= 12; ++n) {
    s.check(projective_dim(n) + 1 == static_cast<long>(monomials(n).size()), "N_s at s = " + std::to_string(n));
    const long pa = static_cast<long>(n - 1) * (n - 2) / 2;
    for (long d = 0; d <= pa; ++d) s.check(genus(n, d) + d == pa, "genus bookkeeping");
  }
  return s;
}

Suite euler(std::uint64_t seed) {
  Suite s{"euler"};
  SplitMix64 g(seed);
  const Form x = Form::variable(0), y = Form::variable(1), z = Form::variable(2);
  for (int i = 0; i < 200; ++i) {
    const unsigned deg = 1 + static_cast<unsigned>(i % 8);
    std::vector<long> c(monomial_count(deg));
    for (auto& v : c) v = g.uniform(-1000, 1000);
    const Form f = Form::from_ints(deg, c);
    const auto p = partials(f);
    s.check(x * p[0] + y * p[1] + z * p[2] == f.scaled(Scalar(Rational(deg))), "Euler relation");
  }
  return s;
}

Suite prime_rank(std::uint64_t seed, unsigned jobs) {
  Suite s{"prime_rank"};
  struct Case {
    unsigned deg;
    std::size_t d;
    std::uint64_t seed;
  };
  std::vector<Case> cases;
  for (unsigned deg = 1; deg <= 5; ++deg)
    for (std::size_t d = 1; d <= 4; ++d)
      for (std::uint64_t t = 0; t < 3; ++t) cases.push_back({deg, d, derive_seed(seed, deg * 100 + d * 10 + t)});
  auto ok = parallel_map<int>(jobs, cases.size(), [&](std::size_t i) {
    const auto& c = cases[i];
    const PointConfig cfg = generic(c.d, c.seed);
    const std::size_t q = mat_rank(condition_matrix(c.deg, cfg));
    int agree = 1;
    for (std::uint32_t p : {10007u, 10009u})
      agree &= mat_rank(condition_matrix(c.deg, cfg.reduced_mod(p))) == q;
    return agree;
  });
  for (int v : ok) s.check(v == 1, "rank over Q differs from rank mod p");
  return s;
}

Suite special_systems(std::uint64_t seed) {
  Suite s{"special_systems"};
  for (std::uint64_t t = 0; t < 5; ++t) {
    auto a = linear_system(2, generic(2, derive_seed(seed, t)));
    s.check(a.proj_dim == 0 && a.superabundance == 1, "(2, 2) superabundance");
    auto b = linear_system(4, generic(5, derive_seed(seed, 100 + t)));
    s.check(b.proj_dim == 0 && b.superabundance == 1, "(4, 5) superabundance");
  }
  return s;
}

Suite gamma_probes(std::uint64_t seed) {
  Suite s{"gamma"};
  std::vector<PluckerPoint> seen;
  for (std::uint64_t t = 0; t < 10; ++t) {
    PointConfig cfg = generic(2, derive_seed(seed, t));
    auto a = gamma(cfg, 3);
    s.check(a == gamma(cfg.permuted({1, 0}), 3), "S_2 invariance");
    auto rec = reconstruct_subspace(a, true);
    s.check(rec.decomposable && row_spaces_equal(rec.rows, condition_matrix(3, cfg)), "reconstruction");
    for (const auto& b : seen) s.check(a != b, "injectivity");
    seen.push_back(std::move(a));
  }
  return s;
}

Suite degeneration() {
  Suite s{"degeneration"};
  auto P = [](std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return Poly(std::move(v));
  };
  FamilyConfig fam({{P({0}), P({0}), P({1})}, {P({0, 1}), P({0}), P({1})}});
  auto r = limit_gamma(fam, 3);
  s.check(r.decomposable && r.kernel_dim == 4, "collision limit shape");
  s.check(!r.collisions.empty() && r.collisions[0].singular_at_point, "collision containment");
  s.check(limit_gamma(fam.permuted({1, 0}), 3).limit == r.limit, "permutation invariance");
  s.check(limit_gamma(fam.reparameterized(P({0, 0, 1})), 3).limit == r.limit, "reparameterization");
  for (long t0 : {1L, 2L, -3L}) {
    auto i = limit_gamma(fam.with_t_star(Rational(t0)), 3);
    s.check(i.matches_gamma.value_or(false), "interior consistency");
  }
  s.check(limit_flag(fam, 3).nested, "flag nesting");
  return s;
}

Suite synthesis(std::uint64_t seed, unsigned jobs) {
  Suite s{"synthesis"};
  SynthOptions o;
  o.jobs = jobs;
  for (auto [n, d] : {std::pair{3u, std::size_t{1}}, std::pair{4u, std::size_t{2}}}) {
    auto r = synth_nodal(n, d, seed, o);
    s.check(r.ok, "synthesis succeeded");
    if (!r.ok) continue;
    s.check(verify_certificate(r.point->cert).empty(), "certificate reproduces");
    auto e = make_E_point(*r.point, n);
    s.check(e.plucker == project(make_F_point(*r.point, {}, n)).plucker, "E = F / S_d");
  }
  return s;
}

Suite fiber(std::uint64_t seed, unsigned jobs) {
  Suite s{"fiber"};
  s.check(bundle_fiber_check(3, 2, 3, default_strata(2, seed), 5, jobs).constant, "fiber constancy (2, 3)");
  s.check(!bundle_fiber_check(4, 3, 5, default_strata(3, seed), 3, jobs).constant, "violation below k_hat");
  return s;
}

}  // namespace

CommandOutput run_selftest(std::uint64_t seed, unsigned jobs) {
  std::vector<Suite> suites;
  suites.push_back(formulas());
  suites.push_back(euler(derive_seed(seed, 1)));
  suites.push_back(prime_rank(derive_seed(seed, 2), jobs));
  suites.push_back(special_systems(derive_seed(seed, 3)));
  suites.push_back(gamma_probes(derive_seed(seed, 4)));
  suites.push_back(degeneration());
  suites.push_back(synthesis(derive_seed(seed, 5), jobs));
  suites.push_back(fiber(derive_seed(seed, 6), jobs));
  CommandOutput out;
  Json list = Json::array();
  std::size_t checks = 0, failures = 0;
  for (const auto& s : suites) {
    checks += s.checks;
    failures += s.failures;
    list.push_back(Json{{"name", s.name}, {"checks", s.checks}, {"failures", s.failures}, {"notes", s.notes}});
    out.text += s.name + ": " + std::to_string(s.checks - s.failures) + "/" + std::to_string(s.checks) + "\n";
  }
  out.json = Json{{"checks", checks}, {"failures", failures}, {"suites", std::move(list)}};
  out.verdict = failures ? 1 : 0;
  return out;
}

}  // namespace severi::api
