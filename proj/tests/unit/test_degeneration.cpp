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

#include "degeneration.hpp"
#include "linalg.hpp"
#include "random.hpp"
#include "test_support.hpp"

using namespace severi;
using severi::testing::P;

namespace {

PolyPoint linear_path(const std::array<long, 3>& a, const std::array<long, 3>& b) {
  return {P({a[0], b[0]}), P({a[1], b[1]}), P({a[2], b[2]})};
}

std::array<long, 3> draw(SplitMix64& g, long bound = 6) {
  for (;;) {
    std::array<long, 3> v{g.uniform(-bound, bound), g.uniform(-bound, bound),
                          g.uniform(-bound, bound)};
    if (v[0] || v[1] || v[2]) return v;
  }
}

bool annihilates(const Matrix& rows, const Form& f) {
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    Scalar acc = Scalar::zero(Field::rational());
    for (std::size_t c = 0; c < rows.cols(); ++c) acc = acc + rows(r, c) * f[c];
    if (!acc.is_zero()) return false;
  }
  return true;
}

// Oracle: every maximal minor over Q[t] at t*, reduced to its t^v coefficient
// for the smallest valuation v.
std::pair<PluckerPoint, int> minor_limit(const FamilyConfig& fam, unsigned k) {
  std::vector<PolyPoint> shifted;
  for (const auto& p : fam.paths())
    shifted.push_back({p[0].translated(fam.t_star()), p[1].translated(fam.t_star()),
                       p[2].translated(fam.t_star())});
  auto sm = sparse_maximal_minors(condition_matrix_t(k, FamilyConfig(shifted)));
  int v = -1;
  for (const auto& q : sm.values)
    if (v < 0 || q.poly().valuation() < v) v = q.poly().valuation();
  std::vector<Scalar> low;
  for (const auto& q : sm.values) low.emplace_back(q.poly().coeff(v));
  return {normalize_plucker(sm.rows, sm.cols, Field::rational(), sm.keys, low), v};
}

Form mono(unsigned x, unsigned y, unsigned z) { return Form::from_terms({{1, {x, y, z}}}); }

}  // namespace

TEST_CASE("degeneration examples") {
  FamilyConfig one({{P({0, 1}), P({0}), P({1})}});
  auto r1 = limit_gamma(one, 2);
  CHECK(r1.interior);
  REQUIRE(r1.matches_gamma.has_value());
  CHECK(*r1.matches_gamma);
  CHECK(r1.limit == gamma(PointConfig({ProjPoint::of_ints(0, 0, 1)}, true), 2));

  FamilyConfig two({{P({0}), P({0}), P({1})}, {P({0, 1}), P({0}), P({1})}});
  auto r2 = limit_gamma(two, 3);
  CHECK(r2.decomposable);
  CHECK(!r2.interior);
  CHECK(!r2.matches_gamma.has_value());
  CHECK(r2.kernel_dim == 4);
  CHECK(r2.generic_kernel_dim == 4);
  CHECK(r2.limit.rows == 6);
  REQUIRE(r2.collisions.size() == 1);
  CHECK(r2.collisions[0].point == ProjPoint::of_ints(0, 0, 1));
  CHECK(r2.collisions[0].singular_at_point);

  // The limiting cubics are singular at the origin with no x^2, xy, x^3 terms.
  auto rec = reconstruct_subspace(r2.limit);
  for (const auto& f : {mono(0, 2, 1), mono(2, 1, 0), mono(1, 2, 0), mono(0, 3, 0)})
    CHECK(annihilates(rec.rows, f));
  CHECK(!annihilates(rec.rows, mono(3, 0, 0)));
  CHECK(!annihilates(rec.rows, mono(1, 1, 1)));

  CHECK(limit_gamma(two.reparameterized(P({0, 0, 1})), 3).limit == r2.limit);
  CHECK(limit_gamma(two.permuted({1, 0}), 3).limit == r2.limit);
}

TEST_CASE("family validation") {
  CHECK_THROWS_AS(FamilyConfig({{P({0}), P({0}), P({0})}}), Error);
  try {
    FamilyConfig({{P({0, 1}), P({0}), P({1})}, {P({0, 2}), P({0}), P({2})}});
    FAIL("coincident paths accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::diagonal_violation);
  }
  FamilyConfig scaled({{P({0, 0, 2}), P({0, 4}), P({0, 6})}});
  CHECK(scaled.paths()[0][0] == P({0, 1}));
  CHECK(scaled.paths()[0][1] == P({2}));
  CHECK(scaled.paths()[0][2] == P({3}));

  FamilyConfig two({{P({0}), P({0}), P({1})}, {P({0, 1}), P({0}), P({1})}});
  try {
    limit_gamma(two, 2);
    FAIL("degenerate family accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::degenerate_family);
  }
  CHECK_THROWS_AS(two.specialize(Rational(0)), Error);
  CHECK(two.specialize(Rational(1)).size() == 2);
}

TEST_CASE("interior limits agree with gamma") {
  SplitMix64 g(11);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 1 + static_cast<std::size_t>(trial % 2);
    const unsigned k = d == 1 ? 2u : 3u + static_cast<unsigned>(trial % 4 == 1);
    std::vector<PolyPoint> paths;
    for (std::size_t i = 0; i < d; ++i) paths.push_back(linear_path(draw(g), draw(g)));
    Rational ts(g.uniform(-3, 3), g.uniform(1, 3));
    ts.canonicalize();
    FamilyConfig fam;
    try {
      fam = FamilyConfig(paths, ts);
      fam.specialize(ts);
      (void)gamma(fam.specialize(ts), k);
    } catch (const Error&) {
      continue;
    }
    auto rep = limit_gamma(fam, k);
    CHECK(rep.valuation == 0);
    CHECK(rep.interior);
    REQUIRE(rep.matches_gamma.has_value());
    CHECK(*rep.matches_gamma);
    CHECK(rep.decomposable);
    ++checked;
  }
  CHECK(checked > 25);
}

TEST_CASE("collision limits") {
  SplitMix64 g(23);
  int checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned k = 3u + static_cast<unsigned>(trial % 2);
    auto a = draw(g);
    std::vector<PolyPoint> paths{linear_path(a, draw(g)), linear_path(a, draw(g))};
    FamilyConfig fam;
    try {
      fam = FamilyConfig(paths);
    } catch (const Error&) {
      continue;
    }
    LimitReport rep;
    try {
      rep = limit_gamma(fam, k);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::degenerate_family);
      continue;
    }
    CHECK(!rep.interior);
    CHECK(rep.decomposable);
    CHECK(rep.kernel_dim == rep.generic_kernel_dim);
    REQUIRE(rep.collisions.size() == 1);
    CHECK(rep.collisions[0].singular_at_point);

    CHECK(limit_gamma(fam.permuted({1, 0}), k).limit == rep.limit);
    CHECK(limit_gamma(fam.reparameterized(P({0, 2, 1})), k).limit == rep.limit);
    CHECK(limit_gamma(fam.reparameterized(P({0, 0, 0, -1})), k).limit == rep.limit);

    // Moving the parameter: the same family shifted so the collision sits at t = 2.
    std::vector<PolyPoint> moved;
    for (const auto& p : fam.paths())
      moved.push_back({p[0].translated(-2), p[1].translated(-2), p[2].translated(-2)});
    CHECK(limit_gamma(FamilyConfig(moved, 2), k).limit == rep.limit);

    auto fl = limit_flag(fam, k);
    CHECK(fl.nested);
    REQUIRE(fl.flag.chain.size() == 2);
    CHECK(fl.flag.chain[1] == rep.limit);
    CHECK(fl.flag.chain[0] == gamma(PointConfig({fam.points_at(0)[0]}, true), k));
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("tangential collision with a fixed point") {
  // A point sliding along the tangent of the first path meeting it at t = 0.
  FamilyConfig fam({{P({0}), P({0, 1, 3}), P({1})}, {P({0, 2}), P({0, 0, 1}), P({1})}});
  auto rep = limit_gamma(fam, 4);
  CHECK(rep.decomposable);
  CHECK(rep.collisions.size() == 1);
  CHECK(rep.collisions[0].singular_at_point);
  CHECK(limit_flag(fam, 4).nested);
}

TEST_CASE("row-space limit agrees with the minor oracle") {
  SplitMix64 g(5);
  int checked = 0;
  for (int trial = 0; trial < 24; ++trial) {
    auto a = draw(g, 4);
    std::vector<PolyPoint> paths;
    if (trial % 3 == 0) {
      paths = {linear_path(a, draw(g, 4)), linear_path(a, draw(g, 4))};
    } else {
      auto b = draw(g, 4);
      PolyPoint quad = {P({a[0], b[0], g.uniform(-3, 3)}), P({a[1], b[1], g.uniform(-3, 3)}),
                        P({a[2], b[2], g.uniform(-3, 3)})};
      paths = {linear_path(a, {0, 0, 0}), quad};
    }
    const unsigned k = 3;
    FamilyConfig fam;
    LimitReport rep;
    try {
      fam = FamilyConfig(paths);
      rep = limit_gamma(fam, k);
    } catch (const Error&) {
      continue;
    }
    auto [lim, v] = minor_limit(fam, k);
    CHECK(rep.limit.keys == lim.keys);
    CHECK(rep.limit.values == lim.values);
    CHECK(rep.valuation == v);
    ++checked;
  }
  CHECK(checked > 15);
}

TEST_CASE("three-point collision at the critical degree") {
  FamilyConfig fam({{P({0}), P({0}), P({1})},
                    {P({0, 1}), P({0, 2}), P({1})},
                    {P({3}), P({-1}), P({1})}});
  auto rep = limit_gamma(fam, 5);
  CHECK(rep.decomposable);
  CHECK(rep.kernel_dim == rep.generic_kernel_dim);
  REQUIRE(rep.collisions.size() == 1);
  CHECK(rep.collisions[0].i == 0);
  CHECK(rep.collisions[0].j == 1);
  CHECK(rep.collisions[0].singular_at_point);
  auto fl = limit_flag(fam, 5);
  CHECK(fl.nested);
  CHECK(fl.flag.chain[0] == gamma(PointConfig({ProjPoint::of_ints(0, 0, 1)}, true), 5));
}
