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
#include <array>
#include <vector>

#include "doctest.h"
#include "grassmann.hpp"
#include "linalg.hpp"
#include "random.hpp"
#include "test_support.hpp"

using namespace severi;
using namespace severi::testing;

namespace {

PointConfig cfg_of(const std::vector<std::array<long, 3>>& pts, Field f = Field::rational()) {
  std::vector<ProjPoint> out;
  for (const auto& p : pts) out.push_back(ProjPoint::of_ints(p[0], p[1], p[2], f));
  return PointConfig(out, true);
}

PointConfig generic(std::size_t d, std::uint64_t seed) {
  StratumSpec s;
  s.seed = seed;
  return stratum_sample(d, s);
}

Form x2() { return Form::from_ints(2, {1, 0, 0, 0, 0, 0}); }
Form xy() { return Form::from_ints(2, {0, 1, 0, 0, 0, 0}); }
Form y2() { return Form::from_ints(2, {0, 0, 0, 1, 0, 0}); }

Matrix kernel_matrix(const Matrix& m) {
  auto k = kernel_basis(m);
  Matrix out(k.size(), m.cols(), m.field());
  for (std::size_t r = 0; r < k.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = k[r][c];
  return out;
}

}  // namespace

TEST_CASE("gamma examples") {
  auto pp = gamma(cfg_of({{0, 0, 1}}), 2);
  REQUIRE(pp.nnz() == 1);
  CHECK(pp.tuple(0) == std::vector<std::size_t>{2, 4, 5});
  CHECK(pp.values[0] == 1);
  CHECK(pp.rows == 3);
  CHECK(pp.cols == 6);
  CHECK(gamma(cfg_of({{0, 0, 7}}), 2) == pp);

  auto a = gamma(cfg_of({{1, 0, 1}, {0, 1, 1}}), 3);
  auto b = gamma(cfg_of({{0, 1, 1}, {1, 0, 1}}), 3);
  CHECK(a == b);
  CHECK(a.rows == 6);
  CHECK(a.cols == 10);

  try {
    gamma(cfg_of({{1, 0, 1}, {0, 1, 1}}), 2);
    FAIL("degenerate configuration accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::degenerate_configuration);
    CHECK(std::string(e.what()).find("rank 5") != std::string::npos);
  }
}

TEST_CASE("gamma normalization") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto pp = gamma(generic(2, seed), 3);
    Integer g = 0;
    for (const auto& v : pp.values) {
      CHECK(sgn(v) != 0);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    CHECK(g == 1);
    CHECK(sgn(pp.values.front()) > 0);
    CHECK(std::is_sorted(pp.keys.begin(), pp.keys.end()));
  }
}

TEST_CASE("flag examples") {
  auto one = cfg_of({{2, 3, 1}});
  auto f1 = flag(one, 2);
  REQUIRE(f1.chain.size() == 1);
  CHECK(f1.chain[0] == gamma(one, 2));

  auto f = flag(cfg_of({{1, 0, 1}, {0, 1, 1}}), 3);
  auto g = flag(cfg_of({{0, 1, 1}, {1, 0, 1}}), 3);
  CHECK(f.chain[0] == gamma(cfg_of({{1, 0, 1}}), 3));
  CHECK(f.chain[0] != g.chain[0]);
  CHECK(f.chain[1] == g.chain[1]);

  auto f3 = flag(generic(3, 5), 5);
  CHECK(f3.chain.size() == 3);
  CHECK(check_flag(f3).empty());

  try {
    flag(cfg_of({{1, 0, 1}, {0, 1, 1}, {1, 1, 1}}), 2);
    FAIL("degenerate prefix accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::degenerate_configuration);
    CHECK(std::string(e.what()).find("length 2") != std::string::npos);
  }
}

TEST_CASE("subspace equality examples") {
  CHECK(subspace_equal({x2(), xy()}, {x2() + xy(), xy()}));
  CHECK_FALSE(subspace_equal({x2()}, {y2()}));
  CHECK_THROWS_AS(subspace_equal({x2()}, {x2(), y2()}), Error);

  // Kernel in a permuted monomial order, mapped back.
  Matrix m = condition_matrix(3, generic(2, 3));
  std::vector<std::size_t> perm(m.cols());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = (i * 3 + 1) % perm.size();
  Matrix mp = m.columns(perm);
  std::vector<Form> orig, back;
  for (auto& v : kernel_basis(m)) orig.emplace_back(3, Field::rational(), v);
  for (auto& v : kernel_basis(mp)) {
    std::vector<Scalar> w(v.size());
    for (std::size_t i = 0; i < perm.size(); ++i) w[perm[i]] = v[i];
    back.emplace_back(3, Field::rational(), w);
  }
  CHECK(subspace_equal(orig, back));
}

TEST_CASE("reconstruction examples") {
  auto pp = gamma(cfg_of({{0, 0, 1}}), 2);
  auto rec = reconstruct_subspace(pp);
  CHECK(rec.decomposable);
  CHECK(row_spaces_equal(rec.rows, Matrix::from_ints(3, 6, {0, 0, 1, 0, 0, 0,  //
                                                            0, 0, 0, 0, 1, 0,  //
                                                            0, 0, 0, 0, 0, 1})));

  Scalar one(Rational(1));
  auto bad2 = plucker_from_coords(2, 5, {{{0, 1}, one}, {{2, 3}, one}});
  CHECK_FALSE(reconstruct_subspace(bad2).decomposable);
  auto bad3 = plucker_from_coords(3, 5, {{{0, 1, 2}, one}, {{0, 3, 4}, one}});
  CHECK_FALSE(reconstruct_subspace(bad3).decomposable);
  auto good = plucker_from_coords(2, 5, {{{0, 1}, one}, {{0, 2}, Scalar(Rational(-3))}});
  CHECK(reconstruct_subspace(good).decomposable);

  CHECK_THROWS_AS(plucker_from_coords(2, 5, {{{1, 0}, one}}), Error);
  CHECK_THROWS_AS(plucker_from_coords(2, 5, {{{0, 1}, Scalar(Rational(0))}}), Error);
}

TEST_CASE("property: S_d invariance, flag tail, reconstruction") {
  for (std::size_t d = 1; d <= 2; ++d) {
    const unsigned k = d == 1 ? 2 : 3;
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      auto cfg = generic(d, derive_seed(seed, d));
      auto base = gamma(cfg, k);
      std::vector<std::size_t> sigma(d);
      for (std::size_t i = 0; i < d; ++i) sigma[i] = i;
      while (std::next_permutation(sigma.begin(), sigma.end())) CHECK(gamma(cfg.permuted(sigma), k) == base);
      CHECK(flag(cfg, k).chain.back() == base);
      auto rec = reconstruct_subspace(base);
      CHECK(rec.decomposable);
      Matrix m = condition_matrix(k, cfg);
      CHECK(row_spaces_equal(rec.rows, m));
      CHECK(row_spaces_equal(kernel_matrix(rec.rows), kernel_matrix(m)));
    }
  }
  for (std::uint64_t seed = 0; seed < 2; ++seed) {
    auto cfg = generic(3, derive_seed(seed, 3));
    auto base = gamma(cfg, 5);
    CHECK(gamma(cfg.permuted({2, 0, 1}), 5) == base);
    CHECK(row_spaces_equal(reconstruct_subspace(base, false).rows, condition_matrix(5, cfg)));
  }
}

TEST_CASE("property: injectivity and separation across degrees") {
  int separated = 0, same = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto a = generic(2, derive_seed(seed, 100));
    auto b = seed % 4 == 0 ? a.permuted({1, 0}) : generic(2, derive_seed(seed, 200));
    bool distinct = !(a.unordered() == b.unordered());
    bool sep3 = gamma(a, 3) != gamma(b, 3);
    bool sep4 = gamma(a, 4) != gamma(b, 4);
    CHECK(sep3 == distinct);
    CHECK(sep3 == sep4);
    (distinct ? separated : same)++;
  }
  CHECK(separated > 0);
  CHECK(same > 0);
  // d = 1: injective as soon as the system is nonempty.
  CHECK(gamma(generic(1, 1), 2) != gamma(generic(1, 2), 2));
  CHECK(gamma(generic(1, 1), 1) == gamma(generic(1, 2), 1));
}

TEST_CASE("property: flag rank ledger") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto f = flag(generic(2, seed), 4);
    CHECK(check_flag(f).empty());
    for (std::size_t i = 0; i < f.chain.size(); ++i) {
      Matrix w = reconstruct_subspace(f.chain[i], false).rows;
      CHECK(w.rows() == 3 * (i + 1));
      CHECK(kernel_basis(w).size() == monomial_count(4) - 3 * (i + 1));
    }
  }
}

TEST_CASE("prime-field gamma matches the reduction of the rational one") {
  const std::uint32_t p = 65521;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto cfg = generic(2, seed);
    auto q = gamma(cfg, 3);
    auto fp = gamma(cfg.reduced_mod(p), 3);
    std::vector<std::uint64_t> keys;
    std::vector<Scalar> vals;
    for (std::size_t i = 0; i < q.nnz(); ++i) {
      keys.push_back(q.keys[i]);
      vals.push_back(Scalar(Residue::from_rational(Rational(q.values[i]), p)));
    }
    CHECK(normalize_plucker(q.rows, q.cols, Field::prime(p), keys, vals) == fp);
  }
}
