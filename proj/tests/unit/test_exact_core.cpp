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

#include <string>
#include <vector>

#include "doctest.h"
#include "combinatorics.hpp"
#include "exact.hpp"
#include "linalg.hpp"
#include "random.hpp"
#include "test_support.hpp"

using namespace severi;
using namespace severi::testing;

namespace {

// Condition rows for conics singular at given points, written out by hand.
// Columns: x2 xy xz y2 yz z2.
Matrix conic_rows_at_001() {
  return Matrix::from_ints(3, 6, {0, 0, 1, 0, 0, 0,  //
                                  0, 0, 0, 0, 1, 0,  //
                                  0, 0, 0, 0, 0, 2});
}

Matrix conic_rows_at_001_010() {
  return conic_rows_at_001().stacked(Matrix::from_ints(3, 6, {0, 1, 0, 0, 0, 0,  //
                                                              0, 0, 0, 2, 0, 0,  //
                                                              0, 0, 0, 0, 1, 0}));
}

std::vector<Rational> column(const Vector& v) {
  std::vector<Rational> out;
  for (const auto& s : v) out.push_back(s.rational());
  return out;
}

}  // namespace

TEST_CASE("scalars stay canonical") {
  Scalar q(Rational(6, 4));
  CHECK(q.rational().get_num() == 3);
  CHECK(q.rational().get_den() == 2);
  CHECK(parse_rational("-10/4") == Rational(-5, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);

  Residue r(-3, 7);
  CHECK(r.value() == 4);
  CHECK((r * r.inverse()).value() == 1);
  CHECK_THROWS_AS(Residue(1, 7) + Residue(1, 11), Error);
  CHECK_THROWS_AS(Field::prime(65520), Error);

  Poly p = P({1, 0, 0});
  CHECK(p.degree() == 0);
  CHECK(Poly().is_zero());
  Poly a = P({-1, 0, 1}), b = P({1, 1});
  CHECK(Poly::div_exact(a, b) == P({-1, 1}));
  CHECK(Poly::gcd(a, P({1, 2, 1})) == P({1, 1}));
}

TEST_CASE("field tags parse and print") {
  CHECK(Field::parse("rational") == Field::rational());
  CHECK(Field::parse("fp:101") == Field::prime(101));
  CHECK(Field::prime(101).to_string() == "fp:101");
  CHECK_THROWS_AS(Field::parse("fp:100"), Error);
  CHECK_THROWS_AS(Field::parse("real"), Error);
}

TEST_CASE("rank examples") {
  CHECK(mat_rank(Matrix::identity(3, Field::rational())) == 3);
  CHECK(mat_rank(Matrix(2, 5, Field::rational())) == 0);
  CHECK(mat_rank(conic_rows_at_001_010()) == 5);
  CHECK(mat_rank(Matrix::from_ints(3, 6, {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 2},
                                   Field::prime(65521))) == 3);
}

TEST_CASE("mixed fields are rejected") {
  Matrix m(1, 2, Field::rational());
  m(0, 1) = Scalar(Residue(1, 7));
  CHECK_THROWS_AS(mat_rank(m), Error);
  try {
    mat_rank(m);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::malformed_input);
  }
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(Matrix::identity(3, Field::rational())).empty());

  auto k = kernel_basis(Matrix::from_ints(1, 2, {1, -1}));
  REQUIRE(k.size() == 1);
  CHECK(column(k[0]) == std::vector<Rational>{1, 1});

  auto kc = kernel_basis(conic_rows_at_001());
  REQUIRE(kc.size() == 3);
  CHECK(column(kc[0]) == std::vector<Rational>{1, 0, 0, 0, 0, 0});
  CHECK(column(kc[1]) == std::vector<Rational>{0, 1, 0, 0, 0, 0});
  CHECK(column(kc[2]) == std::vector<Rational>{0, 0, 0, 1, 0, 0});
}

TEST_CASE("minor examples") {
  auto m1 = maximal_minors(Matrix::from_ints(2, 3, {1, 0, 0, 0, 1, 0}));
  REQUIRE(m1.values.size() == 3);
  CHECK(m1.values[0] == Scalar(Rational(1)));
  CHECK(m1.values[1].is_zero());
  CHECK(m1.values[2].is_zero());

  auto m2 = maximal_minors(Matrix::from_ints(1, 2, {3, 6}));
  CHECK(m2.values[0] == Scalar(Rational(3)));
  CHECK(m2.values[1] == Scalar(Rational(6)));

  auto m3 = maximal_minors(conic_rows_at_001());
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < m3.values.size(); ++i) {
    if (m3.values[i].is_zero()) continue;
    ++nonzero;
    CHECK(minor_tuple(3, 6, i) == std::vector<std::size_t>{2, 4, 5});
    CHECK(m3.values[i] == Scalar(Rational(2)));
  }
  CHECK(nonzero == 1);

  CHECK_THROWS_AS(maximal_minors(Matrix::from_ints(3, 2, {1, 0, 0, 1, 1, 1})), Error);
  try {
    maximal_minors(Matrix::from_ints(2, 3, {1, 2, 3, 2, 4, 6}));
    FAIL("rank-deficient input accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::degenerate_input);
  }
}

TEST_CASE("combinatorics helpers agree") {
  std::uint64_t i = 0;
  for_each_combination(7, 3, [&](const std::vector<std::size_t>& c) {
    CHECK(lex_rank(c, 7) == i);
    CHECK(minor_tuple(3, 7, i) == c);
    ++i;
  });
  CHECK(i == binomial(7, 3));
  CHECK(binomial(200, 100) == UINT64_MAX);
  CHECK(sort_sign(std::vector<int>{2, 0, 1}) == 1);
  CHECK(sort_sign(std::vector<int>{1, 0, 2}) == -1);
}

TEST_CASE("property: rank plus nullity, kernel annihilated") {
  SplitMix64 g(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t rows = 1 + g.uniform(0, 5), cols = 1 + g.uniform(0, 7);
    // Low-rank products increase the share of singular inputs.
    std::size_t inner = 1 + g.uniform(0, 5);
    auto a = random_int_matrix(g, rows, inner, 4);
    auto b = random_int_matrix(g, inner, cols, 4);
    std::vector<std::vector<long>> p(rows, std::vector<long>(cols, 0));
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        for (std::size_t k = 0; k < inner; ++k) p[r][c] += a[r][k] * b[k][c];
    for (Field f : {Field::rational(), Field::prime(10007)}) {
      Matrix m = to_matrix(p, f);
      auto ker = kernel_basis(m);
      CHECK(mat_rank(m) + ker.size() == cols);
      for (const auto& v : ker)
        for (const auto& e : m.multiply(v)) CHECK(e.is_zero());
    }
  }
}

TEST_CASE("property: fraction-free determinant equals cofactor expansion") {
  SplitMix64 g(12);
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t n = 1 + g.uniform(0, 5);
    auto a = random_int_matrix(g, n, n, 9);
    if (trial % 5 == 0 && n > 1) a[n - 1] = a[0];  // force some singular cases
    std::vector<std::vector<Rational>> q(n, std::vector<Rational>(n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) q[r][c] = a[r][c];
    CHECK(determinant(to_matrix(a)).rational() == cofactor_det(q));
  }
}

TEST_CASE("property: rational rank equals rank mod large primes") {
  SplitMix64 g(13);
  int disagreements = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t rows = 1 + g.uniform(0, 5), cols = 1 + g.uniform(0, 5);
    auto a = random_int_matrix(g, rows, cols, 1000);
    if (trial % 3 == 0 && rows > 1)
      for (std::size_t c = 0; c < cols; ++c) a[rows - 1][c] = a[0][c] * 3 - (rows > 2 ? a[1][c] : 0);
    std::uint32_t p = next_prime(static_cast<std::uint32_t>(g.uniform(1'000'001, 2'000'000)));
    std::vector<std::vector<std::int64_t>> a64(rows, std::vector<std::int64_t>(cols));
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) a64[r][c] = a[r][c];
    std::size_t rq = mat_rank(to_matrix(a));
    if (rq != mat_rank(to_matrix(a, Field::prime(p)))) ++disagreements;
    if (rq != modular_rank(a64, p)) ++disagreements;
  }
  CHECK(disagreements == 0);
}

TEST_CASE("property: elimination minors equal direct determinants") {
  SplitMix64 g(14);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = 1 + g.uniform(0, 4);
    std::size_t cols = rows + g.uniform(0, 5);
    auto a = random_int_matrix(g, rows, cols, 3);
    // Zero columns and repeated columns exercise the pivot bookkeeping.
    if (cols > 2) {
      for (auto& r : a) r[0] = 0;
      for (auto& r : a) r[cols - 1] = r[1];
    }
    for (Field f : {Field::rational(), Field::prime(65521)}) {
      Matrix m = to_matrix(a, f);
      if (mat_rank(m) < rows) continue;
      auto direct = maximal_minors(m, MinorRoute::direct);
      auto elim = maximal_minors(m, MinorRoute::elimination);
      CHECK(direct.values == elim.values);
      if (f.is_rational()) {
        for (std::size_t i = 0; i < direct.values.size(); ++i) {
          auto t = minor_tuple(rows, cols, i);
          std::vector<std::vector<Rational>> sub(rows, std::vector<Rational>(rows));
          for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t j = 0; j < rows; ++j) sub[r][j] = a[r][t[j]];
          CHECK(direct.values[i].rational() == cofactor_det(sub));
        }
      }
    }
  }
}

TEST_CASE("minors over Q[t] agree between routes and with specialization") {
  SplitMix64 g(15);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t rows = 2 + g.uniform(0, 1), cols = rows + 2 + g.uniform(0, 2);
    Matrix m(rows, cols, Field::poly());
    for (auto r = 0u; r < rows; ++r)
      for (auto c = 0u; c < cols; ++c)
        m(r, c) = Scalar(P({g.uniform(-3, 3), g.uniform(-3, 3), g.uniform(-1, 1)}));
    if (mat_rank(m) < rows) continue;
    auto direct = maximal_minors(m, MinorRoute::direct);
    auto elim = maximal_minors(m, MinorRoute::elimination);
    CHECK(direct.values == elim.values);
    Rational t0(g.uniform(-5, 5), 3);
    t0.canonicalize();
    std::vector<std::vector<Rational>> spec(rows, std::vector<Rational>(cols));
    for (auto r = 0u; r < rows; ++r)
      for (auto c = 0u; c < cols; ++c) spec[r][c] = m(r, c).poly()(t0);
    for (std::size_t i = 0; i < direct.values.size(); ++i) {
      auto t = minor_tuple(rows, cols, i);
      std::vector<std::vector<Rational>> sub(rows, std::vector<Rational>(rows));
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t j = 0; j < rows; ++j) sub[r][j] = spec[r][t[j]];
      CHECK(direct.values[i].poly()(t0) == cofactor_det(sub));
    }
  }
}

TEST_CASE("large minor vectors use the elimination route consistently") {
  SplitMix64 g(16);
  auto a = random_int_matrix(g, 5, 16, 5);  // C(16,5) = 4368 tuples
  Matrix m = to_matrix(a);
  CHECK(maximal_minors(m, MinorRoute::direct).values ==
        maximal_minors(m, MinorRoute::elimination).values);
}
