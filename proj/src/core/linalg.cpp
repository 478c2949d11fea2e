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

#include "linalg.hpp"

#include <algorithm>

namespace severi {

Dense<Integer> integer_rows(const Matrix& m, std::vector<Integer>* row_scale) {
  m.check_homogeneous();
  if (!m.field().is_rational()) fail(ErrorCode::mode, "integer view needs a rational matrix");
  Dense<Integer> out(m.rows(), m.cols(), Integer(0));
  if (row_scale) row_scale->assign(m.rows(), Integer(1));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& d = m(r, c).rational().get_den();
      if (d != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& q = m(r, c).rational();
      if (sgn(q) == 0) continue;
      out(r, c) = q.get_num() * (l / q.get_den());
    }
    if (row_scale) (*row_scale)[r] = l;
  }
  return out;
}

Dense<Residue> residue_dense(const Matrix& m) {
  m.check_homogeneous();
  if (!m.field().is_prime()) fail(ErrorCode::mode, "residue view needs a prime-field matrix");
  Dense<Residue> out(m.rows(), m.cols(), Residue(0, m.field().modulus));
  for (std::size_t i = 0; i < m.entries().size(); ++i) out.a[i] = m.entries()[i].residue();
  return out;
}

Dense<Poly> poly_dense(const Matrix& m) {
  m.check_homogeneous();
  if (!m.field().is_poly()) fail(ErrorCode::mode, "polynomial view needs a Q[t] matrix");
  Dense<Poly> out(m.rows(), m.cols(), Poly());
  for (std::size_t i = 0; i < m.entries().size(); ++i) out.a[i] = m.entries()[i].poly();
  return out;
}

bool make_primitive(std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) return false;
  std::size_t first = 0;
  while (sgn(v[first]) == 0) ++first;
  if (sgn(v[first]) < 0) g = -g;
  if (g != 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return true;
}

std::size_t mat_rank(const Matrix& m) {
  m.check_homogeneous();
  switch (m.field().kind) {
    case Field::Kind::rational:
      return fraction_free_reduce(integer_rows(m), IntegerRing{}, false).rank;
    case Field::Kind::prime:
      return fraction_free_reduce(residue_dense(m), PrimeRing{m.field().modulus}, false).rank;
    case Field::Kind::poly:
      return fraction_free_reduce(poly_dense(m), PolyRing{}, false).rank;
  }
  return 0;
}

namespace {

template <class Ring, class ToScalar>
std::vector<Vector> kernel_from(const Echelon<Ring>& e, std::size_t cols, const Ring& R,
                                ToScalar&& to_scalar, bool over_field) {
  std::vector<Vector> basis;
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<typename Ring::T> v(cols, R.zero());
    v[f] = e.scale;
    for (std::size_t r = 0; r < e.rank; ++r) v[e.pivots[r]] = R.negate(e.m(r, f));
    Vector out;
    out.reserve(cols);
    for (auto& x : v) out.push_back(to_scalar(x));
    if (over_field) {
      Scalar inv = Scalar(out[f]).inverse();
      for (auto& x : out)
        if (!x.is_zero()) x = x * inv;
    }
    basis.push_back(std::move(out));
  }
  return basis;
}

}  // namespace

std::vector<Vector> kernel_basis(const Matrix& m) {
  m.check_homogeneous();
  switch (m.field().kind) {
    case Field::Kind::rational: {
      auto e = fraction_free_reduce(integer_rows(m), IntegerRing{}, true);
      if (e.rank == 0) e.scale = 1;
      return kernel_from(e, m.cols(), IntegerRing{},
                         [](const Integer& z) { return Scalar(Rational(z)); }, true);
    }
    case Field::Kind::prime: {
      PrimeRing R{m.field().modulus};
      auto e = fraction_free_reduce(residue_dense(m), R, true);
      if (e.rank == 0) e.scale = R.one();
      return kernel_from(e, m.cols(), R, [](const Residue& z) { return Scalar(z); }, true);
    }
    case Field::Kind::poly: {
      auto e = fraction_free_reduce(poly_dense(m), PolyRing{}, true);
      if (e.rank == 0) e.scale = Poly(1);
      auto basis = kernel_from(e, m.cols(), PolyRing{},
                               [](const Poly& z) { return Scalar(z); }, false);
      // Primitive: divide by the monic content, then make the first nonzero
      // entry monic.
      for (auto& v : basis) {
        Poly g;
        for (auto& x : v) g = Poly::gcd(g, x.poly());
        Rational lead = 0;
        for (auto& x : v) {
          if (x.is_zero()) continue;
          Poly q = Poly::div_exact(x.poly(), g);
          if (lead == 0) lead = q.leading();
          x = Scalar(q * Poly(Rational(1) / lead));
        }
      }
      return basis;
    }
  }
  return {};
}

Scalar determinant(const Matrix& m) {
  m.check_homogeneous();
  if (m.rows() != m.cols()) fail(ErrorCode::shape, "determinant of a non-square matrix");
  switch (m.field().kind) {
    case Field::Kind::rational: {
      std::vector<Integer> scale;
      auto d = fraction_free_det(integer_rows(m, &scale), IntegerRing{});
      Rational q(d);
      for (const auto& s : scale) q /= s;
      return q;
    }
    case Field::Kind::prime:
      return fraction_free_det(residue_dense(m), PrimeRing{m.field().modulus});
    case Field::Kind::poly:
      return fraction_free_det(poly_dense(m), PolyRing{});
  }
  return Scalar();
}

std::vector<std::size_t> minor_tuple(std::size_t rows, std::size_t cols, std::uint64_t index) {
  std::vector<std::size_t> t;
  std::size_t v = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    while (true) {
      std::uint64_t block = binomial(cols - v - 1, rows - i - 1);
      if (index < block) break;
      index -= block;
      ++v;
    }
    t.push_back(v);
    ++v;
  }
  return t;
}

namespace {

template <class Ring>
std::vector<typename Ring::T> minors_direct(const Dense<typename Ring::T>& a, const Ring& R) {
  std::vector<typename Ring::T> out;
  out.reserve(binomial(a.cols, a.rows));
  for_each_combination(a.cols, a.rows, [&](const std::vector<std::size_t>& t) {
    Dense<typename Ring::T> sub(a.rows, a.rows, R.zero());
    for (std::size_t r = 0; r < a.rows; ++r)
      for (std::size_t j = 0; j < t.size(); ++j) sub(r, j) = a(r, t[j]);
    out.push_back(fraction_free_det(std::move(sub), R));
  });
  return out;
}

template <class Ring>
std::vector<typename Ring::T> minors_elimination(const Dense<typename Ring::T>& a,
                                                 const Ring& R) {
  std::vector<typename Ring::T> out(binomial(a.cols, a.rows), R.zero());
  auto e = fraction_free_reduce(a, R, true);
  for_each_maximal_minor(e, R, [&](const std::vector<std::size_t>& t, typename Ring::T&& q,
                                   int sign) {
    out[lex_rank(t, a.cols)] = sign > 0 ? std::move(q) : R.negate(q);
  });
  return out;
}

template <class Ring>
std::vector<typename Ring::T> minors_typed(const Dense<typename Ring::T>& a, const Ring& R,
                                           MinorRoute route) {
  std::uint64_t count = binomial(a.cols, a.rows);
  if (count > kMaxMinorCount)
    fail(ErrorCode::too_large, std::to_string(count) + " maximal minors requested");
  if (route == MinorRoute::automatic)
    route = count > kDirectMinorThreshold ? MinorRoute::elimination : MinorRoute::direct;
  return route == MinorRoute::direct ? minors_direct(a, R) : minors_elimination(a, R);
}

template <class Ring, class Convert>
SparseMinors sparse_typed(const Dense<typename Ring::T>& a, const Ring& R, Convert&& convert) {
  using T = typename Ring::T;
  std::uint64_t count = binomial(a.cols, a.rows);
  if (count > kMaxMinorCount)
    fail(ErrorCode::too_large, std::to_string(count) + " maximal minors requested");
  auto e = fraction_free_reduce(a, R, true);
  if (e.rank < a.rows)
    fail(ErrorCode::degenerate_input, "rank " + std::to_string(e.rank) + " < " +
                                          std::to_string(a.rows) + ": all maximal minors vanish");
  std::vector<std::uint64_t> keys;
  std::vector<T> vals;
  keys.reserve(count);
  vals.reserve(count);
  for_each_maximal_minor(e, R, [&](const std::vector<std::size_t>& t, T&& q, int sign) {
    if (R.is_zero(q)) return;
    keys.push_back(lex_rank(t, a.cols));
    vals.push_back(sign > 0 ? std::move(q) : R.negate(q));
  });
  std::vector<std::size_t> order(keys.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return keys[x] < keys[y]; });
  SparseMinors out{a.rows, a.cols, {}, {}};
  out.keys.reserve(order.size());
  out.values.reserve(order.size());
  for (auto i : order) {
    out.keys.push_back(keys[i]);
    out.values.push_back(convert(vals[i]));
  }
  return out;
}

}  // namespace

SparseMinors sparse_maximal_minors(const Matrix& m) {
  m.check_homogeneous();
  if (m.rows() > m.cols())
    fail(ErrorCode::shape, "maximal minors need rows <= cols (got " +
                               std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ")");
  switch (m.field().kind) {
    case Field::Kind::rational: {
      std::vector<Integer> scale;
      auto a = integer_rows(m, &scale);
      Integer denom = 1;
      for (const auto& s : scale) denom *= s;
      return sparse_typed(a, IntegerRing{}, [&](const Integer& z) {
        return denom == 1 ? Scalar(Rational(z)) : Scalar(Rational(z, denom));
      });
    }
    case Field::Kind::prime:
      return sparse_typed(residue_dense(m), PrimeRing{m.field().modulus},
                          [](const Residue& z) { return Scalar(z); });
    case Field::Kind::poly:
      return sparse_typed(poly_dense(m), PolyRing{}, [](const Poly& z) { return Scalar(z); });
  }
  return {};
}

MinorVector maximal_minors(const Matrix& m, MinorRoute route) {
  m.check_homogeneous();
  if (m.rows() > m.cols())
    fail(ErrorCode::shape, "maximal minors need rows <= cols (got " +
                               std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ")");
  std::size_t rank = mat_rank(m);
  if (rank < m.rows())
    fail(ErrorCode::degenerate_input,
         "rank " + std::to_string(rank) + " < " + std::to_string(m.rows()) +
             ": all maximal minors vanish");
  MinorVector mv{m.rows(), m.cols(), {}};
  switch (m.field().kind) {
    case Field::Kind::rational: {
      std::vector<Integer> scale;
      auto a = integer_rows(m, &scale);
      Integer denom = 1;
      for (const auto& s : scale) denom *= s;
      for (auto& z : minors_typed(a, IntegerRing{}, route)) {
        Rational q(z, denom);
        q.canonicalize();
        mv.values.emplace_back(q);
      }
      break;
    }
    case Field::Kind::prime: {
      PrimeRing R{m.field().modulus};
      for (auto& z : minors_typed(residue_dense(m), R, route)) mv.values.emplace_back(z);
      break;
    }
    case Field::Kind::poly:
      for (auto& z : minors_typed(poly_dense(m), PolyRing{}, route)) mv.values.emplace_back(z);
      break;
  }
  return mv;
}

}  // namespace severi
