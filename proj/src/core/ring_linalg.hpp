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

// Fraction-free (Bareiss) elimination over an integral domain, written once
// and instantiated for Z (rationals after row scaling), F_p and Q[t].
//
// After a fraction-free Gauss-Jordan pass on a full-row-rank m x n matrix A,
// every pivot entry equals D = +/- det(A[:, pivots]) and every free entry is an
// m x m minor of A. The maximal minors of A are then recovered from the
// minors of the free block by Sylvester's identity: with q_j the j x j minor
// of the free block divided by D^(j-1),
//   q_j(I, J) = (sum_c +/- M[I_0, c] * q_{j-1}(I \ I_0, J \ c)) / D,
// where every division is exact. Each maximal minor costs j multiply-adds and
// one exact division, instead of a full m x m determinant.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "exact.hpp"

namespace severi {

template <class T>
struct Dense {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> a;

  Dense() = default;
  Dense(std::size_t r, std::size_t c, const T& fill) : rows(r), cols(c), a(r * c, fill) {}

  T& operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < cols; ++c) std::swap(a[i * cols + c], a[j * cols + c]);
  }
};

struct IntegerRing {
  using T = Integer;
  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(const T& x) const { return sgn(x) == 0; }
  void addmul(T& acc, const T& x, const T& y) const {
    mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  }
  void submul(T& acc, const T& x, const T& y) const {
    mpz_submul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  }
  void div_exact(T& x, const T& d) const {
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  }
  T negate(const T& x) const { return -x; }
};

struct PrimeRing {
  using T = Residue;
  std::uint32_t p;
  T zero() const { return Residue(0, p); }
  T one() const { return Residue(1, p); }
  bool is_zero(const T& x) const { return x.is_zero(); }
  void addmul(T& acc, const T& x, const T& y) const { acc += x * y; }
  void submul(T& acc, const T& x, const T& y) const { acc -= x * y; }
  void div_exact(T& x, const T& d) const { x = x / d; }
  T negate(const T& x) const { return -x; }
};

struct PolyRing {
  using T = Poly;
  T zero() const { return {}; }
  T one() const { return Poly(1); }
  bool is_zero(const T& x) const { return x.is_zero(); }
  void addmul(T& acc, const T& x, const T& y) const { acc += x * y; }
  void submul(T& acc, const T& x, const T& y) const { acc -= x * y; }
  void div_exact(T& x, const T& d) const { x = Poly::div_exact(x, d); }
  T negate(const T& x) const { return -x; }
};

template <class Ring>
struct Echelon {
  using T = typename Ring::T;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of row r, increasing
  T scale;                          // last pivot; all pivots equal it if reduced
  int swap_sign = 1;                // parity of the row swaps performed
  bool reduced = false;             // Gauss-Jordan (true) or forward only
  Dense<T> m;
};

/// Fraction-free elimination. Pivot = first nonzero entry in the column.
template <class Ring>
Echelon<Ring> fraction_free_reduce(Dense<typename Ring::T> a, const Ring& R, bool jordan) {
  using T = typename Ring::T;
  Echelon<Ring> e;
  e.reduced = jordan;
  T prev = R.one();
  bool have_prev = false;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
    std::size_t piv = r;
    while (piv < a.rows && R.is_zero(a(piv, c))) ++piv;
    if (piv == a.rows) continue;
    if (piv != r) {
      a.swap_rows(piv, r);
      e.swap_sign = -e.swap_sign;
    }
    const T p = a(r, c);
    for (std::size_t i = jordan ? 0 : r + 1; i < a.rows; ++i) {
      if (i == r) continue;
      const T f = a(i, c);
      for (std::size_t j = 0; j < a.cols; ++j) {
        if (j == c) continue;
        T v = a(i, j) * p;
        if (!R.is_zero(f)) R.submul(v, f, a(r, j));
        if (have_prev) R.div_exact(v, prev);
        a(i, j) = std::move(v);
      }
      a(i, c) = R.zero();
    }
    e.pivots.push_back(c);
    prev = p;
    have_prev = true;
    ++r;
  }
  e.rank = r;
  e.scale = prev;
  e.m = std::move(a);
  return e;
}

/// Bareiss determinant of a square matrix.
template <class Ring>
typename Ring::T fraction_free_det(Dense<typename Ring::T> a, const Ring& R) {
  if (a.rows == 0) return R.one();
  auto e = fraction_free_reduce(std::move(a), R, false);
  if (e.rank < e.m.rows) return R.zero();
  return e.swap_sign > 0 ? e.scale : R.negate(e.scale);
}

/// Enumerates every maximal minor of the full-row-rank matrix reduced into
/// `e` (which must come from a Gauss-Jordan pass). Calls
/// emit(tuple, q, sign) with q an rvalue, where the minor at column tuple
/// `tuple` (sorted) equals sign * q. Tuples arrive grouped by how many pivot
/// columns they drop, not in lexicographic order.
template <class Ring, class Emit>
void for_each_maximal_minor(const Echelon<Ring>& e, const Ring& R, Emit&& emit) {
  using T = typename Ring::T;
  const std::size_t m = e.m.rows;
  const std::size_t n = e.m.cols;
  std::vector<std::size_t> free_cols;
  {
    std::size_t pi = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (pi < e.pivots.size() && e.pivots[pi] == c) {
        ++pi;
        continue;
      }
      free_cols.push_back(c);
    }
  }
  const std::size_t f = free_cols.size();
  const std::size_t jmax = m < f ? m : f;

  // Combinations of each size listed in colex order (index = colex rank).
  auto colex_list = [](std::size_t universe, std::size_t k) {
    std::vector<std::vector<std::size_t>> out(binomial(universe, k));
    for_each_combination(universe, k, [&](const std::vector<std::size_t>& c) {
      out[colex_rank(c)] = c;
    });
    return out;
  };
  auto rank_without = [](const std::vector<std::size_t>& c, std::size_t skip) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i < skip) r += binomial(c[i], i + 1);
      else if (i > skip) r += binomial(c[i], i);
    }
    return r;
  };

  std::vector<std::size_t> tuple(m);
  auto emit_entry = [&](const std::vector<std::size_t>& I, const std::vector<std::size_t>& J,
                        T&& q) {
    // Rows outside I keep their pivots, rows in I take the free columns of J.
    // Both runs increase, so the tuple is their merge and the sorting sign is
    // the parity of the shuffle.
    std::size_t r = 0, a = 0, ii = 0, parity = 0;
    for (std::size_t w = 0; w < m; ++w) {
      while (ii < I.size() && I[ii] == r) ++r, ++ii;
      if (a < J.size() && (r == m || free_cols[J[a]] < e.pivots[r])) {
        tuple[w] = free_cols[J[a]];
        parity += w + I[a];
        ++a;
      } else {
        tuple[w] = e.pivots[r];
        ++r;
      }
    }
    int sign = (parity % 2 ? -1 : 1) * e.swap_sign;
    emit(static_cast<const std::vector<std::size_t>&>(tuple), std::move(q), sign);
  };
  // Level j holds q_j(I, J) at index rank(I) * C(f, j) + rank(J).
  auto emit_level = [&](const std::vector<std::vector<std::size_t>>& rows_l,
                        const std::vector<std::vector<std::size_t>>& cols_l, std::vector<T>& level) {
    const std::size_t nc = cols_l.size();
    for (std::size_t ri = 0; ri < rows_l.size(); ++ri)
      for (std::size_t cj = 0; cj < nc; ++cj) emit_entry(rows_l[ri], cols_l[cj], std::move(level[ri * nc + cj]));
  };

  std::vector<T> prev_level{e.scale};
  std::vector<std::vector<std::size_t>> rows_prev{{}}, cols_prev{{}};
  for (std::size_t j = 1; j <= jmax; ++j) {
    auto rows_j = colex_list(m, j);
    auto cols_j = colex_list(f, j);
    const std::uint64_t ncols_prev = cols_prev.size();
    const std::uint64_t ncols_j = cols_j.size();
    // Sub-ranks of the column combinations with one element removed.
    std::vector<std::uint64_t> col_sub(ncols_j * j);
    for (std::uint64_t cj = 0; cj < ncols_j; ++cj)
      for (std::size_t idx = 0; idx < j; ++idx)
        col_sub[cj * j + idx] = rank_without(cols_j[cj], idx);

    std::vector<T> level(rows_j.size() * ncols_j, R.zero());
    for (std::uint64_t ri = 0; ri < rows_j.size(); ++ri) {
      const auto& I = rows_j[ri];
      const std::uint64_t rsub = rank_without(I, 0);
      const std::size_t lead = I[0];
      for (std::uint64_t cj = 0; cj < ncols_j; ++cj) {
        const auto& J = cols_j[cj];
        T& acc = level[ri * ncols_j + cj];
        for (std::size_t idx = 0; idx < j; ++idx) {
          const T& entry = e.m(lead, free_cols[J[idx]]);
          if (R.is_zero(entry)) continue;
          const T& sub = prev_level[rsub * ncols_prev + col_sub[cj * j + idx]];
          if (idx % 2 == 0) R.addmul(acc, entry, sub);
          else R.submul(acc, entry, sub);
        }
        if (!R.is_zero(acc)) R.div_exact(acc, e.scale);
      }
    }
    emit_level(rows_prev, cols_prev, prev_level);
    prev_level = std::move(level);
    rows_prev = std::move(rows_j);
    cols_prev = std::move(cols_j);
  }
  emit_level(rows_prev, cols_prev, prev_level);
}

}  // namespace severi
