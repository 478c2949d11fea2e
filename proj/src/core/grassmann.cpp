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

#include "grassmann.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "combinatorics.hpp"
#include "linalg.hpp"

namespace severi {

std::vector<std::size_t> PluckerPoint::tuple(std::size_t i) const {
  return minor_tuple(rows, cols, keys[i]);
}

Scalar PluckerPoint::value(std::size_t i) const {
  if (field.is_prime()) return Scalar(Residue(values[i].get_si(), field.modulus));
  return Scalar(Rational(values[i]));
}

Scalar PluckerPoint::coord(const std::vector<std::size_t>& t) const {
  const std::uint64_t key = lex_rank(t, cols);
  auto it = std::lower_bound(keys.begin(), keys.end(), key);
  if (it == keys.end() || *it != key) return Scalar::zero(field);
  return value(static_cast<std::size_t>(it - keys.begin()));
}

PluckerPoint normalize_plucker(std::size_t rows, std::size_t cols,
                               std::vector<std::uint64_t> keys, std::vector<Integer> values) {
  if (keys.size() != values.size()) fail(ErrorCode::shape, "keys and values differ in length");
  PluckerPoint pp;
  pp.rows = rows;
  pp.cols = cols;
  std::size_t w = 0;
  Integer g = 0;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (sgn(values[i]) == 0) continue;
    if (w && keys[i] <= keys[w - 1]) fail(ErrorCode::malformed_input, "Plucker keys must increase");
    keys[w] = keys[i];
    if (w != i) values[w].swap(values[i]);
    if (g != 1) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), values[w].get_mpz_t());
    ++w;
  }
  if (w == 0) fail(ErrorCode::degenerate_input, "all Plucker coordinates vanish");
  keys.resize(w);
  values.resize(w);
  if (sgn(values.front()) < 0) g = -g;
  if (g != 1)
    for (auto& v : values) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  pp.keys = std::move(keys);
  pp.values = std::move(values);
  return pp;
}

PluckerPoint normalize_plucker(std::size_t rows, std::size_t cols, Field field,
                               std::vector<std::uint64_t> keys, std::vector<Scalar> values) {
  if (keys.size() != values.size()) fail(ErrorCode::shape, "keys and values differ in length");
  for (const auto& v : values)
    if (!(v.field() == field)) fail(ErrorCode::field_mismatch, "Plucker coordinate over the wrong field");
  if (field.is_rational()) {
    Integer l = 1;
    for (const auto& v : values) {
      const auto& den = v.rational().get_den();
      if (den != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    std::vector<Integer> z;
    z.reserve(values.size());
    for (const auto& v : values) z.push_back(v.rational().get_num() * (l / v.rational().get_den()));
    return normalize_plucker(rows, cols, std::move(keys), std::move(z));
  }
  if (!field.is_prime()) fail(ErrorCode::mode, "Plucker points have rational or prime-field coordinates");
  PluckerPoint pp;
  pp.rows = rows;
  pp.cols = cols;
  pp.field = field;
  std::optional<Scalar> inv;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (values[i].is_zero()) continue;
    if (!pp.keys.empty() && keys[i] <= pp.keys.back())
      fail(ErrorCode::malformed_input, "Plucker keys must increase");
    if (!inv) inv = values[i].inverse();
    pp.keys.push_back(keys[i]);
    pp.values.emplace_back(static_cast<unsigned long>((values[i] * *inv).residue().value()));
  }
  if (pp.keys.empty()) fail(ErrorCode::degenerate_input, "all Plucker coordinates vanish");
  return pp;
}

PluckerPoint plucker_from_coords(
    std::size_t rows, std::size_t cols,
    const std::vector<std::pair<std::vector<std::size_t>, Scalar>>& coords) {
  if (rows == 0 || rows > cols) fail(ErrorCode::shape, "need 0 < rows <= cols");
  if (coords.empty()) fail(ErrorCode::degenerate_input, "no coordinates given");
  std::map<std::uint64_t, Scalar> sorted;
  const Field field = coords.front().second.field();
  for (const auto& [t, v] : coords) {
    if (t.size() != rows) fail(ErrorCode::shape, "tuple of the wrong length");
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t[i] >= cols || (i && t[i] <= t[i - 1]))
        fail(ErrorCode::malformed_input, "tuples must be strictly increasing and below cols");
    if (!sorted.emplace(lex_rank(t, cols), v).second)
      fail(ErrorCode::malformed_input, "repeated tuple");
  }
  std::vector<std::uint64_t> keys;
  std::vector<Scalar> values;
  for (auto& [k, v] : sorted) {
    keys.push_back(k);
    values.push_back(v);
  }
  return normalize_plucker(rows, cols, field, std::move(keys), std::move(values));
}

PluckerPoint plucker_of_rows(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  auto degenerate = [&](std::size_t rank) {
    fail(ErrorCode::degenerate_input,
         "rank " + std::to_string(rank) + " < " + std::to_string(rows));
  };
  if (m.field().is_poly()) fail(ErrorCode::field_mismatch, "Plucker point of a matrix over Q[t]");
  if (m.field().is_rational()) {
    const std::uint64_t count = binomial(cols, rows);
    if (count > kMaxMinorCount)
      fail(ErrorCode::too_large, std::to_string(count) + " Plucker coordinates requested");
    IntegerRing R;
    auto e = fraction_free_reduce(integer_rows(m), R, true);
    if (e.rank < rows) degenerate(e.rank);
    std::vector<Integer> dense(count);
    for_each_maximal_minor(e, R, [&](const std::vector<std::size_t>& t, Integer&& q, int sign) {
      Integer& slot = dense[lex_rank(t, cols)];
      slot.swap(q);
      if (sign < 0) mpz_neg(slot.get_mpz_t(), slot.get_mpz_t());
    });
    std::vector<std::uint64_t> keys(count);
    for (std::uint64_t i = 0; i < count; ++i) keys[i] = i;
    return normalize_plucker(rows, cols, std::move(keys), std::move(dense));
  }
  const std::size_t rank = mat_rank(m);
  if (rank < rows) degenerate(rank);
  auto sm = sparse_maximal_minors(m);
  return normalize_plucker(rows, cols, m.field(), std::move(sm.keys), std::move(sm.values));
}

PluckerPoint gamma(const PointConfig& cfg, unsigned k) {
  PluckerPoint pp;
  try {
    pp = plucker_of_rows(condition_matrix(k, cfg));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::degenerate_input) throw;
    fail(ErrorCode::degenerate_configuration,
         "condition matrix in degree " + std::to_string(k) + " has " + e.what());
  }
  pp.k = k;
  pp.d = cfg.size();
  return pp;
}

FlagPoint flag(const PointConfig& cfg, unsigned k) {
  FlagPoint f;
  f.k = k;
  for (std::size_t i = 1; i <= cfg.size(); ++i) {
    try {
      f.chain.push_back(gamma(cfg.prefix(i), k));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::degenerate_configuration) throw;
      fail(ErrorCode::degenerate_configuration,
           "prefix of length " + std::to_string(i) + " is degenerate: " + e.what());
    }
  }
  std::string problem = check_flag(f);
  if (!problem.empty()) fail(ErrorCode::internal, "flag invariant violated: " + problem);
  return f;
}

Reconstruction reconstruct_subspace(const PluckerPoint& pp, bool verify) {
  if (pp.keys.empty()) fail(ErrorCode::degenerate_input, "Plucker point without coordinates");
  const auto pivot = pp.tuple(0);
  const Scalar lead = pp.value(0);
  Reconstruction rec;
  rec.rows = Matrix(pp.rows, pp.cols, pp.field);
  std::vector<bool> in_pivot(pp.cols, false);
  for (auto c : pivot) in_pivot[c] = true;
  std::vector<std::size_t> seq(pivot.size()), sorted;
  for (std::size_t r = 0; r < pivot.size(); ++r) {
    for (std::size_t c = 0; c < pp.cols; ++c) {
      if (c == pivot[r]) {
        rec.rows(r, c) = lead;
        continue;
      }
      if (in_pivot[c]) continue;
      seq = pivot;
      seq[r] = c;
      sorted = seq;
      std::sort(sorted.begin(), sorted.end());
      Scalar v = pp.coord(sorted);
      if (v.is_zero()) continue;
      rec.rows(r, c) = sort_sign(seq) > 0 ? v : -v;
    }
  }
  if (verify) {
    rec.verified = true;
    auto sm = sparse_maximal_minors(rec.rows);
    PluckerPoint again =
        normalize_plucker(sm.rows, sm.cols, pp.field, std::move(sm.keys), std::move(sm.values));
    rec.decomposable = again == pp;
  }
  return rec;
}

Matrix forms_matrix(const std::vector<Form>& forms) {
  if (forms.empty()) return Matrix(0, 0, Field::rational());
  const std::size_t cols = forms.front().coeffs().size();
  Matrix m(forms.size(), cols, forms.front().field());
  for (std::size_t r = 0; r < forms.size(); ++r) {
    if (forms[r].coeffs().size() != cols || !(forms[r].field() == m.field()))
      fail(ErrorCode::shape, "forms of different degree or field");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = forms[r][c];
  }
  return m;
}

bool row_spaces_equal(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) fail(ErrorCode::shape, "row spaces in different ambient spaces");
  const std::size_t ra = mat_rank(a);
  return ra == mat_rank(b) && ra == mat_rank(a.stacked(b));
}

bool row_space_contains(const Matrix& outer, const Matrix& inner) {
  if (outer.cols() != inner.cols()) fail(ErrorCode::shape, "row spaces in different ambient spaces");
  return mat_rank(outer) == mat_rank(outer.stacked(inner));
}

bool subspace_equal(const std::vector<Form>& a, const std::vector<Form>& b) {
  if (a.size() != b.size()) fail(ErrorCode::shape, "bases of different cardinality");
  if (a.empty()) return true;
  if (a.front().degree() != b.front().degree()) fail(ErrorCode::shape, "bases of different degree");
  return row_spaces_equal(forms_matrix(a), forms_matrix(b));
}

std::string check_flag(const FlagPoint& f) {
  std::vector<Matrix> ann;
  for (std::size_t i = 0; i < f.chain.size(); ++i) {
    const auto& pp = f.chain[i];
    Matrix w = reconstruct_subspace(pp, false).rows;
    const std::size_t rank = mat_rank(w);
    if (pp.rows != 3 * (i + 1) || rank != 3 * (i + 1))
      return "chain element " + std::to_string(i) + " has codimension " + std::to_string(rank);
    if (kernel_basis(w).size() != pp.cols - 3 * (i + 1))
      return "chain element " + std::to_string(i) + " has the wrong kernel dimension";
    if (i > 0 && !row_space_contains(w, ann.back()))
      return "chain element " + std::to_string(i) + " does not contain element " +
             std::to_string(i - 1);
    ann.push_back(std::move(w));
  }
  return {};
}

}  // namespace severi
