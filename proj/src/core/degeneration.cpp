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

#include "degeneration.hpp"

#include <algorithm>

#include "combinatorics.hpp"
#include "linalg.hpp"

namespace severi {

namespace {

PolyPoint clean_path(PolyPoint p) {
  Poly g;
  for (const auto& c : p) g = Poly::gcd(g, c);
  if (g.is_zero()) fail(ErrorCode::malformed_input, "a point path is identically zero");
  Integer den = 1, num = 0;
  for (auto& c : p) {
    c = Poly::div_exact(c, g);
    for (const auto& q : c.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  }
  for (const auto& c : p)
    for (const auto& q : c.coeffs()) {
      Integer z = q.get_num() * (den / q.get_den());
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), z.get_mpz_t());
    }
  Poly scale(Rational(den, num));
  for (auto& c : p) c = c * scale;
  return p;
}

}  // namespace

FamilyConfig::FamilyConfig(std::vector<PolyPoint> paths, Rational t_star)
    : t_star_(std::move(t_star)) {
  if (paths.empty()) fail(ErrorCode::malformed_input, "a family needs at least one path");
  t_star_.canonicalize();
  for (auto& p : paths) paths_.push_back(clean_path(std::move(p)));
  for (std::size_t i = 0; i < paths_.size(); ++i)
    for (std::size_t j = i + 1; j < paths_.size(); ++j) {
      const auto& a = paths_[i];
      const auto& b = paths_[j];
      bool same = true;
      for (int r = 0; r < 3 && same; ++r) {
        int u = (r + 1) % 3, v = (r + 2) % 3;
        same = (a[u] * b[v] - a[v] * b[u]).is_zero();
      }
      if (same)
        fail(ErrorCode::diagonal_violation,
             "paths " + std::to_string(i) + " and " + std::to_string(j) + " coincide for every t");
    }
}

std::vector<ProjPoint> FamilyConfig::points_at(const Rational& t) const {
  std::vector<ProjPoint> out;
  for (const auto& p : paths_) out.emplace_back(Scalar(p[0](t)), Scalar(p[1](t)), Scalar(p[2](t)));
  return out;
}

PointConfig FamilyConfig::specialize(const Rational& t) const {
  return PointConfig(points_at(t), true);
}

FamilyConfig FamilyConfig::with_t_star(const Rational& t) const {
  FamilyConfig f = *this;
  f.t_star_ = t;
  f.t_star_.canonicalize();
  return f;
}

FamilyConfig FamilyConfig::permuted(const std::vector<std::size_t>& sigma) const {
  if (sigma.size() != paths_.size()) fail(ErrorCode::shape, "permutation of the wrong length");
  std::vector<bool> seen(sigma.size(), false);
  std::vector<PolyPoint> out;
  for (auto i : sigma) {
    if (i >= sigma.size() || seen[i]) fail(ErrorCode::malformed_input, "not a permutation");
    seen[i] = true;
    out.push_back(paths_[i]);
  }
  return FamilyConfig(std::move(out), t_star_);
}

FamilyConfig FamilyConfig::prefix(std::size_t i) const {
  if (i == 0 || i > paths_.size()) fail(ErrorCode::shape, "prefix length out of range");
  return FamilyConfig(std::vector<PolyPoint>(paths_.begin(), paths_.begin() + static_cast<long>(i)),
                      t_star_);
}

FamilyConfig FamilyConfig::reparameterized(const Poly& q) const {
  std::vector<PolyPoint> out;
  for (const auto& p : paths_) out.push_back({p[0].composed(q), p[1].composed(q), p[2].composed(q)});
  return FamilyConfig(std::move(out), t_star_);
}

Matrix condition_matrix_t(unsigned s, const FamilyConfig& fam) {
  if (s == 0) fail(ErrorCode::degree, "condition matrix in degree 0");
  const auto& mons = monomials(s);
  Matrix m(3 * fam.size(), mons.size(), Field::poly());
  for (std::size_t i = 0; i < fam.size(); ++i) {
    std::array<std::vector<Poly>, 3> pw;
    for (std::size_t v = 0; v < 3; ++v) {
      pw[v].assign(s, Poly(1));
      for (unsigned e = 1; e < s; ++e) pw[v][e] = pw[v][e - 1] * fam.paths()[i][v];
    }
    for (std::size_t col = 0; col < mons.size(); ++col) {
      const std::array<unsigned, 3> ex{mons[col].x, mons[col].y, mons[col].z};
      for (std::size_t c = 0; c < 3; ++c) {
        if (ex[c] == 0) continue;
        Poly v(static_cast<long>(ex[c]));
        for (std::size_t w = 0; w < 3; ++w) {
          unsigned e = ex[w] - (w == c ? 1 : 0);
          if (e) v = v * pw[w][e];
        }
        m(3 * i + c, col) = Scalar(v);
      }
    }
  }
  return m;
}

namespace {

struct RowLimit {
  Matrix rows;  // over Q, full row rank
  int valuation = 0;
};

Matrix constant_terms(const std::vector<std::vector<Poly>>& r) {
  Matrix m(r.size(), r[0].size(), Field::rational());
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r[i].size(); ++j) m(i, j) = Scalar(r[i][j].coeff(0));
  return m;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols(), m.rows(), m.field());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

bool generic_full_rank(const Matrix& m) {
  for (long t0 : {1L, -2L, 3L}) {
    Matrix e(m.rows(), m.cols(), Field::rational());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = Scalar(m(i, j).poly()(Rational(t0)));
    if (mat_rank(e) == m.rows()) return true;
  }
  return mat_rank(m) == m.rows();
}

// Row space of M(t) as t -> 0. While the constant terms are dependent, each
// left-kernel vector c replaces its free row f (the last nonzero entry,
// where c_f = 1) by (sum c_i row_i) / t. Each replacement divides every maximal minor by t.
RowLimit row_space_limit(const Matrix& m) {
  std::vector<std::vector<Poly>> r(m.rows(), std::vector<Poly>(m.cols()));
  int bound = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int deg = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      r[i][j] = m(i, j).poly();
      deg = std::max(deg, r[i][j].degree());
    }
    bound += deg;
  }
  RowLimit out;
  for (;;) {
    Matrix m0 = constant_terms(r);
    auto deps = kernel_basis(transpose(m0));
    if (deps.empty()) {
      out.rows = std::move(m0);
      return out;
    }
    out.valuation += static_cast<int>(deps.size());
    if (out.valuation > bound) fail(ErrorCode::internal, "limit valuation exceeds the degree bound");
    std::vector<std::vector<Poly>> next = r;
    for (const auto& c : deps) {
      std::size_t free_row = c.size() - 1;
      while (c[free_row].is_zero()) --free_row;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        Poly acc;
        for (std::size_t i = 0; i < r.size(); ++i)
          if (!c[i].is_zero()) acc = acc + Poly(c[i].rational()) * r[i][j];
        if (!acc.is_zero() && acc.valuation() == 0)
          fail(ErrorCode::internal, "dependency does not vanish at t = 0");
        next[free_row][j] = acc.shift_down(1);
      }
    }
    r = std::move(next);
  }
}

}  // namespace

LimitReport limit_gamma(const FamilyConfig& fam, unsigned k) {
  std::vector<PolyPoint> shifted;
  for (const auto& p : fam.paths())
    shifted.push_back({p[0].translated(fam.t_star()), p[1].translated(fam.t_star()),
                       p[2].translated(fam.t_star())});
  Matrix m = condition_matrix_t(k, FamilyConfig(std::move(shifted)));
  if (binomial(m.cols(), m.rows()) > kMaxMinorCount)
    fail(ErrorCode::too_large, std::to_string(binomial(m.cols(), m.rows())) +
                                   " Plucker coordinates requested");
  if (!generic_full_rank(m))
    fail(ErrorCode::degenerate_family, "generic rank " + std::to_string(mat_rank(m)) + " < " +
                                           std::to_string(m.rows()) + " in degree " +
                                           std::to_string(k));
  auto rl = row_space_limit(m);

  LimitReport rep;
  rep.k = k;
  rep.valuation = rl.valuation;
  rep.limit = plucker_of_rows(rl.rows);
  rep.limit.k = k;
  rep.limit.d = fam.size();
  auto rec = reconstruct_subspace(rep.limit, true);
  rep.decomposable = rec.decomposable;
  rep.kernel_dim = rec.rows.cols() - mat_rank(rec.rows);
  rep.generic_kernel_dim = rec.rows.cols() - 3 * fam.size();

  rep.limit_points = fam.points_at(fam.t_star());
  rep.interior = true;
  for (std::size_t i = 0; i < rep.limit_points.size(); ++i)
    for (std::size_t j = i + 1; j < rep.limit_points.size(); ++j) {
      if (rep.limit_points[i] != rep.limit_points[j]) continue;
      rep.interior = false;
      Collision c;
      c.i = i;
      c.j = j;
      c.point = rep.limit_points[i];
      c.singular_at_point =
          row_space_contains(rec.rows, condition_matrix(k, PointConfig({c.point}, true)));
      rep.collisions.push_back(c);
    }
  if (rep.interior) rep.matches_gamma = gamma(PointConfig(rep.limit_points, true), k) == rep.limit;
  return rep;
}

FlagLimitReport limit_flag(const FamilyConfig& fam, unsigned k) {
  FlagLimitReport rep;
  rep.k = k;
  rep.flag.k = k;
  for (std::size_t i = 1; i <= fam.size(); ++i) {
    try {
      rep.prefixes.push_back(limit_gamma(fam.prefix(i), k));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::degenerate_family) throw;
      fail(ErrorCode::degenerate_family,
           "prefix of length " + std::to_string(i) + " is degenerate: " + e.what());
    }
    rep.flag.chain.push_back(rep.prefixes.back().limit);
  }
  rep.nesting_problem = check_flag(rep.flag);
  rep.nested = rep.nesting_problem.empty();
  return rep;
}

}  // namespace severi
