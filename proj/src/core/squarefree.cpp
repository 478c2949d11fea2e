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

// Squarefreeness of a ternary form through a bivariate gcd over the
// coefficient field: f(u, v) is viewed in K[u][v], and gcd(f, f_u, f_v) is
// computed with contents and primitive pseudo-remainder sequences.

#include <utility>

#include "forms.hpp"

namespace severi {

namespace {

// Univariate polynomial over K (rational or prime field).
struct KPoly {
  Field field;
  std::vector<Scalar> c;  // ascending powers of u, no trailing zeros

  explicit KPoly(Field f) : field(f) {}
  KPoly(Field f, std::vector<Scalar> coeffs) : field(f), c(std::move(coeffs)) { trim(); }

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const Scalar& lead() const { return c.back(); }

  KPoly operator+(const KPoly& o) const {
    std::vector<Scalar> r(std::max(c.size(), o.c.size()), Scalar::zero(field));
    for (std::size_t i = 0; i < c.size(); ++i) r[i] = c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r[i] += o.c[i];
    return {field, std::move(r)};
  }
  KPoly operator-(const KPoly& o) const {
    std::vector<Scalar> r(std::max(c.size(), o.c.size()), Scalar::zero(field));
    for (std::size_t i = 0; i < c.size(); ++i) r[i] = c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r[i] -= o.c[i];
    return {field, std::move(r)};
  }
  KPoly operator*(const KPoly& o) const {
    if (is_zero() || o.is_zero()) return KPoly(field);
    std::vector<Scalar> r(c.size() + o.c.size() - 1, Scalar::zero(field));
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
    return {field, std::move(r)};
  }
  KPoly derivative() const {
    std::vector<Scalar> r;
    for (std::size_t i = 1; i < c.size(); ++i)
      r.push_back(c[i] * Scalar::from_int(field, static_cast<long>(i)));
    return {field, std::move(r)};
  }
  void divmod(const KPoly& b, KPoly& q, KPoly& r) const {
    r = *this;
    q = KPoly(field);
    if (degree() < b.degree()) return;
    q.c.assign(static_cast<std::size_t>(degree() - b.degree() + 1), Scalar::zero(field));
    const Scalar inv = b.lead().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
      Scalar f = r.lead() * inv;
      q.c[shift] = f;
      for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i + shift] -= f * b.c[i];
      r.trim();
    }
    q.trim();
  }
  KPoly monic() const {
    if (is_zero()) return *this;
    Scalar inv = lead().inverse();
    KPoly r = *this;
    for (auto& x : r.c) x = x * inv;
    return r;
  }
  static KPoly gcd(KPoly a, KPoly b) {
    while (!b.is_zero()) {
      KPoly q(a.field), r(a.field);
      a.divmod(b, q, r);
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }
};

// Element of K[u][v]: coefficients in ascending powers of v.
struct BPoly {
  Field field;
  std::vector<KPoly> c;

  explicit BPoly(Field f) : field(f) {}
  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  int degree_v() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }

  BPoly derivative_u() const {
    BPoly r(field);
    for (const auto& k : c) r.c.push_back(k.derivative());
    r.trim();
    return r;
  }
  BPoly derivative_v() const {
    BPoly r(field);
    for (std::size_t i = 1; i < c.size(); ++i) {
      KPoly k = c[i];
      for (auto& x : k.c) x = x * Scalar::from_int(field, static_cast<long>(i));
      r.c.push_back(k);
    }
    r.trim();
    return r;
  }
  KPoly content() const {
    KPoly g(field);
    for (const auto& k : c) g = KPoly::gcd(g, k);
    return g;
  }
  BPoly divided(const KPoly& d) const {
    BPoly r(field);
    for (const auto& k : c) {
      KPoly q(field), rem(field);
      k.divmod(d, q, rem);
      r.c.push_back(q);
    }
    r.trim();
    return r;
  }
  BPoly primitive() const {
    if (is_zero()) return *this;
    return divided(content());
  }
  BPoly scaled(const KPoly& k) const {
    BPoly r(field);
    for (const auto& x : c) r.c.push_back(x * k);
    r.trim();
    return r;
  }
  // Pseudo-remainder of a by b with respect to v.
  static BPoly prem(BPoly a, const BPoly& b) {
    const KPoly& lb = b.c.back();
    while (!a.is_zero() && a.degree_v() >= b.degree_v()) {
      const auto shift = static_cast<std::size_t>(a.degree_v() - b.degree_v());
      KPoly la = a.c.back();
      a = a.scaled(lb);
      for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i + shift] = a.c[i + shift] - la * b.c[i];
      a.trim();
    }
    return a;
  }
  static BPoly gcd(const BPoly& f, const BPoly& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    KPoly cont = KPoly::gcd(f.content(), g.content());
    BPoly a = f.primitive(), b = g.primitive();
    if (a.degree_v() < b.degree_v()) std::swap(a, b);
    BPoly pp(f.field);
    while (true) {
      BPoly r = prem(a, b);
      if (r.is_zero()) {
        pp = b.primitive();
        break;
      }
      if (r.degree_v() == 0) {
        pp = BPoly(f.field);
        pp.c.push_back(KPoly(f.field, {Scalar::one(f.field)}));
        break;
      }
      a = std::move(b);
      b = r.primitive();
    }
    return pp.scaled(cont);
  }
  bool is_constant() const {
    return c.size() == 1 && c[0].degree() == 0;
  }
};

BPoly dehomogenize(const Form& f, int chart) {
  BPoly b(f.field());
  const auto& mons = monomials(f.degree());
  for (std::size_t i = 0; i < mons.size(); ++i) {
    if (f[i].is_zero()) continue;
    const Monomial& m = mons[i];
    // (u, v) are the remaining variables in x, y, z order.
    unsigned eu = 0, ev = 0;
    if (chart == 2) { eu = m.x; ev = m.y; }
    else if (chart == 1) { eu = m.x; ev = m.z; }
    else { eu = m.y; ev = m.z; }
    if (b.c.size() <= ev) b.c.resize(ev + 1, KPoly(f.field()));
    KPoly& k = b.c[ev];
    if (k.c.size() <= eu) k.c.resize(eu + 1, Scalar::zero(f.field()));
    k.c[eu] += f[i];
  }
  for (auto& k : b.c) k.trim();
  b.trim();
  return b;
}

bool chart_squarefree(const Form& f, int chart) {
  BPoly g = dehomogenize(f, chart);
  if (g.is_zero()) fail(ErrorCode::malformed_input, "zero form");
  if (g.is_constant()) return true;
  BPoly h = BPoly::gcd(BPoly::gcd(g, g.derivative_u()), g.derivative_v());
  return h.is_zero() ? false : h.is_constant();
}

}  // namespace

bool is_squarefree(const Form& f) {
  if (f.degree() == 0) fail(ErrorCode::degree, "squarefreeness of a constant form");
  if (f.is_zero()) fail(ErrorCode::malformed_input, "squarefreeness of the zero form");
  const std::uint32_t p = f.field().characteristic();
  if (p != 0 && p <= f.degree())
    fail(ErrorCode::unsupported_characteristic,
         "squarefree test needs characteristic 0 or p > degree");
  // A repeated factor other than z survives dehomogenization at z = 1; a
  // repeated factor z is seen in the chart x = 1.
  return chart_squarefree(f, 2) && chart_squarefree(f, 0);
}

}  // namespace severi
