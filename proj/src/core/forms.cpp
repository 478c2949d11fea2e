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

#include "forms.hpp"

#include <algorithm>

namespace severi {

namespace {

constexpr unsigned kMaxDegree = 48;

std::vector<std::vector<Monomial>> build_monomial_tables() {
  std::vector<std::vector<Monomial>> tables(kMaxDegree + 1);
  for (unsigned s = 0; s <= kMaxDegree; ++s)
    for (unsigned a = s + 1; a-- > 0;)
      for (unsigned b = s - a + 1; b-- > 0;) tables[s].push_back({a, b, s - a - b});
  return tables;
}

void check_form_field(Field f) {
  if (f.is_poly()) fail(ErrorCode::mode, "forms have rational or prime-field coefficients");
}

}  // namespace

std::size_t monomial_index(const Monomial& m) {
  const std::size_t s = m.degree();
  const std::size_t k = s - m.x;
  return k * (k + 1) / 2 + (k - m.y);
}

const std::vector<Monomial>& monomials(unsigned s) {
  static const std::vector<std::vector<Monomial>> tables = build_monomial_tables();
  if (s > kMaxDegree) fail(ErrorCode::degree, "degree above " + std::to_string(kMaxDegree));
  return tables[s];
}

std::string monomial_name(const Monomial& m) {
  std::string out;
  auto put = [&](char v, unsigned e) {
    if (e == 0) return;
    out += v;
    if (e > 1) out += "^" + std::to_string(e);
  };
  put('x', m.x);
  put('y', m.y);
  put('z', m.z);
  return out.empty() ? "1" : out;
}

// --- Form ------------------------------------------------------------------

Form::Form(unsigned degree, Field field)
    : degree_(degree), field_(field), coeffs_(monomial_count(degree), Scalar::zero(field)) {
  check_form_field(field);
  monomials(degree);
}

Form::Form(unsigned degree, Field field, std::vector<Scalar> coeffs)
    : degree_(degree), field_(field), coeffs_(std::move(coeffs)) {
  check_form_field(field);
  monomials(degree);
  if (coeffs_.size() != monomial_count(degree))
    fail(ErrorCode::malformed_input,
         "degree-" + std::to_string(degree) + " form needs " +
             std::to_string(monomial_count(degree)) + " coefficients, got " +
             std::to_string(coeffs_.size()));
  for (const auto& c : coeffs_)
    if (!(c.field() == field))
      fail(ErrorCode::field_mismatch, "form coefficient outside " + field.to_string());
}

Form Form::from_ints(unsigned degree, const std::vector<long>& coeffs, Field field) {
  std::vector<Scalar> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.push_back(Scalar::from_int(field, v));
  return Form(degree, field, std::move(c));
}

Form Form::from_terms(const std::vector<std::pair<long, Monomial>>& terms, Field field) {
  if (terms.empty()) fail(ErrorCode::malformed_input, "form with no terms");
  const unsigned s = terms.front().second.degree();
  Form f(s, field);
  for (const auto& [c, m] : terms) {
    if (m.degree() != s) fail(ErrorCode::malformed_input, "inhomogeneous terms");
    f.coeffs_[monomial_index(m)] += Scalar::from_int(field, c);
  }
  return f;
}

Form Form::variable(int var, Field field) {
  Form f(1, field);
  f.coeffs_[static_cast<std::size_t>(var)] = Scalar::one(field);
  return f;
}

Form Form::constant(const Scalar& c) { return Form(0, c.field(), {c}); }

bool Form::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c.is_zero(); });
}

Form Form::scaled(const Scalar& c) const {
  Form r = *this;
  for (auto& x : r.coeffs_)
    if (!x.is_zero()) x = x * c;
  return r;
}

Form Form::primitive() const {
  if (!field_.is_rational()) fail(ErrorCode::mode, "primitive() needs rational coefficients");
  Integer l = 1;
  for (const auto& c : coeffs_)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational().get_den().get_mpz_t());
  std::vector<Integer> z;
  z.reserve(coeffs_.size());
  for (const auto& c : coeffs_) z.push_back(c.rational().get_num() * (l / c.rational().get_den()));
  Integer g = 0;
  for (const auto& v : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g == 0) return *this;
  auto first = std::find_if(z.begin(), z.end(), [](const Integer& v) { return sgn(v) != 0; });
  if (sgn(*first) < 0) g = -g;
  Form r(degree_, field_);
  for (std::size_t i = 0; i < z.size(); ++i) r.coeffs_[i] = Rational(z[i] / g);
  return r;
}

Form Form::reduced_mod(std::uint32_t p) const {
  if (!field_.is_rational()) fail(ErrorCode::mode, "reduction needs rational coefficients");
  Field fp = Field::prime(p);
  Form r(degree_, fp);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    r.coeffs_[i] = Residue::from_rational(coeffs_[i].rational(), p);
  return r;
}

Form Form::permute_variables(const std::array<int, 3>& perm) const {
  Form r(degree_, field_);
  const auto& mons = monomials(degree_);
  for (std::size_t i = 0; i < mons.size(); ++i) {
    const Monomial& m = mons[i];
    Monomial n{m.exponent(perm[0]), m.exponent(perm[1]), m.exponent(perm[2])};
    r.coeffs_[monomial_index(n)] = coeffs_[i];
  }
  return r;
}

Form operator+(const Form& a, const Form& b) {
  if (a.degree_ != b.degree_) fail(ErrorCode::degree, "adding forms of different degree");
  Form r = a;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
  return r;
}

Form operator-(const Form& a, const Form& b) {
  if (a.degree_ != b.degree_) fail(ErrorCode::degree, "subtracting forms of different degree");
  Form r = a;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
  return r;
}

Form operator*(const Form& a, const Form& b) {
  if (!(a.field_ == b.field_)) fail(ErrorCode::field_mismatch, "multiplying forms over different fields");
  Form r(a.degree_ + b.degree_, a.field_);
  const auto& ma = monomials(a.degree_);
  const auto& mb = monomials(b.degree_);
  for (std::size_t i = 0; i < ma.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < mb.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      Monomial m{ma[i].x + mb[j].x, ma[i].y + mb[j].y, ma[i].z + mb[j].z};
      r.coeffs_[monomial_index(m)] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

std::string Form::to_string() const {
  std::string out;
  const auto& mons = monomials(degree_);
  for (std::size_t i = 0; i < mons.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[i].to_string() + ")" + monomial_name(mons[i]);
  }
  return out.empty() ? "0" : out;
}

// --- ProjPoint -------------------------------------------------------------

ProjPoint::ProjPoint(const Scalar& x, const Scalar& y, const Scalar& z) : c_{x, y, z} {
  Field f = x.field();
  if (f.is_poly()) fail(ErrorCode::mode, "points have rational or prime-field coordinates");
  if (!(y.field() == f) || !(z.field() == f))
    fail(ErrorCode::field_mismatch, "point coordinates over different fields");
  int last = 2;
  while (last >= 0 && c_[static_cast<std::size_t>(last)].is_zero()) --last;
  if (last < 0) fail(ErrorCode::malformed_input, "point (0:0:0) is not projective");
  Scalar inv = c_[static_cast<std::size_t>(last)].inverse();
  for (auto& v : c_)
    if (!v.is_zero()) v = v * inv;
}

ProjPoint ProjPoint::of_ints(long x, long y, long z, Field field) {
  return ProjPoint(Scalar::from_int(field, x), Scalar::from_int(field, y),
                   Scalar::from_int(field, z));
}

std::array<Integer, 3> ProjPoint::primitive_integers() const {
  Integer l = 1;
  for (const auto& v : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.rational().get_den().get_mpz_t());
  std::array<Integer, 3> z;
  Integer g = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    z[i] = c_[i].rational().get_num() * (l / c_[i].rational().get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
  }
  for (auto& v : z) v /= g;
  return z;
}

ProjPoint ProjPoint::reduced_mod(std::uint32_t p) const {
  auto z = primitive_integers();
  std::array<Scalar, 3> r;
  for (std::size_t i = 0; i < 3; ++i) r[i] = Residue::from_rational(Rational(z[i]), p);
  return ProjPoint(r[0], r[1], r[2]);
}

ProjPoint ProjPoint::permuted(const std::array<int, 3>& perm) const {
  return ProjPoint(c_[static_cast<std::size_t>(perm[0])], c_[static_cast<std::size_t>(perm[1])],
                   c_[static_cast<std::size_t>(perm[2])]);
}

bool operator<(const ProjPoint& a, const ProjPoint& b) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (a.c_[i] < b.c_[i]) return true;
    if (b.c_[i] < a.c_[i]) return false;
  }
  return false;
}

std::string ProjPoint::to_string() const {
  return "(" + c_[0].to_string() + ":" + c_[1].to_string() + ":" + c_[2].to_string() + ")";
}

// --- evaluation and derivatives --------------------------------------------

std::array<Form, 3> partials(const Form& f) {
  if (f.degree() == 0) fail(ErrorCode::degree, "partial derivatives of a constant form");
  std::array<Form, 3> out{Form(f.degree() - 1, f.field()), Form(f.degree() - 1, f.field()),
                          Form(f.degree() - 1, f.field())};
  const auto& mons = monomials(f.degree());
  for (std::size_t i = 0; i < mons.size(); ++i) {
    if (f[i].is_zero()) continue;
    const Monomial& m = mons[i];
    for (int v = 0; v < 3; ++v) {
      unsigned e = m.exponent(v);
      if (e == 0) continue;
      Monomial d = m;
      (v == 0 ? d.x : v == 1 ? d.y : d.z) -= 1;
      out[static_cast<std::size_t>(v)][monomial_index(d)] +=
          f[i] * Scalar::from_int(f.field(), static_cast<long>(e));
    }
  }
  return out;
}

Scalar evaluate_at(const Form& f, const std::array<Scalar, 3>& xyz) {
  const Field field = f.field();
  for (const auto& c : xyz)
    if (!(c.field() == field)) fail(ErrorCode::field_mismatch, "evaluating a form at a point over another field");
  const unsigned s = f.degree();
  std::array<std::vector<Scalar>, 3> pw;
  for (std::size_t v = 0; v < 3; ++v) {
    pw[v].push_back(Scalar::one(field));
    for (unsigned e = 1; e <= s; ++e) pw[v].push_back(pw[v].back() * xyz[v]);
  }
  Scalar acc = Scalar::zero(field);
  const auto& mons = monomials(s);
  for (std::size_t i = 0; i < mons.size(); ++i) {
    if (f[i].is_zero()) continue;
    const Monomial& m = mons[i];
    if (pw[0][m.x].is_zero() || pw[1][m.y].is_zero() || pw[2][m.z].is_zero()) continue;
    acc += f[i] * pw[0][m.x] * pw[1][m.y] * pw[2][m.z];
  }
  return acc;
}

Scalar evaluate(const Form& f, const ProjPoint& p) { return evaluate_at(f, p.coords()); }

std::string verdict_name(SingularityVerdict::Kind k) {
  switch (k) {
    case SingularityVerdict::Kind::smooth_point: return "smooth-point";
    case SingularityVerdict::Kind::node: return "node";
    case SingularityVerdict::Kind::degenerate_singularity: return "degenerate-singularity";
    case SingularityVerdict::Kind::not_on_curve: return "not-on-curve";
  }
  return "unknown";
}

namespace {

void check_characteristic(const Form& f) {
  const std::uint32_t p = f.field().characteristic();
  if (p == 0) return;
  if (p == 2 || f.degree() % p == 0)
    fail(ErrorCode::unsupported_characteristic,
         "characteristic " + std::to_string(p) + " unsupported for degree " +
             std::to_string(f.degree()));
}

}  // namespace

SingularityVerdict classify_point(const Form& f, const ProjPoint& p, std::optional<int> chart) {
  if (f.degree() == 0) fail(ErrorCode::degree, "classifying a point on a constant form");
  check_characteristic(f);
  if (!(p.field() == f.field()))
    fail(ErrorCode::field_mismatch, "point and form over different fields");
  int c = 2;
  while (p[c].is_zero()) --c;
  if (chart) {
    c = *chart;
    if (c < 0 || c > 2 || p[c].is_zero())
      fail(ErrorCode::malformed_input, "chart coordinate vanishes at the point");
  }
  std::array<Scalar, 3> rep = p.coords();
  Scalar inv = p[c].inverse();
  for (auto& v : rep) v = v * inv;

  const Field field = f.field();
  SingularityVerdict out;
  out.chart = c;
  out.value = evaluate_at(f, rep);
  auto grad = partials(f);
  for (std::size_t v = 0; v < 3; ++v) out.gradient[v] = evaluate_at(grad[v], rep);
  out.a = out.b = out.c = out.discriminant = Scalar::zero(field);
  if (!out.value.is_zero()) {
    out.kind = SingularityVerdict::Kind::not_on_curve;
    return out;
  }
  if (!out.gradient[0].is_zero() || !out.gradient[1].is_zero() || !out.gradient[2].is_zero()) {
    out.kind = SingularityVerdict::Kind::smooth_point;
    return out;
  }
  // Affine chart: the second derivatives of f(u, v) at the point are the
  // homogeneous second partials of F at the representative with x_c = 1.
  std::array<int, 2> uv{};
  for (int v = 0, k = 0; v < 3; ++v)
    if (v != c) uv[static_cast<std::size_t>(k++)] = v;
  auto second = [&](int i, int j) -> Scalar {
    if (f.degree() < 2) return Scalar::zero(field);
    auto gi = grad[static_cast<std::size_t>(i)];
    return evaluate_at(partials(gi)[static_cast<std::size_t>(j)], rep);
  };
  const Scalar huu = second(uv[0], uv[0]);
  const Scalar huv = second(uv[0], uv[1]);
  const Scalar hvv = second(uv[1], uv[1]);
  const Scalar half = Scalar::from_int(field, 2).inverse();
  out.a = huu * half;
  out.b = huv;
  out.c = hvv * half;
  out.discriminant = out.b * out.b - Scalar::from_int(field, 4) * out.a * out.c;
  out.kind = out.discriminant.is_zero() ? SingularityVerdict::Kind::degenerate_singularity
                                        : SingularityVerdict::Kind::node;
  return out;
}

// --- exhaustive scan over F_p --------------------------------------------

std::vector<ProjPoint> singular_scan_fp(const Form& f) {
  if (!f.field().is_prime()) fail(ErrorCode::mode, "singular_scan_fp needs a prime-field form");
  const std::uint64_t p = f.field().modulus;
  if (p > 65536) fail(ErrorCode::mode, "singular_scan_fp needs p <= 2^16");
  if (f.degree() == 0) fail(ErrorCode::degree, "scanning a constant form");
  const unsigned s = f.degree();
  auto grad = partials(f);

  // Raw residues, one array per polynomial: F, F_x, F_y, F_z.
  struct Raw {
    unsigned degree;
    std::vector<std::uint64_t> c;
  };
  std::array<Raw, 4> raw;
  raw[0] = {s, {}};
  for (const auto& c : f.coeffs()) raw[0].c.push_back(c.residue().value());
  for (std::size_t v = 0; v < 3; ++v) {
    raw[v + 1] = {s - 1, {}};
    for (const auto& c : grad[v].coeffs()) raw[v + 1].c.push_back(c.residue().value());
  }
  auto eval_raw = [&](const Raw& r, std::uint64_t x, std::uint64_t y, std::uint64_t z) {
    const auto& mons = monomials(r.degree);
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < mons.size(); ++i) {
      if (!r.c[i]) continue;
      std::uint64_t t = r.c[i];
      for (unsigned e = 0; e < mons[i].x; ++e) t = t * x % p;
      for (unsigned e = 0; e < mons[i].y; ++e) t = t * y % p;
      for (unsigned e = 0; e < mons[i].z; ++e) t = t * z % p;
      acc = (acc + t) % p;
    }
    return acc;
  };

  std::vector<std::array<std::uint64_t, 3>> hits;
  // Chart z = 1: for each y, each polynomial becomes univariate in x.
  std::vector<std::uint64_t> ypow(s + 1);
  std::array<std::vector<std::uint64_t>, 4> uni;
  for (std::uint64_t y = 0; y < p; ++y) {
    ypow[0] = 1;
    for (unsigned e = 1; e <= s; ++e) ypow[e] = ypow[e - 1] * y % p;
    for (std::size_t k = 0; k < 4; ++k) {
      const auto& mons = monomials(raw[k].degree);
      uni[k].assign(raw[k].degree + 1, 0);
      for (std::size_t i = 0; i < mons.size(); ++i)
        if (raw[k].c[i]) uni[k][mons[i].x] = (uni[k][mons[i].x] + raw[k].c[i] * ypow[mons[i].y]) % p;
    }
    for (std::uint64_t x = 0; x < p; ++x) {
      bool all_zero = true;
      for (std::size_t k : {1, 2, 3, 0}) {
        std::uint64_t acc = 0;
        for (std::size_t e = uni[k].size(); e-- > 0;) acc = (acc * x + uni[k][e]) % p;
        if (acc) {
          all_zero = false;
          break;
        }
      }
      if (all_zero) hits.push_back({x, y, 1});
    }
  }
  // Line at infinity z = 0: (x : 1 : 0) and (1 : 0 : 0).
  auto singular_at = [&](std::uint64_t x, std::uint64_t y, std::uint64_t z) {
    for (std::size_t k = 0; k < 4; ++k)
      if (eval_raw(raw[k], x, y, z)) return false;
    return true;
  };
  for (std::uint64_t x = 0; x < p; ++x)
    if (singular_at(x, 1, 0)) hits.push_back({x, 1, 0});
  if (singular_at(1, 0, 0)) hits.push_back({1, 0, 0});

  std::vector<ProjPoint> out;
  out.reserve(hits.size());
  const auto mod = static_cast<std::uint32_t>(p);
  for (const auto& h : hits)
    out.emplace_back(Residue(static_cast<std::int64_t>(h[0]), mod),
                     Residue(static_cast<std::int64_t>(h[1]), mod),
                     Residue(static_cast<std::int64_t>(h[2]), mod));
  std::sort(out.begin(), out.end());
  return out;
}

// --- exact division of forms -------------------------------------------------

std::optional<Form> divide_form(const Form& f, const Form& g) {
  if (!(f.field() == g.field())) fail(ErrorCode::field_mismatch, "dividing forms over different fields");
  if (g.is_zero()) fail(ErrorCode::degenerate_input, "division by the zero form");
  if (g.degree() > f.degree()) {
    if (f.is_zero()) return Form(0, f.field());
    return std::nullopt;
  }
  const auto& gm = monomials(g.degree());
  std::size_t lead = 0;
  while (g[lead].is_zero()) ++lead;
  const Monomial lm = gm[lead];
  const Scalar lc_inv = g[lead].inverse();
  Form rem = f;
  Form quo(f.degree() - g.degree(), f.field());
  const auto& fm = monomials(f.degree());
  for (std::size_t i = 0; i < fm.size(); ++i) {
    if (rem[i].is_zero()) continue;
    const Monomial& m = fm[i];
    if (m.x < lm.x || m.y < lm.y || m.z < lm.z) return std::nullopt;
    Monomial q{m.x - lm.x, m.y - lm.y, m.z - lm.z};
    Scalar factor = rem[i] * lc_inv;
    quo[monomial_index(q)] += factor;
    for (std::size_t j = 0; j < gm.size(); ++j) {
      if (g[j].is_zero()) continue;
      Monomial t{gm[j].x + q.x, gm[j].y + q.y, gm[j].z + q.z};
      rem[monomial_index(t)] -= factor * g[j];
    }
  }
  return quo;
}

}  // namespace severi
