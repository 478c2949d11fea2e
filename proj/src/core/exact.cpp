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

#include "exact.hpp"

#include <algorithm>
#include <charconv>

namespace severi {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::malformed_input: return "malformed-input";
    case ErrorCode::shape: return "shape";
    case ErrorCode::degenerate_input: return "degenerate-input";
    case ErrorCode::degree: return "degree";
    case ErrorCode::field_mismatch: return "field-mismatch";
    case ErrorCode::unsupported_characteristic:
      return "unsupported-characteristic";
    case ErrorCode::mode: return "mode";
    case ErrorCode::diagonal_violation: return "diagonal-violation";
    case ErrorCode::exhaustion: return "exhaustion";
    case ErrorCode::degenerate_configuration:
      return "degenerate-configuration";
    case ErrorCode::degenerate_family: return "degenerate-family";
    case ErrorCode::infeasible: return "infeasible";
    case ErrorCode::inconclusive: return "inconclusive";
    case ErrorCode::not_found: return "not-found";
    case ErrorCode::too_large: return "too-large";
    case ErrorCode::parse: return "parse";
    case ErrorCode::usage: return "usage";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint32_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    return std::all_of(t.begin() + static_cast<long>(i), t.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-')
    fail(ErrorCode::parse, "not a rational number: \"" + s + "\"");
  Rational q;
  q.get_num() = Integer(num, 10);
  q.get_den() = Integer(den, 10);
  if (q.get_den() == 0) fail(ErrorCode::parse, "zero denominator: \"" + s + "\"");
  q.canonicalize();
  return q;
}

// --- Residue ---------------------------------------------------------------

Residue::Residue(std::int64_t value, std::uint32_t modulus) : modulus_(modulus) {
  if (modulus < 2 || modulus >= (1u << 31))
    fail(ErrorCode::mode, "modulus out of range: " + std::to_string(modulus));
  std::int64_t m = static_cast<std::int64_t>(modulus);
  std::int64_t v = value % m;
  if (v < 0) v += m;
  value_ = static_cast<std::uint32_t>(v);
}

Residue Residue::from_rational(const Rational& q, std::uint32_t modulus) {
  Integer p = modulus;
  Integer den = q.get_den() % p;
  if (den == 0)
    fail(ErrorCode::field_mismatch,
         "denominator of " + q.get_str() + " vanishes mod " + std::to_string(modulus));
  Integer num = q.get_num() % p;
  if (num < 0) num += p;
  Residue n = raw(static_cast<std::uint32_t>(num.get_ui()), modulus);
  Residue d = raw(static_cast<std::uint32_t>(den.get_ui()), modulus);
  return n * d.inverse();
}

static void check_same(const Residue& a, const Residue& b) {
  if (a.modulus() != b.modulus())
    fail(ErrorCode::field_mismatch,
         "residues modulo " + std::to_string(a.modulus()) + " and " +
             std::to_string(b.modulus()));
}

Residue operator+(const Residue& a, const Residue& b) {
  check_same(a, b);
  std::uint64_t s = std::uint64_t(a.value_) + b.value_;
  if (s >= a.modulus_) s -= a.modulus_;
  return Residue::raw(static_cast<std::uint32_t>(s), a.modulus_);
}

Residue operator-(const Residue& a, const Residue& b) {
  check_same(a, b);
  std::uint32_t v = a.value_ >= b.value_ ? a.value_ - b.value_
                                         : a.value_ + (a.modulus_ - b.value_);
  return Residue::raw(v, a.modulus_);
}

Residue operator*(const Residue& a, const Residue& b) {
  check_same(a, b);
  return Residue::raw(
      static_cast<std::uint32_t>((std::uint64_t(a.value_) * b.value_) % a.modulus_),
      a.modulus_);
}

Residue operator/(const Residue& a, const Residue& b) { return a * b.inverse(); }

Residue Residue::operator-() const {
  return raw(value_ == 0 ? 0 : modulus_ - value_, modulus_);
}

Residue Residue::pow(std::uint64_t e) const {
  std::uint64_t base = value_, acc = 1 % modulus_;
  while (e > 0) {
    if (e & 1) acc = acc * base % modulus_;
    base = base * base % modulus_;
    e >>= 1;
  }
  return raw(static_cast<std::uint32_t>(acc), modulus_);
}

Residue Residue::inverse() const {
  if (value_ == 0) fail(ErrorCode::degenerate_input, "inverse of zero residue");
  return pow(modulus_ - 2);
}

// --- Poly ------------------------------------------------------------------

Poly::Poly(const Rational& c) {
  if (c != 0) {
    coeffs_.push_back(c);
    coeffs_.back().canonicalize();
  }
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Poly Poly::monomial(const Rational& c, int power) {
  if (c == 0) return {};
  std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

int Poly::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  return -1;
}

Poly Poly::shift_down(int v) const {
  if (v <= 0) return *this;
  if (v > degree()) return {};
  return Poly(std::vector<Rational>(coeffs_.begin() + v, coeffs_.end()));
}

Rational Poly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Poly Poly::translated(const Rational& a) const {
  if (a == 0) return *this;
  Poly shift(std::vector<Rational>{a, 1});
  return composed(shift);
}

Poly Poly::composed(const Poly& q) const {
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * q + Poly(*it);
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Poly r = *this;
  Rational lc = leading();
  for (auto& c : r.coeffs_) c /= lc;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(c));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) fail(ErrorCode::degenerate_input, "polynomial division by zero");
  r = a;
  std::vector<Rational> qc(
      a.degree() >= b.degree() ? static_cast<std::size_t>(a.degree() - b.degree() + 1) : 0);
  const Rational& lb = b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    Rational f = r.leading() / lb;
    qc[static_cast<std::size_t>(shift)] = f;
    for (int i = 0; i <= b.degree(); ++i)
      r.coeffs_[static_cast<std::size_t>(i + shift)] -= f * b.coeffs_[static_cast<std::size_t>(i)];
    r.trim();
  }
  q = Poly(std::move(qc));
}

Poly Poly::div_exact(const Poly& a, const Poly& b) {
  Poly q, r;
  divmod(a, b, q, r);
  if (!r.is_zero()) fail(ErrorCode::internal, "inexact polynomial division");
  return q;
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string Poly::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ", ";
    s += coeffs_[i].get_str();
  }
  return s + "]";
}

// --- Field -----------------------------------------------------------------

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !::severi::is_prime(p))
    fail(ErrorCode::mode, "modulus is not a prime below 2^31: " + std::to_string(p));
  return {Kind::prime, p};
}

std::string Field::to_string() const {
  switch (kind) {
    case Kind::rational: return "rational";
    case Kind::prime: return "fp:" + std::to_string(modulus);
    case Kind::poly: return "poly";
  }
  return "rational";
}

Field Field::parse(std::string_view text) {
  if (text == "rational" || text == "Q") return rational();
  if (text == "poly") return poly();
  if (text.substr(0, 3) == "fp:") {
    std::uint32_t p = 0;
    auto tail = text.substr(3);
    auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), p);
    if (ec != std::errc() || ptr != tail.data() + tail.size())
      fail(ErrorCode::parse, "bad modulus in field \"" + std::string(text) + "\"");
    return prime(p);
  }
  fail(ErrorCode::parse, "unknown field \"" + std::string(text) + "\"");
}

// --- Scalar ----------------------------------------------------------------

Scalar Scalar::zero(Field f) { return from_int(f, 0); }

Scalar Scalar::one(Field f) { return from_int(f, 1); }

Scalar Scalar::from_int(Field f, long v) {
  switch (f.kind) {
    case Field::Kind::rational: return Rational(v);
    case Field::Kind::prime: return Residue(v, f.modulus);
    case Field::Kind::poly: return Poly(v);
  }
  return Rational(v);
}

Scalar Scalar::from_rational(Field f, const Rational& q) {
  switch (f.kind) {
    case Field::Kind::rational: return q;
    case Field::Kind::prime: return Residue::from_rational(q, f.modulus);
    case Field::Kind::poly: return Poly(q);
  }
  return q;
}

Field Scalar::field() const {
  switch (value_.index()) {
    case 0: return Field::rational();
    case 1: return Field{Field::Kind::prime, std::get<1>(value_).modulus()};
    default: return Field::poly();
  }
}

bool Scalar::is_zero() const {
  switch (value_.index()) {
    case 0: return sgn(std::get<0>(value_)) == 0;
    case 1: return std::get<1>(value_).is_zero();
    default: return std::get<2>(value_).is_zero();
  }
}

const Rational& Scalar::rational() const {
  if (!is_rational()) fail(ErrorCode::field_mismatch, "expected a rational scalar");
  return std::get<0>(value_);
}

const Residue& Scalar::residue() const {
  if (!is_residue()) fail(ErrorCode::field_mismatch, "expected a prime-field scalar");
  return std::get<1>(value_);
}

const Poly& Scalar::poly() const {
  if (!is_poly()) fail(ErrorCode::field_mismatch, "expected a polynomial scalar");
  return std::get<2>(value_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorCode::degenerate_input, "inverse of zero");
  if (is_rational()) return Rational(Rational(1) / rational());
  if (is_residue()) return residue().inverse();
  fail(ErrorCode::mode, "polynomials have no inverse in Q[t]");
}

namespace {

void require_same(const Scalar& a, const Scalar& b) {
  if (!(a.field() == b.field()))
    fail(ErrorCode::field_mismatch,
         "mixed scalars: " + a.field().to_string() + " and " + b.field().to_string());
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  if (a.is_rational()) return Rational(a.rational() + b.rational());
  if (a.is_residue()) return a.residue() + b.residue();
  return a.poly() + b.poly();
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  if (a.is_rational()) return Rational(a.rational() - b.rational());
  if (a.is_residue()) return a.residue() - b.residue();
  return a.poly() - b.poly();
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  if (a.is_rational()) return Rational(a.rational() * b.rational());
  if (a.is_residue()) return a.residue() * b.residue();
  return a.poly() * b.poly();
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  if (a.is_poly()) return Poly::div_exact(a.poly(), b.poly());
  return a * b.inverse();
}

Scalar Scalar::operator-() const {
  if (is_rational()) return Rational(-rational());
  if (is_residue()) return -residue();
  return -poly();
}

bool operator<(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  if (a.is_rational()) return a.rational() < b.rational();
  if (a.is_residue()) return a.residue().value() < b.residue().value();
  fail(ErrorCode::mode, "polynomials are not ordered");
}

std::string Scalar::to_string() const {
  if (is_rational()) return rational().get_str();
  if (is_residue()) return std::to_string(residue().value());
  return poly().to_string();
}

// --- Matrix ----------------------------------------------------------------

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar::zero(field)) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field,
               std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), field_(field), data_(std::move(entries)) {
  if (data_.size() != rows * cols)
    fail(ErrorCode::malformed_input,
         "matrix entry count " + std::to_string(data_.size()) + " != " +
             std::to_string(rows) + "x" + std::to_string(cols));
}

Matrix Matrix::identity(std::size_t n, Field field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_ints(std::size_t rows, std::size_t cols,
                         const std::vector<long>& entries, Field field) {
  std::vector<Scalar> e;
  e.reserve(entries.size());
  for (long v : entries) e.push_back(Scalar::from_int(field, v));
  return Matrix(rows, cols, field, std::move(e));
}

void Matrix::check_homogeneous() const {
  for (const auto& e : data_)
    if (!(e.field() == field_))
      fail(ErrorCode::malformed_input,
           "matrix mixes field variants: " + field_.to_string() + " and " +
               e.field().to_string());
}

Matrix Matrix::stacked(const Matrix& below) const {
  if (below.cols_ != cols_ && below.rows_ != 0 && rows_ != 0)
    fail(ErrorCode::shape, "stacking matrices with different column counts");
  std::size_t cols = rows_ ? cols_ : below.cols_;
  std::vector<Scalar> e = data_;
  e.insert(e.end(), below.data_.begin(), below.data_.end());
  return Matrix(rows_ + below.rows_, cols, field_, std::move(e));
}

Matrix Matrix::row(std::size_t r) const {
  std::vector<Scalar> e(data_.begin() + static_cast<long>(r * cols_),
                        data_.begin() + static_cast<long>((r + 1) * cols_));
  return Matrix(1, cols_, field_, std::move(e));
}

Matrix Matrix::columns(const std::vector<std::size_t>& cols) const {
  std::vector<Scalar> e;
  e.reserve(rows_ * cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c : cols) e.push_back((*this)(r, c));
  return Matrix(rows_, cols.size(), field_, std::move(e));
}

std::vector<Scalar> Matrix::multiply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) fail(ErrorCode::shape, "matrix-vector size mismatch");
  std::vector<Scalar> out(rows_, Scalar::zero(field_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
  return out;
}

}  // namespace severi
