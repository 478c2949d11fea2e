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

// Exact scalars: rationals (GMP), residues modulo a prime, and univariate
// polynomials over the rationals. Nothing in this library touches floating
// point.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "error.hpp"

namespace severi {

using Integer = mpz_class;
using Rational = mpq_class;

inline constexpr std::uint32_t kDefaultModulus = 65521;

bool is_prime(std::uint32_t n);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);
/// Accepts "123", "-4", "7/9"; normalizes to lowest terms.
Rational parse_rational(std::string_view text);

class Residue {
 public:
  Residue() = default;
  /// `modulus` must be prime and below 2^31.
  Residue(std::int64_t value, std::uint32_t modulus);

  static Residue from_rational(const Rational& q, std::uint32_t modulus);

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  Residue inverse() const;
  Residue pow(std::uint64_t e) const;

  friend Residue operator+(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a, const Residue& b);
  friend Residue operator*(const Residue& a, const Residue& b);
  friend Residue operator/(const Residue& a, const Residue& b);
  Residue operator-() const;
  Residue& operator+=(const Residue& b) { return *this = *this + b; }
  Residue& operator-=(const Residue& b) { return *this = *this - b; }
  Residue& operator*=(const Residue& b) { return *this = *this * b; }
  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  static Residue raw(std::uint32_t value, std::uint32_t modulus) {
    Residue r;
    r.value_ = value;
    r.modulus_ = modulus;
    return r;
  }
  std::uint32_t value_ = 0;
  std::uint32_t modulus_ = 0;
};

/// Element of Q[t]. Coefficients ascend in powers of t; no trailing zeros.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Rational> coeffs);

  static Poly monomial(const Rational& c, int power);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  Rational coeff(int i) const;
  const Rational& leading() const { return coeffs_.back(); }

  /// Lowest power of t with nonzero coefficient; -1 for zero.
  int valuation() const;
  Poly shift_down(int v) const;  // divides by t^v, caller checks valuation
  Rational operator()(const Rational& t) const;
  /// p(t + a)
  Poly translated(const Rational& a) const;
  /// p(q(t))
  Poly composed(const Poly& q) const;
  Poly derivative() const;
  Poly monic() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
  /// Throws internal error if b does not divide a.
  static Poly div_exact(const Poly& a, const Poly& b);
  /// Monic gcd; gcd(0, 0) = 0.
  static Poly gcd(Poly a, Poly b);

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Field (or, for polynomials, coefficient ring) an ExactScalar lives in.
struct Field {
  enum class Kind { rational, prime, poly };
  Kind kind = Kind::rational;
  std::uint32_t modulus = 0;

  static Field rational() { return {Kind::rational, 0}; }
  static Field prime(std::uint32_t p);
  static Field poly() { return {Kind::poly, 0}; }

  bool is_rational() const noexcept { return kind == Kind::rational; }
  bool is_prime() const noexcept { return kind == Kind::prime; }
  bool is_poly() const noexcept { return kind == Kind::poly; }
  /// 0 for rational and poly.
  std::uint32_t characteristic() const noexcept { return modulus; }

  /// "rational", "fp:<p>" or "poly".
  std::string to_string() const;
  static Field parse(std::string_view text);

  friend bool operator==(const Field&, const Field&) = default;
};

class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(const Rational& q) : value_(q) {  // NOLINT
    std::get<Rational>(value_).canonicalize();
  }
  Scalar(const Residue& r) : value_(r) {}   // NOLINT
  Scalar(const Poly& p) : value_(p) {}      // NOLINT

  static Scalar zero(Field f);
  static Scalar one(Field f);
  static Scalar from_int(Field f, long v);
  static Scalar from_rational(Field f, const Rational& q);

  Field field() const;
  bool is_zero() const;
  bool is_rational() const { return value_.index() == 0; }
  bool is_residue() const { return value_.index() == 1; }
  bool is_poly() const { return value_.index() == 2; }

  const Rational& rational() const;
  const Residue& residue() const;
  const Poly& poly() const;

  /// Multiplicative inverse; fails for zero and for polynomials.
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.value_ == b.value_;
  }
  /// Canonical order within one field: rationals numerically, residues by
  /// representative in [0, p). Polynomials are not ordered.
  friend bool operator<(const Scalar& a, const Scalar& b);

  /// Decimal string ("num/den" for non-integers); residues as their
  /// representative; polynomials as "[c0, c1, ...]".
  std::string to_string() const;

 private:
  std::variant<Rational, Residue, Poly> value_;
};

/// Dense row-major matrix of ExactScalars. Entries are expected to share one
/// field; operations validate this and reject mixed matrices.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field field);
  Matrix(std::size_t rows, std::size_t cols, Field field,
         std::vector<Scalar> entries);

  static Matrix identity(std::size_t n, Field field);
  static Matrix from_ints(std::size_t rows, std::size_t cols,
                          const std::vector<long>& entries,
                          Field field = Field::rational());

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Field field() const noexcept { return field_; }
  const std::vector<Scalar>& entries() const noexcept { return data_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  Scalar& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }

  /// Throws malformed_input if any entry's field differs from field().
  void check_homogeneous() const;

  Matrix stacked(const Matrix& below) const;
  Matrix row(std::size_t r) const;
  Matrix columns(const std::vector<std::size_t>& cols) const;
  std::vector<Scalar> multiply(const std::vector<Scalar>& v) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ &&
           a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_ = Field::rational();
  std::vector<Scalar> data_;
};

}  // namespace severi
