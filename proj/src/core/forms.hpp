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

// Ternary forms over Q or F_p, projective points, and singularity analysis.
//
// Monomials of degree s are ordered graded-lexicographically with x > y > z:
// position 0 holds x^s and the last position holds z^s. Every coefficient
// vector in the library and in its file formats uses this order.

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "exact.hpp"

namespace severi {

struct Monomial {
  unsigned x = 0, y = 0, z = 0;
  unsigned degree() const { return x + y + z; }
  unsigned exponent(int var) const { return var == 0 ? x : var == 1 ? y : z; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline std::size_t monomial_count(unsigned s) {
  return static_cast<std::size_t>(s + 1) * (s + 2) / 2;
}
/// Projective dimension N_s = s(s+3)/2 of the space of degree-s curves.
inline long projective_dim(unsigned s) { return static_cast<long>(s) * (s + 3) / 2; }

std::size_t monomial_index(const Monomial& m);
const std::vector<Monomial>& monomials(unsigned s);
std::string monomial_name(const Monomial& m);

class Form {
 public:
  Form() = default;
  Form(unsigned degree, Field field);
  Form(unsigned degree, Field field, std::vector<Scalar> coeffs);

  static Form from_ints(unsigned degree, const std::vector<long>& coeffs,
                        Field field = Field::rational());
  /// Sum of c * x^a y^b z^c; all terms must have the same degree.
  static Form from_terms(const std::vector<std::pair<long, Monomial>>& terms,
                         Field field = Field::rational());
  static Form variable(int var, Field field = Field::rational());
  static Form constant(const Scalar& c);

  unsigned degree() const noexcept { return degree_; }
  Field field() const noexcept { return field_; }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }
  Scalar& operator[](std::size_t i) { return coeffs_[i]; }
  const Scalar& coeff(const Monomial& m) const { return coeffs_[monomial_index(m)]; }

  bool is_zero() const;
  Form scaled(const Scalar& c) const;
  /// Rational form scaled to coprime integer coefficients, first nonzero > 0.
  Form primitive() const;
  /// Coefficientwise reduction; fails if a denominator vanishes mod p.
  Form reduced_mod(std::uint32_t p) const;
  /// Relabels variables so that the result vanishes at P.permuted(perm)
  /// exactly when this form vanishes at P.
  Form permute_variables(const std::array<int, 3>& perm) const;

  friend Form operator+(const Form& a, const Form& b);
  friend Form operator-(const Form& a, const Form& b);
  friend Form operator*(const Form& a, const Form& b);
  friend bool operator==(const Form& a, const Form& b) {
    return a.degree_ == b.degree_ && a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  unsigned degree_ = 0;
  Field field_ = Field::rational();
  std::vector<Scalar> coeffs_;
};

class ProjPoint {
 public:
  ProjPoint() = default;
  /// Normalizes so the last nonzero coordinate is 1.
  ProjPoint(const Scalar& x, const Scalar& y, const Scalar& z);
  static ProjPoint of_ints(long x, long y, long z, Field field = Field::rational());

  const Scalar& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  const std::array<Scalar, 3>& coords() const { return c_; }
  Field field() const { return c_[0].field(); }

  /// Coprime integer representative (rational points only).
  std::array<Integer, 3> primitive_integers() const;
  /// Reduction via the primitive integer representative; always defined.
  ProjPoint reduced_mod(std::uint32_t p) const;
  /// Coordinate i of the result is coordinate perm[i] of this point.
  ProjPoint permuted(const std::array<int, 3>& perm) const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c_ == b.c_; }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b);

  std::string to_string() const;

 private:
  std::array<Scalar, 3> c_{};
};

std::array<Form, 3> partials(const Form& f);
Scalar evaluate(const Form& f, const ProjPoint& p);
/// Evaluates at an explicit (not normalized) representative.
Scalar evaluate_at(const Form& f, const std::array<Scalar, 3>& xyz);

struct SingularityVerdict {
  enum class Kind { smooth_point, node, degenerate_singularity, not_on_curve };
  Kind kind = Kind::not_on_curve;
  Scalar value;                   // F at the chart representative
  std::array<Scalar, 3> gradient; // at the chart representative
  int chart = 2;                  // coordinate set to 1
  // Local quadratic part q(u, v) = a u^2 + b uv + c v^2 in the chart, where
  // (u, v) are the two remaining variables in x, y, z order.
  Scalar a, b, c;
  Scalar discriminant;            // b^2 - 4ac
};

std::string verdict_name(SingularityVerdict::Kind k);

/// `chart` selects the dehomogenizing coordinate (must be nonzero at P);
/// defaults to the last nonzero coordinate.
SingularityVerdict classify_point(const Form& f, const ProjPoint& p,
                                  std::optional<int> chart = std::nullopt);

/// All points of P^2(F_p) where F and its partials vanish, sorted.
std::vector<ProjPoint> singular_scan_fp(const Form& f);

bool is_squarefree(const Form& f);

/// Quotient when g divides f exactly, otherwise nullopt.
std::optional<Form> divide_form(const Form& f, const Form& g);

}  // namespace severi
