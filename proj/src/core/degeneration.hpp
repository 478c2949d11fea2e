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

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "exact.hpp"
#include "forms.hpp"
#include "grassmann.hpp"
#include "linear_systems.hpp"

namespace severi {

using PolyPoint = std::array<Poly, 3>;

/// d point paths t -> (x(t) : y(t) : z(t)) over Q[t], each stored with its
/// polynomial content removed and scaled to coprime integer coefficients.
class FamilyConfig {
 public:
  FamilyConfig() = default;
  /// Throws malformed_input for an identically zero path and
  /// diagonal_violation for two paths that coincide for every t.
  explicit FamilyConfig(std::vector<PolyPoint> paths, Rational t_star = 0);

  std::size_t size() const noexcept { return paths_.size(); }
  const std::vector<PolyPoint>& paths() const noexcept { return paths_; }
  const Rational& t_star() const noexcept { return t_star_; }

  /// Points at t, in path order, without a distinctness check.
  std::vector<ProjPoint> points_at(const Rational& t) const;
  /// Throws diagonal_violation when two points meet at t.
  PointConfig specialize(const Rational& t) const;

  FamilyConfig with_t_star(const Rational& t) const;
  FamilyConfig permuted(const std::vector<std::size_t>& sigma) const;
  FamilyConfig prefix(std::size_t i) const;
  /// Substitutes t -> q(t) in every path; t* is left unchanged.
  FamilyConfig reparameterized(const Poly& q) const;

 private:
  std::vector<PolyPoint> paths_;
  Rational t_star_ = 0;
};

/// 3d x (N_s + 1) matrix over Q[t]; row 3i + c is F -> (dF/dx_c)(P_i(t)).
Matrix condition_matrix_t(unsigned s, const FamilyConfig& fam);

struct Collision {
  std::size_t i = 0, j = 0;
  ProjPoint point;
  /// Limit annihilator contains the three conditions of the point itself.
  bool singular_at_point = false;
};

struct LimitReport {
  unsigned k = 0;
  PluckerPoint limit;
  int valuation = 0;             // common power of (t - t*) removed
  bool decomposable = false;
  std::vector<ProjPoint> limit_points;
  bool interior = false;           // points pairwise distinct at t*
  std::optional<bool> matches_gamma;  // interior only
  std::vector<Collision> collisions;
  std::size_t kernel_dim = 0;          // of the reconstructed annihilator
  std::size_t generic_kernel_dim = 0;  // N_k + 1 - 3d
};

/// Throws degenerate_family when the generic rank is below 3d.
LimitReport limit_gamma(const FamilyConfig& fam, unsigned k);

struct FlagLimitReport {
  unsigned k = 0;
  FlagPoint flag;
  std::vector<LimitReport> prefixes;
  bool nested = false;
  std::string nesting_problem;
};

FlagLimitReport limit_flag(const FamilyConfig& fam, unsigned k);

}  // namespace severi
