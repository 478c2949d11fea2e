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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "exact.hpp"
#include "forms.hpp"

namespace severi {

/// d pairwise distinct points. Unordered configurations are kept sorted by the
/// canonical point order; ordered ones keep their tuple order.
class PointConfig {
 public:
  PointConfig() = default;
  /// Throws diagonal_violation on repeated points, malformed_input when empty
  /// or when the points live over different fields.
  PointConfig(std::vector<ProjPoint> points, bool ordered);

  std::size_t size() const noexcept { return points_.size(); }
  bool ordered() const noexcept { return ordered_; }
  Field field() const { return points_.front().field(); }
  const std::vector<ProjPoint>& points() const noexcept { return points_; }
  const ProjPoint& operator[](std::size_t i) const { return points_[i]; }

  PointConfig unordered() const { return PointConfig(points_, false); }
  /// Point i of the result is point sigma[i] of this configuration.
  PointConfig permuted(const std::vector<std::size_t>& sigma) const;
  PointConfig prefix(std::size_t i) const;
  PointConfig reduced_mod(std::uint32_t p) const;

  friend bool operator==(const PointConfig& a, const PointConfig& b) {
    return a.ordered_ == b.ordered_ && a.points_ == b.points_;
  }

 private:
  std::vector<ProjPoint> points_;
  bool ordered_ = true;
};

/// 3d x (N_s + 1) matrix; row 3i + c is F -> (dF/dx_c)(P_i). Rational points
/// are evaluated at their coprime integer representative, so the matrix has
/// integer entries; prime-field points at their normalized representative.
Matrix condition_matrix(unsigned s, const PointConfig& cfg);

struct ExpectedDims {
  long n_s;                // s(s+3)/2
  long expected_proj_dim;  // max(-1, N_s - 3d)
  long bundle_rank;        // s(s+3)/2 + 1 - 3d
};
ExpectedDims expected_dims(unsigned s, std::size_t d);

struct LinearSystemResult {
  unsigned s = 0;
  PointConfig config;
  std::size_t rank = 0;
  long proj_dim = -1;
  std::vector<Form> basis;
  long expected_proj_dim = -1;
  long superabundance = 0;        // max(0, proj_dim - expected_proj_dim)
  long dependent_conditions = 0;  // 3d - rank
};

LinearSystemResult linear_system(unsigned s, const PointConfig& cfg);

enum class StratumKind { generic, all_collinear, j_collinear, on_conic, custom };

struct StratumSpec {
  StratumKind kind = StratumKind::generic;
  unsigned j = 0;  // j_collinear only
  std::uint64_t seed = 0;
  long box_lo = -50;
  long box_hi = 50;
  std::vector<ProjPoint> points;  // custom only

  std::string name() const;  // "generic", "all-collinear", "3-collinear", ...
};

StratumKind parse_stratum_kind(const std::string& text);

/// Deterministic in spec.seed. Integer points inside the box satisfying the
/// stratum incidence exactly. Throws exhaustion when the box cannot fit them.
PointConfig stratum_sample(std::size_t d, const StratumSpec& spec);

/// generic, all-collinear, j-collinear and on-conic specs for d points, with
/// seeds derived from `seed`. Strata that degenerate for small d are kept
/// (every pair is collinear).
std::vector<StratumSpec> default_strata(std::size_t d, std::uint64_t seed,
                                        long box_lo = -50, long box_hi = 50);

inline constexpr unsigned kMaxSystemDegree = 14;
inline constexpr std::size_t kMaxPoints = 6;

struct SampleRank {
  std::string stratum;
  std::size_t index = 0;                 // sample index within the stratum
  PointConfig config;
  std::vector<std::size_t> rank;         // by degree, rank[s - 1]
  std::vector<std::size_t> prime_rank;   // same at the cross-check prime, 0 if skipped
};

struct Witness {
  std::string stratum;
  std::size_t index = 0;
  unsigned s = 0;
  PointConfig config;
  std::size_t rank = 0;
  long proj_dim = 0;
  long expected_proj_dim = 0;
};

struct CriticalDegreeReport {
  std::size_t d = 0;
  unsigned s_max = 0;
  std::optional<unsigned> k_hat;          // rank reading: 3d independent conditions
  std::optional<unsigned> k_hat_constant; // dimension constant across samples
  std::optional<unsigned> k_hat_nonempty; // rank reading with a nonempty system
  std::vector<StratumSpec> strata;
  std::size_t samples_per_stratum = 0;
  std::vector<SampleRank> samples;
  std::vector<std::string> certified_strata;
  std::vector<Witness> witnesses;         // rank < 3d at s = k_hat - 1
  std::uint32_t modulus = kDefaultModulus;
  std::size_t prime_mismatches = 0;
};

CriticalDegreeReport critical_degree(std::size_t d, unsigned s_max,
                                     const std::vector<StratumSpec>& strata,
                                     std::size_t samples_per_stratum, unsigned jobs = 1,
                                     std::uint32_t modulus = kDefaultModulus);

struct MonotoneCheck {
  bool ok = true;
  std::size_t d = 0;
  unsigned r_min = 0, r_max = 0;
  std::vector<SampleRank> samples;  // rank[r - r_min]
  std::vector<Witness> failures;
};

MonotoneCheck monotone_independence_check(std::size_t d, unsigned k_hat, unsigned r_max,
                                          const std::vector<StratumSpec>& strata,
                                          std::size_t samples_per_stratum, unsigned jobs = 1);

/// Sample list used by the two scans: sample t of stratum spec uses the seed
/// derive_seed(spec.seed, t).
std::vector<SampleRank> draw_samples(std::size_t d, const std::vector<StratumSpec>& strata,
                                     std::size_t samples_per_stratum);

}  // namespace severi
