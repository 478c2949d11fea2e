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
#include <string>
#include <utility>
#include <vector>

#include "exact.hpp"
#include "forms.hpp"
#include "linear_systems.hpp"

namespace severi {

/// Normalized dual Plucker coordinates of a `rows`-dimensional row space in
/// a `cols`-dimensional coefficient space. Only nonzero coordinates are
/// stored, keyed by the lexicographic rank of their column tuple. Over Q the
/// values are coprime integers with the first one positive; over F_p they are
/// residue representatives in [0, p) with the first one equal to 1.
struct PluckerPoint {
  unsigned k = 0;      // degree, 0 when not built from a configuration
  std::size_t d = 0;   // number of points, rows = 3d when built from one
  std::size_t rows = 0;
  std::size_t cols = 0;
  Field field = Field::rational();
  std::vector<std::uint64_t> keys;
  std::vector<Integer> values;

  std::size_t nnz() const noexcept { return keys.size(); }
  Scalar value(std::size_t i) const;
  std::vector<std::size_t> tuple(std::size_t i) const;
  /// Coordinate at a sorted column tuple; zero when not stored.
  Scalar coord(const std::vector<std::size_t>& tuple) const;

  friend bool operator==(const PluckerPoint& a, const PluckerPoint& b) {
    return a.rows == b.rows && a.cols == b.cols && a.field == b.field && a.keys == b.keys &&
           a.values == b.values;
  }
  friend bool operator!=(const PluckerPoint& a, const PluckerPoint& b) { return !(a == b); }
};

/// Normalizes raw (key, value) pairs with increasing keys; zero values are
/// dropped. Throws degenerate_input when nothing nonzero remains.
PluckerPoint normalize_plucker(std::size_t rows, std::size_t cols, Field field,
                               std::vector<std::uint64_t> keys, std::vector<Scalar> values);

/// Fast path for integer coordinates (rational field); zeros are dropped.
PluckerPoint normalize_plucker(std::size_t rows, std::size_t cols,
                               std::vector<std::uint64_t> keys, std::vector<Integer> values);

/// Hand-made coordinate vector (any order of entries, tuples strictly increasing).
PluckerPoint plucker_from_coords(
    std::size_t rows, std::size_t cols,
    const std::vector<std::pair<std::vector<std::size_t>, Scalar>>& coords);

/// Normalized Plucker point of the row space of a full-row-rank matrix over
/// Q or F_p; throws degenerate_input when the rows are dependent.
PluckerPoint plucker_of_rows(const Matrix& m);

/// Dual Plucker point of the degree-k condition matrix of cfg, with rows in
/// configuration order; normalization makes the result independent of that
/// order. Throws degenerate_configuration when the rank is below 3d.
PluckerPoint gamma(const PointConfig& cfg, unsigned k);

struct FlagPoint {
  unsigned k = 0;
  std::vector<PluckerPoint> chain;  // chain[i] from the first i + 1 points
  friend bool operator==(const FlagPoint& a, const FlagPoint& b) {
    return a.k == b.k && a.chain == b.chain;
  }
};

FlagPoint flag(const PointConfig& cfg, unsigned k);

struct Reconstruction {
  Matrix rows;                // rows x cols annihilator basis
  bool verified = false;      // minors were recomputed
  bool decomposable = false;  // minors reproduce the point (only if verified)
};

/// Cramer contraction from the first nonzero coordinate. With verify, the
/// minors of the result are recomputed and compared with pp.
Reconstruction reconstruct_subspace(const PluckerPoint& pp, bool verify = true);

Matrix forms_matrix(const std::vector<Form>& forms);
bool row_spaces_equal(const Matrix& a, const Matrix& b);
/// Row space of `inner` contained in the row space of `outer`.
bool row_space_contains(const Matrix& outer, const Matrix& inner);
/// Same degree and cardinality required (shape error otherwise).
bool subspace_equal(const std::vector<Form>& a, const std::vector<Form>& b);

/// Checks the chain ranks (3i rows, cols - 3i kernel) and the nesting of the
/// reconstructed annihilators. Returns an empty string when everything
/// holds, otherwise a description of the first failure.
std::string check_flag(const FlagPoint& f);

}  // namespace severi
