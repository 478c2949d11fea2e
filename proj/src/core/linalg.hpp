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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "exact.hpp"
#include "ring_linalg.hpp"

namespace severi {

/// Above this many column tuples, maximal minors come from one elimination
/// plus the Sylvester recurrence instead of independent determinants.
inline constexpr std::uint64_t kDirectMinorThreshold = 10000;
/// Hard cap on the number of maximal minors a single call may produce.
inline constexpr std::uint64_t kMaxMinorCount = 4'000'000;

using Vector = std::vector<Scalar>;

std::size_t mat_rank(const Matrix& m);

/// Right-kernel basis. Over a field each vector has a 1 at its free column
/// and zeros at the other free columns (free columns taken in increasing
/// order). Over Q[t] the vectors are fraction-free and primitive.
std::vector<Vector> kernel_basis(const Matrix& m);

Scalar determinant(const Matrix& m);

enum class MinorRoute { automatic, direct, elimination };

/// All maximal minors, indexed by strictly increasing column tuples in
/// lexicographic order.
struct MinorVector {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Scalar> values;
};

MinorVector maximal_minors(const Matrix& m, MinorRoute route = MinorRoute::automatic);

/// The nonzero maximal minors only, keyed by the lexicographic rank of their
/// column tuple (increasing). Always uses the elimination route.
struct SparseMinors {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint64_t> keys;
  std::vector<Scalar> values;
};

SparseMinors sparse_maximal_minors(const Matrix& m);

/// Column tuple at lexicographic position `index` among rows-subsets of cols.
std::vector<std::size_t> minor_tuple(std::size_t rows, std::size_t cols,
                                     std::uint64_t index);

// Typed views used by the geometric modules.

/// Rows scaled by the lcm of their denominators; `row_scale[i]` receives the
/// factor applied to row i when non-null.
Dense<Integer> integer_rows(const Matrix& m, std::vector<Integer>* row_scale = nullptr);
Dense<Residue> residue_dense(const Matrix& m);
Dense<Poly> poly_dense(const Matrix& m);

/// Divides by the gcd of the entries and makes the first nonzero positive.
/// Returns false for the zero vector.
bool make_primitive(std::vector<Integer>& v);

}  // namespace severi
