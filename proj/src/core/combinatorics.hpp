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

namespace severi {

namespace detail {

inline constexpr std::size_t kBinomialTable = 67;  // C(66, 33) fits in 64 bits

struct BinomialTable {
  std::uint64_t c[kBinomialTable][kBinomialTable] = {};
  constexpr BinomialTable() {
    for (std::size_t n = 0; n < kBinomialTable; ++n) {
      c[n][0] = 1;
      for (std::size_t k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k < n ? c[n - 1][k] : 0);
    }
  }
};

inline constexpr BinomialTable kBinomials{};

}  // namespace detail

/// Binomial coefficient, saturating at UINT64_MAX.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (n < detail::kBinomialTable) return detail::kBinomials.c[n][k];
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(acc);
}

/// Advances `c` (strictly increasing, values < n) to the next combination in
/// lexicographic order. Returns false after the last one.
inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  return c;
}

/// Calls fn(combination) for every k-subset of {0..n-1} in lexicographic order.
template <class Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  auto c = first_combination(k);
  do {
    fn(static_cast<const std::vector<std::size_t>&>(c));
  } while (k > 0 && next_combination(c, n));
}

/// Rank of a combination in colexicographic order.
inline std::uint64_t colex_rank(const std::vector<std::size_t>& c) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < c.size(); ++i) r += binomial(c[i], i + 1);
  return r;
}

/// Rank of a combination of {0..n-1} in lexicographic order.
inline std::uint64_t lex_rank(const std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  std::uint64_t r = binomial(n, k) - 1;
  for (std::size_t i = 0; i < k; ++i) r -= binomial(n - 1 - c[i], k - i);
  return r;
}

/// Parity of the permutation sorting `seq` (distinct values): +1 or -1.
template <class T>
int sort_sign(const std::vector<T>& seq) {
  int sign = 1;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[j] < seq[i]) sign = -sign;
  return sign;
}

}  // namespace severi
