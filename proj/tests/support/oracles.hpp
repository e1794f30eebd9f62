// Copyright 2026 The affsteiner Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Brute-force oracles used only by the tests. None of these share code
// with the library: field products are shift-and-add, enumeration is a
// plain loop over message masks, and the dual enumerator comes from
// expanding (y + x)^(n - i) (y - x)^i term by term.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "affsteiner/bigint.hpp"
#include "affsteiner/bitmatrix.hpp"

namespace oracle {

using affsteiner::BigInt;

inline std::uint32_t gf_mul(std::uint32_t a, std::uint32_t b, int m, std::uint32_t poly) {
  std::uint32_t r = 0;
  while (b) {
    if (b & 1u) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> m) a ^= poly;
  }
  return r;
}

inline std::uint32_t gf_pow(std::uint32_t a, std::uint64_t k, int m, std::uint32_t poly) {
  std::uint32_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r = gf_mul(r, a, m, poly);
  return r;
}

/// Cosets by repeated doubling, collected as sets.
inline std::vector<std::set<std::uint32_t>> cosets(std::uint32_t n) {
  std::vector<std::set<std::uint32_t>> out;
  std::vector<bool> seen(n, false);
  for (std::uint32_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::set<std::uint32_t> c;
    std::uint32_t x = s;
    while (!c.count(x)) {
      c.insert(x);
      seen[x] = true;
      x = static_cast<std::uint32_t>((2ull * x) % n);
    }
    out.push_back(c);
  }
  return out;
}

/// Weight histogram by visiting every message mask directly.
inline std::map<std::size_t, BigInt> enumerate(const affsteiner::BitMatrix& g) {
  std::map<std::size_t, BigInt> h;
  const std::size_t k = g.rows();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::size_t w = 0;
    for (std::size_t c = 0; c < g.cols(); ++c) {
      bool bit = false;
      for (std::size_t r = 0; r < k; ++r) {
        if ((mask >> r) & 1u) bit ^= g.get(r, c);
      }
      w += bit;
    }
    h[w] += 1;
  }
  return h;
}

/// Dual distribution by expanding the homogeneous enumerator.
inline std::map<std::size_t, BigInt> dual_by_expansion(const std::map<std::size_t, BigInt>& a,
                                                       std::size_t n, std::size_t dim) {
  std::vector<BigInt> b(n + 1, 0);
  for (const auto& [i, ai] : a) {
    // (1 + x)^(n - i) * (1 - x)^i, coefficient of x^j.
    std::vector<BigInt> p(n + 1, 0);
    for (std::size_t r = 0; r <= n - i; ++r) {
      for (std::size_t s = 0; s <= i; ++s) {
        BigInt t = affsteiner::binomial(n - i, r) * affsteiner::binomial(i, s);
        if (s % 2) t = -t;
        p[r + s] += t;
      }
    }
    for (std::size_t j = 0; j <= n; ++j) b[j] += ai * p[j];
  }
  std::map<std::size_t, BigInt> out;
  const BigInt size = affsteiner::pow2(dim);
  for (std::size_t j = 0; j <= n; ++j) {
    if (b[j] != 0) out[j] = b[j] / size;
  }
  return out;
}

/// Pair counts through a map keyed by sorted pairs.
inline std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> pair_counts(
    const std::vector<std::vector<std::uint32_t>>& blocks) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> c;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        c[{std::min(b[i], b[j]), std::max(b[i], b[j])}] += 1;
      }
    }
  }
  return c;
}

/// A full-rank random k x n generator matrix.
inline affsteiner::BitMatrix random_generator(std::mt19937_64& rng, std::size_t k,
                                              std::size_t n) {
  for (;;) {
    affsteiner::BitMatrix g(k, n);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < n; ++c) g.set(r, c, rng() & 1u);
    }
    if (affsteiner::row_reduce(g).basis.rows() == k) return g;
  }
}

}  // namespace oracle
