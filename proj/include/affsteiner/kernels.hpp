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

// Data-parallel kernels (OpenMP) behind enumeration, block extraction and
// pair-coverage verification. Each has a serial counterpart in
// affsteiner::reference with the same contract, used by the tests and the
// benchmark as an independent baseline.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "affsteiner/bitmatrix.hpp"
#include "affsteiner/field.hpp"

namespace affsteiner {

using Block4 = std::array<std::uint32_t, 4>;

/// Index of the unordered pair {p, q} (p != q) in a flat triangular array
/// of C(v, 2) counters.
inline std::size_t pair_index(std::size_t v, std::size_t p, std::size_t q) {
  if (p > q) std::swap(p, q);
  return p * (2 * v - p - 1) / 2 + (q - p - 1);
}

namespace kernels {

/// Histogram indexed by weight over all 2^rows codewords. The message space
/// is walked in Gray-code order, split into 2^shard_bits contiguous shards.
std::vector<std::uint64_t> weight_histogram(const BitMatrix& rows, unsigned shard_bits);

/// Supports (as coordinate positions) of every codeword of the given
/// weight, concatenated; `weight` entries per codeword, in shard order.
std::vector<std::uint32_t> collect_supports(const BitMatrix& rows, std::size_t weight,
                                            unsigned shard_bits);

/// Pair counters for blocks of size k over points [0, v), flat layout per
/// pair_index().
std::vector<std::uint32_t> pair_coverage(std::size_t v, std::size_t k,
                                         std::span<const std::uint32_t> blocks);

/// Weight-4 supports {a, b, c, d} of the extended code C_E, found per pair
/// (a, b) by solving s^(2^e) c + s c^(2^e) = a^u + b^u + s^u with s = a + b
/// and u = 1 + 2^e. Blocks are sorted ascending and listed once, in
/// lexicographic order.
std::vector<Block4> weight4_blocks(const FieldCtx& ctx, int e);

}  // namespace kernels

namespace reference {

std::vector<std::uint64_t> weight_histogram(const BitMatrix& rows);
std::vector<std::uint32_t> collect_supports(const BitMatrix& rows, std::size_t weight);
std::vector<std::uint32_t> pair_coverage(std::size_t v, std::size_t k,
                                         std::span<const std::uint32_t> blocks);
/// Searches every third point c for each pair and tests the power-sum
/// condition directly; no linear algebra.
std::vector<Block4> weight4_blocks(const FieldCtx& ctx, int e);

}  // namespace reference
}  // namespace affsteiner
