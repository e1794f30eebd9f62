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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "affsteiner/bigint.hpp"
#include "affsteiner/code.hpp"
#include "affsteiner/wdist.hpp"
#include "json.hpp"

namespace affsteiner {

/// A simple block design on points 0..v-1. Blocks are ascending k-tuples
/// stored back to back and kept in lexicographic order.
struct Design {
  std::size_t v = 0;
  std::size_t k = 0;
  int t = 2;
  std::optional<BigInt> lambda;  // from b C(k,t) = lambda C(v,t), when integral
  std::vector<std::uint32_t> points;
  int m = 0;  // provenance, 0 when unknown
  int e = 0;

  std::size_t b() const { return k ? points.size() / k : 0; }
  std::span<const std::uint32_t> block(std::size_t i) const { return {points.data() + i * k, k}; }
};

struct DesignParams {
  int t = 2;
  BigInt v;
  BigInt k;
  BigInt lambda;

  friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

/// lambda = b C(k,t) / C(v,t). Throws std::invalid_argument ("not a design
/// parameter set") when that is not an integer or the sizes are out of order.
BigInt lambda_from_count(const BigInt& b, std::uint64_t v, std::uint64_t k, std::uint64_t t);

/// Sorts blocks, checks each block has k distinct points below v and that
/// no block repeats, and fills lambda. Throws InconsistencyError on a
/// repeated block or malformed block.
Design make_design(std::size_t v, std::size_t k, std::vector<std::uint32_t> points, int m = 0,
                   int e = 0);

/// Supports of the weight-4 codewords of the extended code, found by the
/// per-pair linearized solve. Requires even m >= 4, 2 <= e <= m/2 and
/// gcd(m, e) = 2 (std::invalid_argument otherwise). The block count is
/// checked against A4 obtained by macwilliams from the closed-form dual
/// distribution; a mismatch throws VerificationError.
Design extract_weight4_blocks(const FieldCtx& ctx, int e);

/// Supports of all weight-k codewords found by enumerating the code. Points
/// are field-element encodings when the code has 2^m coordinates, positions
/// otherwise. Throws GuardExceeded past the guard.
Design extract_blocks_by_enumeration(const LinearCode& code, std::size_t k,
                                     const EnumOptions& options = {});

/// Outcome of pair-coverage counting.
struct CoverageReport {
  bool uniform = false;
  std::uint64_t lambda = 0;  // common count when uniform, majority count otherwise
  std::uint32_t min_count = 0;
  std::uint32_t max_count = 0;
  std::size_t pairs = 0;
  struct Offender {
    std::uint32_t p, q, count;
  };
  std::vector<Offender> offenders;  // at most 10 pairs off the majority count
};

/// Counts, for every unordered point pair, the blocks containing it. Only
/// t = 2 is supported.
CoverageReport verify_design(const Design& design, int t = 2);

/// The (k, lambda) rows for the dual of the extended code. Each lambda is
/// also derived from the closed-form block count; disagreement throws
/// InconsistencyError.
std::vector<DesignParams> dual_design_params(int m, int e);

/// Index of the weight-6 / weight-8 designs of the extended code.
/// Even m >= 4; throws InconsistencyError when the division is not exact.
BigInt wt6_lambda(int m);
BigInt wt8_lambda(int m);

/// Number of weight-4 blocks 2^(m-1)(2^m-1)/6 for even m.
BigInt steiner_block_count(int m);

struct AmReport {
  std::size_t w = 0;
  std::size_t w_dual = 0;
  std::size_t s = 0;
  bool holds = false;
};

/// Evaluates the Assmus-Mattson hypothesis s <= d - t for a binary code.
/// s counts the nonzero weights i <= v - t carried by the dual.
AmReport am_check(const WeightDistribution& wd, const WeightDistribution& wd_dual, std::size_t d,
                  std::size_t d_dual, std::size_t t);

/// Text block file: a header line, then one sorted block per line with the
/// points in lowercase hex.
void write_block_file(std::ostream& os, const Design& d);
Design read_block_file(std::istream& is);
nlohmann::ordered_json design_to_json(const Design& d);
Design design_from_json(const nlohmann::ordered_json& j);

}  // namespace affsteiner
