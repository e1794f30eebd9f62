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
#include <map>
#include <string>
#include <utility>

#include "affsteiner/bigint.hpp"
#include "affsteiner/code.hpp"
#include "json.hpp"

namespace affsteiner {

/// Exact weight distribution: weight -> count, zero counts not stored.
class WeightDistribution {
 public:
  WeightDistribution() = default;
  explicit WeightDistribution(std::size_t length) : length_(length) {}

  std::size_t length() const { return length_; }
  const std::map<std::size_t, BigInt>& counts() const { return counts_; }
  BigInt count(std::size_t weight) const;
  /// Setting zero erases. Weight beyond the length throws std::out_of_range.
  void set(std::size_t weight, BigInt count);
  void add(std::size_t weight, const BigInt& count);
  BigInt total() const;

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;

 private:
  std::size_t length_ = 0;
  std::map<std::size_t, BigInt> counts_;
};

struct EnumOptions {
  std::size_t guard = 22;     // largest dimension enumerated
  unsigned shard_bits = 6;    // 2^shard_bits shards
};

/// Exhaustive weight distribution of a code (all 2^dim codewords).
/// Throws GuardExceeded when dim > options.guard.
WeightDistribution enumerate_wd(const LinearCode& code, const EnumOptions& options = {});

/// Dual distribution via A'_k = 2^-dim * sum_i A_i K_k(i), with Krawtchouk
/// values from the three-term recurrence. All arithmetic is exact; a
/// remainder in the final division, a negative result, or an input whose
/// total is not 2^dim throws InconsistencyError.
WeightDistribution macwilliams(const WeightDistribution& wd, std::size_t dim);

enum class TableCase { a, b, c, c4 };
std::string to_string(TableCase c);

/// Parameters of the closed-form dual distribution for one (m, e).
struct ClosedFormCase {
  TableCase tag = TableCase::a;
  int h = 0;     // case a only
  int ell = 0;   // case c / c4 only
  BigInt u;      // count at the outermost nontrivial weights
  BigInt v;      // count at the inner weights (case c / c4; zero otherwise)
  BigInt w;      // count at weight 2^(m-1)
  std::size_t dual_dimension = 0;
};

/// Which of the three cases applies (c4 is case c with gcd(m, e) = 2).
TableCase classify(int m, int e);

/// Dual weight distribution of the extended code from the closed-form tables.
/// Requires m >= 4 and 1 <= e <= floor(m/2).
std::pair<ClosedFormCase, WeightDistribution> closed_form_dual_wd(int m, int e);

/// True when (m, e) satisfies gcd(m, e) = 2 and 4 | m, where the explicit
/// code-side expansion applies.
bool code_expansion_applies(int m, int e);

/// One count of the extended code from the explicit expansion
/// 2^(2m+1) A_k = (1+(-1)^k) C(2^m,k) + w E0(k) + u E1(k) + v E2(k).
/// Throws std::invalid_argument outside code_expansion_applies().
BigInt closed_form_code_count(int m, int e, std::size_t k);
/// The whole code-side distribution from the same expansion.
WeightDistribution closed_form_code_wd(int m, int e);

struct LowWeightCounts {
  BigInt a4, a6, a8;
};

/// A4, A6, A8 of the extended code for gcd(m, e) = 2 (even m >= 4). The
/// expressions are integral only for m divisible by 4.
/// Throws InconsistencyError if a division is not exact.
LowWeightCounts a468(int m);

/// Smallest positive weight with a nonzero count; throws std::domain_error
/// when the distribution has no such weight.
std::size_t min_distance(const WeightDistribution& wd);

/// {"length": v, "counts": {"0": "1", ...}} with decimal-string counts.
nlohmann::ordered_json to_json(const WeightDistribution& wd);
WeightDistribution wd_from_json(const nlohmann::ordered_json& j);

}  // namespace affsteiner
