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

#include <algorithm>
#include <stdexcept>

#include "affsteiner/kernels.hpp"
#include "gray_walk.hpp"

namespace affsteiner::kernels {
namespace {

void check_dimension(const BitMatrix& rows) {
  if (rows.rows() >= 63) throw std::invalid_argument("enumeration dimension too large");
}

}  // namespace

std::vector<std::uint64_t> weight_histogram(const BitMatrix& rows, unsigned shard_bits) {
  check_dimension(rows);
  const unsigned k = static_cast<unsigned>(rows.rows());
  shard_bits = std::min(shard_bits, k);
  const std::int64_t shards = std::int64_t{1} << shard_bits;
  const std::uint64_t shard_len = std::uint64_t{1} << (k - shard_bits);
  const std::size_t v = rows.cols();

  std::vector<std::uint64_t> total(v + 1, 0);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(v + 1, 0);
#pragma omp for schedule(dynamic)
    for (std::int64_t s = 0; s < shards; ++s) {
      const auto begin = static_cast<std::uint64_t>(s) * shard_len;
      detail::gray_walk(rows, begin, begin + shard_len,
                        [&](const std::vector<std::uint64_t>&, std::size_t w) { ++local[w]; });
    }
#pragma omp critical
    for (std::size_t w = 0; w <= v; ++w) total[w] += local[w];
  }
  return total;
}

std::vector<std::uint32_t> collect_supports(const BitMatrix& rows, std::size_t weight,
                                            unsigned shard_bits) {
  check_dimension(rows);
  const unsigned k = static_cast<unsigned>(rows.rows());
  shard_bits = std::min(shard_bits, k);
  const std::int64_t shards = std::int64_t{1} << shard_bits;
  const std::uint64_t shard_len = std::uint64_t{1} << (k - shard_bits);

  std::vector<std::vector<std::uint32_t>> per_shard(static_cast<std::size_t>(shards));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t s = 0; s < shards; ++s) {
    auto& out = per_shard[static_cast<std::size_t>(s)];
    const auto begin = static_cast<std::uint64_t>(s) * shard_len;
    detail::gray_walk(rows, begin, begin + shard_len,
                      [&](const std::vector<std::uint64_t>& word, std::size_t w) {
                        if (w != weight) return;
                        for (std::size_t i = 0; i < word.size(); ++i) {
                          for (std::uint64_t x = word[i]; x; x &= x - 1) {
                            out.push_back(static_cast<std::uint32_t>(i * 64 + std::countr_zero(x)));
                          }
                        }
                      });
  }
  std::vector<std::uint32_t> all;
  for (auto& v : per_shard) all.insert(all.end(), v.begin(), v.end());
  return all;
}

}  // namespace affsteiner::kernels
