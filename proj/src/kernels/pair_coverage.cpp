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

#include <omp.h>

#include <stdexcept>

#include "affsteiner/kernels.hpp"

namespace affsteiner::kernels {
namespace {

// Above this many counters, threads share one array with atomic increments
// instead of keeping private copies.
constexpr std::size_t kPrivateCounterLimit = std::size_t{1} << 21;

}  // namespace

std::vector<std::uint32_t> pair_coverage(std::size_t v, std::size_t k,
                                         std::span<const std::uint32_t> blocks) {
  if (k == 0 || blocks.size() % k) throw std::invalid_argument("flat block list is ragged");
  const std::size_t pairs = v * (v - 1) / 2;
  const auto b = static_cast<std::int64_t>(blocks.size() / k);
  std::vector<std::uint32_t> counts(pairs, 0);

  if (omp_get_max_threads() == 1) {
    for (std::int64_t i = 0; i < b; ++i) {
      const std::uint32_t* blk = blocks.data() + static_cast<std::size_t>(i) * k;
      for (std::size_t x = 0; x < k; ++x) {
        for (std::size_t y = x + 1; y < k; ++y) ++counts[pair_index(v, blk[x], blk[y])];
      }
    }
  } else if (pairs <= kPrivateCounterLimit) {
#pragma omp parallel
    {
      std::vector<std::uint32_t> local(pairs, 0);
#pragma omp for schedule(static)
      for (std::int64_t i = 0; i < b; ++i) {
        const std::uint32_t* blk = blocks.data() + static_cast<std::size_t>(i) * k;
        for (std::size_t x = 0; x < k; ++x) {
          for (std::size_t y = x + 1; y < k; ++y) ++local[pair_index(v, blk[x], blk[y])];
        }
      }
#pragma omp critical
      for (std::size_t p = 0; p < pairs; ++p) counts[p] += local[p];
    }
  } else {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < b; ++i) {
      const std::uint32_t* blk = blocks.data() + static_cast<std::size_t>(i) * k;
      for (std::size_t x = 0; x < k; ++x) {
        for (std::size_t y = x + 1; y < k; ++y) {
#pragma omp atomic
          ++counts[pair_index(v, blk[x], blk[y])];
        }
      }
    }
  }
  return counts;
}

}  // namespace affsteiner::kernels
