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
#include <bit>
#include <stdexcept>

#include "affsteiner/kernels.hpp"

namespace affsteiner::reference {

std::vector<std::uint64_t> weight_histogram(const BitMatrix& rows) {
  if (rows.rows() >= 63) throw std::invalid_argument("enumeration dimension too large");
  std::vector<std::uint64_t> hist(rows.cols() + 1, 0);
  std::vector<std::uint64_t> word(rows.stride());
  const std::uint64_t total = std::uint64_t{1} << rows.rows();
  for (std::uint64_t msg = 0; msg < total; ++msg) {
    std::fill(word.begin(), word.end(), 0);
    for (std::uint64_t bits = msg; bits; bits &= bits - 1) {
      const auto r = rows.row(static_cast<std::size_t>(std::countr_zero(bits)));
      for (std::size_t i = 0; i < word.size(); ++i) word[i] ^= r[i];
    }
    std::size_t w = 0;
    for (auto x : word) w += static_cast<std::size_t>(std::popcount(x));
    ++hist[w];
  }
  return hist;
}

std::vector<std::uint32_t> collect_supports(const BitMatrix& rows, std::size_t weight) {
  if (rows.rows() >= 63) throw std::invalid_argument("enumeration dimension too large");
  std::vector<std::uint32_t> out;
  std::vector<std::uint64_t> word(rows.stride());
  const std::uint64_t total = std::uint64_t{1} << rows.rows();
  for (std::uint64_t msg = 0; msg < total; ++msg) {
    std::fill(word.begin(), word.end(), 0);
    for (std::uint64_t bits = msg; bits; bits &= bits - 1) {
      const auto r = rows.row(static_cast<std::size_t>(std::countr_zero(bits)));
      for (std::size_t i = 0; i < word.size(); ++i) word[i] ^= r[i];
    }
    const BitVec v(rows.cols(), word);
    if (v.weight() != weight) continue;
    const auto supp = v.support();
    out.insert(out.end(), supp.begin(), supp.end());
  }
  return out;
}

std::vector<std::uint32_t> pair_coverage(std::size_t v, std::size_t k,
                                         std::span<const std::uint32_t> blocks) {
  if (k == 0 || blocks.size() % k) throw std::invalid_argument("flat block list is ragged");
  std::vector<std::uint32_t> counts(v * (v - 1) / 2, 0);
  for (std::size_t i = 0; i < blocks.size(); i += k) {
    for (std::size_t x = i; x < i + k; ++x) {
      for (std::size_t y = x + 1; y < i + k; ++y) ++counts[pair_index(v, blocks[x], blocks[y])];
    }
  }
  return counts;
}

std::vector<Block4> weight4_blocks(const FieldCtx& ctx, int e) {
  const std::uint32_t q = ctx.size();
  std::vector<std::uint32_t> power_u(q);
  for (std::uint32_t x = 0; x < q; ++x) {
    power_u[x] = ctx.mul(Element{x}, ctx.frob_pow(Element{x}, e)).value;
  }
  std::vector<Block4> blocks;
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = a + 1; b < q; ++b) {
      for (std::uint32_t c = b + 1; c < q; ++c) {
        const std::uint32_t d = a ^ b ^ c;
        if (d <= c) continue;
        if ((power_u[a] ^ power_u[b] ^ power_u[c] ^ power_u[d]) == 0) {
          blocks.push_back({a, b, c, d});
        }
      }
    }
  }
  return blocks;
}

}  // namespace affsteiner::reference
