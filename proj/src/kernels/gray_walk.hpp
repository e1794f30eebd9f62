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

#include <bit>
#include <cstdint>
#include <vector>

#include "affsteiner/bitmatrix.hpp"

namespace affsteiner::detail {

inline std::size_t xor_row_weight(std::vector<std::uint64_t>& word,
                                  std::span<const std::uint64_t> row) {
  std::size_t w = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    word[i] ^= row[i];
    w += static_cast<std::size_t>(std::popcount(word[i]));
  }
  return w;
}

/// Visits the codewords for Gray indices begin..end-1. The visitor receives
/// the current word and its weight.
template <class Visit>
void gray_walk(const BitMatrix& rows, std::uint64_t begin, std::uint64_t end, Visit&& visit) {
  std::vector<std::uint64_t> word(rows.stride(), 0);
  std::size_t weight = 0;
  const std::uint64_t g = begin ^ (begin >> 1);
  for (std::uint64_t bits = g; bits; bits &= bits - 1) {
    weight = xor_row_weight(word, rows.row(static_cast<std::size_t>(std::countr_zero(bits))));
  }
  visit(word, weight);
  for (std::uint64_t i = begin + 1; i < end; ++i) {
    weight = xor_row_weight(word, rows.row(static_cast<std::size_t>(std::countr_zero(i))));
    visit(word, weight);
  }
}

}  // namespace affsteiner::detail
