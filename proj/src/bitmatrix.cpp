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

#include "affsteiner/bitmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace affsteiner {

std::vector<std::uint32_t> BitVec::support() const {
  std::vector<std::uint32_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (std::uint64_t x = words_[w]; x; x &= x - 1) {
      out.push_back(static_cast<std::uint32_t>(w * 64 + std::countr_zero(x)));
    }
  }
  return out;
}

BitVec& BitVec::operator^=(const BitVec& o) {
  if (o.bits_ != bits_) throw std::invalid_argument("bit vector length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

bool dot(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  std::uint64_t acc = 0;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) acc ^= a[i] & b[i];
  return std::popcount(acc) & 1;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool v) {
  auto w = row(r);
  const std::uint64_t bit = std::uint64_t{1} << (c % 64);
  w[c / 64] = v ? (w[c / 64] | bit) : (w[c / 64] & ~bit);
}

void BitMatrix::append_row(std::span<const std::uint64_t> words) {
  if (words.size() != stride_) throw std::invalid_argument("row width mismatch");
  data_.insert(data_.end(), words.begin(), words.end());
  ++rows_;
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

void BitMatrix::add_row(std::size_t dst, std::size_t src) {
  auto d = row(dst);
  auto s = row(src);
  for (std::size_t i = 0; i < stride_; ++i) d[i] ^= s[i];
}

Echelon row_reduce(BitMatrix m) {
  Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && !m.get(p, c)) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i != r && m.get(i, c)) m.add_row(i, r);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.basis = BitMatrix(0, m.cols());
  for (std::size_t i = 0; i < r; ++i) out.basis.append_row(m.row(i));
  return out;
}

bool reduce_against(const Echelon& ech, std::span<std::uint64_t> word) {
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    const std::size_t c = ech.pivots[i];
    if ((word[c / 64] >> (c % 64)) & 1u) {
      const auto row = ech.basis.row(i);
      for (std::size_t w = 0; w < word.size(); ++w) word[w] ^= row[w];
    }
  }
  for (auto x : word) {
    if (x) return false;
  }
  return true;
}

BitMatrix null_space(const Echelon& ech, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  BitMatrix h(0, cols);
  std::vector<std::uint64_t> row(words_for_bits(cols));
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::fill(row.begin(), row.end(), 0);
    row[f / 64] |= std::uint64_t{1} << (f % 64);
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
      if (ech.basis.get(i, f)) {
        const std::size_t p = ech.pivots[i];
        row[p / 64] |= std::uint64_t{1} << (p % 64);
      }
    }
    h.append_row(row);
  }
  return h;
}

}  // namespace affsteiner
