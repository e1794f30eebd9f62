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
#include <span>
#include <vector>

namespace affsteiner {

inline std::size_t words_for_bits(std::size_t bits) { return (bits + 63) / 64; }

/// Packed vector over GF(2); bit i lives in word i/64 at position i%64.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t bits) : bits_(bits), words_(words_for_bits(bits), 0) {}
  BitVec(std::size_t bits, std::span<const std::uint64_t> words)
      : bits_(bits), words_(words.begin(), words.end()) {}

  std::size_t size() const { return bits_; }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool v = true) {
    const std::uint64_t bit = std::uint64_t{1} << (i % 64);
    words_[i / 64] = v ? (words_[i / 64] | bit) : (words_[i / 64] & ~bit);
  }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  std::size_t weight() const {
    std::size_t w = 0;
    for (auto x : words_) w += static_cast<std::size_t>(std::popcount(x));
    return w;
  }
  bool none() const {
    for (auto x : words_) {
      if (x) return false;
    }
    return true;
  }
  /// Positions of the set bits, ascending.
  std::vector<std::uint32_t> support() const;

  BitVec& operator^=(const BitVec& o);
  std::span<std::uint64_t> words() { return words_; }
  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const BitVec&, const BitVec&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// GF(2) inner product.
bool dot(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

/// Row-major packed GF(2) matrix.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(words_for_bits(cols)), data_(rows * stride_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }

  std::span<std::uint64_t> row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
  std::span<const std::uint64_t> row(std::size_t r) const {
    return {data_.data() + r * stride_, stride_};
  }
  BitVec row_vec(std::size_t r) const { return BitVec(cols_, row(r)); }

  bool get(std::size_t r, std::size_t c) const { return (row(r)[c / 64] >> (c % 64)) & 1u; }
  void set(std::size_t r, std::size_t c, bool v = true);

  void append_row(std::span<const std::uint64_t> words);
  void swap_rows(std::size_t a, std::size_t b);
  /// row[dst] ^= row[src]
  void add_row(std::size_t dst, std::size_t src);

  std::span<const std::uint64_t> data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> data_;
};

/// Reduced row echelon form. Zero rows are dropped, so `basis.rows()` is the rank.
struct Echelon {
  BitMatrix basis;
  std::vector<std::size_t> pivots;  // pivot column of each basis row, ascending
};

Echelon row_reduce(BitMatrix m);

/// Reduce `word` in place against an echelon basis; returns true iff the
/// remainder is zero, i.e. the word lies in the row space.
bool reduce_against(const Echelon& ech, std::span<std::uint64_t> word);

/// Basis of the null space {x : M x^T = 0} derived from the echelon form.
BitMatrix null_space(const Echelon& ech, std::size_t cols);

}  // namespace affsteiner
