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

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace affsteiner {

/// An element of GF(2^m) as its polynomial-basis coordinate mask.
struct Element {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(Element, Element) = default;
};

class ReduciblePolynomial : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonPrimitivePolynomial : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kMinExtensionDegree = 2;
inline constexpr int kMaxExtensionDegree = 16;

/// Built-in primitive polynomial for GF(2^m), bit i = coefficient of x^i.
std::uint32_t default_primitive_poly(int m);

/// GF(2^m) arithmetic through log/antilog tables. Immutable once built and
/// safe to share between threads.
class FieldCtx {
 public:
  /// Throws std::invalid_argument for m outside [2, 16], ReduciblePolynomial
  /// or NonPrimitivePolynomial for a bad modulus.
  explicit FieldCtx(int m, std::optional<std::uint32_t> primitive_poly = std::nullopt);

  int m() const { return m_; }
  std::uint32_t primitive_poly() const { return poly_; }
  /// Multiplicative group order 2^m - 1.
  std::uint32_t n() const { return n_; }
  /// Number of elements 2^m.
  std::uint32_t size() const { return n_ + 1; }

  Element zero() const { return {0}; }
  Element one() const { return {1}; }
  Element alpha() const { return {2}; }

  /// Validated conversion from an integer encoding.
  Element element(std::uint32_t value) const;

  /// alpha^i, i taken mod n.
  Element exp(std::uint64_t i) const { return {antilog_[i % n_]}; }
  /// Discrete log base alpha; x must be nonzero.
  std::uint32_t log(Element x) const;

  Element add(Element x, Element y) const { return {x.value ^ y.value}; }
  Element mul(Element x, Element y) const {
    if (x.value == 0 || y.value == 0) return {0};
    return {antilog_[log_[x.value] + log_[y.value]]};
  }
  /// Throws std::domain_error for x = 0.
  Element inv(Element x) const;
  /// x^k for any integer k; negative k requires x != 0. pow(x, 0) = 1.
  Element pow(Element x, std::int64_t k) const;
  /// x^(2^e), e reduced mod m.
  Element frob_pow(Element x, int e) const;

 private:
  int m_;
  std::uint32_t poly_;
  std::uint32_t n_;
  std::vector<std::uint32_t> log_;
  // Length 2n so that log x + log y indexes without a reduction.
  std::vector<std::uint32_t> antilog_;
};

}  // namespace affsteiner
