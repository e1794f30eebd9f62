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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "affsteiner/field.hpp"

namespace affsteiner {

/// Polynomial over GF(2); bit i of the packed mask is the coefficient of x^i.
/// Storage is trimmed so the top word is nonzero (empty for the zero polynomial).
class BinPoly {
 public:
  BinPoly() = default;
  static BinPoly from_mask(std::uint64_t mask);
  static BinPoly monomial(std::size_t degree);
  /// x^n + 1 (= x^n - 1 over GF(2)).
  static BinPoly x_pow_minus_one(std::size_t n);

  bool is_zero() const { return words_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const;
  bool coeff(std::size_t i) const;
  void set_coeff(std::size_t i, bool value);
  std::span<const std::uint64_t> words() const { return words_; }

  /// Lowercase hex of the coefficient mask, no prefix.
  std::string to_hex() const;

  friend bool operator==(const BinPoly&, const BinPoly&) = default;
  friend BinPoly operator+(const BinPoly& a, const BinPoly& b);

 private:
  void trim();
  friend BinPoly poly_mul(const BinPoly&, const BinPoly&);
  friend std::pair<BinPoly, BinPoly> poly_divmod(const BinPoly&, const BinPoly&);

  std::vector<std::uint64_t> words_;
};

BinPoly poly_mul(const BinPoly& a, const BinPoly& b);
/// (quotient, remainder); throws std::domain_error on a zero divisor.
std::pair<BinPoly, BinPoly> poly_divmod(const BinPoly& a, const BinPoly& b);
BinPoly poly_gcd(BinPoly a, BinPoly b);
/// lcm of a nonempty list, folded pairwise as a*b/gcd(a,b).
BinPoly poly_lcm(std::span<const BinPoly> polys);

bool divides_x_n_minus_1(const BinPoly& g, std::size_t n);

/// Minimal polynomial of alpha^s, expanded as the product of (x - alpha^j)
/// over the cyclotomic coset of s. Throws InconsistencyError if a
/// coefficient fails to land in GF(2).
BinPoly minimal_poly(const FieldCtx& ctx, std::uint32_t s);

/// Evaluate a GF(2) polynomial at a field element.
Element poly_eval(const FieldCtx& ctx, const BinPoly& p, Element x);

/// g_E(x) = M_alpha(x) * M_{alpha^{1+2^e}}(x) for 1 <= e <= floor(m/2).
BinPoly generator_poly(const FieldCtx& ctx, int e);

}  // namespace affsteiner
