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
#include <vector>

#include "affsteiner/bitmatrix.hpp"
#include "affsteiner/field.hpp"
#include "affsteiner/polyring.hpp"
#include "json.hpp"

namespace affsteiner {

using Codeword = BitVec;

/// Where a code came from.
struct CodeInfo {
  int m = 0;
  int e = 0;
  bool extended = false;
  bool dual = false;
  BinPoly generator_poly;  // g_E of the underlying cyclic code
};

/// Binary linear code given by linearly independent generator rows.
///
/// Coordinates are indexed by field elements: cyclic position i carries
/// alpha^i and the parity position of an extended code carries 0. The dual
/// inherits the coordinates of the code it was taken from.
class LinearCode {
 public:
  /// Throws InconsistencyError if the rows are dependent.
  LinearCode(BitMatrix generator, CodeInfo info, std::vector<Element> coordinates);

  std::size_t length() const { return generator_.cols(); }
  std::size_t dimension() const { return generator_.rows(); }
  const BitMatrix& generator() const { return generator_; }
  const Echelon& echelon() const { return echelon_; }
  const CodeInfo& info() const { return info_; }
  const std::vector<Element>& coordinates() const { return coordinates_; }

  /// "cyclic", "extended", "dual" (or "dual-cyclic" for the dual of C_E).
  std::string kind() const;

  /// Membership by reduction against the echelon basis. Throws
  /// std::invalid_argument on a length mismatch.
  bool contains(const Codeword& word) const;

  /// Sum of the generator rows selected by `message` (bit i -> row i).
  Codeword encode(const BitVec& message) const;

 private:
  BitMatrix generator_;
  Echelon echelon_;
  CodeInfo info_;
  std::vector<Element> coordinates_;
};

/// C_E: rows are the cyclic shifts x^i g_E(x), i < n - deg g_E.
LinearCode build_cyclic(const FieldCtx& ctx, int e);
/// Appends the overall parity coordinate (field element 0).
LinearCode extend(const LinearCode& code);
/// Dual code; rows come from the null space of the echelon form.
LinearCode dual(const LinearCode& code);

/// Extended-code coordinate convention: element 0 -> position n, alpha^i -> i.
std::uint32_t position_of(const FieldCtx& ctx, Element x);
Element element_at(const FieldCtx& ctx, std::size_t position);

/// Characteristic vector of a point set under the extended convention.
Codeword word_from_points(const FieldCtx& ctx, std::span<const Element> points);
std::vector<Element> points_of(const FieldCtx& ctx, const Codeword& word);

/// Membership in the extended code through power sums over the support:
/// |S| even, sum of x = 0 and sum of x^(1+2^e) = 0.
bool spectral_member(const FieldCtx& ctx, int e, std::span<const Element> support);

/// Moves the bit at coordinate x to coordinate a*x + b. Word length must be 2^m.
Codeword affine_permute(const FieldCtx& ctx, const Codeword& word, Element a, Element b);

/// {m, e, kind, length, dimension, generator_poly_hex}
nlohmann::ordered_json code_descriptor(const LinearCode& code);

}  // namespace affsteiner
