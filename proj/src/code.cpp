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

#include "affsteiner/code.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "affsteiner/errors.hpp"

namespace affsteiner {

LinearCode::LinearCode(BitMatrix generator, CodeInfo info, std::vector<Element> coordinates)
    : generator_(std::move(generator)),
      echelon_(row_reduce(generator_)),
      info_(std::move(info)),
      coordinates_(std::move(coordinates)) {
  if (echelon_.basis.rows() != generator_.rows()) {
    throw InconsistencyError("generator rows are linearly dependent (rank " +
                             std::to_string(echelon_.basis.rows()) + " of " +
                             std::to_string(generator_.rows()) + ")");
  }
  if (coordinates_.size() != generator_.cols()) {
    throw InconsistencyError("coordinate map does not cover the code length");
  }
}

std::string LinearCode::kind() const {
  if (info_.dual) return info_.extended ? "dual" : "dual-cyclic";
  return info_.extended ? "extended" : "cyclic";
}

bool LinearCode::contains(const Codeword& word) const {
  if (word.size() != length()) {
    throw std::invalid_argument("word length " + std::to_string(word.size()) +
                                " does not match code length " + std::to_string(length()));
  }
  std::vector<std::uint64_t> w(word.words().begin(), word.words().end());
  return reduce_against(echelon_, w);
}

Codeword LinearCode::encode(const BitVec& message) const {
  if (message.size() != dimension()) throw std::invalid_argument("message length mismatch");
  Codeword c(length());
  auto out = c.words();
  for (auto r : message.support()) {
    const auto row = generator_.row(r);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] ^= row[i];
  }
  return c;
}

LinearCode build_cyclic(const FieldCtx& ctx, int e) {
  const BinPoly g = generator_poly(ctx, e);
  const std::size_t n = ctx.n();
  if (!divides_x_n_minus_1(g, n)) {
    throw InconsistencyError("g_E does not divide x^n - 1");
  }
  const auto deg = static_cast<std::size_t>(g.degree());
  const std::size_t k = n - deg;
  BitMatrix rows(k, n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j <= deg; ++j) {
      if (g.coeff(j)) rows.set(i, i + j);
    }
  }
  std::vector<Element> coords(n);
  for (std::size_t i = 0; i < n; ++i) coords[i] = ctx.exp(i);
  return LinearCode(std::move(rows), CodeInfo{ctx.m(), e, false, false, g}, std::move(coords));
}

LinearCode extend(const LinearCode& code) {
  if (code.info().extended || code.info().dual) {
    throw std::invalid_argument("extend expects a cyclic code, got " + code.kind());
  }
  const std::size_t n = code.length();
  BitMatrix rows(code.dimension(), n + 1);
  for (std::size_t r = 0; r < code.dimension(); ++r) {
    const auto src = code.generator().row(r);
    auto dst = rows.row(r);
    std::copy(src.begin(), src.end(), dst.begin());
    std::size_t w = 0;
    for (auto x : src) w += static_cast<std::size_t>(std::popcount(x));
    if (w % 2) rows.set(r, n);
  }
  CodeInfo info = code.info();
  info.extended = true;
  std::vector<Element> coords = code.coordinates();
  coords.push_back(Element{0});
  return LinearCode(std::move(rows), std::move(info), std::move(coords));
}

LinearCode dual(const LinearCode& code) {
  BitMatrix h = null_space(code.echelon(), code.length());
  CodeInfo info = code.info();
  info.dual = !info.dual;
  return LinearCode(std::move(h), std::move(info), code.coordinates());
}

std::uint32_t position_of(const FieldCtx& ctx, Element x) {
  return x.value == 0 ? ctx.n() : ctx.log(x);
}

Element element_at(const FieldCtx& ctx, std::size_t position) {
  if (position > ctx.n()) throw std::out_of_range("coordinate position out of range");
  return position == ctx.n() ? Element{0} : ctx.exp(position);
}

Codeword word_from_points(const FieldCtx& ctx, std::span<const Element> points) {
  Codeword w(ctx.size());
  for (auto p : points) w.flip(position_of(ctx, p));
  return w;
}

std::vector<Element> points_of(const FieldCtx& ctx, const Codeword& word) {
  std::vector<Element> pts;
  for (auto pos : word.support()) pts.push_back(element_at(ctx, pos));
  return pts;
}

bool spectral_member(const FieldCtx& ctx, int e, std::span<const Element> support) {
  if (support.size() % 2) return false;
  Element s1 = ctx.zero();
  Element su = ctx.zero();
  for (auto x : support) {
    s1 = ctx.add(s1, x);
    su = ctx.add(su, ctx.mul(x, ctx.frob_pow(x, e)));
  }
  return s1.value == 0 && su.value == 0;
}

Codeword affine_permute(const FieldCtx& ctx, const Codeword& word, Element a, Element b) {
  if (a.value == 0) throw std::invalid_argument("affine map needs a nonzero multiplier");
  if (word.size() != ctx.size()) {
    throw std::invalid_argument("affine permutation acts on words of length 2^m");
  }
  Codeword out(word.size());
  for (auto pos : word.support()) {
    const Element y = ctx.add(ctx.mul(a, element_at(ctx, pos)), b);
    out.set(position_of(ctx, y));
  }
  return out;
}

nlohmann::ordered_json code_descriptor(const LinearCode& code) {
  nlohmann::ordered_json j;
  j["m"] = code.info().m;
  j["e"] = code.info().e;
  j["kind"] = code.kind();
  j["length"] = code.length();
  j["dimension"] = code.dimension();
  j["generator_poly_hex"] = code.info().generator_poly.to_hex();
  return j;
}

}  // namespace affsteiner
