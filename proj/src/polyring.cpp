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

#include "affsteiner/polyring.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "affsteiner/cyclotomic.hpp"
#include "affsteiner/errors.hpp"

namespace affsteiner {
namespace {

// dst ^= src << shift, growing dst as needed.
void xor_shifted(std::vector<std::uint64_t>& dst, std::span<const std::uint64_t> src,
                 std::size_t shift) {
  if (src.empty()) return;
  const std::size_t ws = shift / 64;
  const unsigned bs = shift % 64;
  const std::size_t need = ws + src.size() + 1;
  if (dst.size() < need) dst.resize(need, 0);
  if (bs == 0) {
    for (std::size_t i = 0; i < src.size(); ++i) dst[ws + i] ^= src[i];
  } else {
    for (std::size_t i = 0; i < src.size(); ++i) {
      dst[ws + i] ^= src[i] << bs;
      dst[ws + i + 1] ^= src[i] >> (64 - bs);
    }
  }
}

}  // namespace

BinPoly BinPoly::from_mask(std::uint64_t mask) {
  BinPoly p;
  if (mask != 0) p.words_.push_back(mask);
  return p;
}

BinPoly BinPoly::monomial(std::size_t degree) {
  BinPoly p;
  p.set_coeff(degree, true);
  return p;
}

BinPoly BinPoly::x_pow_minus_one(std::size_t n) {
  BinPoly p = monomial(n);
  p.set_coeff(0, !p.coeff(0));
  return p;
}

long BinPoly::degree() const {
  if (words_.empty()) return -1;
  return static_cast<long>((words_.size() - 1) * 64 + std::bit_width(words_.back())) - 1;
}

bool BinPoly::coeff(std::size_t i) const {
  const std::size_t w = i / 64;
  return w < words_.size() && ((words_[w] >> (i % 64)) & 1u);
}

void BinPoly::set_coeff(std::size_t i, bool value) {
  const std::size_t w = i / 64;
  if (w >= words_.size()) {
    if (!value) return;
    words_.resize(w + 1, 0);
  }
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  words_[w] = value ? (words_[w] | bit) : (words_[w] & ~bit);
  trim();
}

std::string BinPoly::to_hex() const {
  if (words_.empty()) return "0";
  std::ostringstream os;
  os << std::hex << words_.back();
  for (std::size_t i = words_.size() - 1; i-- > 0;) {
    os.width(16);
    os.fill('0');
    os << words_[i];
  }
  return os.str();
}

void BinPoly::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

BinPoly operator+(const BinPoly& a, const BinPoly& b) {
  BinPoly r = a;
  xor_shifted(r.words_, b.words_, 0);
  r.trim();
  return r;
}

BinPoly poly_mul(const BinPoly& a, const BinPoly& b) {
  BinPoly r;
  const long da = a.degree();
  for (long i = 0; i <= da; ++i) {
    if (a.coeff(static_cast<std::size_t>(i))) {
      xor_shifted(r.words_, b.words_, static_cast<std::size_t>(i));
    }
  }
  r.trim();
  return r;
}

std::pair<BinPoly, BinPoly> poly_divmod(const BinPoly& a, const BinPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  BinPoly q;
  BinPoly r = a;
  const long db = b.degree();
  for (long i = r.degree(); i >= db; --i) {
    if (!r.coeff(static_cast<std::size_t>(i))) continue;
    const auto shift = static_cast<std::size_t>(i - db);
    xor_shifted(r.words_, b.words_, shift);
    q.set_coeff(shift, true);
  }
  r.trim();
  return {q, r};
}

BinPoly poly_gcd(BinPoly a, BinPoly b) {
  while (!b.is_zero()) {
    BinPoly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BinPoly poly_lcm(std::span<const BinPoly> polys) {
  if (polys.empty()) throw std::invalid_argument("lcm of an empty list");
  BinPoly acc = polys.front();
  for (const auto& p : polys.subspan(1)) {
    const BinPoly g = poly_gcd(acc, p);
    acc = poly_divmod(poly_mul(acc, p), g).first;
  }
  return acc;
}

bool divides_x_n_minus_1(const BinPoly& g, std::size_t n) {
  return poly_divmod(BinPoly::x_pow_minus_one(n), g).second.is_zero();
}

BinPoly minimal_poly(const FieldCtx& ctx, std::uint32_t s) {
  const CyclotomicCoset c = coset(s, ctx.n());
  // Coefficients over GF(2^m), lowest degree first.
  std::vector<Element> coeffs{ctx.one()};
  for (std::uint32_t j : c.elements) {
    const Element root = ctx.exp(j);
    std::vector<Element> next(coeffs.size() + 1, ctx.zero());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] = ctx.add(next[i + 1], coeffs[i]);
      next[i] = ctx.add(next[i], ctx.mul(coeffs[i], root));
    }
    coeffs = std::move(next);
  }
  BinPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].value > 1) {
      throw InconsistencyError("minimal polynomial of alpha^" + std::to_string(s) +
                               " has a coefficient outside GF(2) at x^" + std::to_string(i));
    }
    p.set_coeff(i, coeffs[i].value == 1);
  }
  return p;
}

Element poly_eval(const FieldCtx& ctx, const BinPoly& p, Element x) {
  Element acc = ctx.zero();
  for (long i = p.degree(); i >= 0; --i) {
    acc = ctx.mul(acc, x);
    if (p.coeff(static_cast<std::size_t>(i))) acc = ctx.add(acc, ctx.one());
  }
  return acc;
}

BinPoly generator_poly(const FieldCtx& ctx, int e) {
  const DefiningSet t = defining_set(ctx.m(), e);
  const BinPoly m1 = minimal_poly(ctx, 1);
  if (t.cosets.size() == 1) return m1;
  const BinPoly mu = minimal_poly(ctx, t.cosets[1].leader);
  if (poly_gcd(m1, mu) != BinPoly::from_mask(1)) {
    throw InconsistencyError("minimal polynomials of alpha and alpha^(1+2^e) are not coprime");
  }
  return poly_mul(m1, mu);
}

}  // namespace affsteiner
