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

#include "affsteiner/field.hpp"

#include <array>
#include <bit>
#include <sstream>
#include <string>

namespace affsteiner {
namespace {

constexpr std::array<std::uint32_t, 17> kDefaultPolys = {
    0,      0,      0x7,    0xB,    0x13,   0x25,   0x43,    0x89,   0x11D,
    0x211,  0x409,  0x805,  0x1053, 0x201B, 0x4443, 0x8003, 0x1100B,
};

std::string hex(std::uint32_t v) {
  std::ostringstream os;
  os << "0x" << std::hex << v;
  return os.str();
}

// Remainder of a modulo b for GF(2) polynomials packed in 32-bit masks.
std::uint32_t poly_mod32(std::uint32_t a, std::uint32_t b) {
  const int db = std::bit_width(b) - 1;
  for (int da = std::bit_width(a) - 1; da >= db; da = std::bit_width(a) - 1) {
    a ^= b << (da - db);
  }
  return a;
}

bool is_irreducible(std::uint32_t poly, int m) {
  // Trial division by every polynomial of degree 1..m/2.
  for (int d = 1; d <= m / 2; ++d) {
    for (std::uint32_t f = 1u << d; f < (2u << d); ++f) {
      if (poly_mod32(poly, f) == 0) return false;
    }
  }
  return true;
}

}  // namespace

std::uint32_t default_primitive_poly(int m) {
  if (m < kMinExtensionDegree || m > kMaxExtensionDegree) {
    throw std::invalid_argument("extension degree m=" + std::to_string(m) +
                                " outside [2, 16]");
  }
  return kDefaultPolys[static_cast<std::size_t>(m)];
}

FieldCtx::FieldCtx(int m, std::optional<std::uint32_t> primitive_poly)
    : m_(m), poly_(primitive_poly.value_or(default_primitive_poly(m))), n_((1u << m) - 1) {
  if (std::bit_width(poly_) != static_cast<unsigned>(m + 1)) {
    throw std::invalid_argument("polynomial " + hex(poly_) + " does not have degree " +
                                std::to_string(m));
  }
  if (!is_irreducible(poly_, m)) {
    throw ReduciblePolynomial("polynomial " + hex(poly_) + " is reducible over GF(2)");
  }

  log_.assign(n_ + 1, 0);
  antilog_.assign(2 * static_cast<std::size_t>(n_), 0);
  std::uint32_t x = 1;
  std::uint32_t order = 0;
  for (std::uint32_t i = 0; i < n_; ++i) {
    antilog_[i] = x;
    x <<= 1;
    if (x >> m) x ^= poly_;
    if (x == 1) {
      order = i + 1;
      break;
    }
  }
  if (order != n_) {
    throw NonPrimitivePolynomial("polynomial " + hex(poly_) + " is not primitive: root has order " +
                                 std::to_string(order) + ", expected " + std::to_string(n_));
  }
  for (std::uint32_t i = 0; i < n_; ++i) {
    log_[antilog_[i]] = i;
    antilog_[i + n_] = antilog_[i];
  }
}

Element FieldCtx::element(std::uint32_t value) const {
  if (value > n_) {
    throw std::out_of_range("value " + std::to_string(value) + " is not an element of GF(2^" +
                            std::to_string(m_) + ")");
  }
  return {value};
}

std::uint32_t FieldCtx::log(Element x) const {
  if (x.value == 0) throw std::domain_error("log of zero");
  return log_[x.value];
}

Element FieldCtx::inv(Element x) const {
  if (x.value == 0) throw std::domain_error("inverse of zero in GF(2^m)");
  return {antilog_[(n_ - log_[x.value]) % n_]};
}

Element FieldCtx::pow(Element x, std::int64_t k) const {
  if (x.value == 0) {
    if (k < 0) throw std::domain_error("negative power of zero");
    return {k == 0 ? 1u : 0u};
  }
  const auto n = static_cast<std::int64_t>(n_);
  std::int64_t r = (static_cast<std::int64_t>(log_[x.value]) * (k % n)) % n;
  if (r < 0) r += n;
  return {antilog_[static_cast<std::size_t>(r)]};
}

Element FieldCtx::frob_pow(Element x, int e) const {
  e %= m_;
  if (e < 0) e += m_;
  if (x.value == 0) return x;
  const std::uint64_t l = (static_cast<std::uint64_t>(log_[x.value]) << e) % n_;
  return {antilog_[l]};
}

}  // namespace affsteiner
