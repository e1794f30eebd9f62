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

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "affsteiner/errors.hpp"

namespace affsteiner {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(std::uint64_t k) {
  BigInt r = 1;
  r <<= k;
  return r;
}

/// C(n, k); zero when k > n.
inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

/// num / den, throwing InconsistencyError (tagged with `what`) on a remainder.
inline BigInt exact_div(const BigInt& num, const BigInt& den, std::string_view what) {
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) {
    throw InconsistencyError(std::string(what) + ": division by " + den.str() +
                             " is not exact");
  }
  return q;
}

}  // namespace affsteiner
