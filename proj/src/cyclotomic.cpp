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

#include "affsteiner/cyclotomic.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "affsteiner/field.hpp"

namespace affsteiner {

bool CyclotomicCoset::contains(std::uint32_t s) const {
  return std::binary_search(elements.begin(), elements.end(), s);
}

CyclotomicCoset coset(std::uint32_t s, std::uint32_t n) {
  if (n == 0 || s >= n) {
    throw std::invalid_argument("coset representative " + std::to_string(s) +
                                " out of range for modulus " + std::to_string(n));
  }
  CyclotomicCoset c;
  std::uint64_t x = s;
  do {
    c.elements.push_back(static_cast<std::uint32_t>(x));
    x = (2 * x) % n;
  } while (x != s);
  std::sort(c.elements.begin(), c.elements.end());
  c.leader = c.elements.front();
  return c;
}

std::vector<std::uint32_t> coset_leaders(std::uint32_t n) {
  if (n % 2 == 0) {
    throw std::invalid_argument("cyclotomic cosets need an odd modulus, got " + std::to_string(n));
  }
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> leaders;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    leaders.push_back(s);
    std::uint64_t x = s;
    do {
      seen[x] = true;
      x = (2 * x) % n;
    } while (x != s);
  }
  return leaders;
}

DefiningSet defining_set(int m, int e) {
  if (m < kMinExtensionDegree || m > kMaxExtensionDegree) {
    throw std::invalid_argument("m=" + std::to_string(m) + " outside [2, 16]");
  }
  if (e < 1 || e > m / 2) {
    throw std::invalid_argument("e=" + std::to_string(e) + " out of range: need 1 <= e <= " +
                                std::to_string(m / 2));
  }
  const std::uint32_t n = (1u << m) - 1;
  DefiningSet t;
  t.cosets.push_back(coset(1, n));
  CyclotomicCoset second = coset(((1u << e) + 1) % n, n);
  if (second != t.cosets.front()) t.cosets.push_back(std::move(second));
  for (const auto& c : t.cosets) {
    t.exponents.insert(t.exponents.end(), c.elements.begin(), c.elements.end());
  }
  std::sort(t.exponents.begin(), t.exponents.end());
  return t;
}

}  // namespace affsteiner
