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
#include <vector>

namespace affsteiner {

/// A 2-cyclotomic coset modulo n, elements sorted ascending.
struct CyclotomicCoset {
  std::uint32_t leader = 0;
  std::vector<std::uint32_t> elements;

  std::size_t size() const { return elements.size(); }
  bool contains(std::uint32_t s) const;
  friend bool operator==(const CyclotomicCoset&, const CyclotomicCoset&) = default;
};

/// Defining set T as a union of full cosets.
struct DefiningSet {
  std::vector<CyclotomicCoset> cosets;
  std::vector<std::uint32_t> exponents;
};

/// {s * 2^i mod n}. Requires n >= 1 and s < n.
CyclotomicCoset coset(std::uint32_t s, std::uint32_t n);

/// All coset leaders modulo an odd n, ascending.
std::vector<std::uint32_t> coset_leaders(std::uint32_t n);

/// T = C_1 u C_{1+2^e} modulo 2^m - 1, for 1 <= e <= floor(m/2).
DefiningSet defining_set(int m, int e);

}  // namespace affsteiner
