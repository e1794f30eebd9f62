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

#include <random>
#include <set>

#include "affsteiner/field.hpp"
#include "doctest.h"
#include "oracles.hpp"

using affsteiner::Element;
using affsteiner::FieldCtx;

TEST_CASE("default polynomials build valid fields for every supported m") {
  for (int m = affsteiner::kMinExtensionDegree; m <= affsteiner::kMaxExtensionDegree; ++m) {
    const FieldCtx f(m);
    CHECK(f.n() == (1u << m) - 1);
    // antilog enumerates every nonzero element exactly once
    std::set<std::uint32_t> seen;
    for (std::uint32_t i = 0; i < f.n(); ++i) seen.insert(f.exp(i).value);
    CHECK(seen.size() == f.n());
    CHECK(!seen.count(0));
    CHECK(f.pow(f.alpha(), f.n()) == f.one());
  }
  CHECK(FieldCtx(4).primitive_poly() == 0x13);
  CHECK(FieldCtx(8).primitive_poly() == 0x11D);
  CHECK(FieldCtx(12).primitive_poly() == 0x1053);
}

TEST_CASE("reducible and non-primitive polynomials are told apart") {
  CHECK_THROWS_AS(FieldCtx(4, 0x15), affsteiner::ReduciblePolynomial);  // (x^2+x+1)^2
  try {
    FieldCtx f(4, 0x1F);
    FAIL("0x1f accepted");
  } catch (const affsteiner::NonPrimitivePolynomial& ex) {
    CHECK(std::string(ex.what()).find("order 5") != std::string::npos);
  }
  CHECK_THROWS_AS(FieldCtx(4, 0x0B), std::invalid_argument);  // wrong degree
  CHECK_THROWS_AS(FieldCtx(1), std::invalid_argument);
  CHECK_THROWS_AS(FieldCtx(17), std::invalid_argument);
}

TEST_CASE("small-field arithmetic") {
  const FieldCtx f(4);
  const Element a = f.alpha();
  CHECK(f.mul(a, f.pow(a, 3)) == Element{0b0011});
  CHECK(f.pow(a, 15) == f.one());
  CHECK(f.pow(a, -1) == f.inv(a));
  CHECK(f.frob_pow(a, 2) == f.pow(a, 4));
  CHECK(f.frob_pow(f.zero(), 3) == f.zero());
  CHECK(f.frob_pow(a, 0) == a);
  CHECK_THROWS_AS(f.inv(f.zero()), std::domain_error);
  CHECK_THROWS_AS(f.log(f.zero()), std::domain_error);
  CHECK_THROWS_AS(f.element(16), std::out_of_range);
}

TEST_CASE("table arithmetic agrees with shift-and-add on random pairs") {
  std::mt19937_64 rng(7);
  for (int m : {4, 6, 8, 11, 12, 16}) {
    const FieldCtx f(m);
    for (int t = 0; t < 2000; ++t) {
      const auto x = static_cast<std::uint32_t>(rng() % f.size());
      const auto y = static_cast<std::uint32_t>(rng() % f.size());
      CHECK(f.mul({x}, {y}).value == oracle::gf_mul(x, y, m, f.primitive_poly()));
      CHECK(f.add({x}, {x}) == f.zero());
      if (x) {
        CHECK(f.mul({x}, f.inv({x})) == f.one());
        CHECK(f.exp(f.log({x})) == Element{x});
      }
      const int e = 1 + static_cast<int>(rng() % m);
      CHECK(f.frob_pow(f.mul({x}, {y}), e) == f.mul(f.frob_pow({x}, e), f.frob_pow({y}, e)));
      CHECK(f.frob_pow({x}, e).value ==
            oracle::gf_pow(x, std::uint64_t{1} << e, m, f.primitive_poly()));
    }
  }
}
