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
#include <sstream>

#include "affsteiner/designs.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace affsteiner;

namespace {

std::vector<std::vector<std::uint32_t>> blocks_of(const Design& d) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t i = 0; i < d.b(); ++i) out.emplace_back(d.block(i).begin(), d.block(i).end());
  return out;
}

WeightDistribution wd_of(std::size_t len, std::initializer_list<std::pair<std::size_t, long>> c) {
  WeightDistribution wd(len);
  for (auto [w, n] : c) wd.set(w, n);
  return wd;
}

}  // namespace

TEST_CASE("parameter arithmetic") {
  CHECK(lambda_from_count(20, 16, 4, 2) == 1);
  CHECK(lambda_from_count(1, 7, 7, 3) == 1);
  CHECK(lambda_from_count(160, 16, 6, 2) == 20);
  try {
    lambda_from_count(21, 16, 4, 2);
    FAIL("fractional lambda accepted");
  } catch (const std::invalid_argument& ex) {
    CHECK(std::string(ex.what()).rfind("not a design parameter set", 0) == 0);
  }
  CHECK(steiner_block_count(4) == 20);
  CHECK(steiner_block_count(6) == 336);
  CHECK(steiner_block_count(12) == 1397760);
  CHECK(wt6_lambda(4) == 20);
  CHECK(wt8_lambda(4) == 35);
  CHECK(wt6_lambda(8) == 2820);
  for (int m : {4, 8, 12, 16}) {
    const auto l = a468(m);
    const BigInt pairs = binomial(std::uint64_t{1} << m, 2);
    CHECK(wt6_lambda(m) * pairs == l.a6 * 15);
    CHECK(wt8_lambda(m) * pairs == l.a8 * 28);
  }
}

TEST_CASE("dual design parameters") {
  auto p4 = dual_design_params(4, 2);
  REQUIRE(p4.size() == 3);
  CHECK(p4[0] == DesignParams{2, 16, 6, 6});
  CHECK(p4[1] == DesignParams{2, 16, 8, 7});
  CHECK(p4[2] == DesignParams{2, 16, 10, 18});
  CHECK(dual_design_params(6, 2).front() == DesignParams{2, 64, 24, 138});
  CHECK(dual_design_params(8, 2).front() == DesignParams{2, 256, 96, 114});
}

TEST_CASE("weight-4 blocks at m=4") {
  const FieldCtx f(4);
  const Design d = extract_weight4_blocks(f, 2);
  CHECK(d.b() == 20);
  CHECK(d.lambda == BigInt(1));
  // the block through 0 and 1 is the subfield of order 4
  const std::vector<std::uint32_t> sub{0, 1, f.exp(5).value, f.exp(10).value};
  std::vector<std::uint32_t> sorted = sub;
  std::sort(sorted.begin(), sorted.end());
  bool found = false;
  for (const auto& b : blocks_of(d)) {
    if (b[0] == 0 && b[1] == 1) {
      CHECK(b == sorted);
      found = true;
    }
  }
  CHECK(found);

  const auto ext = extend(build_cyclic(f, 2));
  const Design by_enum = extract_blocks_by_enumeration(ext, 4);
  CHECK(by_enum.points == d.points);
  const auto rep = verify_design(d);
  CHECK(rep.uniform);
  CHECK(rep.lambda == 1);
  CHECK(rep.pairs == 120);

  const Design all = extract_blocks_by_enumeration(ext, 16);
  CHECK(all.b() == 1);
  CHECK(extract_blocks_by_enumeration(dual(ext), 6).b() == 48);
}

TEST_CASE("extraction preconditions") {
  CHECK_THROWS_AS(extract_weight4_blocks(FieldCtx(6), 3), std::invalid_argument);
  CHECK_THROWS_AS(extract_weight4_blocks(FieldCtx(5), 2), std::invalid_argument);
  CHECK_THROWS_AS(extract_weight4_blocks(FieldCtx(8), 1), std::invalid_argument);
  CHECK_THROWS_AS(extract_weight4_blocks(FieldCtx(8), 4), std::invalid_argument);
}

TEST_CASE("Steiner systems from the pair solve") {
  for (auto [m, e] : {std::pair{4, 2}, {6, 2}, {8, 2}, {10, 2}, {10, 4}}) {
    CAPTURE(m);
    CAPTURE(e);
    const FieldCtx f(m);
    const Design d = extract_weight4_blocks(f, e);
    CHECK(d.b() == steiner_block_count(m));
    const auto rep = verify_design(d);
    CHECK(rep.uniform);
    CHECK(rep.lambda == 1);

    std::vector<Element> pts(4);
    std::mt19937_64 rng(static_cast<std::uint64_t>(m));
    for (int t = 0; t < 50; ++t) {
      const auto i = rng() % d.b();
      for (int j = 0; j < 4; ++j) pts[j] = Element{d.block(i)[j]};
      CHECK(spectral_member(f, e, pts));
    }

    // an affine map permutes the block set
    const Element a{static_cast<std::uint32_t>(1 + rng() % f.n())};
    const Element b{static_cast<std::uint32_t>(rng() % f.size())};
    std::vector<std::uint32_t> mapped;
    mapped.reserve(d.points.size());
    for (auto p : d.points) mapped.push_back(f.add(f.mul(a, Element{p}), b).value);
    CHECK(make_design(d.v, 4, mapped).points == d.points);
  }
}

TEST_CASE("pair coverage agrees with a map-based count and reports offenders") {
  const Design d = extract_weight4_blocks(FieldCtx(6), 2);
  const auto counts = oracle::pair_counts(blocks_of(d));
  CHECK(counts.size() == 64 * 63 / 2);
  for (const auto& [pq, c] : counts) CHECK(c == 1);

  auto pts = d.points;
  pts.resize(pts.size() - 4);
  const auto rep = verify_design(make_design(64, 4, pts));
  CHECK_FALSE(rep.uniform);
  CHECK(rep.min_count == 0);
  CHECK(rep.max_count == 1);
  CHECK(rep.offenders.size() == 6);
}

TEST_CASE("dual weight classes are 2-designs with the predicted lambda") {
  for (auto [m, e] : {std::pair{4, 1}, {4, 2}, {6, 1}, {6, 2}, {6, 3}}) {
    CAPTURE(m);
    CAPTURE(e);
    const FieldCtx f(m);
    const auto dl = dual(extend(build_cyclic(f, e)));
    for (const auto& p : dual_design_params(m, e)) {
      const auto k = static_cast<std::size_t>(p.k);
      const auto rep = verify_design(extract_blocks_by_enumeration(dl, k));
      CHECK(rep.uniform);
      CHECK(BigInt(rep.lambda) == p.lambda);
    }
  }
}

TEST_CASE("weight-6 and weight-8 classes at m=4") {
  const auto ext = extend(build_cyclic(FieldCtx(4), 2));
  const auto r6 = verify_design(extract_blocks_by_enumeration(ext, 6));
  const auto r8 = verify_design(extract_blocks_by_enumeration(ext, 8));
  CHECK(r6.uniform);
  CHECK(r6.lambda == 20);
  CHECK(r8.uniform);
  CHECK(r8.lambda == 35);
}

TEST_CASE("Assmus-Mattson bookkeeping") {
  const auto code4 = wd_of(16, {{0, 1}, {4, 20}, {6, 160}, {8, 150}, {10, 160}, {12, 20}, {16, 1}});
  const auto dual4 = wd_of(16, {{0, 1}, {6, 48}, {8, 30}, {10, 48}, {16, 1}});
  const auto r2 = am_check(code4, dual4, 4, 6, 2);
  CHECK(r2.s == 3);
  CHECK_FALSE(r2.holds);
  CHECK(am_check(code4, dual4, 4, 6, 1).holds);
  const auto triv = am_check(wd_of(4, {{0, 1}, {1, 4}, {2, 6}, {3, 4}, {4, 1}}),
                             wd_of(4, {{0, 1}}), 1, 5, 0);
  CHECK(triv.s == 0);
  CHECK(triv.holds);
}

TEST_CASE("design construction and file formats") {
  CHECK_THROWS_AS(make_design(16, 4, {0, 1, 2, 2}), InconsistencyError);
  CHECK_THROWS_AS(make_design(16, 4, {0, 1, 2, 16}), InconsistencyError);
  CHECK_THROWS_AS(make_design(16, 4, {0, 1, 2, 3, 3, 2, 1, 0}), InconsistencyError);

  const Design d = extract_weight4_blocks(FieldCtx(4), 2);
  std::stringstream ss;
  write_block_file(ss, d);
  const std::string text = ss.str();
  CHECK(text.rfind("v=16 k=4 b=20 t=2 lambda=1 m=4 e=2\n", 0) == 0);
  const Design back = read_block_file(ss);
  CHECK(back.points == d.points);
  CHECK(back.v == 16);
  CHECK(back.m == 4);
  const Design fromj = design_from_json(nlohmann::ordered_json::parse(design_to_json(d).dump()));
  CHECK(fromj.points == d.points);
  CHECK(fromj.lambda == d.lambda);

  std::stringstream bad("v=16 k=4 b=2 t=2 lambda=1 m=4 e=2\n0 1 2 3\n");
  CHECK_THROWS(read_block_file(bad));
}
