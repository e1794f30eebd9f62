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

// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Time limits are wall-clock and include code construction.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "affsteiner/code.hpp"
#include "affsteiner/cyclotomic.hpp"
#include "affsteiner/designs.hpp"
#include "affsteiner/wdist.hpp"
#include "oracles.hpp"

using namespace affsteiner;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
    }
  }
  void note(const std::string& s) {
    if (ok) detail += (detail.empty() ? "" : "; ") + s;
  }
};

struct Criterion {
  const char* id;
  const char* title;
  std::optional<double> limit_s;
  std::function<void(Outcome&)> body;
};

WeightDistribution wd_of(std::size_t len, std::initializer_list<std::pair<std::size_t, long>> c) {
  WeightDistribution wd(len);
  for (auto [w, n] : c) wd.set(w, n);
  return wd;
}

bool steiner_ok(const Design& d, std::size_t expect_b) {
  const auto rep = verify_design(d);
  return d.b() == expect_b && rep.uniform && rep.lambda == 1 && rep.pairs == d.v * (d.v - 1) / 2;
}

void ac1(Outcome& o) {
  const FieldCtx f(4);
  const auto ext = extend(build_cyclic(f, 2));
  const auto dl = dual(ext);
  const auto code = wd_of(16, {{0, 1}, {4, 20}, {6, 160}, {8, 150}, {10, 160}, {12, 20}, {16, 1}});
  const auto dual_wd = wd_of(16, {{0, 1}, {6, 48}, {8, 30}, {10, 48}, {16, 1}});
  const auto ec = enumerate_wd(ext);
  const auto ed = enumerate_wd(dl);
  o.expect(ext.length() == 16 && ext.dimension() == 9, "[16,9] code");
  o.expect(ec == code, "code enumeration");
  o.expect(ed == dual_wd, "dual enumeration");
  o.expect(macwilliams(ec, 9) == ed, "transform code -> dual");
  o.expect(macwilliams(ed, 7) == ec, "transform dual -> code");
  o.note("512 + 128 codewords, exact");
}

void ac2(Outcome& o) {
  const FieldCtx f(4);
  const Design solved = extract_weight4_blocks(f, 2);
  const Design scanned = extract_blocks_by_enumeration(extend(build_cyclic(f, 2)), 4);
  o.expect(steiner_ok(solved, 20), "20 blocks covering 120 pairs once");
  o.expect(solved.points == scanned.points, "extractors agree");
  o.note("20 blocks, 120 pairs, lambda=1, extractors identical");
}

void ac3(Outcome& o) {
  const FieldCtx f(6);
  for (int e : {2, 3}) {
    const auto dl = dual(extend(build_cyclic(f, e)));
    const auto [cf, closed] = closed_form_dual_wd(6, e);
    const auto en = enumerate_wd(dl);
    o.expect(en.total() == pow2(cf.dual_dimension), "dual size at e=" + std::to_string(e));
    o.expect(en == closed, "closed form = enumeration at e=" + std::to_string(e));
  }
  o.expect(classify(6, 2) == TableCase::a && classify(6, 3) == TableCase::b, "case tags");
  o.expect(steiner_ok(extract_weight4_blocks(f, 2), 336), "S(2,4,64) with b=336");
  o.note("2^13 and 2^10 dual codewords match; S(2,4,64) b=336");
}

void ac4(Outcome& o) {
  const FieldCtx f(8);
  const auto dl = dual(extend(build_cyclic(f, 2)));
  const auto [cf, closed] = closed_form_dual_wd(8, 2);
  const auto table = wd_of(256, {{0, 1}, {96, 816}, {120, 52224}, {128, 24990}, {136, 52224},
                                 {160, 816}, {256, 1}});
  o.expect(closed == table, "closed form = stated table");
  o.expect(enumerate_wd(dl) == closed, "closed form = enumeration of 2^17 dual codewords");
  const BigInt a4 = macwilliams(closed, cf.dual_dimension).count(4);
  o.expect(a4 == 5440, "A4 from transform");
  o.expect(a4 == pow2(8) * 255 / 12 && a4 == a468(8).a4, "A4 = 2^m(2^m-1)/12");
  const Design d = extract_weight4_blocks(f, 2);
  o.expect(steiner_ok(d, 5440), "5440 blocks, lambda=1 over 32640 pairs");
  o.note("A4=5440, 5440 blocks, 32640 pairs at lambda=1");
}

void ac5(Outcome& o) {
  std::size_t classes = 0;
  for (int m : {4, 6, 8}) {
    const FieldCtx f(m);
    for (int e = 1; e <= m / 2; ++e) {
      const auto dl = dual(extend(build_cyclic(f, e)));
      for (const auto& p : dual_design_params(m, e)) {
        const auto k = static_cast<std::size_t>(p.k);
        const auto rep = verify_design(extract_blocks_by_enumeration(dl, k));
        std::ostringstream what;
        what << "m=" << m << " e=" << e << " k=" << k << " lambda " << rep.lambda << " vs "
             << p.lambda;
        o.expect(rep.uniform && BigInt(rep.lambda) == p.lambda, what.str());
        ++classes;
      }
    }
  }
  const auto p4 = dual_design_params(4, 2);
  o.expect(p4.size() == 3 && p4[0].lambda == 6 && p4[1].lambda == 7 && p4[2].lambda == 18,
           "m=4 lambdas {6,7,18}");
  o.expect(dual_design_params(8, 2).front().lambda == 114, "m=8 k=96 lambda=114");
  o.note(std::to_string(classes) + " weight classes counted pair by pair");
}

void ac6(Outcome& o) {
  for (int m : {4, 8, 12, 16}) {
    const auto l = a468(m);
    const BigInt pairs = binomial(std::uint64_t{1} << m, 2);
    o.expect(wt6_lambda(m) * pairs == l.a6 * 15, "weight-6 identity at m=" + std::to_string(m));
    o.expect(wt8_lambda(m) * pairs == l.a8 * 28, "weight-8 identity at m=" + std::to_string(m));
  }
  const auto ext = extend(build_cyclic(FieldCtx(4), 2));
  const auto r6 = verify_design(extract_blocks_by_enumeration(ext, 6));
  const auto r8 = verify_design(extract_blocks_by_enumeration(ext, 8));
  o.expect(wt6_lambda(4) == 20 && r6.uniform && r6.lambda == 20, "m=4 lambda6=20 by counting");
  o.expect(wt8_lambda(4) == 35 && r8.uniform && r8.lambda == 35, "m=4 lambda8=35 by counting");
  o.note("exact at m=4,8,12,16; m=4 lambda6=20, lambda8=35 counted");
}

void ac7(Outcome& o) {
  const auto [cf, closed] = closed_form_dual_wd(12, 2);
  o.expect(cf.tag == TableCase::c4, "case tag");
  o.expect(closed.total() == pow2(25), "sum = 2^25");
  const Design d = extract_weight4_blocks(FieldCtx(12), 2);
  o.expect(d.b() == 1397760 && steiner_block_count(12) == 1397760, "1,397,760 blocks");
  const auto rep = verify_design(d);
  o.expect(rep.pairs == 8386560, "8,386,560 pairs");
  o.expect(rep.uniform && rep.lambda == 1, "lambda=1 on every pair");
  o.note("1397760 blocks, 8386560 pairs at lambda=1");
}

void ac8(Outcome& o) {
  std::mt19937_64 rng(1);

  std::size_t involutions = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 4 + rng() % 17;
    const std::size_t k = 1 + rng() % std::min<std::size_t>(n - 1, 10);
    const auto g = oracle::random_generator(rng, k, n);
    WeightDistribution wd(n);
    for (const auto& [w, c] : oracle::enumerate(g)) wd.set(w, c);
    const auto back = macwilliams(macwilliams(wd, k), n - k);
    involutions += back == wd;
  }
  o.expect(involutions == 100, "transform involution on 100 random distributions");

  for (std::uint32_t n : {15u, 63u, 255u, 4095u}) {
    std::vector<bool> seen(n, false);
    std::size_t total = 0;
    bool disjoint = true;
    for (auto s : coset_leaders(n)) {
      for (auto x : coset(s, n).elements) {
        disjoint = disjoint && !seen[x];
        seen[x] = true;
        ++total;
      }
    }
    o.expect(disjoint && total == n, "coset partition of Z_" + std::to_string(n));
  }

  for (int m : {4, 6, 8}) {
    const FieldCtx f(m);
    for (int e = 1; e <= m / 2; ++e) {
      const auto ext = extend(build_cyclic(f, e));
      auto codeword = [&] {
        BitVec msg(ext.dimension());
        for (std::size_t i = 0; i < msg.size(); ++i) msg.set(i, rng() & 1u);
        return ext.encode(msg);
      };
      bool affine = true;
      if (e == 2) {
        for (int t = 0; t < 100; ++t) {
          const Element a{static_cast<std::uint32_t>(1 + rng() % f.n())};
          const Element b{static_cast<std::uint32_t>(rng() % f.size())};
          for (int c = 0; c < 20; ++c) affine = affine && ext.contains(affine_permute(f, codeword(), a, b));
        }
      }
      bool spectral = true;
      for (int t = 0; t < 1000; ++t) {
        Codeword w(f.size());
        for (std::size_t i = 0; i < w.size(); ++i) w.set(i, rng() & 1u);
        if (w.weight() % 2) w.flip(rng() % w.size());
        spectral = spectral && ext.contains(w) == spectral_member(f, e, points_of(f, w));
        const auto c = codeword();
        spectral = spectral && spectral_member(f, e, points_of(f, c));
      }
      const std::string at = " at m=" + std::to_string(m) + " e=" + std::to_string(e);
      o.expect(affine, "affine invariance" + at);
      o.expect(spectral, "spectral test = matrix membership" + at);
    }
  }
  o.note("100 involutions, 4 partitions, 300x20 affine images, spectral on 9 (m,e)");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "m=4 ground truth by exhaustion", 1.0, ac1},
      {"AC2", "S(2,4,16) and extractor agreement", std::nullopt, ac2},
      {"AC3", "m=6 tables (a),(b) and S(2,4,64)", 5.0, ac3},
      {"AC4", "m=8 gcd-2 table, A4, blocks, coverage", 60.0, ac4},
      {"AC5", "dual weight classes match lambda formulas", std::nullopt, ac5},
      {"AC6", "weight-6/8 cross identities", std::nullopt, ac6},
      {"AC7", "m=12 scale run", 600.0, ac7},
      {"AC8", "property suites", std::nullopt, ac8},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& ex) {
      o.ok = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = !c.limit_s || s < *c.limit_s;
    if (!in_time) o.detail += (o.detail.empty() ? "" : "; ") + std::string("over time limit");
    const bool pass = o.ok && in_time;
    failures += !pass;
    char timing[64];
    if (c.limit_s) {
      std::snprintf(timing, sizeof timing, "%.2fs < %.0fs", s, *c.limit_s);
    } else {
      std::snprintf(timing, sizeof timing, "%.2fs", s);
    }
    std::cout << c.id << " " << (pass ? "PASS" : "FAIL") << "  " << c.title << "  [" << timing
              << "]  " << o.detail << std::endl;
  }
  std::cout << (failures ? "ACCEPTANCE FAILED" : "ACCEPTANCE PASSED") << " (" << 8 - failures
            << "/8)" << std::endl;
  return failures ? 1 : 0;
}
