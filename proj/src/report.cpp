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

#include "affsteiner/report.hpp"

#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "affsteiner/designs.hpp"

namespace affsteiner {
namespace {

const std::string kSkipped = "skipped";
const std::string kNone = "-";

std::string str(const BigInt& x) { return x.str(); }
std::string str(std::size_t x) { return std::to_string(x); }

// OK when every available value column agrees.
std::string verdict(std::initializer_list<const std::string*> cols) {
  std::set<std::string> seen;
  for (const auto* c : cols) {
    if (*c != kSkipped && *c != kNone) seen.insert(*c);
  }
  return seen.size() <= 1 ? "OK" : "MISMATCH";
}

class Builder {
 public:
  Builder(int m, int e) : m_(m), e_(e) {}

  void row(std::string section, std::string quantity, std::string closed, std::string mw,
           std::string emp) {
    ReportRow r{m_, e_, std::move(section), std::move(quantity), std::move(closed),
                std::move(mw), std::move(emp), ""};
    r.status = verdict({&r.closed_form, &r.macwilliams, &r.empirical});
    rows_.push_back(std::move(r));
  }
  void info(std::string section, std::string quantity, std::string value) {
    rows_.push_back({m_, e_, std::move(section), std::move(quantity), std::move(value), kNone,
                     kNone, "INFO"});
  }
  std::vector<ReportRow> take() { return std::move(rows_); }

 private:
  int m_, e_;
  std::vector<ReportRow> rows_;
};

std::string shape_name(TableCase c) {
  switch (c) {
    case TableCase::a: return "three-weight";
    case TableCase::b: return "three-weight, 2e = m";
    case TableCase::c: return "five-weight";
    case TableCase::c4: return "five-weight, gcd 2";
  }
  return "?";
}

// lambda by b C(k,2) = lambda C(v,2), or a marker when b does not give one.
std::string lambda_str(const BigInt& b, std::size_t v, std::size_t k) {
  if (b == 0) return "no blocks";
  try {
    return lambda_from_count(b, v, k, 2).str();
  } catch (const std::invalid_argument&) {
    return "fractional";
  }
}

std::string count_or(const std::optional<WeightDistribution>& wd, std::size_t w,
                     const std::string& missing) {
  return wd ? str(wd->count(w)) : missing;
}

// Minimum distance of the extended code as stated for the three cases.
std::size_t stated_code_distance(int m, int e, TableCase tag) {
  if (tag == TableCase::b) return 4;
  return std::gcd(m, e) > 1 ? 4 : 6;
}

std::size_t stated_dual_distance(int m, const ClosedFormCase& cf) {
  const std::size_t half = std::size_t{1} << (m - 1);
  switch (cf.tag) {
    case TableCase::a: return half - (std::size_t{1} << (m - 1 - cf.h));
    case TableCase::b: return half - (std::size_t{1} << ((m - 2) / 2));
    default: return half - (std::size_t{1} << ((m + cf.ell - 2) / 2));
  }
}

bool affine_spot_check(const FieldCtx& ctx, const LinearCode& ext, std::uint64_t seed, int maps,
                       int words) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> elem(0, ctx.n());
  std::uniform_int_distribution<std::uint32_t> nonzero(1, ctx.n());
  for (int i = 0; i < maps; ++i) {
    const Element a{nonzero(rng)};
    const Element b{elem(rng)};
    for (int j = 0; j < words; ++j) {
      BitVec msg(ext.dimension());
      for (std::size_t r = 0; r < msg.size(); ++r) msg.set(r, rng() & 1u);
      if (!ext.contains(affine_permute(ctx, ext.encode(msg), a, b))) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<ReportRow> build_report(int m, int e, const ReportOptions& opt) {
  Builder out(m, e);
  const auto [cf, dual_closed] = closed_form_dual_wd(m, e);
  const std::size_t v = std::size_t{1} << m;
  const std::size_t code_dim = v - cf.dual_dimension;
  const std::size_t stated_code_dim =
      cf.tag == TableCase::b ? v - 1 - static_cast<std::size_t>(3 * m / 2)
                             : v - 1 - static_cast<std::size_t>(2 * m);
  const auto& guard = opt.enumeration;
  const bool build = m <= opt.max_build_m;
  const bool expansion = code_expansion_applies(m, e);

  const WeightDistribution code_via_mw = macwilliams(dual_closed, cf.dual_dimension);

  std::optional<FieldCtx> ctx;
  std::optional<LinearCode> ext, dual_code;
  if (build) {
    ctx.emplace(m, opt.primitive_poly);
    ext.emplace(extend(build_cyclic(*ctx, e)));
    dual_code.emplace(dual(*ext));
  }
  const bool enum_dual = build && dual_code->dimension() <= guard.guard;
  const bool enum_code = build && ext->dimension() <= guard.guard;
  std::optional<WeightDistribution> dual_enum, code_enum, code_side;
  std::string code_side_name = kSkipped;
  if (enum_dual) dual_enum = enumerate_wd(*dual_code, guard);
  if (enum_code) {
    code_enum = enumerate_wd(*ext, guard);
    code_side = code_enum;
  } else if (expansion && build) {
    code_side = closed_form_code_wd(m, e);
  }
  std::optional<WeightDistribution> dual_via_mw;
  if (code_side) dual_via_mw = macwilliams(*code_side, code_dim);

  // Parameters.
  {
    const std::string sec = "parameters (case " + to_string(cf.tag) + ")";
    out.row(sec, "dim extended code", str(stated_code_dim), kNone,
            build ? str(ext->dimension()) : kSkipped);
    out.row(sec, "dim dual", str(cf.dual_dimension), kNone,
            build ? str(dual_code->dimension()) : kSkipped);
    out.row(sec, "d(extended code)", str(stated_code_distance(m, e, cf.tag)),
            str(min_distance(code_via_mw)), code_enum ? str(min_distance(*code_enum)) : kSkipped);
    out.row(sec, "d(dual)", str(stated_dual_distance(m, cf)),
            dual_via_mw ? str(min_distance(*dual_via_mw)) : kSkipped,
            dual_enum ? str(min_distance(*dual_enum)) : kSkipped);
  }
  // Dual weight distribution.
  {
    const std::string sec = "dual distribution (" + shape_name(cf.tag) + ")";
    std::set<std::size_t> weights;
    for (const auto& [w, c] : dual_closed.counts()) weights.insert(w);
    if (dual_enum) {
      for (const auto& [w, c] : dual_enum->counts()) weights.insert(w);
    }
    if (dual_via_mw) {
      for (const auto& [w, c] : dual_via_mw->counts()) weights.insert(w);
    }
    for (auto w : weights) {
      out.row(sec, "A" + str(w), str(dual_closed.count(w)), count_or(dual_via_mw, w, kSkipped),
              count_or(dual_enum, w, kSkipped));
    }
    out.row(sec, "total", str(pow2(cf.dual_dimension)),
            dual_via_mw ? str(dual_via_mw->total()) : kSkipped,
            dual_enum ? str(dual_enum->total()) : kSkipped);
  }
  // Low weights of the extended code.
  {
    const std::string sec = "extended code low weights";
    std::optional<LowWeightCounts> lw;
    if (expansion) lw = a468(m);
    for (std::size_t k : {4, 6, 8}) {
      std::string closed = kNone;
      if (lw) closed = str(k == 4 ? lw->a4 : k == 6 ? lw->a6 : lw->a8);
      out.row(sec, "A" + str(k), closed, str(code_via_mw.count(k)),
              count_or(code_enum, k, kSkipped));
      if (expansion) {
        out.row(sec, "A" + str(k) + " (expansion)", str(closed_form_code_count(m, e, k)),
                str(code_via_mw.count(k)), count_or(code_enum, k, kSkipped));
      }
    }
  }
  // Designs held by the dual code.
  {
    const std::string sec = "dual designs";
    for (const auto& p : dual_design_params(m, e)) {
      const auto k = static_cast<std::size_t>(p.k);
      std::string emp = kSkipped;
      if (enum_dual) {
        const Design d = extract_blocks_by_enumeration(*dual_code, k, guard);
        const auto rep = verify_design(d);
        emp = rep.uniform ? str(rep.lambda) : "non-uniform";
      }
      std::string via_mw = kSkipped;
      if (dual_via_mw) via_mw = lambda_str(dual_via_mw->count(k), v, k);
      out.row(sec, "lambda k=" + str(k), str(p.lambda), via_mw, emp);
    }
  }
  // Steiner system from weight-4 supports.
  if (m % 2 == 0 && e >= 2 && std::gcd(m, e) == 2) {
    const std::string sec = "steiner S(2,4," + str(v) + ")";
    std::string blocks = kSkipped;
    std::string lambda = kSkipped;
    std::optional<Design> d4;
    if (build) {
      d4 = extract_weight4_blocks(*ctx, e);
      blocks = str(d4->b());
      const auto rep = verify_design(*d4);
      lambda = rep.uniform ? str(rep.lambda) : "non-uniform";
    }
    out.row(sec, "blocks", str(steiner_block_count(m)), str(code_via_mw.count(4)), blocks);
    out.row(sec, "lambda", "1", lambda_str(code_via_mw.count(4), v, 4), lambda);
    if (d4 && enum_code) {
      const Design by_enum = extract_blocks_by_enumeration(*ext, 4, guard);
      out.row(sec, "extractors agree", "yes", kNone, by_enum.points == d4->points ? "yes" : "no");
    }
  }
  // Weight-6 and weight-8 designs of the extended code.
  if (expansion) {
    const std::string sec = "weight-6/8 designs";
    const auto lw = a468(m);
    for (std::size_t k : {6, 8}) {
      const BigInt formula = k == 6 ? wt6_lambda(m) : wt8_lambda(m);
      const BigInt& ak = k == 6 ? lw.a6 : lw.a8;
      std::string emp = kSkipped;
      if (enum_code) {
        const auto rep = verify_design(extract_blocks_by_enumeration(*ext, k, guard));
        emp = rep.uniform ? str(rep.lambda) : "non-uniform";
      }
      out.row(sec, "lambda k=" + str(k), str(formula),
              lambda_str(code_via_mw.count(k), v, k), emp);
      out.row(sec, "lambda k=" + str(k) + " from closed A" + str(k), str(formula),
              lambda_str(ak, v, k), kNone);
    }
  }
  // Assmus-Mattson hypothesis, for the record.
  {
    const std::size_t d = min_distance(code_via_mw);
    const std::size_t dd = min_distance(dual_closed);
    const auto am = am_check(code_via_mw, dual_closed, d, dd, 2);
    out.info("assmus-mattson", "t=2: s=" + str(am.s) + ", d=" + str(d),
             am.holds ? "holds" : "does not hold");
  }
  // Affine invariance.
  if (build) {
    const bool ok = affine_spot_check(*ctx, *ext, opt.seed, 10, 5);
    out.row("affine invariance", "10 maps x 5 codewords (seed " + std::to_string(opt.seed) + ")",
            "invariant", kNone, ok ? "invariant" : "violated");
  }
  return out.take();
}

bool all_ok(const std::vector<ReportRow>& rows) {
  for (const auto& r : rows) {
    if (r.status == "MISMATCH") return false;
  }
  return true;
}

std::string render_markdown(const std::vector<ReportRow>& rows) {
  std::ostringstream os;
  int m = -1, e = -1;
  std::string section;
  for (const auto& r : rows) {
    if (r.m != m || r.e != e) {
      m = r.m;
      e = r.e;
      section.clear();
      os << "\n## m=" << m << " e=" << e << "\n";
    }
    if (r.section != section) {
      section = r.section;
      os << "\n### " << section << "\n\n";
      os << "| quantity | closed form | macwilliams | empirical | status |\n";
      os << "|---|---|---|---|---|\n";
    }
    os << "| " << r.quantity << " | " << r.closed_form << " | " << r.macwilliams << " | "
       << r.empirical << " | " << r.status << " |\n";
  }
  os << "\noverall: " << (all_ok(rows) ? "OK" : "MISMATCH") << "\n";
  return os.str();
}

nlohmann::ordered_json render_json(const std::vector<ReportRow>& rows) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json o;
    o["m"] = r.m;
    o["e"] = r.e;
    o["section"] = r.section;
    o["quantity"] = r.quantity;
    o["closed_form"] = r.closed_form;
    o["macwilliams"] = r.macwilliams;
    o["empirical"] = r.empirical;
    o["status"] = r.status;
    arr.push_back(std::move(o));
  }
  j["rows"] = std::move(arr);
  j["all_ok"] = all_ok(rows);
  return j;
}

}  // namespace affsteiner
