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

#include "affsteiner/designs.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "affsteiner/kernels.hpp"

namespace affsteiner {

BigInt lambda_from_count(const BigInt& b, std::uint64_t v, std::uint64_t k, std::uint64_t t) {
  if (t < 1 || k < t || v < k || b < 1) {
    throw std::invalid_argument("not a design parameter set: need b >= 1 and v >= k >= t >= 1");
  }
  BigInt q, r;
  boost::multiprecision::divide_qr(b * binomial(k, t), binomial(v, t), q, r);
  if (r != 0) {
    throw std::invalid_argument("not a design parameter set: b=" + b.str() + " v=" +
                                std::to_string(v) + " k=" + std::to_string(k) +
                                " t=" + std::to_string(t) + " gives a fractional lambda");
  }
  return q;
}

Design make_design(std::size_t v, std::size_t k, std::vector<std::uint32_t> points, int m, int e) {
  if (k == 0 || points.size() % k) throw std::invalid_argument("flat block list is ragged");
  const std::size_t b = points.size() / k;
  for (std::size_t i = 0; i < b; ++i) {
    auto first = points.begin() + static_cast<std::ptrdiff_t>(i * k);
    std::sort(first, first + static_cast<std::ptrdiff_t>(k));
    if (std::adjacent_find(first, first + static_cast<std::ptrdiff_t>(k)) !=
        first + static_cast<std::ptrdiff_t>(k)) {
      throw InconsistencyError("block with a repeated point");
    }
    if (*(first + static_cast<std::ptrdiff_t>(k) - 1) >= v) {
      throw InconsistencyError("block point outside [0, v)");
    }
  }
  std::vector<std::size_t> order(b);
  std::iota(order.begin(), order.end(), 0);
  auto less = [&](std::size_t x, std::size_t y) {
    return std::lexicographical_compare(points.begin() + static_cast<std::ptrdiff_t>(x * k),
                                        points.begin() + static_cast<std::ptrdiff_t>(x * k + k),
                                        points.begin() + static_cast<std::ptrdiff_t>(y * k),
                                        points.begin() + static_cast<std::ptrdiff_t>(y * k + k));
  };
  if (!std::is_sorted(order.begin(), order.end(), less)) {
    std::sort(order.begin(), order.end(), less);
  }
  Design d;
  d.v = v;
  d.k = k;
  d.m = m;
  d.e = e;
  d.points.reserve(points.size());
  for (std::size_t i = 0; i < b; ++i) {
    if (i > 0 && !less(order[i - 1], order[i])) {
      throw InconsistencyError("repeated block in support design");
    }
    const auto src = points.begin() + static_cast<std::ptrdiff_t>(order[i] * k);
    d.points.insert(d.points.end(), src, src + static_cast<std::ptrdiff_t>(k));
  }
  if (b > 0 && k >= 2 && v >= k) {
    try {
      d.lambda = lambda_from_count(BigInt(b), v, k, 2);
    } catch (const std::invalid_argument&) {
      d.lambda.reset();
    }
  }
  return d;
}

Design extract_weight4_blocks(const FieldCtx& ctx, int e) {
  const int m = ctx.m();
  if (m < 4 || m % 2) {
    throw std::invalid_argument("weight-4 Steiner extraction needs even m >= 4, got m=" +
                                std::to_string(m));
  }
  if (e < 2 || e > m / 2 || std::gcd(m, e) != 2) {
    throw std::invalid_argument("weight-4 Steiner extraction needs 2 <= e <= m/2 and gcd(m, e) = 2"
                                " (m=" + std::to_string(m) + ", e=" + std::to_string(e) +
                                ", gcd=" + std::to_string(std::gcd(m, e)) + ")");
  }
  const auto blocks = kernels::weight4_blocks(ctx, e);
  std::vector<std::uint32_t> flat;
  flat.reserve(blocks.size() * 4);
  for (const auto& blk : blocks) flat.insert(flat.end(), blk.begin(), blk.end());
  Design d = make_design(ctx.size(), 4, std::move(flat), m, e);

  const auto [cf, dual_wd] = closed_form_dual_wd(m, e);
  const BigInt a4 = macwilliams(dual_wd, cf.dual_dimension).count(4);
  if (a4 != d.b()) {
    throw VerificationError("extracted " + std::to_string(d.b()) + " weight-4 blocks but A4 = " +
                            a4.str());
  }
  return d;
}

Design extract_blocks_by_enumeration(const LinearCode& code, std::size_t k,
                                     const EnumOptions& options) {
  if (code.dimension() > options.guard) {
    throw GuardExceeded("code dimension " + std::to_string(code.dimension()) +
                        " exceeds the enumeration guard " + std::to_string(options.guard));
  }
  std::vector<std::uint32_t> pts = kernels::collect_supports(code.generator(), k,
                                                             options.shard_bits);
  const int m = code.info().m;
  if (m > 0 && code.length() == (std::size_t{1} << m)) {
    for (auto& p : pts) p = code.coordinates()[p].value;
  }
  return make_design(code.length(), k, std::move(pts), m, code.info().e);
}

CoverageReport verify_design(const Design& design, int t) {
  if (t != 2) throw std::invalid_argument("only pair coverage (t = 2) is supported");
  if (design.b() == 0) throw std::invalid_argument("design has no blocks");
  if (design.k < 2) throw std::invalid_argument("blocks must have at least two points");
  const auto counts = kernels::pair_coverage(design.v, design.k, design.points);

  CoverageReport rep;
  rep.pairs = counts.size();
  std::map<std::uint32_t, std::size_t> freq;
  for (auto c : counts) ++freq[c];
  rep.min_count = freq.begin()->first;
  rep.max_count = freq.rbegin()->first;
  auto majority = std::max_element(freq.begin(), freq.end(),
                                    [](auto& x, auto& y) { return x.second < y.second; });
  rep.lambda = majority->first;
  rep.uniform = freq.size() == 1;
  if (!rep.uniform) {
    std::size_t idx = 0;
    for (std::uint32_t p = 0; p < design.v && rep.offenders.size() < 10; ++p) {
      for (std::uint32_t q = p + 1; q < design.v && rep.offenders.size() < 10; ++q, ++idx) {
        if (counts[idx] != rep.lambda) rep.offenders.push_back({p, q, counts[idx]});
      }
    }
  }
  return rep;
}

namespace {

BigInt p2(long k) { return pow2(static_cast<std::uint64_t>(k)); }

}  // namespace

std::vector<DesignParams> dual_design_params(int m, int e) {
  const auto [cf, wd] = closed_form_dual_wd(m, e);
  std::vector<std::pair<std::size_t, BigInt>> rows;
  auto add = [&](const BigInt& k, BigInt lambda) {
    rows.emplace_back(static_cast<std::size_t>(k), std::move(lambda));
  };
  const BigInt half = p2(m - 1);
  switch (cf.tag) {
    case TableCase::a: {
      const long h = cf.h;
      const BigInt off = p2(m - 1 - h);
      add(half - off, (p2(2 * h - 1) - p2(h - 1)) * (half - off - 1));
      add(half, (half - 1) * (p2(m) - p2(2 * h) + 1));
      add(half + off, (p2(2 * h - 1) + p2(h - 1)) * (half + off - 1));
      break;
    }
    case TableCase::b: {
      const BigInt off = p2((m - 2) / 2);
      add(half - off, off * (p2(m / 2) - 1) * (off - 1));
      add(half, half - 1);
      add(half + off, off * (p2(m / 2) - 1) * (off + 1));
      break;
    }
    case TableCase::c:
    case TableCase::c4: {
      const long l = cf.ell;
      const BigInt den = p2(l / 2) + 1;
      const BigInt outer = p2((m + l - 2) / 2);
      const BigInt inner = p2((m - 2) / 2);
      for (int sign : {-1, 1}) {
        const BigInt k = half + sign * outer;
        add(k, exact_div(k * (k - 1), p2(l) * den, "outer lambda"));
      }
      for (int sign : {-1, 1}) {
        const BigInt k = half + sign * inner;
        add(k, exact_div(p2((m + l - 2) / 2) * (p2(m / 2) + sign) * (k - 1), den,
                         "inner lambda"));
      }
      add(half, ((p2(l / 2) - 1) * p2(m - l) + 1) * (half - 1));
      break;
    }
  }
  std::sort(rows.begin(), rows.end(), [](auto& x, auto& y) { return x.first < y.first; });

  std::vector<DesignParams> out;
  const std::uint64_t v = std::uint64_t{1} << m;
  for (auto& [k, lambda] : rows) {
    const BigInt via_count = lambda_from_count(wd.count(k), v, k, 2);
    if (via_count != lambda) {
      throw InconsistencyError("dual design k=" + std::to_string(k) + ": formula lambda " +
                               lambda.str() + " but the block count gives " + via_count.str());
    }
    out.push_back(DesignParams{2, BigInt(v), BigInt(k), std::move(lambda)});
  }
  return out;
}

namespace {

void check_even_m(int m) {
  if (m < 4 || m % 2 || m > kMaxExtensionDegree) {
    throw std::invalid_argument("need even m in [4, 16], got m=" + std::to_string(m));
  }
}

}  // namespace

BigInt wt6_lambda(int m) {
  check_even_m(m);
  return exact_div(p2(2 * m - 3) + p2(m) + 12, 3, "weight-6 lambda");
}

BigInt wt8_lambda(int m) {
  check_even_m(m);
  return exact_div(p2(4 * m - 4) - 27 * p2(3 * m - 4) + 23 * p2(2 * m - 1) + 261 * p2(m - 2) + 403,
                   45, "weight-8 lambda");
}

BigInt steiner_block_count(int m) {
  check_even_m(m);
  return exact_div(p2(m - 1) * (p2(m) - 1), 6, "weight-4 block count");
}

AmReport am_check(const WeightDistribution& wd, const WeightDistribution& wd_dual, std::size_t d,
                  std::size_t d_dual, std::size_t t) {
  constexpr std::size_t q = 2;
  const std::size_t v = wd.length();
  auto largest_w = [&](std::size_t dist) -> std::size_t {
    for (std::size_t w = v + 1; w-- > 0;) {
      if (w - (w + q - 2) / (q - 1) < dist) return w;
    }
    return 0;
  };
  AmReport r;
  r.w = largest_w(d);
  r.w_dual = largest_w(d_dual);
  for (const auto& [i, c] : wd_dual.counts()) {
    if (i >= 1 && i + t <= v && c != 0) ++r.s;
  }
  r.holds = t <= d && r.s + t <= d;
  return r;
}

void write_block_file(std::ostream& os, const Design& d) {
  os << "v=" << d.v << " k=" << d.k << " b=" << d.b() << " t=" << d.t
     << " lambda=" << (d.lambda ? d.lambda->str() : std::string("0")) << " m=" << d.m
     << " e=" << d.e << '\n';
  for (std::size_t i = 0; i < d.b(); ++i) {
    const auto blk = d.block(i);
    for (std::size_t j = 0; j < blk.size(); ++j) {
      if (j) os << ' ';
      os << std::hex << blk[j] << std::dec;
    }
    os << '\n';
  }
}

Design read_block_file(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw std::invalid_argument("empty block file");
  std::map<std::string, std::string> kv;
  std::istringstream hs(header);
  for (std::string tok; hs >> tok;) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("malformed header token: " + tok);
    kv[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  for (const char* key : {"v", "k", "b", "t", "lambda", "m", "e"}) {
    if (!kv.count(key)) throw std::invalid_argument(std::string("block file header lacks ") + key);
  }
  const std::size_t v = std::stoul(kv["v"]);
  const std::size_t k = std::stoul(kv["k"]);
  const std::size_t b = std::stoul(kv["b"]);
  std::vector<std::uint32_t> pts;
  pts.reserve(b * k);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::size_t n = 0;
    for (std::string tok; ls >> tok; ++n) {
      pts.push_back(static_cast<std::uint32_t>(std::stoul(tok, nullptr, 16)));
    }
    if (n != k) throw std::invalid_argument("block line with " + std::to_string(n) + " points");
    ++lines;
  }
  if (lines != b) throw std::invalid_argument("header says b=" + std::to_string(b) +
                                              " but file has " + std::to_string(lines) + " blocks");
  Design d = make_design(v, k, std::move(pts), std::stoi(kv["m"]), std::stoi(kv["e"]));
  d.t = std::stoi(kv["t"]);
  return d;
}

nlohmann::ordered_json design_to_json(const Design& d) {
  nlohmann::ordered_json j;
  j["v"] = d.v;
  j["k"] = d.k;
  j["b"] = d.b();
  j["t"] = d.t;
  j["lambda"] = d.lambda ? d.lambda->str() : std::string("0");
  j["m"] = d.m;
  j["e"] = d.e;
  nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
  std::ostringstream os;
  for (std::size_t i = 0; i < d.b(); ++i) {
    nlohmann::ordered_json blk = nlohmann::ordered_json::array();
    for (auto p : d.block(i)) {
      os.str("");
      os << std::hex << p;
      blk.push_back(os.str());
    }
    blocks.push_back(std::move(blk));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

Design design_from_json(const nlohmann::ordered_json& j) {
  const std::size_t k = j.at("k").get<std::size_t>();
  std::vector<std::uint32_t> pts;
  for (const auto& blk : j.at("blocks")) {
    if (blk.size() != k) throw std::invalid_argument("block with wrong size in JSON design");
    for (const auto& p : blk) {
      pts.push_back(static_cast<std::uint32_t>(std::stoul(p.get<std::string>(), nullptr, 16)));
    }
  }
  Design d = make_design(j.at("v").get<std::size_t>(), k, std::move(pts), j.at("m").get<int>(),
                         j.at("e").get<int>());
  d.t = j.at("t").get<int>();
  return d;
}

}  // namespace affsteiner
