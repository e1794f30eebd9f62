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

#include "affsteiner/wdist.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "affsteiner/kernels.hpp"

namespace affsteiner {

BigInt WeightDistribution::count(std::size_t weight) const {
  auto it = counts_.find(weight);
  return it == counts_.end() ? BigInt(0) : it->second;
}

void WeightDistribution::set(std::size_t weight, BigInt count) {
  if (weight > length_) {
    throw std::out_of_range("weight " + std::to_string(weight) + " exceeds length " +
                            std::to_string(length_));
  }
  if (count == 0) {
    counts_.erase(weight);
  } else {
    counts_[weight] = std::move(count);
  }
}

void WeightDistribution::add(std::size_t weight, const BigInt& count) {
  set(weight, this->count(weight) + count);
}

BigInt WeightDistribution::total() const {
  BigInt t = 0;
  for (const auto& [w, c] : counts_) t += c;
  return t;
}

WeightDistribution enumerate_wd(const LinearCode& code, const EnumOptions& options) {
  if (code.dimension() > options.guard) {
    throw GuardExceeded("code dimension " + std::to_string(code.dimension()) +
                        " exceeds the enumeration guard " + std::to_string(options.guard) +
                        "; enumerate the dual and apply macwilliams instead, or raise --guard");
  }
  const auto hist = kernels::weight_histogram(code.generator(), options.shard_bits);
  WeightDistribution wd(code.length());
  for (std::size_t w = 0; w < hist.size(); ++w) {
    if (hist[w]) wd.set(w, BigInt(hist[w]));
  }
  return wd;
}

WeightDistribution macwilliams(const WeightDistribution& wd, std::size_t dim) {
  const BigInt scale = pow2(dim);
  if (wd.total() != scale) {
    throw InconsistencyError("macwilliams: input total " + wd.total().str() + " is not 2^" +
                             std::to_string(dim));
  }
  const std::size_t v = wd.length();
  std::vector<BigInt> acc(v + 1, 0);
  for (const auto& [i, a] : wd.counts()) {
    if (a < 0) throw InconsistencyError("macwilliams: negative input count");
    // Krawtchouk K_k(i) for k = 0..v.
    const BigInt slope = BigInt(static_cast<long long>(v)) - 2 * BigInt(i);
    BigInt prev = 1;
    acc[0] += a;
    if (v == 0) continue;
    BigInt cur = slope;
    acc[1] += a * cur;
    for (std::size_t k = 1; k < v; ++k) {
      BigInt next = exact_div(slope * cur - BigInt(v - k + 1) * prev, BigInt(k + 1),
                              "krawtchouk recurrence");
      prev = std::move(cur);
      cur = std::move(next);
      acc[k + 1] += a * cur;
    }
  }
  WeightDistribution out(v);
  for (std::size_t k = 0; k <= v; ++k) {
    BigInt c = exact_div(acc[k], scale, "macwilliams");
    if (c < 0) {
      throw InconsistencyError("macwilliams: negative count at weight " + std::to_string(k));
    }
    out.set(k, std::move(c));
  }
  return out;
}

std::string to_string(TableCase c) {
  switch (c) {
    case TableCase::a: return "a";
    case TableCase::b: return "b";
    case TableCase::c: return "c";
    case TableCase::c4: return "c4";
  }
  return "?";
}

namespace {

void check_me(int m, int e) {
  if (m < 4 || m > kMaxExtensionDegree) {
    throw std::invalid_argument("m=" + std::to_string(m) + " outside [4, 16]");
  }
  if (e < 1 || e > m / 2) {
    throw std::invalid_argument("e=" + std::to_string(e) + " out of range: need 1 <= e <= " +
                                std::to_string(m / 2));
  }
}

std::size_t p2(int k) { return std::size_t{1} << k; }

}  // namespace

TableCase classify(int m, int e) {
  check_me(m, e);
  const int g = std::gcd(m, e);
  if (m % 2 == 0 && 2 * e == m) return TableCase::b;
  if ((m / g) % 2 == 1) return TableCase::a;
  return g == 2 ? TableCase::c4 : TableCase::c;
}

std::pair<ClosedFormCase, WeightDistribution> closed_form_dual_wd(int m, int e) {
  ClosedFormCase cf;
  cf.tag = classify(m, e);
  const std::size_t len = p2(m);
  const std::size_t half = p2(m - 1);
  const BigInt q1 = pow2(static_cast<unsigned>(m)) - 1;
  WeightDistribution wd(len);
  wd.set(0, 1);
  wd.set(len, 1);

  switch (cf.tag) {
    case TableCase::a: {
      cf.h = (m - std::gcd(m, e)) / 2;
      cf.u = q1 * pow2(static_cast<unsigned>(2 * cf.h));
      cf.w = q1 * (pow2(static_cast<unsigned>(m + 1)) - pow2(static_cast<unsigned>(2 * cf.h + 1)) + 2);
      cf.dual_dimension = static_cast<std::size_t>(2 * m + 1);
      const std::size_t off = p2(m - 1 - cf.h);
      wd.set(half - off, cf.u);
      wd.set(half, cf.w);
      wd.set(half + off, cf.u);
      break;
    }
    case TableCase::b: {
      cf.u = (pow2(static_cast<unsigned>(m / 2)) - 1) * pow2(static_cast<unsigned>(m));
      cf.w = pow2(static_cast<unsigned>(m + 1)) - 2;
      cf.dual_dimension = static_cast<std::size_t>(1 + 3 * m / 2);
      const std::size_t off = p2((m - 2) / 2);
      wd.set(half - off, cf.u);
      wd.set(half, cf.w);
      wd.set(half + off, cf.u);
      break;
    }
    case TableCase::c: {
      cf.ell = 2 * std::gcd(m, e);
      const unsigned l = static_cast<unsigned>(cf.ell);
      const BigInt den = pow2(l / 2) + 1;
      cf.u = exact_div(pow2(static_cast<unsigned>(m) - l) * q1, den, "case (c) outer count");
      cf.v = exact_div(pow2((2 * static_cast<unsigned>(m) + l) / 2) * q1, den,
                       "case (c) inner count");
      cf.w = 2 * ((pow2(l / 2) - 1) * pow2(static_cast<unsigned>(m) - l) + 1) * q1;
      cf.dual_dimension = static_cast<std::size_t>(2 * m + 1);
      const std::size_t outer = p2((m + cf.ell - 2) / 2);
      const std::size_t inner = p2((m - 2) / 2);
      wd.set(half - outer, cf.u);
      wd.set(half - inner, cf.v);
      wd.set(half, cf.w);
      wd.set(half + inner, cf.v);
      wd.set(half + outer, cf.u);
      break;
    }
    case TableCase::c4: {
      cf.ell = 4;
      cf.u = exact_div(pow2(static_cast<unsigned>(m - 4)) * q1, 5, "table 4 outer count");
      cf.v = exact_div(pow2(static_cast<unsigned>(m + 2)) * q1, 5, "table 4 inner count");
      cf.w = 2 * (3 * pow2(static_cast<unsigned>(m - 4)) + 1) * q1;
      cf.dual_dimension = static_cast<std::size_t>(2 * m + 1);
      const std::size_t outer = p2((m + 2) / 2);
      const std::size_t inner = p2((m - 2) / 2);
      wd.set(half - outer, cf.u);
      wd.set(half - inner, cf.v);
      wd.set(half, cf.w);
      wd.set(half + inner, cf.v);
      wd.set(half + outer, cf.u);
      break;
    }
  }
  if (wd.total() != pow2(cf.dual_dimension)) {
    throw InconsistencyError("closed-form dual distribution for m=" + std::to_string(m) +
                             ", e=" + std::to_string(e) + " does not sum to 2^" +
                             std::to_string(cf.dual_dimension));
  }
  return {std::move(cf), std::move(wd)};
}

bool code_expansion_applies(int m, int e) {
  return m >= 4 && m <= kMaxExtensionDegree && m % 4 == 0 && e >= 1 && e <= m / 2 &&
         std::gcd(m, e) == 2;
}

namespace {

// C(n, 0..kmax), built by the multiplicative recurrence.
std::vector<BigInt> binomial_row(std::size_t n, std::size_t kmax) {
  std::vector<BigInt> row(kmax + 1, 0);
  row[0] = 1;
  for (std::size_t i = 0; i < kmax && i < n; ++i) row[i + 1] = row[i] * (n - i) / (i + 1);
  return row;
}

// The explicit code-side expansion with binomial rows cached up to kmax.
class CodeExpansion {
 public:
  CodeExpansion(int m, std::size_t kmax) : m_(m) {
    const std::size_t half = p2(m - 1);
    const std::size_t far = p2((m + 2) / 2);
    const std::size_t near = p2((m - 2) / 2);
    a1_ = half - far;
    b1_ = half + far;
    a2_ = half - near;
    b2_ = half + near;
    const BigInt q1 = pow2(static_cast<unsigned>(m)) - 1;
    u_ = exact_div(pow2(static_cast<unsigned>(m - 4)) * q1, 5, "u");
    v_ = exact_div(pow2(static_cast<unsigned>(m + 2)) * q1, 5, "v");
    w_ = 2 * (3 * pow2(static_cast<unsigned>(m - 4)) + 1) * q1;
    full_ = binomial_row(p2(m), kmax);
    halfrow_ = binomial_row(half, kmax / 2);
    ra1_ = binomial_row(a1_, kmax);
    rb1_ = binomial_row(b1_, kmax);
    ra2_ = binomial_row(a2_, kmax);
    rb2_ = binomial_row(b2_, kmax);
  }

  BigInt count(std::size_t k) const {
    const bool even = k % 2 == 0;
    BigInt total = even ? 2 * full_[k] : BigInt(0);
    BigInt e0 = 0;
    if (even) {
      e0 = halfrow_[k / 2];
      if ((k / 2) % 2) e0 = -e0;
    }
    total += w_ * e0;
    total += u_ * pair_sum(k, a1_, b1_, ra1_, rb1_);
    total += v_ * pair_sum(k, a2_, b2_, ra2_, rb2_);
    BigInt c = exact_div(total, pow2(static_cast<unsigned>(2 * m_ + 1)), "code-side expansion");
    if (c < 0) throw InconsistencyError("code-side expansion produced a negative count");
    return c;
  }

 private:
  // sum over i + j = k of ((-1)^i + (-1)^j) C(a, i) C(b, j)
  static BigInt pair_sum(std::size_t k, std::size_t a, std::size_t b, const std::vector<BigInt>& ra,
                         const std::vector<BigInt>& rb) {
    BigInt s = 0;
    const std::size_t lo = k > b ? k - b : 0;
    const std::size_t hi = std::min(k, a);
    for (std::size_t i = lo; i <= hi; ++i) {
      const std::size_t j = k - i;
      const int sign = (i % 2 ? -1 : 1) + (j % 2 ? -1 : 1);
      if (sign == 0) continue;
      s += sign * (ra[i] * rb[j]);
    }
    return s;
  }

  int m_;
  std::size_t a1_, b1_, a2_, b2_;
  BigInt u_, v_, w_;
  std::vector<BigInt> full_, halfrow_, ra1_, rb1_, ra2_, rb2_;
};

void check_expansion(int m, int e) {
  if (!code_expansion_applies(m, e)) {
    throw std::invalid_argument("code-side expansion needs 4 | m and gcd(m, e) = 2 (m=" +
                                std::to_string(m) + ", e=" + std::to_string(e) + ")");
  }
}

}  // namespace

BigInt closed_form_code_count(int m, int e, std::size_t k) {
  check_expansion(m, e);
  if (k > p2(m)) return 0;
  return CodeExpansion(m, k).count(k);
}

WeightDistribution closed_form_code_wd(int m, int e) {
  check_expansion(m, e);
  const std::size_t len = p2(m);
  const CodeExpansion ex(m, len);
  WeightDistribution wd(len);
  for (std::size_t k = 0; k <= len; ++k) wd.set(k, ex.count(k));
  return wd;
}

LowWeightCounts a468(int m) {
  if (m < 4 || m % 2 || m > kMaxExtensionDegree) {
    throw std::invalid_argument("a468 needs even m in [4, 16], got m=" + std::to_string(m));
  }
  const unsigned um = static_cast<unsigned>(m);
  const BigInt q = pow2(um);
  const BigInt q1 = q - 1;
  LowWeightCounts r;
  r.a4 = exact_div(q * q1, 12, "A4");
  r.a6 = exact_div(q * q1 * (pow2(2 * um - 4) + pow2(um - 1) + 6), 45, "A6");
  r.a8 = exact_div(pow2(um - 3) * q1 *
                       (pow2(4 * um - 4) - 27 * pow2(3 * um - 4) + 23 * pow2(2 * um - 1) +
                        261 * pow2(um - 2) + 403),
                   315, "A8");
  return r;
}

std::size_t min_distance(const WeightDistribution& wd) {
  for (const auto& [w, c] : wd.counts()) {
    if (w > 0 && c > 0) return w;
  }
  throw std::domain_error("distribution has no nonzero codeword");
}

nlohmann::ordered_json to_json(const WeightDistribution& wd) {
  nlohmann::ordered_json j;
  j["length"] = wd.length();
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (const auto& [w, c] : wd.counts()) counts[std::to_string(w)] = c.str();
  j["counts"] = std::move(counts);
  return j;
}

WeightDistribution wd_from_json(const nlohmann::ordered_json& j) {
  WeightDistribution wd(j.at("length").get<std::size_t>());
  for (const auto& [key, val] : j.at("counts").items()) {
    wd.set(std::stoul(key), BigInt(val.get<std::string>()));
  }
  return wd;
}

}  // namespace affsteiner
