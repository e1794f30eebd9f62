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

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "affsteiner/kernels.hpp"

namespace affsteiner::kernels {
namespace {

// Row-reduced form of the m x m GF(2) matrix of c -> s^(2^e) c + s c^(2^e),
// with the row transform kept so each right-hand side costs m parities.
struct LinearizedSolver {
  int m = 0;
  int rank = 0;
  std::array<std::uint32_t, kMaxExtensionDegree> transform{};
  std::array<std::uint32_t, kMaxExtensionDegree> pivot_col{};
  std::vector<std::uint32_t> kernel;  // every element of the kernel, not a basis

  LinearizedSolver(const FieldCtx& ctx, Element s, int e) : m(ctx.m()) {
    const Element s2e = ctx.frob_pow(s, e);
    std::array<std::uint32_t, kMaxExtensionDegree> rows{};
    for (int j = 0; j < m; ++j) {
      const Element c{1u << j};
      const std::uint32_t col =
          ctx.add(ctx.mul(s2e, c), ctx.mul(s, ctx.frob_pow(c, e))).value;
      for (int r = 0; r < m; ++r) {
        if ((col >> r) & 1u) rows[r] |= 1u << j;
      }
    }
    for (int r = 0; r < m; ++r) transform[r] = 1u << r;

    std::uint32_t free_cols = (1u << m) - 1;
    for (int c = 0; c < m; ++c) {
      int p = rank;
      while (p < m && !((rows[p] >> c) & 1u)) ++p;
      if (p == m) continue;
      std::swap(rows[p], rows[rank]);
      std::swap(transform[p], transform[rank]);
      for (int i = 0; i < m; ++i) {
        if (i != rank && ((rows[i] >> c) & 1u)) {
          rows[i] ^= rows[rank];
          transform[i] ^= transform[rank];
        }
      }
      pivot_col[rank] = static_cast<std::uint32_t>(c);
      free_cols &= ~(1u << c);
      ++rank;
    }

    std::vector<std::uint32_t> basis;
    for (std::uint32_t f = free_cols; f; f &= f - 1) {
      const int col = std::countr_zero(f);
      std::uint32_t v = 1u << col;
      for (int r = 0; r < rank; ++r) {
        if ((rows[r] >> col) & 1u) v |= 1u << pivot_col[r];
      }
      basis.push_back(v);
    }
    kernel.assign(std::size_t{1} << basis.size(), 0);
    for (std::size_t mask = 1; mask < kernel.size(); ++mask) {
      const auto low = static_cast<std::size_t>(std::countr_zero(mask));
      kernel[mask] = kernel[mask & (mask - 1)] ^ basis[low];
    }
  }

  bool particular(std::uint32_t rhs, std::uint32_t& out) const {
    std::uint32_t c = 0;
    for (int r = 0; r < m; ++r) {
      const bool z = std::popcount(transform[r] & rhs) & 1;
      if (r >= rank) {
        if (z) return false;
      } else if (z) {
        c |= 1u << pivot_col[r];
      }
    }
    out = c;
    return true;
  }
};

}  // namespace

std::vector<Block4> weight4_blocks(const FieldCtx& ctx, int e) {
  const std::uint32_t q = ctx.size();
  std::vector<std::uint32_t> power_u(q);
  for (std::uint32_t x = 0; x < q; ++x) {
    power_u[x] = ctx.mul(Element{x}, ctx.frob_pow(Element{x}, e)).value;
  }

  std::vector<LinearizedSolver> solvers;
  solvers.reserve(q);
  solvers.emplace_back(ctx, Element{1}, e);  // placeholder for s = 0, never used
  for (std::uint32_t s = 1; s < q; ++s) solvers.emplace_back(ctx, Element{s}, e);

  std::vector<Block4> blocks;
#pragma omp parallel
  {
    std::vector<Block4> local;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t ai = 0; ai < static_cast<std::int64_t>(q); ++ai) {
      const auto a = static_cast<std::uint32_t>(ai);
      for (std::uint32_t b = a + 1; b < q; ++b) {
        const std::uint32_t s = a ^ b;
        const LinearizedSolver& solver = solvers[s];
        std::uint32_t c0;
        if (!solver.particular(power_u[a] ^ power_u[b] ^ power_u[s], c0)) continue;
        for (std::uint32_t k : solver.kernel) {
          const std::uint32_t c = c0 ^ k;
          const std::uint32_t d = c ^ s;
          // Each block is reached from all six of its pairs; keep the one
          // where (a, b) are its two smallest points.
          if (c < d && b < c) local.push_back({a, b, c, d});
        }
      }
    }
#pragma omp critical
    blocks.insert(blocks.end(), local.begin(), local.end());
  }
  std::sort(blocks.begin(), blocks.end());
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
  return blocks;
}

}  // namespace affsteiner::kernels
