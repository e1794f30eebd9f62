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

// Parallel kernels against their serial references on the same inputs.
// Run with OMP_NUM_THREADS set to compare scaling on a given machine.

#include <benchmark/benchmark.h>

#include <map>

#include "affsteiner/code.hpp"
#include "affsteiner/designs.hpp"
#include "affsteiner/kernels.hpp"

namespace {

using namespace affsteiner;

const LinearCode& dual_code(int m) {
  static std::map<int, LinearCode> cache;
  auto it = cache.find(m);
  if (it == cache.end()) {
    it = cache.emplace(m, dual(extend(build_cyclic(FieldCtx(m), 2)))).first;
  }
  return it->second;
}

const Design& steiner(int m) {
  static std::map<int, Design> cache;
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, extract_weight4_blocks(FieldCtx(m), 2)).first;
  return it->second;
}

void BM_HistogramParallel(benchmark::State& state) {
  const auto& rows = dual_code(static_cast<int>(state.range(0))).generator();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::weight_histogram(rows, 6));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << rows.rows()));
}

void BM_HistogramSerial(benchmark::State& state) {
  const auto& rows = dual_code(static_cast<int>(state.range(0))).generator();
  for (auto _ : state) benchmark::DoNotOptimize(reference::weight_histogram(rows));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << rows.rows()));
}

void BM_PairCoverageParallel(benchmark::State& state) {
  const Design& d = steiner(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::pair_coverage(d.v, d.k, d.points));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(d.b()));
}

void BM_PairCoverageSerial(benchmark::State& state) {
  const Design& d = steiner(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::pair_coverage(d.v, d.k, d.points));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(d.b()));
}

void BM_Weight4PairSolve(benchmark::State& state) {
  const FieldCtx f(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::weight4_blocks(f, 2));
}

void BM_Weight4TripleScan(benchmark::State& state) {
  const FieldCtx f(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::weight4_blocks(f, 2));
}

}  // namespace

BENCHMARK(BM_HistogramParallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HistogramSerial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairCoverageParallel)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairCoverageSerial)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Weight4PairSolve)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Weight4TripleScan)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
