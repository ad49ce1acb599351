// Copyright 2026 The flowerdom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "flowerdom/constructions.hpp"
#include "flowerdom/matching.hpp"
#include "flowerdom/solver.hpp"

namespace {

using flowerdom::FlowerGraph;

void BM_Solve(benchmark::State& state) {
  const FlowerGraph g(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const int k = static_cast<int>(state.range(2));
  flowerdom::SolveBudget budget;
  for (auto _ : state) {
    auto result = flowerdom::min_paired_domination(g, k, budget);
    benchmark::DoNotOptimize(result.optimum);
    state.counters["nodes"] = static_cast<double>(result.nodes);
  }
}
BENCHMARK(BM_Solve)
    ->Args({4, 5, 1})
    ->Args({4, 7, 1})
    ->Args({6, 5, 1})
    ->Args({4, 7, 2})
    ->Args({6, 5, 2})
    ->Unit(benchmark::kMillisecond);

void BM_PerfectMatching(benchmark::State& state) {
  const FlowerGraph g(8, 9);
  std::mt19937_64 rng(7);
  std::vector<flowerdom::VertexSet> sets;
  for (int i = 0; i < 64; ++i) {
    flowerdom::VertexSet s(g.num_vertices());
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
      if (rng() % 2 == 0) s.insert(v);
    sets.push_back(std::move(s));
  }
  for (auto _ : state) {
    for (const auto& s : sets) benchmark::DoNotOptimize(flowerdom::has_perfect_matching(g, s));
  }
}
BENCHMARK(BM_PerfectMatching);

void BM_Construction(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int n = 3; n <= 20; ++n)
      for (int m = 3; m <= 20; ++m)
        benchmark::DoNotOptimize(flowerdom::build_construction(n, m, k).set.size());
  }
}
BENCHMARK(BM_Construction)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
