// Copyright 2026 The majill Authors
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

#include "majill/analysis.h"
#include "majill/coloring.h"

namespace majill {
namespace {

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  EdgeList e;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (coin(rng)) e.emplace_back(u, v);
    }
  }
  return make_graph(n, e);
}

void BM_WeakMajorityColoring(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = gnp(n, 8.0 / static_cast<double>(n), 1);
  const Coloring start = uniform_coloring(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(weak_majority_2_coloring(g, start));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_WeakMajorityColoring)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_IllusionColoring(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = gnp(n, 8.0 / static_cast<double>(n), 2);
  for (auto _ : state) benchmark::DoNotOptimize(illusion_coloring(g));
}
BENCHMARK(BM_IllusionColoring)->RangeMultiplier(4)->Range(64, 16384);

void BM_ClassifyNetwork(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ColoredGraph cg(gnp(n, 8.0 / static_cast<double>(n), 3),
                        random_coloring(n, 3));
  for (auto _ : state) benchmark::DoNotOptimize(classify_network(cg));
}
BENCHMARK(BM_ClassifyNetwork)->RangeMultiplier(4)->Range(64, 16384);

}  // namespace
}  // namespace majill
