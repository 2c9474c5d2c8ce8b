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

#include "majill/construct.h"

namespace majill {
namespace {

void BM_ConstructRegular(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::size_t k = n / 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(construct_regular_illusion_report(n, k));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ConstructRegular)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_FastConstruct(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::size_t k = (n / 2 + 2) % 2 ? n / 2 + 3 : n / 2 + 2;
  for (auto _ : state) benchmark::DoNotOptimize(fast_construct(n, k));
}
BENCHMARK(BM_FastConstruct)->Arg(18)->Arg(66)->Arg(258);

}  // namespace
}  // namespace majill
