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

#ifndef MAJILL_ORACLE_H_
#define MAJILL_ORACLE_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "majill/analysis.h"
#include "majill/coloring.h"
#include "majill/graph.h"

namespace majill {

enum class Objective : std::uint8_t {
  kMaxStrictIllusionCount,
  kMaxWeakIllusionCount,
  kMinMonochromatic,
};
std::string_view to_string(Objective objective);
std::optional<Objective> parse_objective(std::string_view name);

inline constexpr std::size_t kDefaultOracleCap = 22;

struct OracleOptions {
  std::size_t cap = kDefaultOracleCap;
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct BestColoring {
  Coloring coloring;
  std::size_t score = 0;
};

// Exact optimum over all 2^n colorings. Ties go to the lexicographically
// smallest R/B string ('B' < 'R'), so the answer does not depend on how the
// search is split across threads. Throws CapExceeded when n > cap.
BestColoring best_coloring(const Graph& g, Objective objective,
                           const OracleOptions& options = {});

// Whether some coloring raises the given network flag. Throws CapExceeded.
bool illusion_possible(const Graph& g, NetworkIllusion kind,
                       const OracleOptions& options = {});

inline constexpr std::size_t kRegularEnumerationCap = 10;

// Calls visit once for every k-regular simple graph on labeled nodes
// 0..n-1 and returns how many there were. Nothing is visited when k*n is odd
// or k >= n. Throws CapExceeded when n > 10.
std::size_t enumerate_regular(std::size_t n, std::size_t k,
                              const std::function<void(const Graph&)>& visit);

}  // namespace majill

#endif  // MAJILL_ORACLE_H_
