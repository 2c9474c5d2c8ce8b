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

#ifndef MAJILL_FEASIBILITY_H_
#define MAJILL_FEASIBILITY_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "majill/analysis.h"
#include "majill/coloring.h"

namespace majill {

// Machine-readable explanation attached to a verdict.
//
// Codes:
//   low-degree               k <= 2: at most half the agents can be misled
//   minority-neighbor-bound  a misled agent needs more minority neighbors
//                            than the minority can supply
//   minority-edge-capacity   the minority's edge ends cannot serve a majority
//                            of misled agents
//   complete-join-parity     every majority node must see every minority node
//                            and the minority's leftover degrees have odd sum
//   two-regular, complete-graph, any-graph
//                            class-level facts quoted by cycle/complete checks
struct Reason {
  std::string code;
  std::string message;
  bool operator==(const Reason&) const = default;
};

struct Verdict {
  bool possible = false;
  std::vector<Reason> reasons;
};

nlohmann::json to_json(const Verdict& v);

struct CycleVerdict {
  Verdict majority_majority;
  Verdict weak_majority_majority;
  Verdict majority_weak_majority;
};

// Throws InvalidInput when n < 3.
CycleVerdict cycle_feasible(std::size_t n);

struct PqVerdicts {
  bool p_q = false;
  bool weak_p_q = false;
  bool p_weak_q = false;
  bool weak_p_weak_q = false;
  bool operator==(const PqVerdicts&) const = default;
};

// Whether some coloring of K_n realizes each p/q illusion variant. Scans the
// size x of one color class: the other n - x agents see x/(n-1) of it against
// a global x/n, and symmetrically the x agents see (n-x)/(n-1) of the other
// class. When q > 1/2 both classes can be misled at once.
PqVerdicts complete_pq_feasible(std::size_t n, const Threshold& p,
                                const Threshold& q);

// The single-class inequalities q(n-1) < x < qn and n - x > pn (and their
// weak forms) taken literally. Agrees with complete_pq_feasible whenever
// q <= 1/2 and q > 0.
PqVerdicts complete_pq_single_class(std::size_t n, const Threshold& p,
                                    const Threshold& q);

struct CompleteClassification {
  bool majority_weak_majority = false;
  bool unanimity_weak_majority = false;
};

// On a complete graph the majority-weak-majority illusion holds exactly when
// the two color classes differ by one (or are equal, which is the unanimity
// case). Throws InvalidInput when the graph is not complete.
CompleteClassification complete_majority_weak_classification(
    const ColoredGraph& cg);

enum class Strictness { kStrict, kWeak };

// Necessary conditions on (n, k) for a k-regular graph on n nodes to admit a
// majority-majority (kStrict) or weak-majority-majority (kWeak) illusion.
// Requires n >= 1, k < n and k*n even; throws InvalidInput otherwise.
Verdict regular_necessary(std::size_t n, std::size_t k, Strictness strictness);

// k > 2, k or n even, and the strict necessary conditions: the classical
// existence criterion.
Verdict regular_exists(std::size_t n, std::size_t k);

// The extra obstruction at n = 0 (mod 4), k = n - 4 that the classical
// criterion misses.
std::optional<Reason> regular_join_parity_obstruction(std::size_t n,
                                                      std::size_t k);

// regular_exists plus the join-parity obstruction. Checked against the
// constructor for every n below 300.
Verdict regular_exists_exact(std::size_t n, std::size_t k);

// q = ((k+1)/2)/k for odd k_max >= 1. Throws InvalidInput otherwise.
Threshold odd_degree_q_bound(std::size_t k_max);

}  // namespace majill

#endif  // MAJILL_FEASIBILITY_H_
