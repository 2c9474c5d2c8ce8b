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

#include "majill/feasibility.h"

#include <cstdint>
#include <string>

#include "majill/errors.h"

namespace majill {
namespace {

using i64 = std::int64_t;

std::string nk(std::size_t n, std::size_t k) {
  return "n=" + std::to_string(n) + ", k=" + std::to_string(k);
}

void check_regular_args(std::size_t n, std::size_t k) {
  if (n < 1) throw InvalidInput("n must be at least 1");
  if (k >= n) {
    throw InvalidInput("degree k must be below n (" + nk(n, k) + ")");
  }
  if ((k * n) % 2 != 0) {
    throw InvalidInput("no k-regular graph exists when k*n is odd (" +
                       nk(n, k) + ")");
  }
}

// Does a class of size x mislead the n - x agents outside it?
bool class_misleads(std::size_t n, std::size_t x, const Threshold& q,
                    bool weak) {
  const int local = q.compare_fraction(x, n - 1);
  const int global = q.compare_fraction(x, n);
  if (weak) return local >= 0 && global <= 0 && !(local == 0 && global == 0);
  return local > 0 && global < 0;
}

// Literal interval test q(n-1) < x < qn, or its closed form.
bool in_interval(std::size_t n, std::size_t x, const Threshold& q, bool weak) {
  const int lower = q.compare_fraction(x, n - 1);
  const int upper = q.compare_fraction(x, n);
  return weak ? (lower >= 0 && upper <= 0) : (lower > 0 && upper < 0);
}

}  // namespace

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json reasons = nlohmann::json::array();
  for (const auto& r : v.reasons) {
    reasons.push_back({{"code", r.code}, {"message", r.message}});
  }
  return {{"possible", v.possible}, {"reasons", reasons}};
}

CycleVerdict cycle_feasible(std::size_t n) {
  if (n < 3) throw InvalidInput("a cycle needs at least 3 nodes");
  const Reason no_majority{
      "two-regular",
      "on a 2-regular graph a misled agent needs both neighbors in the "
      "minority, and each minority node serves at most two agents"};
  CycleVerdict v;
  v.majority_majority = {false, {no_majority}};
  v.weak_majority_majority = {false, {no_majority}};
  v.majority_weak_majority = {
      true,
      {{"any-graph",
        "every graph admits a majority-weak-majority illusion"}}};
  return v;
}

PqVerdicts complete_pq_feasible(std::size_t n, const Threshold& p,
                                const Threshold& q) {
  if (n < 1) throw InvalidInput("complete graph needs at least 1 node");
  PqVerdicts v;
  for (std::size_t x = 0; x <= n; ++x) {
    const std::size_t y = n - x;
    const std::size_t misled =
        (class_misleads(n, x, q, false) ? y : 0) +
        (class_misleads(n, y, q, false) ? x : 0);
    const std::size_t weak_misled =
        (class_misleads(n, x, q, true) ? y : 0) +
        (class_misleads(n, y, q, true) ? x : 0);
    v.p_q |= p.compare_fraction(misled, n) > 0;
    v.weak_p_q |= p.compare_fraction(misled, n) >= 0;
    v.p_weak_q |= p.compare_fraction(weak_misled, n) > 0;
    v.weak_p_weak_q |= p.compare_fraction(weak_misled, n) >= 0;
  }
  return v;
}

PqVerdicts complete_pq_single_class(std::size_t n, const Threshold& p,
                                    const Threshold& q) {
  if (n < 1) throw InvalidInput("complete graph needs at least 1 node");
  PqVerdicts v;
  for (std::size_t x = 0; x <= n; ++x) {
    const int rest = p.compare_fraction(n - x, n);
    const bool strict_q = in_interval(n, x, q, false);
    const bool weak_q = in_interval(n, x, q, true);
    v.p_q |= strict_q && rest > 0;
    v.weak_p_q |= strict_q && rest >= 0;
    v.p_weak_q |= weak_q && rest > 0;
    v.weak_p_weak_q |= weak_q && rest >= 0;
  }
  return v;
}

CompleteClassification complete_majority_weak_classification(
    const ColoredGraph& cg) {
  const std::size_t n = cg.size();
  if (!cg.graph().is_regular(n == 0 ? 0 : n - 1)) {
    throw InvalidInput("complete_majority_weak_classification needs K_n");
  }
  const std::size_t red = cg.red_count();
  const std::size_t blue = n - red;
  const std::size_t diff = red > blue ? red - blue : blue - red;
  CompleteClassification c;
  c.majority_weak_majority = diff <= 1 && n > 0;
  // The equal split is unanimous; so is K_1, whose only agent sees a tie.
  c.unanimity_weak_majority = n > 0 && (diff == 0 || n == 1);
  return c;
}

Verdict regular_necessary(std::size_t n, std::size_t k, Strictness strictness) {
  check_regular_args(n, k);
  Verdict v{true, {}};
  const i64 ni = static_cast<i64>(n);
  const i64 ki = static_cast<i64>(k);
  const bool n_even = n % 2 == 0;
  const bool k_even = k % 2 == 0;

  if (k <= 2) {
    v.possible = false;
    v.reasons.push_back(
        {"low-degree",
         "with k <= 2 no majority of agents can see a minority majority (" +
             nk(n, k) + ")"});
  }

  if (n_even && k_even && ki > ni - 4) {
    v.possible = false;
    v.reasons.push_back({"minority-neighbor-bound",
                         "k <= n-4 is required when n and k are even (" +
                             nk(n, k) + ")"});
  } else if (n_even != k_even && ki > ni - 3) {
    v.possible = false;
    v.reasons.push_back(
        {"minority-neighbor-bound",
         "k <= n-3 is required when exactly one of n and k is even (" +
             nk(n, k) + ")"});
  }

  if (strictness == Strictness::kStrict) {
    bool ok = true;
    std::string bound;
    if (n_even && k_even) {
      ok = ki > 2 && ni * (ki - 2) >= 2 * (3 * ki + 2);
      bound = "n >= 2(3k+2)/(k-2)";
    } else if (n_even) {
      ok = ki > 1 && ni * (ki - 1) >= 2 * (3 * ki + 1);
      bound = "n >= 2(3k+1)/(k-1)";
    } else {
      ok = ki > 2 && ni * (ki - 2) >= 3 * ki + 2;
      bound = "n >= (3k+2)/(k-2)";
    }
    if (!ok) {
      v.possible = false;
      v.reasons.push_back({"minority-edge-capacity",
                           bound + " is required (" + nk(n, k) + ")"});
    }
  }
  return v;
}

Verdict regular_exists(std::size_t n, std::size_t k) {
  return regular_necessary(n, k, Strictness::kStrict);
}

std::optional<Reason> regular_join_parity_obstruction(std::size_t n,
                                                      std::size_t k) {
  if (n % 4 != 0 || n < 8 || k + 4 != n) return std::nullopt;
  // A misled agent needs k/2+1 = n/2-1 minority neighbors, so the minority
  // has exactly n/2-1 nodes, only majority nodes can be misled, and all
  // n/2+1 of them must see every minority node. Each minority node then has
  // n/2-5 minority neighbors: an odd degree on an odd number of nodes.
  return Reason{"complete-join-parity",
                "every majority node must be joined to every minority node, "
                "leaving the n/2-1 minority nodes an odd degree sum of "
                "minority edges (" +
                    nk(n, k) + ")"};
}

Verdict regular_exists_exact(std::size_t n, std::size_t k) {
  Verdict v = regular_exists(n, k);
  if (auto obstruction = regular_join_parity_obstruction(n, k)) {
    v.possible = false;
    v.reasons.push_back(*obstruction);
  }
  return v;
}

Threshold odd_degree_q_bound(std::size_t k_max) {
  if (k_max == 0 || k_max % 2 == 0) {
    throw InvalidInput("odd_degree_q_bound needs an odd degree bound");
  }
  // ((k+1)/2) / k, kept in lowest terms.
  std::uint64_t num = (k_max + 1) / 2;
  std::uint64_t den = k_max;
  std::uint64_t a = num;
  std::uint64_t b = den;
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return Threshold(num / a, den / a);
}

}  // namespace majill
