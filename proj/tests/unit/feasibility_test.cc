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

#include <gtest/gtest.h>

#include "majill/construct.h"
#include "majill/errors.h"
#include "majill/feasibility.h"
#include "majill/oracle.h"
#include "test_support.h"

namespace majill {
namespace {

bool has_reason(const Verdict& v, const std::string& code) {
  for (const auto& r : v.reasons) {
    if (r.code == code) return true;
  }
  return false;
}

TEST(FeasibilityTest, CycleExamples) {
  EXPECT_FALSE(cycle_feasible(5).weak_majority_majority.possible);
  EXPECT_TRUE(cycle_feasible(4).majority_weak_majority.possible);
  EXPECT_FALSE(cycle_feasible(3).majority_majority.possible);
  EXPECT_THROW(cycle_feasible(2), InvalidInput);
}

// Cycle verdicts against exhaustive colorings.
TEST(FeasibilityTest, CycleMatchesOracle) {
  for (std::size_t n = 3; n <= 14; ++n) {
    const Graph c = cycle_graph(n);
    const CycleVerdict v = cycle_feasible(n);
    EXPECT_EQ(v.majority_majority.possible,
              illusion_possible(c, NetworkIllusion::kMajorityMajority));
    EXPECT_EQ(v.weak_majority_majority.possible,
              illusion_possible(c, NetworkIllusion::kWeakMajorityMajority));
    EXPECT_EQ(v.majority_weak_majority.possible,
              illusion_possible(c, NetworkIllusion::kMajorityWeakMajority));
  }
}

TEST(FeasibilityTest, CompletePqExample) {
  const PqVerdicts v = complete_pq_feasible(5, Threshold::half(), Threshold(2, 5));
  EXPECT_FALSE(v.p_q);
}

PqVerdicts brute_complete_pq(std::size_t n, const Threshold& p,
                             const Threshold& q) {
  PqVerdicts out;
  const Graph g = complete_graph(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto r = pq_report(ColoredGraph(g, testing::coloring_from_mask(n, mask)),
                             p, q);
    out.p_q |= r.p_q;
    out.weak_p_q |= r.weak_p_q;
    out.p_weak_q |= r.p_weak_q;
    out.weak_p_weak_q |= r.weak_p_weak_q;
  }
  return out;
}

// The closed-form complete-graph verdicts against every coloring.
TEST(FeasibilityTest, CompletePqMatchesBruteForce) {
  const Threshold values[] = {Threshold(0, 1), Threshold(1, 4), Threshold(1, 3),
                              Threshold(2, 5), Threshold::half(),
                              Threshold(3, 5), Threshold(2, 3), Threshold(1, 1)};
  for (std::size_t n = 2; n <= 9; ++n) {
    for (const Threshold& p : values) {
      for (const Threshold& q : values) {
        EXPECT_EQ(complete_pq_feasible(n, p, q), brute_complete_pq(n, p, q))
            << "n=" << n << " p=" << p.to_string() << " q=" << q.to_string();
      }
    }
  }
}

TEST(FeasibilityTest, CompleteClassificationExamples) {
  auto c = complete_majority_weak_classification(
      ColoredGraph(complete_graph(5), parse_coloring("RRRBB")));
  EXPECT_TRUE(c.majority_weak_majority);
  EXPECT_FALSE(c.unanimity_weak_majority);
  c = complete_majority_weak_classification(
      ColoredGraph(complete_graph(4), parse_coloring("RRBB")));
  EXPECT_TRUE(c.unanimity_weak_majority);
  c = complete_majority_weak_classification(
      ColoredGraph(complete_graph(5), parse_coloring("RRRRB")));
  EXPECT_FALSE(c.majority_weak_majority);
  EXPECT_FALSE(c.unanimity_weak_majority);
  EXPECT_THROW(complete_majority_weak_classification(
                   ColoredGraph(cycle_graph(5), parse_coloring("RRRRB"))),
               InvalidInput);
}

TEST(FeasibilityPropertyTest, CompleteClassificationMatchesAnalysis) {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); mask += 3) {
      const ColoredGraph cg(complete_graph(n), testing::coloring_from_mask(n, mask));
      const auto c = complete_majority_weak_classification(cg);
      const auto r = classify_network(cg);
      EXPECT_EQ(c.majority_weak_majority, r.majority_weak_majority);
      EXPECT_EQ(c.unanimity_weak_majority, r.unanimity_weak_majority);
    }
  }
}

TEST(FeasibilityTest, RegularExamples) {
  EXPECT_FALSE(regular_necessary(6, 4, Strictness::kStrict).possible);
  const Verdict v63 = regular_necessary(6, 3, Strictness::kStrict);
  EXPECT_FALSE(v63.possible);
  EXPECT_TRUE(has_reason(v63, "minority-edge-capacity"));
  EXPECT_TRUE(regular_necessary(12, 6, Strictness::kStrict).possible);
  EXPECT_TRUE(regular_exists(12, 6).possible);
  EXPECT_TRUE(regular_exists(14, 4).possible);
  EXPECT_FALSE(regular_exists(6, 4).possible);
  EXPECT_TRUE(has_reason(regular_necessary(9, 2, Strictness::kWeak),
                         "low-degree"));
  EXPECT_THROW(regular_exists(5, 3), InvalidInput);
  EXPECT_THROW(regular_exists(5, 5), InvalidInput);
}

TEST(FeasibilityTest, JoinParityObstruction) {
  EXPECT_TRUE(regular_join_parity_obstruction(12, 8).has_value());
  EXPECT_TRUE(regular_join_parity_obstruction(24, 20).has_value());
  EXPECT_FALSE(regular_join_parity_obstruction(14, 10).has_value());
  EXPECT_FALSE(regular_join_parity_obstruction(12, 6).has_value());
  EXPECT_TRUE(regular_exists(12, 8).possible);
  EXPECT_FALSE(regular_exists_exact(12, 8).possible);
}

// Soundness: whatever the conditions rule out, no regular graph admits.
TEST(FeasibilityTest, NecessaryConditionsAreSound) {
  for (std::size_t n = 3; n <= 8; ++n) {
    for (std::size_t k = 0; k < n; ++k) {
      if ((k * n) % 2) continue;
      const bool strict_ok = regular_necessary(n, k, Strictness::kStrict).possible;
      const bool weak_ok = regular_necessary(n, k, Strictness::kWeak).possible;
      if (strict_ok && weak_ok) continue;
      bool strict_seen = false;
      bool weak_seen = false;
      enumerate_regular(n, k, [&](const Graph& g) {
        if (!strict_ok && !strict_seen) {
          strict_seen = illusion_possible(g, NetworkIllusion::kMajorityMajority);
        }
        if (!weak_ok && !weak_seen) {
          weak_seen = illusion_possible(g, NetworkIllusion::kWeakMajorityMajority);
        }
      });
      EXPECT_FALSE(strict_seen) << n << "," << k;
      EXPECT_FALSE(weak_seen) << n << "," << k;
    }
  }
}

// The exact predicate agrees with the constructor on every pair in range.
TEST(FeasibilityTest, ExactMatchesConstructor) {
  for (std::size_t n = 4; n <= 40; ++n) {
    for (std::size_t k = 0; k < n; ++k) {
      if ((k * n) % 2) continue;
      bool built = false;
      try {
        const ColoredGraph cg = construct_regular_illusion(n, k);
        built = classify_network(cg).majority_majority && cg.graph().is_regular(k);
      } catch (const Infeasible&) {
      }
      EXPECT_EQ(built, regular_exists_exact(n, k).possible) << n << "," << k;
    }
  }
}

TEST(FeasibilityTest, OddDegreeQBound) {
  EXPECT_EQ(odd_degree_q_bound(3), Threshold(2, 3));
  EXPECT_EQ(odd_degree_q_bound(1), Threshold(1, 1));
  EXPECT_EQ(odd_degree_q_bound(5), Threshold(3, 5));
  EXPECT_THROW(odd_degree_q_bound(4), InvalidInput);
  EXPECT_THROW(odd_degree_q_bound(0), InvalidInput);
}

TEST(FeasibilityTest, VerdictJson) {
  const auto j = to_json(regular_exists(6, 4));
  EXPECT_FALSE(j.at("possible").get<bool>());
  EXPECT_FALSE(j.at("reasons").empty());
}

}  // namespace
}  // namespace majill
