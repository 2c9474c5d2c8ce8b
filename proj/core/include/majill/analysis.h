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

#ifndef MAJILL_ANALYSIS_H_
#define MAJILL_ANALYSIS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "majill/coloring.h"
#include "majill/graph.h"

namespace majill {

// Exact rational in [0, 1]. Comparisons against counts are done by
// cross-multiplication so divisibility-sensitive boundaries stay exact.
class Threshold {
 public:
  // Throws InvalidInput unless denominator > 0 and numerator <= denominator.
  Threshold(std::uint64_t numerator, std::uint64_t denominator);

  // Parses "a/b" or a bare integer ("0", "1"). Throws ParseError.
  static Threshold parse(std::string_view text);
  static Threshold half() { return Threshold(1, 2); }

  std::uint64_t numerator() const { return numerator_; }
  std::uint64_t denominator() const { return denominator_; }

  // Sign of count/total - value, i.e. of count*den - num*total.
  int compare_fraction(std::uint64_t count, std::uint64_t total) const;

  bool operator==(const Threshold& other) const;
  bool operator<(const Threshold& other) const;
  std::string to_string() const;

 private:
  std::uint64_t numerator_;
  std::uint64_t denominator_;
};

enum class Level : std::uint8_t { kNone, kWeak, kStrict };
std::string_view to_string(Level level);

// One row of the local/global winner taxonomy for a single agent.
struct AgentStatus {
  Color own_color = Color::kRed;
  Winner local_winner = Winner::kTie;
  Winner global_winner = Winner::kTie;
  // Strict when the neighborhood has a winner other than the own color;
  // weak when the neighborhood ties.
  Level opposition = Level::kNone;
  // Strict when both winners exist and differ; weak when exactly one of them
  // is a tie.
  Level illusion = Level::kNone;
  // The color locally over-represented relative to the whole network, set
  // whenever illusion != kNone.
  std::optional<Color> illusion_color;
  bool isolated = false;

  bool operator==(const AgentStatus&) const = default;
};

// Derives the taxonomy row from the three inputs alone; agent_status is this
// applied to a concrete node.
AgentStatus classify_agent(Color own, Winner local, Winner global,
                           bool isolated = false);
AgentStatus agent_status(const ColoredGraph& cg, NodeId i);

enum class NetworkIllusion : std::uint8_t {
  kMajorityMajority,
  kWeakMajorityMajority,
  kMajorityWeakMajority,
  kWeakMajorityWeakMajority,
  kUnanimityMajority,
  kUnanimityWeakMajority,
};
inline constexpr NetworkIllusion kAllNetworkIllusions[] = {
    NetworkIllusion::kMajorityMajority,
    NetworkIllusion::kWeakMajorityMajority,
    NetworkIllusion::kMajorityWeakMajority,
    NetworkIllusion::kWeakMajorityWeakMajority,
    NetworkIllusion::kUnanimityMajority,
    NetworkIllusion::kUnanimityWeakMajority,
};
std::string_view to_string(NetworkIllusion kind);
std::optional<NetworkIllusion> parse_network_illusion(std::string_view name);

enum class Chromaticity : std::uint8_t { kMonochromatic, kPolychromatic };
std::string_view to_string(Chromaticity c);

struct NetworkIllusionReport {
  std::size_t n = 0;
  std::size_t strict_count = 0;
  std::size_t weak_only_count = 0;
  std::size_t none_count = 0;

  bool majority_majority = false;
  bool weak_majority_majority = false;
  bool majority_weak_majority = false;
  bool weak_majority_weak_majority = false;
  bool unanimity_majority = false;
  bool unanimity_weak_majority = false;

  Chromaticity chromaticity = Chromaticity::kMonochromatic;
  Winner global_winner = Winner::kTie;
  // Nodes with an empty neighborhood; their local winner is a tie.
  std::vector<NodeId> isolated_nodes;
  std::vector<AgentStatus> agents;

  bool flag(NetworkIllusion kind) const;
};

NetworkIllusionReport classify_network(const ColoredGraph& cg);

// q-illusion: some color x has more than a q fraction of i's neighborhood but
// less than a q fraction of the whole network. Returns x (red checked first).
std::optional<Color> q_illusion(const ColoredGraph& cg, NodeId i,
                                const Threshold& q);
// Weak variant: >= and <=, excluding the case where both hold with equality.
std::optional<Color> weak_q_illusion(const ColoredGraph& cg, NodeId i,
                                     const Threshold& q);

struct PqReport {
  Threshold p = Threshold::half();
  Threshold q = Threshold::half();
  std::size_t n = 0;
  std::size_t q_count = 0;       // agents under q-illusion
  std::size_t weak_q_count = 0;  // agents under weak q-illusion

  bool p_q = false;            // more than p*n agents under q-illusion
  bool weak_p_q = false;       // at least p*n agents under q-illusion
  bool p_weak_q = false;       // more than p*n under weak q-illusion
  bool weak_p_weak_q = false;  // at least p*n under weak q-illusion

  // Monochromatic when one color witnesses every agent under illusion.
  Chromaticity q_chromaticity = Chromaticity::kMonochromatic;
  Chromaticity weak_q_chromaticity = Chromaticity::kMonochromatic;
};

// Throws InternalInvariantError if a q <= 1/2 (strict) or q < 1/2 (weak)
// illusion turns out polychromatic, which counting rules out.
PqReport pq_report(const ColoredGraph& cg, const Threshold& p,
                   const Threshold& q);

// Stable JSON documents (schema "majill.report/1").
nlohmann::json to_json(const AgentStatus& status);
nlohmann::json to_json(const NetworkIllusionReport& report);
nlohmann::json to_json(const PqReport& report);
std::string to_text(const NetworkIllusionReport& report);
std::string to_text(const PqReport& report);

}  // namespace majill

#endif  // MAJILL_ANALYSIS_H_
