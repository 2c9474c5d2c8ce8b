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

#ifndef MAJILL_COLORING_H_
#define MAJILL_COLORING_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "majill/graph.h"

namespace majill {

enum class Color : std::uint8_t { kRed, kBlue };

// Majority winner of a node set: a color held by strictly more than half of
// the set, or kTie.
enum class Winner : std::uint8_t { kRed, kBlue, kTie };

constexpr Color flip(Color c) {
  return c == Color::kRed ? Color::kBlue : Color::kRed;
}
constexpr Winner flip(Winner w) {
  switch (w) {
    case Winner::kRed:
      return Winner::kBlue;
    case Winner::kBlue:
      return Winner::kRed;
    case Winner::kTie:
      return Winner::kTie;
  }
  return Winner::kTie;
}
constexpr Winner as_winner(Color c) {
  return c == Color::kRed ? Winner::kRed : Winner::kBlue;
}

char to_char(Color c);
std::string_view to_string(Winner w);

// Total assignment of a color to every node 0..n-1.
using Coloring = std::vector<Color>;

// "RBRB" <-> {Red, Blue, Red, Blue}. Throws InvalidInput on other characters.
std::string to_string(const Coloring& coloring);
Coloring parse_coloring(std::string_view text);
Coloring uniform_coloring(std::size_t n, Color c = Color::kRed);
Coloring random_coloring(std::size_t n, std::uint64_t seed);
Coloring flipped(const Coloring& coloring);

// A graph together with a coloring of exactly its nodes.
class ColoredGraph {
 public:
  // Throws InvalidInput when the coloring does not cover exactly g's nodes.
  ColoredGraph(Graph graph, Coloring colors);

  const Graph& graph() const { return graph_; }
  const Coloring& colors() const { return colors_; }
  std::size_t size() const { return graph_.size(); }
  Color color(NodeId i) const;

  std::size_t red_count() const;
  // Number of i's neighbors colored red.
  std::size_t red_neighbors(NodeId i) const;

  bool operator==(const ColoredGraph&) const = default;

 private:
  Graph graph_;
  Coloring colors_;
};

// Counts compared as 2*count vs total; never in floating point.
Winner majority_winner(std::size_t red, std::size_t total);
Winner majority_winner(std::span<const Color> colors);

Winner local_winner(const ColoredGraph& cg, NodeId i);
Winner global_winner(const ColoredGraph& cg);

struct EdgeSplit {
  std::size_t monochromatic = 0;
  std::size_t dichromatic = 0;
  bool operator==(const EdgeSplit&) const = default;
};

EdgeSplit monochromatic_count(const ColoredGraph& cg);

// True when every node has at least as many differently colored neighbors as
// same-colored ones, i.e. no node's own color is its neighborhood's winner.
bool is_weak_majority_coloring(const Graph& g, const Coloring& coloring);

struct WeakColoringRun {
  Coloring coloring;
  std::size_t swaps = 0;
  // Total monochromatic edges before the first swap and after each swap.
  std::vector<std::size_t> monochromatic_trace;
};

// Local color-swapping search: while some node has more monochromatic than
// dichromatic incident edges, flip the lowest such id. Each flip lowers the
// monochromatic total, so at most |E| flips happen.
WeakColoringRun weak_majority_2_coloring(const Graph& g, Coloring initial);
WeakColoringRun weak_majority_2_coloring(const Graph& g);

// Colors any graph (n >= 1) into a majority-weak-majority illusion: more than
// half of the agents see a local winner different from the global one.
// Throws InternalInvariantError if the result fails that check.
ColoredGraph illusion_coloring(const Graph& g);

// Breadth-first 2-coloring from the lowest id of each component (root red).
// Empty when g has an odd cycle.
std::optional<Coloring> proper_2_coloring(const Graph& g);

enum class ProperSwapFailure { kNotBipartite, kNoQualifyingNode };

struct ProperSwapResult {
  ColoredGraph colored;
  // Node whose color was flipped to break a global tie, if any.
  std::optional<NodeId> swapped;
};

// Strict illusion from a proper coloring. When the proper coloring has a
// global winner it already is a majority-majority illusion; on a tie a node
// whose neighbors all have degree > 2 is flipped, leaving at least half of
// the agents under strict illusion.
std::variant<ProperSwapResult, ProperSwapFailure> strict_illusion_from_proper(
    const Graph& g);

// A node is swappable when every neighbor's red/blue neighborhood counts
// differ by at least 2.
bool is_swappable(const ColoredGraph& cg, NodeId j);

// Upgrades a tied weak majority coloring of an all-odd-degree graph to a
// weak-majority-majority illusion by flipping the lowest-id swappable node.
// Throws PreconditionError with code "not-all-odd-degrees",
// "not-weak-majority-coloring" or "global-not-tie".
std::optional<ColoredGraph> corollary_swap_upgrade(const ColoredGraph& cg);

}  // namespace majill

#endif  // MAJILL_COLORING_H_
