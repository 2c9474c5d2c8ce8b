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

#ifndef MAJILL_CONSTRUCT_H_
#define MAJILL_CONSTRUCT_H_

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "majill/coloring.h"
#include "majill/graph.h"

namespace majill {

// Class sizes and residual intra-color degrees for the staged construction.
// Red nodes are ids 0..n_red-1, blue nodes n_red..n-1.
struct ConstructionPlan {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t n_red = 0;
  std::size_t n_blue = 0;
  std::size_t k_red = 0;
  std::size_t k_blue = 0;  // clamped at 0

  std::vector<NodeId> red() const;
  std::vector<NodeId> blue() const;
};

// Throws InvalidInput when k * n is odd, k >= n or n < 4.
ConstructionPlan plan_construction(std::size_t n, std::size_t k);

// Mutable simple edge set used while a graph is assembled.
class EdgeSet {
 public:
  explicit EdgeSet(std::size_t n);

  std::size_t size() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t degree(NodeId u) const { return adjacency_.at(u).size(); }
  bool contains(NodeId u, NodeId v) const;
  // False (and no change) when the edge is already present.
  bool insert(NodeId u, NodeId v);
  Graph to_graph() const;

 private:
  std::vector<std::set<NodeId>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Round-robin red-blue edges until each red node has ceil((k+2)/2) (k even)
// or (k+1)/2 (k odd) blue neighbors. Returns how many times the one-step
// shift did not clear a collision and a scan for a free blue node was used.
std::size_t add_initial_edges(EdgeSet& edges, std::span<const NodeId> blue,
                              std::span<const NodeId> red, std::size_t k);

// Pairs consecutive blue nodes (sorted by degree, then id) while both have
// fewer than k - k_blue edges.
void add_extra_blue_edges(EdgeSet& edges, std::span<const NodeId> blue,
                          std::size_t k, std::size_t k_blue);

// Circulant k_sub-regular graph on the ordered node list, offsets counted
// from the opposite position. Throws InvalidInput when k_sub >= |nodes| or
// both are odd, and InternalInvariantError when an edge already exists.
void add_regular_subgraph(EdgeSet& edges, std::span<const NodeId> nodes,
                          std::size_t k_sub);

struct StageReport {
  std::string name;
  std::size_t edges_added = 0;
  std::size_t red_open_ends = 0;
  std::size_t blue_open_ends = 0;
  bool ok = true;
  std::string note;
};

struct ValidationReport {
  bool simple = false;
  bool regular = false;
  bool red_count_ok = false;
  bool every_red_misled = false;
  bool majority_majority = false;

  bool ok() const {
    return simple && regular && red_count_ok && every_red_misled &&
           majority_majority;
  }
};

struct ConstructionReport {
  ConstructionPlan plan;
  // "staged", "degree-sequence" or "fast".
  std::string method;
  std::vector<StageReport> stages;
  bool fallback = false;
  std::string fallback_reason;
  std::size_t shift_scans = 0;
  ValidationReport validation;
};

struct Construction {
  ColoredGraph graph;
  ConstructionReport report;
};

// Checks simplicity, k-regularity, the red count, that every red node has
// more than k/2 blue neighbors, and the majority-majority flag.
ValidationReport validate_construction(const ColoredGraph& cg, std::size_t k,
                                       std::size_t n_red);

// The staged construction. When a stage collides or the result fails
// validation, the graph is rebuilt from degree sequences instead and the
// report says so. Throws Infeasible when regular_exists is false or no
// witness exists at all; InternalInvariantError if validation still fails.
Construction construct_regular_illusion_report(std::size_t n, std::size_t k);
ColoredGraph construct_regular_illusion(std::size_t n, std::size_t k);

// Complete bipartite red-blue core plus residual circulants. Throws
// PreconditionError unless n = 2 (mod 4), n <= 2k-2, k even and
// regular_exists(n, k).
Construction fast_construct_report(std::size_t n, std::size_t k);
ColoredGraph fast_construct(std::size_t n, std::size_t k);

nlohmann::json to_json(const ConstructionReport& report);

}  // namespace majill

#endif  // MAJILL_CONSTRUCT_H_
