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

#ifndef MAJILL_GRAPH_H_
#define MAJILL_GRAPH_H_

#include <cstddef>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace majill {

using NodeId = std::size_t;
using Edge = std::pair<NodeId, NodeId>;
using EdgeList = std::vector<Edge>;

// A simple undirected irreflexive graph on the dense node ids 0..n-1.
//
// Graphs are immutable once built; every neighbor list is sorted and free of
// duplicates, and j appears in neighbors(i) exactly when i appears in
// neighbors(j).
class Graph {
 public:
  Graph() = default;

  // Builds a graph from an edge list. Duplicate pairs (in either orientation)
  // collapse to one edge. Throws GraphError on a self-loop or an id >= n.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t size() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  // Throws InvalidInput when i >= size().
  std::size_t degree(NodeId i) const;
  std::span<const NodeId> neighbors(NodeId i) const;
  bool has_edge(NodeId u, NodeId v) const;

  // Every edge once, as (u, v) with u < v, in lexicographic order.
  EdgeList edges() const;

  bool is_regular(std::size_t k) const;
  bool operator==(const Graph&) const = default;

 private:
  void check_node(NodeId i) const;

  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t edge_count_ = 0;
};

Graph make_graph(std::size_t n, std::span<const Edge> edges);

// n >= 3.
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
// Connects i to i+d and i-d (mod n) for each offset d in [1, n/2]. The offset
// n/2 (n even) contributes a single antipodal edge per node.
Graph circulant_graph(std::size_t n, const std::set<std::size_t>& offsets);
Graph path_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t left, std::size_t right);

}  // namespace majill

#endif  // MAJILL_GRAPH_H_
