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

#include "majill/graph.h"

#include <algorithm>
#include <string>

#include "majill/errors.h"

namespace majill {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.adjacency_.resize(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw GraphError(GraphError::Kind::kOutOfRange, u, v,
                       "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                           ") references a node outside [0, " +
                           std::to_string(n) + ")");
    }
    if (u == v) {
      throw GraphError(GraphError::Kind::kSelfLoop, u, v,
                       "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                           ") is a self-loop");
    }
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  std::size_t ends = 0;
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    ends += list.size();
  }
  g.edge_count_ = ends / 2;
  return g;
}

void Graph::check_node(NodeId i) const {
  if (i >= size()) {
    throw InvalidInput("node id " + std::to_string(i) + " out of range [0, " +
                       std::to_string(size()) + ")");
  }
}

std::size_t Graph::degree(NodeId i) const {
  check_node(i);
  return adjacency_[i].size();
}

std::span<const NodeId> Graph::neighbors(NodeId i) const {
  check_node(i);
  return adjacency_[i];
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  check_node(u);
  check_node(v);
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

EdgeList Graph::edges() const {
  EdgeList out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < size(); ++u) {
    for (NodeId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_regular(std::size_t k) const {
  return std::all_of(adjacency_.begin(), adjacency_.end(),
                     [k](const auto& list) { return list.size() == k; });
}

Graph make_graph(std::size_t n, std::span<const Edge> edges) {
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidInput("cycle_graph requires n >= 3");
  EdgeList edges;
  for (NodeId i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
  EdgeList edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph circulant_graph(std::size_t n, const std::set<std::size_t>& offsets) {
  if (offsets.empty()) throw InvalidInput("circulant_graph needs an offset");
  if (n < 2) throw InvalidInput("circulant_graph requires n >= 2");
  EdgeList edges;
  for (std::size_t d : offsets) {
    if (d < 1 || d > n / 2) {
      throw InvalidInput("circulant offset " + std::to_string(d) +
                         " outside [1, " + std::to_string(n / 2) + "]");
    }
    for (NodeId i = 0; i < n; ++i) edges.emplace_back(i, (i + d) % n);
  }
  return Graph::from_edges(n, edges);
}

Graph path_graph(std::size_t n) {
  EdgeList edges;
  for (NodeId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph complete_bipartite_graph(std::size_t left, std::size_t right) {
  EdgeList edges;
  for (NodeId u = 0; u < left; ++u) {
    for (NodeId v = 0; v < right; ++v) edges.emplace_back(u, left + v);
  }
  return Graph::from_edges(left + right, edges);
}

}  // namespace majill
