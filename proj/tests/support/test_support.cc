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

#include "test_support.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace majill::testing {
namespace {

// Edge index of (u, v), u < v, in the row-major upper triangle.
std::size_t edge_index(std::size_t n, std::size_t u, std::size_t v) {
  if (u > v) std::swap(u, v);
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

bool connected(std::size_t n, const EdgeList& edges) {
  if (n == 0) return true;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t parts = n;
  for (const auto& [u, v] : edges) {
    const auto a = find(u);
    const auto b = find(v);
    if (a != b) {
      parent[a] = b;
      --parts;
    }
  }
  return parts == 1;
}

}  // namespace

Graph random_graph(std::size_t n, std::uint64_t seed, double p) {
  std::mt19937_64 rng(seed);
  if (p < 0) p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  std::bernoulli_distribution coin(p);
  EdgeList edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph random_matching_xor(std::size_t n, std::size_t count,
                          std::uint64_t seed) {
  if (n % 2 != 0) throw std::invalid_argument("perfect matchings need even n");
  std::mt19937_64 rng(seed);
  std::set<Edge> edges;
  std::vector<NodeId> order(n);
  for (std::size_t m = 0; m < count; ++m) {
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 0; i < n; i += 2) {
      const Edge e = std::minmax(order[i], order[i + 1]);
      if (!edges.erase(e)) edges.insert(e);
    }
  }
  const EdgeList list(edges.begin(), edges.end());
  return Graph::from_edges(n, list);
}

std::vector<Graph> connected_graphs(std::size_t n) {
  if (n > 7) throw std::invalid_argument("connected_graphs is capped at 7");
  const std::size_t pairs = n * (n - 1) / 2;
  std::vector<std::vector<std::size_t>> maps;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::size_t> map(pairs);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        map[edge_index(n, u, v)] = edge_index(n, perm[u], perm[v]);
      }
    }
    maps.push_back(std::move(map));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    // Keep a mask only when no relabeling gives a smaller one.
    bool canonical = true;
    for (const auto& map : maps) {
      std::uint64_t image = 0;
      for (std::size_t e = 0; e < pairs; ++e) {
        if ((mask >> e) & 1) image |= std::uint64_t{1} << map[e];
      }
      if (image < mask) {
        canonical = false;
        break;
      }
    }
    if (!canonical) continue;
    EdgeList edges;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if ((mask >> edge_index(n, u, v)) & 1) edges.emplace_back(u, v);
      }
    }
    if (connected(n, edges)) out.push_back(Graph::from_edges(n, edges));
  }
  return out;
}

Coloring coloring_from_mask(std::size_t n, std::uint64_t mask) {
  Coloring c(n);
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = (mask >> i) & 1 ? Color::kRed : Color::kBlue;
  }
  return c;
}

}  // namespace majill::testing
