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

#include "majill/oracle.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <string>
#include <thread>

#include "majill/errors.h"

namespace majill {
namespace {

using Mask = std::uint32_t;

// Bit i of a mask set means node i is red.
struct Packed {
  std::size_t n = 0;
  std::vector<Mask> neighbors;
  std::vector<std::size_t> degree;
  EdgeList edges;
};

Packed pack(const Graph& g) {
  Packed p;
  p.n = g.size();
  p.neighbors.assign(p.n, 0);
  p.degree.assign(p.n, 0);
  for (NodeId i = 0; i < p.n; ++i) {
    for (NodeId j : g.neighbors(i)) p.neighbors[i] |= Mask{1} << j;
    p.degree[i] = g.degree(i);
  }
  p.edges = g.edges();
  return p;
}

struct Counts {
  std::size_t strict = 0;
  std::size_t any = 0;
};

Counts illusion_counts(const Packed& p, Mask mask) {
  const Winner global =
      majority_winner(static_cast<std::size_t>(std::popcount(mask)), p.n);
  Counts c;
  for (std::size_t i = 0; i < p.n; ++i) {
    const Winner local = majority_winner(
        static_cast<std::size_t>(std::popcount(p.neighbors[i] & mask)),
        p.degree[i]);
    if (local == global) continue;
    ++c.any;
    if (local != Winner::kTie && global != Winner::kTie) ++c.strict;
  }
  return c;
}

std::size_t monochromatic(const Packed& p, Mask mask) {
  std::size_t mono = 0;
  for (const auto& [u, v] : p.edges) {
    mono += (((mask >> u) ^ (mask >> v)) & 1) == 0 ? 1 : 0;
  }
  return mono;
}

bool flag_holds(NetworkIllusion kind, const Counts& c, std::size_t n) {
  switch (kind) {
    case NetworkIllusion::kMajorityMajority:
      return 2 * c.strict > n;
    case NetworkIllusion::kWeakMajorityMajority:
      return n > 0 && 2 * c.strict >= n;
    case NetworkIllusion::kMajorityWeakMajority:
      return 2 * c.any > n;
    case NetworkIllusion::kWeakMajorityWeakMajority:
      return n > 0 && 2 * c.any >= n;
    case NetworkIllusion::kUnanimityMajority:
      return n > 0 && c.strict == n;
    case NetworkIllusion::kUnanimityWeakMajority:
      return n > 0 && c.any == n;
  }
  return false;
}

// Sort key of the R/B string: node 0 is the most significant position and
// blue sorts first.
std::uint64_t lex_key(Mask mask, std::size_t n) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < n; ++i) {
    key = (key << 1) | ((mask >> i) & 1);
  }
  return key;
}

void check_cap(std::size_t n, const OracleOptions& options) {
  const std::size_t hard = 8 * sizeof(Mask) - 2;
  if (n > options.cap || n > hard) {
    throw CapExceeded("graph has " + std::to_string(n) +
                      " nodes; the oracle cap is " +
                      std::to_string(std::min(options.cap, hard)));
  }
}

unsigned worker_count(const OracleOptions& options, std::uint64_t total) {
  unsigned t = options.threads;
  if (t == 0) t = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t useful = std::max<std::uint64_t>(1, total / 4096);
  return static_cast<unsigned>(std::min<std::uint64_t>(t, useful));
}

// Splits [0, total) into contiguous chunks and runs body(lo, hi, slot).
template <typename Body>
void parallel_chunks(unsigned workers, std::uint64_t total, Body body) {
  if (workers <= 1) {
    body(0, total, 0u);
    return;
  }
  std::vector<std::thread> pool;
  const std::uint64_t step = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = std::min(total, w * step);
    const std::uint64_t hi = std::min(total, lo + step);
    pool.emplace_back(body, lo, hi, w);
  }
  for (auto& t : pool) t.join();
}

struct Candidate {
  std::size_t score = 0;
  std::uint64_t key = 0;
  Mask mask = 0;
  bool set = false;
};

bool better(const Candidate& a, const Candidate& b, Objective objective) {
  if (!b.set) return a.set;
  if (!a.set) return false;
  if (a.score != b.score) {
    return objective == Objective::kMinMonochromatic ? a.score < b.score
                                                     : a.score > b.score;
  }
  return a.key < b.key;
}

void enumerate_from(std::size_t u, std::size_t n, std::size_t k,
                    std::vector<std::size_t>& degree, EdgeList& edges,
                    const std::function<void(const Graph&)>& visit,
                    std::size_t& count);

// Picks the remaining edges of u among candidates v > u (starting at from).
void choose(std::size_t u, std::size_t from, std::size_t n, std::size_t k,
            std::vector<std::size_t>& degree, EdgeList& edges,
            const std::function<void(const Graph&)>& visit,
            std::size_t& count) {
  if (degree[u] == k) {
    enumerate_from(u + 1, n, k, degree, edges, visit, count);
    return;
  }
  if (n - from < k - degree[u]) return;
  for (std::size_t v = from; v < n; ++v) {
    if (degree[v] >= k) continue;
    ++degree[u];
    ++degree[v];
    edges.emplace_back(u, v);
    choose(u, v + 1, n, k, degree, edges, visit, count);
    edges.pop_back();
    --degree[u];
    --degree[v];
  }
}

void enumerate_from(std::size_t u, std::size_t n, std::size_t k,
                    std::vector<std::size_t>& degree, EdgeList& edges,
                    const std::function<void(const Graph&)>& visit,
                    std::size_t& count) {
  if (u == n) {
    ++count;
    if (visit) visit(Graph::from_edges(n, edges));
    return;
  }
  choose(u, u + 1, n, k, degree, edges, visit, count);
}

}  // namespace

std::string_view to_string(Objective objective) {
  switch (objective) {
    case Objective::kMaxStrictIllusionCount:
      return "max-strict-illusion-count";
    case Objective::kMaxWeakIllusionCount:
      return "max-weak-illusion-count";
    case Objective::kMinMonochromatic:
      return "min-monochromatic";
  }
  return "";
}

std::optional<Objective> parse_objective(std::string_view name) {
  for (Objective o :
       {Objective::kMaxStrictIllusionCount, Objective::kMaxWeakIllusionCount,
        Objective::kMinMonochromatic}) {
    if (to_string(o) == name) return o;
  }
  return std::nullopt;
}

BestColoring best_coloring(const Graph& g, Objective objective,
                           const OracleOptions& options) {
  check_cap(g.size(), options);
  const Packed p = pack(g);
  const std::uint64_t total = std::uint64_t{1} << p.n;
  const unsigned workers = worker_count(options, total);
  std::vector<Candidate> best(std::max(1u, workers));

  parallel_chunks(workers, total,
                  [&](std::uint64_t lo, std::uint64_t hi, unsigned slot) {
                    Candidate local;
                    for (std::uint64_t m = lo; m < hi; ++m) {
                      const Mask mask = static_cast<Mask>(m);
                      Candidate c;
                      c.set = true;
                      c.mask = mask;
                      c.key = lex_key(mask, p.n);
                      switch (objective) {
                        case Objective::kMaxStrictIllusionCount:
                          c.score = illusion_counts(p, mask).strict;
                          break;
                        case Objective::kMaxWeakIllusionCount:
                          c.score = illusion_counts(p, mask).any;
                          break;
                        case Objective::kMinMonochromatic:
                          c.score = monochromatic(p, mask);
                          break;
                      }
                      if (better(c, local, objective)) local = c;
                    }
                    best[slot] = local;
                  });

  Candidate winner;
  for (const auto& c : best) {
    if (better(c, winner, objective)) winner = c;
  }
  BestColoring out;
  out.score = winner.score;
  out.coloring.resize(p.n);
  for (std::size_t i = 0; i < p.n; ++i) {
    out.coloring[i] = (winner.mask >> i) & 1 ? Color::kRed : Color::kBlue;
  }
  return out;
}

bool illusion_possible(const Graph& g, NetworkIllusion kind,
                       const OracleOptions& options) {
  check_cap(g.size(), options);
  const Packed p = pack(g);
  const std::uint64_t total = std::uint64_t{1} << p.n;
  std::atomic<bool> found{false};
  parallel_chunks(worker_count(options, total), total,
                  [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
                    for (std::uint64_t m = lo; m < hi; ++m) {
                      if ((m & 1023) == 0 && found.load()) return;
                      if (flag_holds(kind,
                                     illusion_counts(p, static_cast<Mask>(m)),
                                     p.n)) {
                        found.store(true);
                        return;
                      }
                    }
                  });
  return found.load();
}

std::size_t enumerate_regular(std::size_t n, std::size_t k,
                              const std::function<void(const Graph&)>& visit) {
  if (n > kRegularEnumerationCap) {
    throw CapExceeded("regular graph enumeration is capped at " +
                      std::to_string(kRegularEnumerationCap) + " nodes");
  }
  if ((k * n) % 2 != 0 || (n > 0 && k >= n)) return 0;
  std::vector<std::size_t> degree(n, 0);
  EdgeList edges;
  std::size_t count = 0;
  enumerate_from(0, n, k, degree, edges, visit, count);
  return count;
}

}  // namespace majill
