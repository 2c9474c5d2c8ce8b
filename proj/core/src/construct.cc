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

#include "majill/construct.h"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>

#include "majill/analysis.h"
#include "majill/errors.h"
#include "majill/feasibility.h"

namespace majill {
namespace {

using i64 = long long;

std::size_t clamp0(i64 v) { return v < 0 ? 0 : static_cast<std::size_t>(v); }

struct OpenEnds {
  std::size_t red = 0;
  std::size_t blue = 0;
  bool overflow = false;
};

OpenEnds open_ends(const EdgeSet& edges, const ConstructionPlan& plan) {
  OpenEnds out;
  for (NodeId u = 0; u < plan.n; ++u) {
    const std::size_t d = edges.degree(u);
    if (d > plan.k) {
      out.overflow = true;
      continue;
    }
    (u < plan.n_red ? out.red : out.blue) += plan.k - d;
  }
  return out;
}

// Runs one stage, records its accounting, and turns a stage exception into
// a failed report row. Returns false when the stage failed.
bool run_stage(const std::string& name, EdgeSet& edges,
               const ConstructionPlan& plan, std::vector<StageReport>& stages,
               const std::function<void()>& body) {
  StageReport row;
  row.name = name;
  const std::size_t before = edges.edge_count();
  try {
    body();
  } catch (const InvalidInput& e) {
    row.ok = false;
    row.note = e.what();
  } catch (const InternalInvariantError& e) {
    row.ok = false;
    row.note = e.what();
  }
  row.edges_added = edges.edge_count() - before;
  const OpenEnds ends = open_ends(edges, plan);
  row.red_open_ends = ends.red;
  row.blue_open_ends = ends.blue;
  if (ends.overflow) {
    row.ok = false;
    if (row.note.empty()) row.note = "degree above k";
  }
  stages.push_back(row);
  return row.ok;
}

void link_or_throw(EdgeSet& edges, NodeId u, NodeId v, const char* stage) {
  if (!edges.insert(u, v)) {
    throw InternalInvariantError(std::string(stage) + ": edge (" +
                                 std::to_string(u) + ", " + std::to_string(v) +
                                 ") already present");
  }
}

// First node in `pool` other than `node`, not adjacent to it and below k.
NodeId first_open_partner(const EdgeSet& edges, std::span<const NodeId> pool,
                          NodeId node, std::size_t k, const char* stage) {
  for (NodeId v : pool) {
    if (v != node && !edges.contains(node, v) && edges.degree(v) < k) return v;
  }
  throw InternalInvariantError(std::string(stage) + ": no partner for node " +
                               std::to_string(node));
}

// The staged pipeline, verbatim apart from the documented collision scan.
// Returns the failure reason, or nothing on success.
std::optional<std::string> staged(const ConstructionPlan& plan, EdgeSet& edges,
                                  ConstructionReport& report) {
  const auto red = plan.red();
  const auto blue = plan.blue();
  const std::size_t k = plan.k;
  auto& stages = report.stages;
  auto failed = [&]() -> std::optional<std::string> {
    return stages.back().name + ": " + stages.back().note;
  };

  if (!run_stage("initial-edges", edges, plan, stages, [&] {
        report.shift_scans = add_initial_edges(edges, blue, red, k);
      })) {
    return failed();
  }
  if (!run_stage("extra-blue-edges", edges, plan, stages, [&] {
        add_extra_blue_edges(edges, blue, k, plan.k_blue);
      })) {
    return failed();
  }
  const bool odd_red = plan.k_red % 2 == 1 && plan.n_red % 2 == 1;
  if (!odd_red) {
    if (!run_stage("red-subgraph", edges, plan, stages,
                   [&] { add_regular_subgraph(edges, red, plan.k_red); })) {
      return failed();
    }
  }
  if (plan.k_blue % 2 == 0 || plan.n_blue % 2 == 0) {
    if (!run_stage("blue-subgraph", edges, plan, stages,
                   [&] { add_regular_subgraph(edges, blue, plan.k_blue); })) {
      return failed();
    }
  }
  if (odd_red) {
    if (!run_stage("red-subgraph", edges, plan, stages,
                   [&] { add_regular_subgraph(edges, red, plan.k_red - 1); })) {
      return failed();
    }
    if (plan.k_blue > 0 &&
        !run_stage("blue-subgraph", edges, plan, stages, [&] {
          add_regular_subgraph(edges, blue, plan.k_blue - 1);
        })) {
      return failed();
    }
    NodeId red_c = red.front();
    if (!run_stage("cross-pair", edges, plan, stages, [&] {
          NodeId blue_1 = blue.front();
          for (NodeId b : blue) {
            if (edges.degree(b) < edges.degree(blue_1)) blue_1 = b;
          }
          auto it = std::find_if(red.begin(), red.end(), [&](NodeId r) {
            return !edges.contains(blue_1, r);
          });
          if (it == red.end()) {
            throw InternalInvariantError("cross-pair: blue node " +
                                         std::to_string(blue_1) +
                                         " sees every red node");
          }
          red_c = *it;
          link_or_throw(edges, blue_1, red_c, "cross-pair");
          if (plan.k_blue > 0) {
            for (NodeId b : blue) {
              if (b == blue_1 || edges.degree(b) >= k) continue;
              link_or_throw(edges, b,
                            first_open_partner(edges, blue, b, k, "blue-pair"),
                            "blue-pair");
            }
          }
        })) {
      return failed();
    }
    if (!run_stage("red-pairing", edges, plan, stages, [&] {
          for (NodeId r : red) {
            if (r == red_c || edges.degree(r) >= k) continue;
            link_or_throw(edges, r,
                          first_open_partner(edges, red, r, k, "red-pair"),
                          "red-pair");
          }
        })) {
      return failed();
    }
  }
  return std::nullopt;
}

// Realizes a degree sequence on `nodes` by Havel-Hakimi. Nodes are assumed
// to have no edges among themselves yet.
void havel_hakimi(EdgeSet& edges, std::span<const NodeId> nodes,
                  std::vector<std::size_t> residual) {
  const std::size_t m = nodes.size();
  std::vector<std::size_t> order(m);
  for (;;) {
    for (std::size_t i = 0; i < m; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a,
                                                     std::size_t b) {
      return residual[a] > residual[b];
    });
    const std::size_t head = order[0];
    const std::size_t need = residual[head];
    if (need == 0) return;
    if (need >= m || residual[order[need]] == 0) {
      throw InternalInvariantError("degree sequence is not graphical");
    }
    for (std::size_t j = 1; j <= need; ++j) {
      link_or_throw(edges, nodes[head], nodes[order[j]], "havel-hakimi");
      --residual[order[j]];
    }
    residual[head] = 0;
  }
}

bool near_uniform_graphical(std::size_t count, i64 total) {
  if (total < 0 || total % 2 != 0) return false;
  if (count == 0) return total == 0;
  const i64 c = static_cast<i64>(count);
  return (total + c - 1) / c <= c - 1;
}

// Smallest red-blue edge count that leaves both classes with graphical,
// near-uniform residual sequences while every red node keeps a blue
// majority.
std::optional<std::size_t> cross_edge_count(const ConstructionPlan& plan) {
  const i64 nr = static_cast<i64>(plan.n_red);
  const i64 nb = static_cast<i64>(plan.n_blue);
  const i64 k = static_cast<i64>(plan.k);
  const i64 t = k / 2 + 1;
  const i64 hi = nr * std::min(k, nb);
  for (i64 e = nr * t; e <= hi; ++e) {
    if ((e + nb - 1) / nb > std::min(k, nr)) continue;
    if (!near_uniform_graphical(plan.n_red, nr * k - e)) continue;
    if (!near_uniform_graphical(plan.n_blue, nb * k - e)) continue;
    return static_cast<std::size_t>(e);
  }
  return std::nullopt;
}

bool degree_sequence(const ConstructionPlan& plan, EdgeSet& edges,
                     ConstructionReport& report) {
  const auto cross = cross_edge_count(plan);
  if (!cross) return false;
  const auto red = plan.red();
  const auto blue = plan.blue();
  const std::size_t e = *cross;
  const bool ok = run_stage("rebuild-cross-edges", edges, plan, report.stages, [&] {
    std::size_t slot = 0;
    for (std::size_t i = 0; i < red.size(); ++i) {
      const std::size_t d = e / red.size() + (i < e % red.size() ? 1 : 0);
      for (std::size_t j = 0; j < d; ++j, ++slot) {
        link_or_throw(edges, red[i], blue[slot % blue.size()], "cross-edges");
      }
    }
  });
  if (!ok) return true;
  auto residuals = [&](std::span<const NodeId> nodes) {
    std::vector<std::size_t> out;
    for (NodeId u : nodes) out.push_back(plan.k - edges.degree(u));
    return out;
  };
  run_stage("rebuild-red-subgraph", edges, plan, report.stages,
            [&] { havel_hakimi(edges, red, residuals(red)); }) &&
      run_stage("rebuild-blue-subgraph", edges, plan, report.stages,
                [&] { havel_hakimi(edges, blue, residuals(blue)); });
  return true;
}

Coloring plan_coloring(const ConstructionPlan& plan) {
  Coloring c(plan.n, Color::kBlue);
  std::fill_n(c.begin(), plan.n_red, Color::kRed);
  return c;
}

}  // namespace

std::vector<NodeId> ConstructionPlan::red() const {
  std::vector<NodeId> out(n_red);
  for (std::size_t i = 0; i < n_red; ++i) out[i] = i;
  return out;
}

std::vector<NodeId> ConstructionPlan::blue() const {
  std::vector<NodeId> out(n_blue);
  for (std::size_t i = 0; i < n_blue; ++i) out[i] = n_red + i;
  return out;
}

ConstructionPlan plan_construction(std::size_t n, std::size_t k) {
  if (n < 4) throw InvalidInput("construction needs at least 4 nodes");
  if (k >= n) throw InvalidInput("degree must be below n");
  if ((n * k) % 2 != 0) throw InvalidInput("k*n must be even");
  ConstructionPlan p;
  p.n = n;
  p.k = k;
  p.n_red = n / 2 + 1;
  p.n_blue = n - p.n_red;
  const i64 ki = static_cast<i64>(k);
  if (n % 2 == 0) {
    if (k % 2 == 0) {
      p.k_blue = clamp0(ki / 2 - 3);
      p.k_red = clamp0(ki / 2 - 1);
    } else {
      p.k_blue = clamp0((ki - 5) / 2);
      p.k_red = clamp0((ki - 1) / 2);
    }
  } else {
    p.k_blue = clamp0(ki / 2 - 2);
    p.k_red = clamp0((ki - 2) / 2);
  }
  return p;
}

EdgeSet::EdgeSet(std::size_t n) : adjacency_(n) {}

bool EdgeSet::contains(NodeId u, NodeId v) const {
  return adjacency_.at(u).count(v) != 0;
}

bool EdgeSet::insert(NodeId u, NodeId v) {
  if (u == v) throw InternalInvariantError("self-loop at " + std::to_string(u));
  if (!adjacency_.at(u).insert(v).second) return false;
  adjacency_.at(v).insert(u);
  ++edge_count_;
  return true;
}

Graph EdgeSet::to_graph() const {
  EdgeList list;
  list.reserve(edge_count_);
  for (NodeId u = 0; u < adjacency_.size(); ++u) {
    for (NodeId v : adjacency_[u]) {
      if (u < v) list.emplace_back(u, v);
    }
  }
  return Graph::from_edges(adjacency_.size(), list);
}

std::size_t add_initial_edges(EdgeSet& edges, std::span<const NodeId> blue,
                              std::span<const NodeId> red, std::size_t k) {
  if (blue.empty() || red.empty()) {
    throw InvalidInput("add_initial_edges needs red and blue nodes");
  }
  const std::size_t n_edges =
      k % 2 == 0 ? red.size() * (k + 2) / 2 : red.size() * (k + 1) / 2;
  std::size_t x = 0;
  std::size_t scans = 0;
  for (std::size_t i = 0; i < n_edges; ++i) {
    const NodeId r = red[i % red.size()];
    NodeId b = blue[(x + i) % blue.size()];
    if (edges.contains(r, b)) {
      x = 1;
      b = blue[(x + i) % blue.size()];
    }
    if (edges.contains(r, b)) {
      // The single shift is not enough here; take the next free blue node.
      ++scans;
      std::size_t step = 1;
      for (; step < blue.size(); ++step) {
        b = blue[(x + i + step) % blue.size()];
        if (!edges.contains(r, b)) break;
      }
      if (step == blue.size()) {
        throw InternalInvariantError("initial-edges: red node " +
                                     std::to_string(r) +
                                     " already sees every blue node");
      }
    }
    edges.insert(r, b);
  }
  return scans;
}

void add_extra_blue_edges(EdgeSet& edges, std::span<const NodeId> blue,
                          std::size_t k, std::size_t k_blue) {
  if (k_blue > k) throw InvalidInput("k_blue exceeds k");
  std::vector<NodeId> sorted(blue.begin(), blue.end());
  std::stable_sort(sorted.begin(), sorted.end(), [&](NodeId a, NodeId b) {
    return edges.degree(a) < edges.degree(b);
  });
  const std::size_t cap = k - k_blue;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const NodeId node = sorted[i];
    const NodeId next = sorted[(i + 1) % sorted.size()];
    if (node != next && !edges.contains(node, next) &&
        edges.degree(node) < cap && edges.degree(next) < cap) {
      edges.insert(node, next);
    }
  }
}

void add_regular_subgraph(EdgeSet& edges, std::span<const NodeId> nodes,
                          std::size_t k_sub) {
  const std::size_t m = nodes.size();
  if (k_sub == 0) return;
  if (k_sub >= m) {
    throw InvalidInput("regular subgraph degree " + std::to_string(k_sub) +
                       " needs more than " + std::to_string(m) + " nodes");
  }
  if (m % 2 == 1 && k_sub % 2 == 1) {
    throw InvalidInput("no " + std::to_string(k_sub) + "-regular graph on " +
                       std::to_string(m) + " nodes");
  }
  // Edges this call already placed may come up twice (once from each end);
  // only edges from earlier stages count as collisions.
  std::set<Edge> mine;
  auto put = [&](NodeId a, NodeId b) {
    const Edge e = std::minmax(a, b);
    if (mine.count(e)) return;
    if (!edges.insert(a, b)) {
      throw InternalInvariantError("regular-subgraph: edge (" +
                                   std::to_string(e.first) + ", " +
                                   std::to_string(e.second) +
                                   ") already present");
    }
    mine.insert(e);
  };
  const std::size_t r = k_sub / 2;
  for (std::size_t pos = 0; pos < m; ++pos) {
    const NodeId node = nodes[pos];
    if (m % 2 == 0) {
      const std::size_t start = pos + m / 2;
      if (k_sub % 2 == 1) put(node, nodes[start % m]);
      for (std::size_t i = 1; i <= r; ++i) {
        put(node, nodes[(start - i) % m]);
        put(node, nodes[(start + i) % m]);
      }
    } else {
      // start = pos + m/2 is a half integer: ceil(start - i) and
      // floor(start + i).
      for (std::size_t i = 1; i <= r; ++i) {
        put(node, nodes[(pos + (m + 1) / 2 - i) % m]);
        put(node, nodes[(pos + (m - 1) / 2 + i) % m]);
      }
    }
  }
}

ValidationReport validate_construction(const ColoredGraph& cg, std::size_t k,
                                       std::size_t n_red) {
  const Graph& g = cg.graph();
  ValidationReport v;
  v.simple = true;
  std::size_t ends = 0;
  for (NodeId u = 0; u < g.size(); ++u) {
    const auto nbrs = g.neighbors(u);
    ends += nbrs.size();
    for (std::size_t j = 0; j < nbrs.size(); ++j) {
      if (nbrs[j] == u || (j > 0 && nbrs[j - 1] >= nbrs[j])) v.simple = false;
    }
  }
  v.simple = v.simple && ends == 2 * g.edge_count();
  v.regular = g.is_regular(k);
  v.red_count_ok = cg.red_count() == n_red;
  v.every_red_misled = true;
  for (NodeId u = 0; u < g.size(); ++u) {
    if (cg.color(u) != Color::kRed) continue;
    const std::size_t blue = g.degree(u) - cg.red_neighbors(u);
    if (2 * blue <= k) v.every_red_misled = false;
  }
  v.majority_majority = classify_network(cg).majority_majority;
  return v;
}

Construction construct_regular_illusion_report(std::size_t n, std::size_t k) {
  const Verdict verdict = regular_exists(n, k);
  if (!verdict.possible) {
    const Reason& first = verdict.reasons.front();
    throw Infeasible(first.code, first.message);
  }
  ConstructionReport report;
  report.plan = plan_construction(n, k);
  report.method = "staged";
  const Coloring colors = plan_coloring(report.plan);

  EdgeSet edges(n);
  auto failure = staged(report.plan, edges, report);
  if (!failure) {
    ColoredGraph cg(edges.to_graph(), colors);
    report.validation = validate_construction(cg, k, report.plan.n_red);
    if (report.validation.ok()) return {std::move(cg), std::move(report)};
    failure = "staged output failed validation";
  }

  report.fallback = true;
  report.fallback_reason = *failure;
  report.method = "degree-sequence";
  EdgeSet rebuilt(n);
  if (!degree_sequence(report.plan, rebuilt, report)) {
    if (auto obstruction = regular_join_parity_obstruction(n, k)) {
      throw Infeasible(obstruction->code, obstruction->message);
    }
    throw InternalInvariantError("no degree split found for n=" +
                                 std::to_string(n) +
                                 ", k=" + std::to_string(k));
  }
  ColoredGraph cg(rebuilt.to_graph(), colors);
  report.validation = validate_construction(cg, k, report.plan.n_red);
  if (!report.validation.ok()) {
    throw InternalInvariantError("degree-sequence construction failed "
                                 "validation for n=" +
                                 std::to_string(n) + ", k=" + std::to_string(k));
  }
  return {std::move(cg), std::move(report)};
}

ColoredGraph construct_regular_illusion(std::size_t n, std::size_t k) {
  return construct_regular_illusion_report(n, k).graph;
}

Construction fast_construct_report(std::size_t n, std::size_t k) {
  if (n % 4 != 2) {
    throw PreconditionError("n-not-2-mod-4",
                            "the fast construction needs n = 2 (mod 4); with "
                            "n = 0 (mod 4) both classes have an odd size and "
                            "an odd residual degree");
  }
  if (n + 2 > 2 * k) {
    throw PreconditionError("n-above-2k-2", "the fast construction needs "
                                            "n <= 2k-2");
  }
  if (k % 2 != 0) {
    throw PreconditionError("k-odd", "the fast construction needs k even");
  }
  const Verdict verdict = regular_exists(n, k);
  if (!verdict.possible) {
    throw PreconditionError(verdict.reasons.front().code,
                            verdict.reasons.front().message);
  }
  ConstructionReport report;
  report.plan = plan_construction(n, k);
  report.plan.k_red = k - n / 2 + 1;
  report.plan.k_blue = k - n / 2 - 1;
  report.method = "fast";
  const auto red = report.plan.red();
  const auto blue = report.plan.blue();
  EdgeSet edges(n);
  const bool ok =
      run_stage("complete-bipartite", edges, report.plan, report.stages,
                [&] {
                  for (NodeId r : red) {
                    for (NodeId b : blue) edges.insert(r, b);
                  }
                }) &&
      run_stage("red-subgraph", edges, report.plan, report.stages,
                [&] { add_regular_subgraph(edges, red, report.plan.k_red); }) &&
      run_stage("blue-subgraph", edges, report.plan, report.stages,
                [&] { add_regular_subgraph(edges, blue, report.plan.k_blue); });
  ColoredGraph cg(edges.to_graph(), plan_coloring(report.plan));
  report.validation = validate_construction(cg, k, report.plan.n_red);
  if (!ok || !report.validation.ok()) {
    throw InternalInvariantError("fast construction failed validation for n=" +
                                 std::to_string(n) +
                                 ", k=" + std::to_string(k));
  }
  return {std::move(cg), std::move(report)};
}

ColoredGraph fast_construct(std::size_t n, std::size_t k) {
  return fast_construct_report(n, k).graph;
}

nlohmann::json to_json(const ConstructionReport& r) {
  nlohmann::json stages = nlohmann::json::array();
  for (const auto& s : r.stages) {
    stages.push_back({{"name", s.name},
                      {"edges_added", s.edges_added},
                      {"red_open_ends", s.red_open_ends},
                      {"blue_open_ends", s.blue_open_ends},
                      {"ok", s.ok},
                      {"note", s.note}});
  }
  const ValidationReport& v = r.validation;
  return {{"schema", "majill.construct/1"},
          {"n", r.plan.n},
          {"k", r.plan.k},
          {"plan",
           {{"n_red", r.plan.n_red},
            {"n_blue", r.plan.n_blue},
            {"k_red", r.plan.k_red},
            {"k_blue", r.plan.k_blue}}},
          {"method", r.method},
          {"fallback", r.fallback},
          {"fallback_reason", r.fallback_reason},
          {"shift_scans", r.shift_scans},
          {"stages", stages},
          {"validation",
           {{"simple", v.simple},
            {"regular", v.regular},
            {"red_count", v.red_count_ok},
            {"every_red_misled", v.every_red_misled},
            {"majority_majority", v.majority_majority},
            {"ok", v.ok()}}}};
}

}  // namespace majill
