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

#include "cli.h"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "majill/analysis.h"
#include "majill/coloring.h"
#include "majill/construct.h"
#include "majill/errors.h"
#include "majill/feasibility.h"
#include "majill/gmjl.h"
#include "majill/graph.h"
#include "majill/graph_io.h"
#include "majill/oracle.h"

namespace majill::cli {
namespace {

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool json = false;
};

std::string slurp(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path);
  if (!file) throw InvalidInput("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

GraphFile load(const std::string& path, std::istream& in) {
  return parse_graph_text(slurp(path, in));
}

void emit_json(const Io& io, const nlohmann::json& j) {
  io.out << j.dump(2) << "\n";
}

// --- gen ---------------------------------------------------------------

struct GenArgs {
  std::string family;
  std::size_t n = 0;
  std::vector<std::size_t> offsets;
};

int do_gen(const Io& io, const GenArgs& a) {
  Graph g;
  if (a.family == "cycle") {
    g = cycle_graph(a.n);
  } else if (a.family == "complete") {
    g = complete_graph(a.n);
  } else if (a.family == "circulant") {
    if (a.offsets.empty()) throw InvalidInput("circulant needs offsets");
    g = circulant_graph(a.n, {a.offsets.begin(), a.offsets.end()});
  } else if (a.family == "path") {
    g = path_graph(a.n);
  } else {
    throw InvalidInput("unknown family '" + a.family + "'");
  }
  io.out << write_graph(g);
  return kOk;
}

// --- color -------------------------------------------------------------

struct ColorArgs {
  std::string file;
  std::string mode = "illusion";
  std::optional<std::uint64_t> seed;
};

int do_color(const Io& io, const ColorArgs& a) {
  const Graph g = load(a.file, io.in).graph;
  nlohmann::json j{{"schema", "majill.color/1"}, {"mode", a.mode}};
  std::optional<ColoredGraph> result;
  if (a.mode == "weak") {
    Coloring start =
        a.seed ? random_coloring(g.size(), *a.seed) : uniform_coloring(g.size());
    WeakColoringRun run = weak_majority_2_coloring(g, std::move(start));
    j["swaps"] = run.swaps;
    j["monochromatic_trace"] = run.monochromatic_trace;
    result.emplace(g, std::move(run.coloring));
  } else if (a.mode == "illusion") {
    result.emplace(illusion_coloring(g));
  } else if (a.mode == "proper") {
    auto r = strict_illusion_from_proper(g);
    if (auto* fail = std::get_if<ProperSwapFailure>(&r)) {
      io.err << "majill: "
             << (*fail == ProperSwapFailure::kNotBipartite
                     ? "graph is not bipartite"
                     : "no node qualifies for the tie-breaking swap")
             << "\n";
      return kNegative;
    }
    auto& ok = std::get<ProperSwapResult>(r);
    j["swapped"] = ok.swapped ? nlohmann::json(*ok.swapped) : nlohmann::json();
    result.emplace(std::move(ok.colored));
  } else {
    throw InvalidInput("unknown mode '" + a.mode + "'");
  }
  if (io.json) {
    j["coloring"] = to_string(result->colors());
    j["monochromatic"] = monochromatic_count(*result).monochromatic;
    emit_json(io, j);
  } else {
    io.out << write_colored_graph(*result);
  }
  return kOk;
}

// --- analyze -----------------------------------------------------------

struct AnalyzeArgs {
  std::string file;
  std::string p;
  std::string q;
};

int do_analyze(const Io& io, const AnalyzeArgs& a) {
  const ColoredGraph cg = load(a.file, io.in).colored();
  const NetworkIllusionReport report = classify_network(cg);
  std::optional<PqReport> pq;
  if (!a.p.empty() || !a.q.empty()) {
    pq = pq_report(cg, Threshold::parse(a.p.empty() ? "1/2" : a.p),
                   Threshold::parse(a.q.empty() ? "1/2" : a.q));
  }
  if (io.json) {
    nlohmann::json j = to_json(report);
    if (pq) j["pq"] = to_json(*pq);
    emit_json(io, j);
  } else {
    io.out << to_text(report);
    if (pq) io.out << to_text(*pq);
  }
  return kOk;
}

// --- feasible ----------------------------------------------------------

struct FeasibleArgs {
  std::size_t n = 0;
  std::size_t k = 0;
  bool weak = false;
  bool exact = false;
};

int do_feasible(const Io& io, const FeasibleArgs& a) {
  Verdict v = a.weak ? regular_necessary(a.n, a.k, Strictness::kWeak)
              : a.exact ? regular_exists_exact(a.n, a.k)
                        : regular_exists(a.n, a.k);
  if (io.json) {
    nlohmann::json j = to_json(v);
    j["schema"] = "majill.feasible/1";
    j["n"] = a.n;
    j["k"] = a.k;
    j["illusion"] = a.weak ? "weak-majority-majority" : "majority-majority";
    emit_json(io, j);
  } else {
    io.out << (v.possible ? "possible" : "impossible") << "\n";
    for (const auto& r : v.reasons) {
      io.out << "reason " << r.code << ": " << r.message << "\n";
    }
  }
  return v.possible ? kOk : kNegative;
}

// --- construct ---------------------------------------------------------

struct ConstructArgs {
  std::size_t n = 0;
  std::size_t k = 0;
  bool fast = false;
  std::string report_path;
};

int do_construct(const Io& io, const ConstructArgs& a) {
  const Construction c = a.fast ? fast_construct_report(a.n, a.k)
                                : construct_regular_illusion_report(a.n, a.k);
  const nlohmann::json report = to_json(c.report);
  if (!a.report_path.empty()) {
    std::ofstream file(a.report_path);
    if (!file) throw InvalidInput("cannot write '" + a.report_path + "'");
    file << report.dump(2) << "\n";
  }
  if (io.json) {
    emit_json(io, {{"report", report}, {"graph", write_colored_graph(c.graph)}});
  } else {
    io.out << "# stage-report " << report.dump() << "\n"
           << write_colored_graph(c.graph);
  }
  return kOk;
}

// --- oracle ------------------------------------------------------------

struct OracleArgs {
  std::string file;
  std::string objective = "max-strict-illusion-count";
  std::string possible;
  std::size_t cap = kDefaultOracleCap;
  unsigned threads = 0;
};

int do_oracle(const Io& io, const OracleArgs& a) {
  const Graph g = load(a.file, io.in).graph;
  OracleOptions options;
  options.cap = a.cap;
  options.threads = a.threads;
  if (!a.possible.empty()) {
    const auto kind = parse_network_illusion(a.possible);
    if (!kind) throw InvalidInput("unknown illusion '" + a.possible + "'");
    const bool yes = illusion_possible(g, *kind, options);
    if (io.json) {
      emit_json(io, {{"schema", "majill.oracle/1"},
                     {"illusion", a.possible},
                     {"possible", yes}});
    } else {
      io.out << a.possible << " " << (yes ? "possible" : "impossible") << "\n";
    }
    return yes ? kOk : kNegative;
  }
  const auto objective = parse_objective(a.objective);
  if (!objective) throw InvalidInput("unknown objective '" + a.objective + "'");
  const BestColoring best = best_coloring(g, *objective, options);
  if (io.json) {
    emit_json(io, {{"schema", "majill.oracle/1"},
                   {"objective", a.objective},
                   {"score", best.score},
                   {"coloring", to_string(best.coloring)}});
  } else {
    io.out << "objective " << a.objective << "\n"
           << "score " << best.score << "\n"
           << "coloring " << to_string(best.coloring) << "\n";
  }
  return kOk;
}

// --- mc ----------------------------------------------------------------

struct McArgs {
  std::string file;
  std::string valuation;
  std::string formula;
  std::string preset;
  std::string atom = "p";
  std::optional<std::size_t> node;
  bool global = false;
  bool possible = false;
};

int do_mc(const Io& io, const McArgs& a) {
  if (a.formula.empty() == a.preset.empty()) {
    throw InvalidInput("give exactly one of --formula and --preset");
  }
  Formula f = Formula::atom(a.atom);
  if (!a.preset.empty()) {
    const auto s = parse_illusion_statement(a.preset);
    if (!s) throw InvalidInput("unknown preset '" + a.preset + "'");
    f = illusion_formula(*s, a.atom);
  } else {
    f = parse_formula(a.formula);
  }
  const GraphFile file = load(a.file, io.in);
  nlohmann::json j{{"schema", "majill.mc/1"}, {"formula", to_string(f)}};

  bool value = false;
  if (a.possible) {
    value = formula_possible(file.graph, f, a.atom);
    j["possible"] = value;
  } else {
    if (a.node.has_value() == a.global) {
      throw InvalidInput("give exactly one of --node and --global");
    }
    std::optional<Model> model;
    if (!a.valuation.empty()) {
      std::ifstream vin(a.valuation);
      if (!vin) throw InvalidInput("cannot open '" + a.valuation + "'");
      model.emplace(file.graph, parse_valuation(vin, file.graph.size()));
    } else {
      model.emplace(Model::from_coloring(file.colored(), a.atom));
    }
    const Evaluation ev = evaluate(*model, f);
    for (const auto& w : ev.warnings) io.err << "majill: warning: " << w << "\n";
    if (a.global) {
      value = model_check_global(*model, f);
      j["global"] = true;
    } else {
      value = model_check(*model, *a.node, f);
      j["node"] = *a.node;
    }
    j["value"] = value;
    j["warnings"] = ev.warnings;
  }
  if (io.json) {
    emit_json(io, j);
  } else {
    io.out << (value ? "true" : "false") << "\n";
  }
  return value ? kOk : kNegative;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Detect, construct and certify majority illusions on 2-colored "
               "graphs."};
  app.name("majill");
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));

  std::function<int(const Io&)> action;

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a graph file");
  gen_cmd->add_option("family", gen.family, "cycle, complete, circulant or path")
      ->required()
      ->check(CLI::IsMember({"cycle", "complete", "circulant", "path"}));
  gen_cmd->add_option("n", gen.n, "Number of nodes")->required();
  gen_cmd->add_option("offsets", gen.offsets, "Circulant offsets");
  gen_cmd->callback([&] { action = [&](const Io& io) { return do_gen(io, gen); }; });

  ColorArgs color;
  auto* color_cmd = app.add_subcommand("color", "Color a graph");
  color_cmd->add_option("file", color.file, "Graph file (default stdin)");
  color_cmd->add_option("--mode", color.mode, "weak, illusion or proper")
      ->check(CLI::IsMember({"weak", "illusion", "proper"}));
  color_cmd->add_option("--seed", color.seed,
                        "Random initial coloring for --mode weak");
  color_cmd->callback(
      [&] { action = [&](const Io& io) { return do_color(io, color); }; });

  AnalyzeArgs analyze;
  auto* analyze_cmd =
      app.add_subcommand("analyze", "Agent table and network report");
  analyze_cmd->add_option("file", analyze.file, "Colored graph file");
  analyze_cmd->add_option("--p", analyze.p, "Fraction of agents, e.g. 1/2");
  analyze_cmd->add_option("--q", analyze.q, "Local threshold, e.g. 1/2");
  analyze_cmd->callback(
      [&] { action = [&](const Io& io) { return do_analyze(io, analyze); }; });

  FeasibleArgs feasible;
  auto* feasible_cmd = app.add_subcommand(
      "feasible", "Can a k-regular graph on n nodes carry the illusion?");
  feasible_cmd->add_option("n", feasible.n)->required();
  feasible_cmd->add_option("k", feasible.k)->required();
  auto* weak_flag = feasible_cmd->add_flag(
      "--weak", feasible.weak, "Weak-majority-majority necessary conditions");
  feasible_cmd
      ->add_flag("--exact", feasible.exact,
                 "Include the join-parity obstruction")
      ->excludes(weak_flag);
  feasible_cmd->callback(
      [&] { action = [&](const Io& io) { return do_feasible(io, feasible); }; });

  ConstructArgs construct;
  auto* construct_cmd = app.add_subcommand(
      "construct", "Build a k-regular graph with a majority-majority illusion");
  construct_cmd->add_option("n", construct.n)->required();
  construct_cmd->add_option("k", construct.k)->required();
  construct_cmd->add_flag("--fast", construct.fast,
                          "Complete bipartite core variant");
  construct_cmd->add_option("--report", construct.report_path,
                            "Also write the stage report to this file");
  construct_cmd->callback([&] {
    action = [&](const Io& io) { return do_construct(io, construct); };
  });

  OracleArgs oracle;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "Exhaustive search over all colorings");
  oracle_cmd->add_option("file", oracle.file, "Graph file");
  auto* objective_opt =
      oracle_cmd
          ->add_option("--objective", oracle.objective,
                       "max-strict-illusion-count, max-weak-illusion-count "
                       "or min-monochromatic")
          ->check(CLI::IsMember({"max-strict-illusion-count",
                                 "max-weak-illusion-count",
                                 "min-monochromatic"}));
  oracle_cmd
      ->add_option("--possible", oracle.possible,
                   "Network illusion to decide instead of optimizing")
      ->excludes(objective_opt);
  oracle_cmd->add_option("--cap", oracle.cap, "Largest n to enumerate");
  oracle_cmd->add_option("--threads", oracle.threads, "Workers (0 = all cores)");
  oracle_cmd->callback(
      [&] { action = [&](const Io& io) { return do_oracle(io, oracle); }; });

  McArgs mc;
  auto* mc_cmd = app.add_subcommand("mc", "Model-check a formula");
  mc_cmd->add_option("file", mc.file, "Colored graph file, or a graph file "
                                      "with --valuation");
  mc_cmd->add_option("--valuation", mc.valuation, "Valuation file");
  mc_cmd->add_option("--formula", mc.formula, "Formula text");
  mc_cmd->add_option("--preset", mc.preset, "Named illusion statement");
  mc_cmd->add_option("--atom", mc.atom, "Atom standing for red");
  mc_cmd->add_option("--node", mc.node, "Evaluate at this node");
  mc_cmd->add_flag("--global", mc.global, "Require truth at every node");
  mc_cmd->add_flag("--possible", mc.possible,
                   "Search all valuations of the atom instead");
  mc_cmd->callback([&] { action = [&](const Io& io) { return do_mc(io, mc); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  const Io io{in, out, err, format == "json"};
  try {
    return action(io);
  } catch (const Infeasible& e) {
    err << "majill: infeasible (" << e.code() << "): " << e.what() << "\n";
    return kNegative;
  } catch (const InvalidInput& e) {
    err << "majill: " << e.what() << "\n";
    return kUsage;
  } catch (const InternalInvariantError& e) {
    err << "majill: internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    err << "majill: internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace majill::cli
