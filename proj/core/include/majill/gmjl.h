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

#ifndef MAJILL_GMJL_H_
#define MAJILL_GMJL_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "majill/coloring.h"
#include "majill/graph.h"
#include "majill/oracle.h"

namespace majill {

// Immutable formula tree of global majority logic. The core constructors are
// Atom, Not, Or, Diamond (more than n neighbors), W (at least half of the
// neighbors), Exists (more than n nodes) and GW (at least half of all nodes).
// And, Implies, M and GM are sugar that expand into the core.
class Formula {
 public:
  enum class Kind : std::uint8_t {
    kAtom,
    kNot,
    kOr,
    kDiamond,
    kW,
    kExists,
    kGW,
    kAnd,
    kImplies,
    kM,
    kGM,
  };

  static Formula atom(std::string name);
  static Formula negation(Formula f);
  static Formula disjunction(Formula a, Formula b);
  static Formula diamond(std::size_t n, Formula f);
  static Formula w(Formula f);
  static Formula exists(std::size_t n, Formula f);
  static Formula gw(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula m(Formula f);
  static Formula gm(Formula f);

  Kind kind() const;
  // Atom name; empty for other kinds.
  const std::string& name() const;
  // Index of Diamond and Exists; 0 for other kinds.
  std::size_t index() const;
  std::size_t arity() const;
  const Formula& child(std::size_t i) const;

  bool is_core() const;
  // Rewrites sugar into core constructors.
  Formula expand() const;
  std::set<std::string> atoms() const;

  // Structural equality.
  bool operator==(const Formula& other) const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

// Surface syntax: atoms are identifiers; prefix ~, W, M, GW, GM, <>n, E_n;
// infix & binds tighter than |, which binds tighter than the right-nested ->.
// The printer emits the fewest parentheses that parse back to the same tree.
std::string to_string(const Formula& f);
// Throws ParseError with the 1-based column of the offending token.
Formula parse_formula(std::string_view text);

using Valuation = std::vector<std::set<std::string>>;

class Model {
 public:
  // Throws InvalidInput when the valuation does not cover every node.
  Model(Graph graph, Valuation valuation);
  // Red nodes make `atom` true.
  static Model from_coloring(const ColoredGraph& cg, const std::string& atom = "p");

  const Graph& graph() const { return graph_; }
  std::size_t size() const { return graph_.size(); }
  bool holds(NodeId i, const std::string& atom) const;
  // Every atom true somewhere.
  std::set<std::string> atoms() const;

 private:
  Graph graph_;
  Valuation valuation_;
};

// Valuation text: '#' comments, one "node atom..." line per node; unlisted
// nodes make every atom false. Throws ParseError.
Valuation parse_valuation(std::istream& in, std::size_t n);

struct Evaluation {
  // Truth value at every node.
  std::vector<bool> extension;
  // One entry per atom the model never mentions.
  std::vector<std::string> warnings;
};

// Atoms the model never mentions are false everywhere and reported in
// Evaluation::warnings.
Evaluation evaluate(const Model& model, const Formula& f);
// Throws InvalidInput when i is out of range.
bool model_check(const Model& model, NodeId i, const Formula& f);
// True at every node.
bool model_check_global(const Model& model, const Formula& f);

enum class IllusionStatement : std::uint8_t {
  kWeakMajorityOpposition,
  kMajorityIllusion,
  kWeakMajorityIllusion,
  kMajorityMajority,
  kWeakMajorityMajority,
  kMajorityWeakMajority,
  kWeakMajorityWeakMajority,
};
inline constexpr IllusionStatement kAllIllusionStatements[] = {
    IllusionStatement::kWeakMajorityOpposition,
    IllusionStatement::kMajorityIllusion,
    IllusionStatement::kWeakMajorityIllusion,
    IllusionStatement::kMajorityMajority,
    IllusionStatement::kWeakMajorityMajority,
    IllusionStatement::kMajorityWeakMajority,
    IllusionStatement::kWeakMajorityWeakMajority,
};
std::string_view to_string(IllusionStatement s);
std::optional<IllusionStatement> parse_illusion_statement(std::string_view name);

// The single-atom formula expressing the statement, with `atom` for red.
Formula illusion_formula(IllusionStatement s, const std::string& atom = "p");

// Whether some valuation of `atom` makes f true at some node. Throws
// InvalidInput when f mentions another atom, CapExceeded when n > cap.
bool formula_possible(const Graph& g, const Formula& f,
                      const std::string& atom = "p",
                      const OracleOptions& options = {});

}  // namespace majill

#endif  // MAJILL_GMJL_H_
