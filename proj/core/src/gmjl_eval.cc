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

#include <cstdint>
#include <sstream>
#include <string>

#include "majill/errors.h"
#include "majill/gmjl.h"

namespace majill {
namespace {

using Extension = std::vector<bool>;

class Evaluator {
 public:
  explicit Evaluator(const Model& model) : model_(model), known_(model.atoms()) {}

  Extension eval(const Formula& f) {
    const Graph& g = model_.graph();
    const std::size_t n = g.size();
    Extension out(n, false);
    switch (f.kind()) {
      case Formula::Kind::kAtom: {
        if (!known_.count(f.name())) note_unknown(f.name());
        for (NodeId i = 0; i < n; ++i) out[i] = model_.holds(i, f.name());
        return out;
      }
      case Formula::Kind::kNot: {
        out = eval(f.child(0));
        out.flip();
        return out;
      }
      case Formula::Kind::kOr: {
        const Extension a = eval(f.child(0));
        const Extension b = eval(f.child(1));
        for (NodeId i = 0; i < n; ++i) out[i] = a[i] || b[i];
        return out;
      }
      case Formula::Kind::kDiamond:
      case Formula::Kind::kW: {
        const Extension a = eval(f.child(0));
        for (NodeId i = 0; i < n; ++i) {
          std::size_t hits = 0;
          for (NodeId j : g.neighbors(i)) hits += a[j] ? 1 : 0;
          out[i] = f.kind() == Formula::Kind::kDiamond
                       ? hits > f.index()
                       : 2 * hits >= g.degree(i);
        }
        return out;
      }
      case Formula::Kind::kExists:
      case Formula::Kind::kGW: {
        const Extension a = eval(f.child(0));
        std::size_t hits = 0;
        for (bool b : a) hits += b ? 1 : 0;
        const bool value = f.kind() == Formula::Kind::kExists
                               ? hits > f.index()
                               : 2 * hits >= n;
        out.assign(n, value);
        return out;
      }
      default:
        // Sugar is evaluated through its expansion so the duals hold by
        // construction.
        return eval(f.expand());
    }
  }

  std::vector<std::string> take_warnings() { return std::move(warnings_); }

 private:
  void note_unknown(const std::string& atom) {
    if (reported_.insert(atom).second) {
      warnings_.push_back("atom '" + atom +
                          "' does not occur in the model; treated as false");
    }
  }

  const Model& model_;
  std::set<std::string> known_;
  std::set<std::string> reported_;
  std::vector<std::string> warnings_;
};

}  // namespace

Model::Model(Graph graph, Valuation valuation)
    : graph_(std::move(graph)), valuation_(std::move(valuation)) {
  if (valuation_.size() != graph_.size()) {
    throw InvalidInput("valuation covers " + std::to_string(valuation_.size()) +
                       " nodes of " + std::to_string(graph_.size()));
  }
}

Model Model::from_coloring(const ColoredGraph& cg, const std::string& atom) {
  Valuation v(cg.size());
  for (NodeId i = 0; i < cg.size(); ++i) {
    if (cg.color(i) == Color::kRed) v[i].insert(atom);
  }
  return Model(cg.graph(), std::move(v));
}

bool Model::holds(NodeId i, const std::string& atom) const {
  return valuation_.at(i).count(atom) != 0;
}

std::set<std::string> Model::atoms() const {
  std::set<std::string> out;
  for (const auto& s : valuation_) out.insert(s.begin(), s.end());
  return out;
}

Valuation parse_valuation(std::istream& in, std::size_t n) {
  Valuation out(n);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::string first;
    if (!(words >> first)) continue;
    const std::size_t col = line.find(first) + 1;
    std::size_t node = 0;
    std::size_t used = 0;
    try {
      node = std::stoul(first, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != first.size() || first[0] == '-') {
      throw ParseError(line_no, col, "expected a node id, got '" + first + "'");
    }
    if (node >= n) {
      throw ParseError(line_no, col,
                       "node id " + first + " out of range for n=" +
                           std::to_string(n));
    }
    std::string atom;
    while (words >> atom) out[node].insert(atom);
  }
  return out;
}

Evaluation evaluate(const Model& model, const Formula& f) {
  Evaluator ev(model);
  Evaluation out;
  out.extension = ev.eval(f);
  out.warnings = ev.take_warnings();
  return out;
}

bool model_check(const Model& model, NodeId i, const Formula& f) {
  if (i >= model.size()) {
    throw InvalidInput("node id " + std::to_string(i) + " out of range");
  }
  return evaluate(model, f).extension[i];
}

bool model_check_global(const Model& model, const Formula& f) {
  for (bool b : evaluate(model, f).extension) {
    if (!b) return false;
  }
  return true;
}

bool formula_possible(const Graph& g, const Formula& f, const std::string& atom,
                      const OracleOptions& options) {
  for (const auto& a : f.atoms()) {
    if (a != atom) {
      throw InvalidInput("formula mentions atom '" + a + "' besides '" + atom +
                         "'");
    }
  }
  const std::size_t n = g.size();
  if (n > options.cap || n >= 63) {
    throw CapExceeded("graph has " + std::to_string(n) +
                      " nodes; the oracle cap is " + std::to_string(options.cap));
  }
  const Formula core = f.expand();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Valuation v(n);
    for (NodeId i = 0; i < n; ++i) {
      if ((mask >> i) & 1) v[i].insert(atom);
    }
    const Model model(g, std::move(v));
    Evaluator ev(model);
    for (bool b : ev.eval(core)) {
      if (b) return true;
    }
  }
  return false;
}

}  // namespace majill
