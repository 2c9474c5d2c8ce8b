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

#include <string>
#include <utility>

#include "majill/errors.h"
#include "majill/gmjl.h"

namespace majill {

struct Formula::Node {
  Kind kind;
  std::string name;
  std::size_t index = 0;
  std::vector<Formula> children;
};

namespace {

int precedence(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::kImplies:
      return 1;
    case Formula::Kind::kOr:
      return 2;
    case Formula::Kind::kAnd:
      return 3;
    case Formula::Kind::kAtom:
      return 5;
    default:
      return 4;
  }
}

std::string prefix_token(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kNot:
      return "~";
    case Formula::Kind::kW:
      return "W ";
    case Formula::Kind::kM:
      return "M ";
    case Formula::Kind::kGW:
      return "GW ";
    case Formula::Kind::kGM:
      return "GM ";
    case Formula::Kind::kDiamond:
      return "<>" + std::to_string(f.index()) + " ";
    case Formula::Kind::kExists:
      return "E_" + std::to_string(f.index()) + " ";
    default:
      return "";
  }
}

std::string print(const Formula& f, int min_precedence) {
  std::string s;
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      s = f.name();
      break;
    case Formula::Kind::kAnd:
      s = print(f.child(0), 3) + " & " + print(f.child(1), 4);
      break;
    case Formula::Kind::kOr:
      s = print(f.child(0), 2) + " | " + print(f.child(1), 3);
      break;
    case Formula::Kind::kImplies:
      s = print(f.child(0), 2) + " -> " + print(f.child(1), 1);
      break;
    default:
      s = prefix_token(f) + print(f.child(0), 4);
      break;
  }
  return precedence(f.kind()) < min_precedence ? "(" + s + ")" : s;
}

}  // namespace

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::atom(std::string name) {
  if (name.empty()) throw InvalidInput("atom name is empty");
  return Formula(std::make_shared<const Node>(
      Node{Kind::kAtom, std::move(name), 0, {}}));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::kNot, {}, 0, {std::move(f)}}));
}

Formula Formula::disjunction(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::kOr, {}, 0, {std::move(a), std::move(b)}}));
}

Formula Formula::diamond(std::size_t n, Formula f) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::kDiamond, {}, n, {std::move(f)}}));
}

Formula Formula::w(Formula f) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::kW, {}, 0, {std::move(f)}}));
}

Formula Formula::exists(std::size_t n, Formula f) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::kExists, {}, n, {std::move(f)}}));
}

Formula Formula::gw(Formula f) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::kGW, {}, 0, {std::move(f)}}));
}

Formula Formula::conjunction(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::kAnd, {}, 0, {std::move(a), std::move(b)}}));
}

Formula Formula::implies(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::kImplies, {}, 0, {std::move(a), std::move(b)}}));
}

Formula Formula::m(Formula f) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::kM, {}, 0, {std::move(f)}}));
}

Formula Formula::gm(Formula f) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::kGM, {}, 0, {std::move(f)}}));
}

Formula::Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
std::size_t Formula::index() const { return node_->index; }
std::size_t Formula::arity() const { return node_->children.size(); }

const Formula& Formula::child(std::size_t i) const {
  if (i >= node_->children.size()) {
    throw InvalidInput("formula child index out of range");
  }
  return node_->children[i];
}

bool Formula::is_core() const {
  switch (kind()) {
    case Kind::kAnd:
    case Kind::kImplies:
    case Kind::kM:
    case Kind::kGM:
      return false;
    default:
      break;
  }
  for (const auto& c : node_->children) {
    if (!c.is_core()) return false;
  }
  return true;
}

Formula Formula::expand() const {
  switch (kind()) {
    case Kind::kAtom:
      return *this;
    case Kind::kNot:
      return negation(child(0).expand());
    case Kind::kOr:
      return disjunction(child(0).expand(), child(1).expand());
    case Kind::kDiamond:
      return diamond(index(), child(0).expand());
    case Kind::kW:
      return w(child(0).expand());
    case Kind::kExists:
      return exists(index(), child(0).expand());
    case Kind::kGW:
      return gw(child(0).expand());
    case Kind::kAnd:
      // a & b = ~(~a | ~b)
      return negation(disjunction(negation(child(0).expand()),
                                  negation(child(1).expand())));
    case Kind::kImplies:
      return disjunction(negation(child(0).expand()), child(1).expand());
    case Kind::kM:
      return negation(w(negation(child(0).expand())));
    case Kind::kGM:
      return negation(gw(negation(child(0).expand())));
  }
  throw InternalInvariantError("unknown formula kind");
}

std::set<std::string> Formula::atoms() const {
  if (kind() == Kind::kAtom) return {name()};
  std::set<std::string> out;
  for (const auto& c : node_->children) {
    auto sub = c.atoms();
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind() || name() != other.name() ||
      index() != other.index() || arity() != other.arity()) {
    return false;
  }
  for (std::size_t i = 0; i < arity(); ++i) {
    if (!(child(i) == other.child(i))) return false;
  }
  return true;
}

std::string to_string(const Formula& f) { return print(f, 0); }

std::string_view to_string(IllusionStatement s) {
  switch (s) {
    case IllusionStatement::kWeakMajorityOpposition:
      return "weak-majority-opposition";
    case IllusionStatement::kMajorityIllusion:
      return "majority-illusion";
    case IllusionStatement::kWeakMajorityIllusion:
      return "weak-majority-illusion";
    case IllusionStatement::kMajorityMajority:
      return "majority-majority";
    case IllusionStatement::kWeakMajorityMajority:
      return "weak-majority-majority";
    case IllusionStatement::kMajorityWeakMajority:
      return "majority-weak-majority";
    case IllusionStatement::kWeakMajorityWeakMajority:
      return "weak-majority-weak-majority";
  }
  return "";
}

std::optional<IllusionStatement> parse_illusion_statement(
    std::string_view name) {
  for (IllusionStatement s : kAllIllusionStatements) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

Formula illusion_formula(IllusionStatement s, const std::string& atom) {
  using F = Formula;
  const F p = F::atom(atom);
  const F np = F::negation(p);
  // (GM p & M ~p) | (GM ~p & M p)
  const F strict = F::disjunction(F::conjunction(F::gm(p), F::m(np)),
                                  F::conjunction(F::gm(np), F::m(p)));
  // (GW p & M ~p) | (GW ~p & M p) | ((W p & W ~p) & (GM p | GM ~p))
  const F weak = F::disjunction(
      F::disjunction(F::conjunction(F::gw(p), F::m(np)),
                     F::conjunction(F::gw(np), F::m(p))),
      F::conjunction(F::conjunction(F::w(p), F::w(np)),
                     F::disjunction(F::gm(p), F::gm(np))));
  switch (s) {
    case IllusionStatement::kWeakMajorityOpposition:
      return F::disjunction(F::conjunction(p, F::w(np)),
                            F::conjunction(np, F::w(p)));
    case IllusionStatement::kMajorityIllusion:
      return strict;
    case IllusionStatement::kWeakMajorityIllusion:
      return weak;
    case IllusionStatement::kMajorityMajority:
      return F::gm(strict);
    case IllusionStatement::kWeakMajorityMajority:
      return F::gw(strict);
    case IllusionStatement::kMajorityWeakMajority:
      return F::gm(weak);
    case IllusionStatement::kWeakMajorityWeakMajority:
      return F::gw(weak);
  }
  throw InvalidInput("unknown illusion statement");
}

}  // namespace majill
