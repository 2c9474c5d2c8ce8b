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

#include <gtest/gtest.h>

#include <sstream>

#include "majill/analysis.h"
#include "majill/errors.h"
#include "majill/gmjl.h"
#include "test_support.h"

namespace majill {
namespace {

using F = Formula;

ParseError formula_failure(std::string_view text) {
  try {
    parse_formula(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError for: " << text;
  return ParseError(0, 0, "");
}

TEST(GmjlParseTest, Precedence) {
  const F p = F::atom("p");
  const F q = F::atom("q");
  EXPECT_EQ(parse_formula("p | q & p"),
            F::disjunction(p, F::conjunction(q, p)));
  EXPECT_EQ(parse_formula("p -> q -> p"),
            F::implies(p, F::implies(q, p)));
  EXPECT_EQ(parse_formula("~W p & q"),
            F::conjunction(F::negation(F::w(p)), q));
  EXPECT_EQ(parse_formula("<>2 E_0 p"), F::diamond(2, F::exists(0, p)));
  EXPECT_EQ(parse_formula("GM (p | q)"), F::gm(F::disjunction(p, q)));
  EXPECT_EQ(parse_formula("M ~p"), F::m(F::negation(p)));
  EXPECT_EQ(parse_formula("GW red_1"), F::gw(F::atom("red_1")));
}

TEST(GmjlParseTest, PrintRoundTrip) {
  const char* cases[] = {
      "p", "~p", "p & q | r", "(p | q) & r", "p -> q -> r", "(p -> q) -> r",
      "W ~p", "<>3 (p & q)", "E_1 M p", "GM (p -> q)", "~~GW p",
      "p & (q & r)"};
  for (const char* text : cases) {
    const F f = parse_formula(text);
    EXPECT_EQ(parse_formula(to_string(f)), f) << text;
  }
  EXPECT_EQ(to_string(parse_formula("(p | q) & r")), "(p | q) & r");
  EXPECT_EQ(to_string(parse_formula("p -> (q -> r)")), "p -> q -> r");
  EXPECT_EQ(to_string(parse_formula("<>2 ~ p")), "<>2 ~p");
}

TEST(GmjlParseTest, ErrorPositions) {
  auto e = formula_failure("(p & q");
  EXPECT_EQ(e.column(), 7u);
  EXPECT_NE(std::string(e.what()).find("missing ')'"), std::string::npos);
  e = formula_failure("p & $");
  EXPECT_EQ(e.column(), 5u);
  e = formula_failure("<>x p");
  EXPECT_EQ(e.column(), 3u);
  EXPECT_NE(std::string(e.what()).find("malformed index"), std::string::npos);
  e = formula_failure("E_ p");
  EXPECT_EQ(e.column(), 3u);
  e = formula_failure("p q");
  EXPECT_EQ(e.column(), 3u);
  e = formula_failure("p)");
  EXPECT_EQ(e.column(), 2u);
  e = formula_failure("");
  EXPECT_EQ(e.column(), 1u);
  e = formula_failure("p &");
  EXPECT_EQ(e.column(), 4u);
}

TEST(GmjlFormulaTest, CoreAndExpand) {
  const F f = parse_formula("M p & (p -> GM q)");
  EXPECT_FALSE(f.is_core());
  EXPECT_TRUE(f.expand().is_core());
  EXPECT_EQ(f.atoms(), (std::set<std::string>{"p", "q"}));
  EXPECT_EQ(parse_formula("M p").expand(), parse_formula("~W ~p"));
  EXPECT_EQ(parse_formula("p -> q").expand(), parse_formula("~p | q"));
}

ColoredGraph random_colored(std::uint64_t seed) {
  const std::size_t n = 1 + seed % 12;
  return ColoredGraph(testing::random_graph(n, seed), random_coloring(n, seed ^ 77));
}

// Direct counting semantics of each modality.
TEST(GmjlEvalTest, ModalitiesCount) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const ColoredGraph cg = random_colored(seed);
    const Model m = Model::from_coloring(cg);
    const Graph& g = cg.graph();
    const std::size_t n = g.size();
    const std::size_t reds = cg.red_count();
    for (std::size_t idx = 0; idx < 3; ++idx) {
      const auto dia = evaluate(m, F::diamond(idx, F::atom("p"))).extension;
      const auto ex = evaluate(m, F::exists(idx, F::atom("p"))).extension;
      for (NodeId i = 0; i < n; ++i) {
        EXPECT_EQ(dia[i], cg.red_neighbors(i) > idx);
        EXPECT_EQ(ex[i], reds > idx);
      }
    }
    const auto w = evaluate(m, parse_formula("W p")).extension;
    const auto mm = evaluate(m, parse_formula("M p")).extension;
    const auto gw = evaluate(m, parse_formula("GW p")).extension;
    const auto gm = evaluate(m, parse_formula("GM p")).extension;
    for (NodeId i = 0; i < n; ++i) {
      EXPECT_EQ(w[i], 2 * cg.red_neighbors(i) >= g.degree(i));
      EXPECT_EQ(mm[i], 2 * cg.red_neighbors(i) > g.degree(i));
      EXPECT_EQ(gw[i], 2 * reds >= n);
      EXPECT_EQ(gm[i], 2 * reds > n);
    }
  }
}

TEST(GmjlEvalTest, DualitiesAndMonotoneIndex) {
  const char* pairs[][2] = {
      {"M p", "~W ~p"}, {"GM p", "~GW ~p"}, {"p & q", "~(~p | ~q)"},
      {"p -> q", "~p | q"}};
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const ColoredGraph cg = random_colored(seed);
    Valuation v(cg.size());
    for (NodeId i = 0; i < cg.size(); ++i) {
      if (cg.color(i) == Color::kRed) v[i].insert("p");
      if ((i + seed) % 3 == 0) v[i].insert("q");
    }
    const Model m(cg.graph(), v);
    for (const auto& pr : pairs) {
      EXPECT_EQ(evaluate(m, parse_formula(pr[0])).extension,
                evaluate(m, parse_formula(pr[1])).extension);
    }
    for (std::size_t idx = 0; idx < 4; ++idx) {
      const auto hi = evaluate(m, F::diamond(idx + 1, F::atom("p"))).extension;
      const auto lo = evaluate(m, F::diamond(idx, F::atom("p"))).extension;
      for (NodeId i = 0; i < cg.size(); ++i) EXPECT_LE(hi[i], lo[i]);
    }
  }
}

TEST(GmjlEvalTest, IsolatedNodeWeakModality) {
  const Model m(make_graph(1, EdgeList{}), Valuation(1));
  EXPECT_TRUE(model_check(m, 0, parse_formula("W p")));
  EXPECT_TRUE(model_check(m, 0, parse_formula("W ~p")));
  EXPECT_FALSE(model_check(m, 0, parse_formula("M p")));
  EXPECT_THROW(model_check(m, 1, parse_formula("p")), InvalidInput);
}

TEST(GmjlEvalTest, UnknownAtomWarns) {
  const Model m = Model::from_coloring(
      ColoredGraph(path_graph(2), parse_coloring("RB")));
  const Evaluation e = evaluate(m, parse_formula("q | q"));
  EXPECT_EQ(e.extension, (std::vector<bool>{false, false}));
  EXPECT_EQ(e.warnings.size(), 1u);
}

// Illusion statements agree with the counting classifier.
TEST(GmjlEvalTest, IllusionFormulasMatchAnalysis) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const ColoredGraph cg = random_colored(seed);
    const Model m = Model::from_coloring(cg);
    const auto r = classify_network(cg);
    const auto ext = [&](IllusionStatement s) {
      return evaluate(m, illusion_formula(s)).extension;
    };
    const auto opp = ext(IllusionStatement::kWeakMajorityOpposition);
    const auto strict = ext(IllusionStatement::kMajorityIllusion);
    const auto weak = ext(IllusionStatement::kWeakMajorityIllusion);
    for (NodeId i = 0; i < cg.size(); ++i) {
      EXPECT_EQ(opp[i], r.agents[i].opposition != Level::kNone) << seed;
      EXPECT_EQ(strict[i], r.agents[i].illusion == Level::kStrict) << seed;
      EXPECT_EQ(weak[i], r.agents[i].illusion != Level::kNone) << seed;
    }
    EXPECT_EQ(model_check_global(m, illusion_formula(IllusionStatement::kMajorityMajority)),
              r.majority_majority);
    EXPECT_EQ(model_check_global(m, illusion_formula(IllusionStatement::kWeakMajorityMajority)),
              r.weak_majority_majority);
    EXPECT_EQ(model_check_global(m, illusion_formula(IllusionStatement::kMajorityWeakMajority)),
              r.majority_weak_majority);
    EXPECT_EQ(model_check_global(m, illusion_formula(IllusionStatement::kWeakMajorityWeakMajority)),
              r.weak_majority_weak_majority);
  }
}

TEST(GmjlEvalTest, StatementNames) {
  for (IllusionStatement s : kAllIllusionStatements) {
    EXPECT_EQ(parse_illusion_statement(to_string(s)), s);
  }
  EXPECT_EQ(to_string(illusion_formula(IllusionStatement::kWeakMajorityOpposition)),
            "p & W ~p | ~p & W p");
}

TEST(GmjlEvalTest, FormulaPossible) {
  EXPECT_FALSE(formula_possible(
      cycle_graph(5), illusion_formula(IllusionStatement::kWeakMajorityMajority)));
  EXPECT_TRUE(formula_possible(
      path_graph(5), illusion_formula(IllusionStatement::kMajorityMajority)));
  EXPECT_FALSE(formula_possible(cycle_graph(4), parse_formula("p & ~p")));
  EXPECT_THROW(formula_possible(cycle_graph(4), parse_formula("p | q")),
               InvalidInput);
  OracleOptions o;
  o.cap = 4;
  EXPECT_THROW(formula_possible(cycle_graph(5), parse_formula("p"), "p", o),
               CapExceeded);
}

TEST(GmjlValuationTest, Parse) {
  std::istringstream in("# header\n0 p q\n2 p\n\n");
  const Valuation v = parse_valuation(in, 3);
  EXPECT_EQ(v[0], (std::set<std::string>{"p", "q"}));
  EXPECT_TRUE(v[1].empty());
  EXPECT_EQ(v[2], (std::set<std::string>{"p"}));

  std::istringstream bad("0 p\n  5 q\n");
  try {
    parse_valuation(bad, 3);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
  std::istringstream word("x p\n");
  EXPECT_THROW(parse_valuation(word, 3), ParseError);
  EXPECT_THROW(Model(cycle_graph(3), Valuation(2)), InvalidInput);
}

}  // namespace
}  // namespace majill
