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
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.h"
#include "majill/analysis.h"
#include "majill/graph_io.h"

namespace majill {
namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "majill");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliTest, GenCycle) {
  const Result r = run({"gen", "cycle", "4"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(parse_graph_text(r.out).graph, cycle_graph(4));
}

TEST(CliTest, GenCirculantAndBadFamily) {
  const Result r = run({"gen", "circulant", "6", "1", "3"});
  EXPECT_EQ(parse_graph_text(r.out).graph, circulant_graph(6, {1, 3}));
  EXPECT_EQ(run({"gen", "wheel", "6"}).code, cli::kUsage);
  EXPECT_EQ(run({"gen", "cycle", "2"}).code, cli::kUsage);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST(CliTest, ColorProducesIllusion) {
  const Result g = run({"gen", "cycle", "5"});
  const Result c = run({"color"}, g.out);
  ASSERT_EQ(c.code, cli::kOk);
  const auto cg = parse_graph_text(c.out).colored();
  EXPECT_TRUE(classify_network(cg).majority_weak_majority);

  const Result j = run({"color", "--format", "json", "--mode", "weak"}, g.out);
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc.at("schema"), "majill.color/1");
  EXPECT_EQ(doc.at("mode"), "weak");
}

TEST(CliTest, AnalyzeText) {
  const Result r = run({"analyze"}, "n 3\ncolors RBR\n0 1\n1 2\n");
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("flag majority-majority yes"), std::string::npos);
}

TEST(CliTest, AnalyzeParseErrorIsUsage) {
  const Result r = run({"analyze"}, "n 3\n0 x\n");
  EXPECT_EQ(r.code, cli::kUsage);
  EXPECT_NE(r.err.find("line 2, column 3"), std::string::npos);
}

TEST(CliTest, AnalyzeJsonWithThresholds) {
  const Result r = run({"analyze", "--format", "json", "--p", "1", "--q", "1/2"},
                       "n 4\ncolors RRBB\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NO_THROW(nlohmann::json::parse(r.out));
  EXPECT_NE(r.out.find("weak-p-weak-q"), std::string::npos);
}

TEST(CliTest, Feasible) {
  EXPECT_EQ(run({"feasible", "12", "6"}).code, cli::kOk);
  const Result r = run({"feasible", "6", "4"});
  EXPECT_EQ(r.code, cli::kNegative);
  EXPECT_EQ(run({"feasible", "12", "8"}).code, cli::kOk);
  EXPECT_EQ(run({"feasible", "12", "8", "--exact"}).code, cli::kNegative);
  EXPECT_EQ(run({"feasible", "5", "3"}).code, cli::kUsage);
}

TEST(CliTest, ConstructPipesIntoAnalyze) {
  const Result c = run({"construct", "12", "6"});
  ASSERT_EQ(c.code, cli::kOk);
  EXPECT_EQ(c.out.rfind("# stage-report ", 0), 0u);
  const auto cg = parse_graph_text(c.out).colored();
  EXPECT_TRUE(cg.graph().is_regular(6));
  const Result a = run({"analyze"}, c.out);
  EXPECT_NE(a.out.find("flag majority-majority yes"), std::string::npos);
}

TEST(CliTest, ConstructFailures) {
  EXPECT_EQ(run({"construct", "6", "4"}).code, cli::kNegative);
  const Result r = run({"construct", "12", "8"});
  EXPECT_EQ(r.code, cli::kNegative);
  EXPECT_EQ(run({"construct", "12", "6", "--fast"}).code, cli::kUsage);
  EXPECT_EQ(run({"construct", "10", "6", "--fast"}).code, cli::kOk);
}

TEST(CliTest, ConstructJson) {
  const Result r = run({"construct", "14", "4", "--format", "json"});
  ASSERT_EQ(r.code, cli::kOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc.at("report").at("schema"), "majill.construct/1");
  EXPECT_TRUE(doc.contains("graph"));
}

TEST(CliTest, Oracle) {
  const std::string k4 = run({"gen", "complete", "4"}).out;
  const Result r = run({"oracle", "--objective", "max-weak-illusion-count"}, k4);
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("score 4"), std::string::npos);
  EXPECT_NE(r.out.find("coloring BBRR"), std::string::npos);

  const std::string c5 = run({"gen", "cycle", "5"}).out;
  EXPECT_EQ(run({"oracle", "--possible", "weak-majority-majority"}, c5).code,
            cli::kNegative);
  EXPECT_EQ(run({"oracle", "--possible", "majority-weak-majority"}, c5).code,
            cli::kOk);
  EXPECT_EQ(run({"oracle", "--objective", "min-monochromatic", "--cap", "3"}, c5)
                .code,
            cli::kUsage);
}

TEST(CliTest, ModelCheck) {
  const std::string p3 = "n 3\ncolors RBR\n0 1\n1 2\n";
  EXPECT_EQ(run({"mc", "--preset", "majority-majority", "--global"}, p3).code,
            cli::kOk);
  EXPECT_EQ(run({"mc", "--formula", "p", "--node", "1"}, p3).code,
            cli::kNegative);
  EXPECT_EQ(run({"mc", "--formula", "M ~p", "--node", "0"}, p3).code, cli::kOk);
  EXPECT_EQ(run({"mc", "--formula", "(p", "--node", "0"}, p3).code, cli::kUsage);
  EXPECT_EQ(run({"mc", "--preset", "weak-majority-majority", "--possible"},
                run({"gen", "cycle", "5"}).out)
                .code,
            cli::kNegative);
}

}  // namespace
}  // namespace majill
