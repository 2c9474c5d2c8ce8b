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

#include "majill/errors.h"
#include "majill/graph_io.h"
#include "test_support.h"

namespace majill {
namespace {

ParseError parse_failure(std::string_view text) {
  try {
    parse_graph_text(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError for: " << text;
  return ParseError(0, 0, "");
}

TEST(GraphIoTest, ParsesCommentsAndColors) {
  const GraphFile f = parse_graph_text(
      "# a path\n"
      "n 3   # three nodes\n"
      "colors RBR\n"
      "0 1\n"
      "\n"
      "1 2\n");
  EXPECT_EQ(f.graph, path_graph(3));
  ASSERT_TRUE(f.colors.has_value());
  EXPECT_EQ(to_string(*f.colors), "RBR");
  EXPECT_EQ(f.colored().red_count(), 2u);
}

TEST(GraphIoTest, MissingColorsLineOnColored) {
  const GraphFile f = parse_graph_text("n 2\n0 1\n");
  EXPECT_FALSE(f.colors.has_value());
  EXPECT_THROW(f.colored(), InvalidInput);
}

TEST(GraphIoTest, WriteIsFixedPoint) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 1 + seed % 12;
    const ColoredGraph cg(testing::random_graph(n, seed),
                          random_coloring(n, seed));
    const std::string text = write_colored_graph(cg);
    const GraphFile back = parse_graph_text(text);
    EXPECT_EQ(back.colored(), cg);
    EXPECT_EQ(write_colored_graph(back.colored()), text);
  }
}

TEST(GraphIoTest, WriteFormat) {
  EXPECT_EQ(write_graph(cycle_graph(3)), "n 3\n0 1\n0 2\n1 2\n");
  const ColoredGraph cg(path_graph(2), parse_coloring("RB"));
  EXPECT_EQ(write_colored_graph(cg), "n 2\ncolors RB\n0 1\n");
}

TEST(GraphIoTest, EmptyGraph) {
  const GraphFile f = parse_graph_text("n 0\ncolors\n");
  EXPECT_EQ(f.graph.size(), 0u);
  ASSERT_TRUE(f.colors.has_value());
  EXPECT_TRUE(f.colors->empty());
}

TEST(GraphIoTest, ReadFromStream) {
  std::istringstream in("n 2\n0 1\n");
  EXPECT_EQ(read_graph(in).graph.edge_count(), 1u);
}

TEST(GraphIoTest, ErrorPositions) {
  auto e = parse_failure("n 3\n0 1\n1 7\n");
  EXPECT_EQ(e.line(), 3u);
  EXPECT_EQ(e.column(), 3u);

  e = parse_failure("n 3\n  2 2\n");
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 3u);

  e = parse_failure("n 3\ncolors RXB\n");
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 9u);

  e = parse_failure("n 3\ncolors RB\n");
  EXPECT_EQ(e.line(), 2u);

  e = parse_failure("graph 3\n");
  EXPECT_EQ(e.line(), 1u);
  EXPECT_EQ(e.column(), 1u);

  e = parse_failure("n 3\n0 1\ncolors RRB\n");
  EXPECT_EQ(e.line(), 3u);

  e = parse_failure("n 3\n0 1 2\n");
  EXPECT_EQ(e.line(), 2u);

  e = parse_failure("n -1\n");
  EXPECT_EQ(e.line(), 1u);

  e = parse_failure("# nothing\n");
  EXPECT_NE(std::string(e.what()).find("header"), std::string::npos);
}

}  // namespace
}  // namespace majill
