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

#ifndef MAJILL_GRAPH_IO_H_
#define MAJILL_GRAPH_IO_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "majill/coloring.h"
#include "majill/graph.h"

namespace majill {

// Edge-list text format:
//
//   # comment
//   n 4
//   colors RRBB      (optional, only directly after the header)
//   0 1
//   1 2
//
// '#' starts a comment anywhere on a line. Writers emit the header, the
// optional colors line, then one "u v" line per edge with u < v in
// lexicographic order, so parse followed by write is a fixed point.
struct GraphFile {
  Graph graph;
  std::optional<Coloring> colors;

  // Throws InvalidInput when the file carries no colors line.
  ColoredGraph colored() const;
};

// Throws ParseError (with the 1-based line number) on malformed input,
// out-of-range ids and self-loops.
GraphFile parse_graph_text(std::string_view text);
GraphFile read_graph(std::istream& in);

std::string write_graph(const Graph& g);
std::string write_colored_graph(const ColoredGraph& cg);

}  // namespace majill

#endif  // MAJILL_GRAPH_IO_H_
