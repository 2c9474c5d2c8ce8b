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

#include "majill/graph_io.h"

#include <charconv>
#include <istream>
#include <iterator>
#include <sstream>
#include <vector>

#include "majill/errors.h"

namespace majill {
namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' ||
                                 line[pos] == '\r')) {
      ++pos;
    }
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' &&
           line[pos] != '\r') {
      ++pos;
    }
    if (pos > start) out.push_back({line.substr(start, pos - start), start + 1});
  }
  return out;
}

std::size_t parse_count(const Token& tok, std::size_t line_no) {
  std::size_t value = 0;
  const char* end = tok.text.data() + tok.text.size();
  auto [ptr, ec] = std::from_chars(tok.text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line_no, tok.column,
                     "expected a nonnegative integer, got '" +
                         std::string(tok.text) + "'");
  }
  return value;
}

}  // namespace

ColoredGraph GraphFile::colored() const {
  if (!colors) throw InvalidInput("graph file has no colors line");
  return ColoredGraph(graph, *colors);
}

GraphFile parse_graph_text(std::string_view text) {
  std::optional<std::size_t> n;
  std::optional<Coloring> colors;
  EdgeList edges;
  std::size_t line_no = 0;
  std::size_t content_lines = 0;

  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(begin, end - begin);
    begin = end + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = tokenize(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    ++content_lines;

    if (!n) {
      if (tokens[0].text != "n" || tokens.size() != 2) {
        throw ParseError(line_no, tokens[0].column,
                         "expected header 'n <count>'");
      }
      n = parse_count(tokens[1], line_no);
      continue;
    }
    if (tokens[0].text == "colors") {
      const bool empty_ok = tokens.size() == 1 && *n == 0;
      if (content_lines != 2 || (tokens.size() != 2 && !empty_ok)) {
        throw ParseError(line_no, tokens[0].column,
                         "'colors <string>' must directly follow the header");
      }
      if (empty_ok) {
        colors = Coloring{};
        continue;
      }
      try {
        colors = parse_coloring(tokens[1].text);
      } catch (const ParseError& e) {
        throw ParseError(line_no, tokens[1].column + e.column() - 1,
                         "invalid color character (expected R or B)");
      }
      if (colors->size() != *n) {
        throw ParseError(line_no, tokens[1].column,
                         "colors string has " + std::to_string(colors->size()) +
                             " characters, expected " + std::to_string(*n));
      }
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError(line_no, tokens[0].column, "expected an edge 'u v'");
    }
    const std::size_t u = parse_count(tokens[0], line_no);
    const std::size_t v = parse_count(tokens[1], line_no);
    if (u >= *n || v >= *n) {
      throw ParseError(line_no, tokens[u >= *n ? 0 : 1].column,
                       "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                           ") references a node outside [0, " +
                           std::to_string(*n) + ")");
    }
    if (u == v) {
      throw ParseError(line_no, tokens[0].column,
                       "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                           ") is a self-loop");
    }
    edges.emplace_back(u, v);
    if (end == text.size()) break;
  }
  if (!n) throw ParseError(line_no, 0, "missing header 'n <count>'");
  return GraphFile{Graph::from_edges(*n, edges), std::move(colors)};
}

GraphFile read_graph(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in),
                   std::istreambuf_iterator<char>()};
  return parse_graph_text(text);
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.size() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

std::string write_colored_graph(const ColoredGraph& cg) {
  std::ostringstream out;
  out << "n " << cg.size() << "\n";
  out << "colors " << to_string(cg.colors()) << "\n";
  for (const auto& [u, v] : cg.graph().edges()) out << u << " " << v << "\n";
  return out.str();
}

}  // namespace majill
