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

#include <cctype>
#include <charconv>
#include <string>
#include <vector>

#include "majill/errors.h"
#include "majill/gmjl.h"

namespace majill {
namespace {

enum class Tok {
  kIdent,
  kNot,
  kW,
  kM,
  kGW,
  kGM,
  kDiamond,
  kExists,
  kAnd,
  kOr,
  kImplies,
  kLParen,
  kRParen,
  kEnd,
};

struct Token {
  Tok tok;
  std::string text;
  std::size_t index = 0;
  std::size_t column = 0;  // 1-based
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::size_t parse_index(std::string_view digits, std::size_t column) {
  std::size_t value = 0;
  const auto* end = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(digits.data(), end, value);
  if (digits.empty() || ec != std::errc() || ptr != end) {
    throw ParseError(0, column, "malformed index '" + std::string(digits) + "'");
  }
  return value;
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    const std::size_t col = pos + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    switch (c) {
      case '~':
        out.push_back({Tok::kNot, "~", 0, col});
        ++pos;
        continue;
      case '&':
        out.push_back({Tok::kAnd, "&", 0, col});
        ++pos;
        continue;
      case '|':
        out.push_back({Tok::kOr, "|", 0, col});
        ++pos;
        continue;
      case '(':
        out.push_back({Tok::kLParen, "(", 0, col});
        ++pos;
        continue;
      case ')':
        out.push_back({Tok::kRParen, ")", 0, col});
        ++pos;
        continue;
      default:
        break;
    }
    if (text.substr(pos, 2) == "->") {
      out.push_back({Tok::kImplies, "->", 0, col});
      pos += 2;
      continue;
    }
    if (text.substr(pos, 2) == "<>") {
      std::size_t end = pos + 2;
      while (end < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[end]))) {
        ++end;
      }
      const auto digits = text.substr(pos + 2, end - pos - 2);
      out.push_back(
          {Tok::kDiamond, std::string(text.substr(pos, end - pos)),
           parse_index(digits, col + 2), col});
      pos = end;
      continue;
    }
    if (ident_char(c) && !std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = pos;
      while (end < text.size() && ident_char(text[end])) ++end;
      const std::string word(text.substr(pos, end - pos));
      pos = end;
      if (word == "W") {
        out.push_back({Tok::kW, word, 0, col});
      } else if (word == "M") {
        out.push_back({Tok::kM, word, 0, col});
      } else if (word == "GW") {
        out.push_back({Tok::kGW, word, 0, col});
      } else if (word == "GM") {
        out.push_back({Tok::kGM, word, 0, col});
      } else if (word.rfind("E_", 0) == 0) {
        out.push_back({Tok::kExists, word,
                       parse_index(std::string_view(word).substr(2), col + 2),
                       col});
      } else {
        out.push_back({Tok::kIdent, word, 0, col});
      }
      continue;
    }
    throw ParseError(0, col, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::kEnd, "", 0, text.size() + 1});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula parse() {
    Formula f = implication();
    if (peek().tok != Tok::kEnd) {
      fail(peek().tok == Tok::kRParen ? "unbalanced ')'"
                                      : "unexpected '" + peek().text + "'");
    }
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(0, peek().column, msg);
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (peek().tok == Tok::kImplies) {
      take();
      return Formula::implies(std::move(lhs), implication());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    while (peek().tok == Tok::kOr) {
      take();
      lhs = Formula::disjunction(std::move(lhs), conjunction());
    }
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = unary();
    while (peek().tok == Tok::kAnd) {
      take();
      lhs = Formula::conjunction(std::move(lhs), unary());
    }
    return lhs;
  }

  Formula unary() {
    const Token& t = peek();
    switch (t.tok) {
      case Tok::kNot:
        take();
        return Formula::negation(unary());
      case Tok::kW:
        take();
        return Formula::w(unary());
      case Tok::kM:
        take();
        return Formula::m(unary());
      case Tok::kGW:
        take();
        return Formula::gw(unary());
      case Tok::kGM:
        take();
        return Formula::gm(unary());
      case Tok::kDiamond: {
        const std::size_t n = take().index;
        return Formula::diamond(n, unary());
      }
      case Tok::kExists: {
        const std::size_t n = take().index;
        return Formula::exists(n, unary());
      }
      default:
        return primary();
    }
  }

  Formula primary() {
    const Token& t = peek();
    if (t.tok == Tok::kIdent) return Formula::atom(take().text);
    if (t.tok == Tok::kLParen) {
      take();
      Formula inner = implication();
      if (peek().tok != Tok::kRParen) {
        fail(peek().tok == Tok::kEnd ? "unbalanced '(': missing ')'"
                                     : "expected ')' before '" + peek().text +
                                           "'");
      }
      take();
      return inner;
    }
    if (t.tok == Tok::kEnd) fail("unexpected end of formula");
    fail("expected a formula before '" + t.text + "'");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) {
  return Parser(lex(text)).parse();
}

}  // namespace majill
