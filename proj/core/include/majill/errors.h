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

#ifndef MAJILL_ERRORS_H_
#define MAJILL_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace majill {

// Bad input supplied by a caller: out-of-range ids, malformed files,
// violated preconditions. The CLI maps these to exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An edge pair rejected while building a Graph.
class GraphError : public InvalidInput {
 public:
  enum class Kind { kSelfLoop, kOutOfRange };

  GraphError(Kind kind, std::size_t u, std::size_t v, const std::string& what)
      : InvalidInput(what), kind_(kind), pair_(u, v) {}

  Kind kind() const { return kind_; }
  std::pair<std::size_t, std::size_t> pair() const { return pair_; }

 private:
  Kind kind_;
  std::pair<std::size_t, std::size_t> pair_;
};

// Text-format or formula syntax error. `line` is 1-based (0 when the input is
// a single string); `column` is 1-based.
class ParseError : public InvalidInput {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : InvalidInput(format_message(line, column, msg)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format_message(std::size_t line, std::size_t column,
                            const std::string& msg) {
    std::string out = line > 0 ? "line " + std::to_string(line) + ", " : "";
    return out + "column " + std::to_string(column) + ": " + msg;
  }

  std::size_t line_;
  std::size_t column_;
};

// A named precondition of an operation does not hold. `code` is a stable
// machine-readable slug (e.g. "not-all-odd-degrees").
class PreconditionError : public InvalidInput {
 public:
  PreconditionError(std::string code, const std::string& msg)
      : InvalidInput(msg), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Exhaustive search requested above the configured node cap.
class CapExceeded : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// The requested object provably does not exist (e.g. no k-regular graph on n
// nodes carries the illusion). Exit code 1 at the CLI.
class Infeasible : public std::runtime_error {
 public:
  Infeasible(std::string code, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// A post-condition check failed. This is a defect, never a user error.
class InternalInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace majill

#endif  // MAJILL_ERRORS_H_
