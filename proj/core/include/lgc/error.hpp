// Copyright 2026 The lgcompile Authors.
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

#ifndef LGC_ERROR_HPP_
#define LGC_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lgc {

// Root of every error thrown by the library. Problems that are reported
// rather than thrown (validation items, suspects) never derive from this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed configuration or data file (bad rule line, unknown key, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Table file whose rows do not line up with its headings.
class RaggedRowError : public Error {
 public:
  RaggedRowError(std::size_t row, std::size_t got, std::size_t expected)
      : Error("row " + std::to_string(row) + " has " + std::to_string(got) +
              " cells, expected " + std::to_string(expected)),
        row_(row) {}
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

class DuplicateHeadingError : public Error {
 public:
  using Error::Error;
};

class LexError : public Error {
 public:
  using Error::Error;
};

// A heading mixing Greek and Latin look-alike letters inside a meta token.
class HomoglyphError : public LexError {
 public:
  using LexError::LexError;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class AmbiguityError : public ParseError {
 public:
  using ParseError::ParseError;
};

class CycleError : public Error {
 public:
  using Error::Error;
};

class MergeError : public Error {
 public:
  using Error::Error;
};

class UnknownConjunction : public Error {
 public:
  using Error::Error;
};

class ExtractError : public Error {
 public:
  using Error::Error;
};

class UnmatchedLabel : public ExtractError {
 public:
  using ExtractError::ExtractError;
};

// LGLex value that cannot be represented in the text or XML syntax.
class ValueError : public Error {
 public:
  using Error::Error;
};

class ValueContainsQuote : public ValueError {
 public:
  using ValueError::ValueError;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Broken internal invariant; the CLI maps it to exit status 3.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace lgc

#endif  // LGC_ERROR_HPP_
