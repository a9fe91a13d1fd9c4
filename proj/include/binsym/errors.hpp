// Copyright 2026 The binsym authors
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

#ifndef BINSYM_ERRORS_HPP_
#define BINSYM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace binsym {

// Base class for all binsym exceptions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sizes of two objects do not match (vector length, permutation degree, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// An operation was called in an incompatible mode, e.g. a signed generator
// passed to an unsigned orbit computation.
class ModeError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation was violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed.  Seeing this exception means a bug
// in the library, not in the caller.
class InternalError : public Error {
 public:
  using Error::Error;
};

// An enumeration or search was asked to exceed its hard work cap.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// Malformed input text.  Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line = 0, int column = 0)
      : Error(format(message, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& message, int line, int column) {
    if (line <= 0) return message;
    std::string where = "line " + std::to_string(line);
    if (column > 0) where += ", column " + std::to_string(column);
    return where + ": " + message;
  }

  int line_;
  int column_;
};

}  // namespace binsym

#endif  // BINSYM_ERRORS_HPP_
