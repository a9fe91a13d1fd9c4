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

#ifndef BINSYM_RATIONAL_HPP_
#define BINSYM_RATIONAL_HPP_

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <string_view>

#include "binsym/errors.hpp"

namespace binsym {

// All problem data is exact: symmetry is a combinatorial property of the
// coefficients and would be unsound under floating point.  64-bit numerators
// and denominators are ample for the instance sizes this library targets.
using Rat = boost::rational<long long>;

inline std::string rational_to_string(const Rat& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" +
         std::to_string(value.denominator());
}

namespace detail {

inline long long parse_digits(std::string_view text, size_t& pos, int line,
                              int column) {
  if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
    throw ParseError("expected digits in numeric literal", line, column);
  long long value = 0;
  int count = 0;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    if (++count > 18)
      throw ParseError("numeric literal out of range", line, column);
    value = value * 10 + (text[pos] - '0');
    ++pos;
  }
  return value;
}

}  // namespace detail

// Parses a decimal rational: an optional sign, then "12", "1.5" or "3/4".
// Decimal fractions are converted exactly ("0.1" becomes 1/10).
inline Rat parse_rational(std::string_view text, int line = 0,
                          int column = 0) {
  size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  long long numerator = detail::parse_digits(text, pos, line, column);
  long long denominator = 1;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    size_t start = pos;
    long long fraction = detail::parse_digits(text, pos, line, column);
    for (size_t i = start; i < pos; ++i) {
      if (numerator > 922337203685477580LL)
        throw ParseError("numeric literal out of range", line, column);
      numerator *= 10;
      denominator *= 10;
    }
    numerator += fraction;
  } else if (pos < text.size() && text[pos] == '/') {
    ++pos;
    denominator = detail::parse_digits(text, pos, line, column);
    if (denominator == 0)
      throw ParseError("zero denominator in rational literal", line, column);
  }
  if (pos != text.size())
    throw ParseError("trailing characters in numeric literal", line, column);
  if (negative) numerator = -numerator;
  return Rat(numerator, denominator);
}

}  // namespace binsym

#endif  // BINSYM_RATIONAL_HPP_
