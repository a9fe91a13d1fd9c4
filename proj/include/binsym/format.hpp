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

#ifndef BINSYM_FORMAT_HPP_
#define BINSYM_FORMAT_HPP_

#include <json.hpp>

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "binsym/errors.hpp"
#include "binsym/permutation.hpp"
#include "binsym/problem.hpp"
#include "binsym/symmetry.hpp"

namespace binsym {

// --- Problem documents -------------------------------------------------------
//
// Plain-text format, one statement per line, '#' starts a comment:
//
//   problem cover6
//   binary x1 x2 x3 x4 x5 x6
//   min: x1 + 2 x2 + 3 x3 + 3 x4 + x5 + 2 x6
//   x1 + x3 >= 1
//   x2 + x4 >= 1
//
// All numerals are exact decimal rationals ("1.5") or explicit fractions
// ("3/2").  Greater-equal rows are normalized to less-equal at parse time;
// equality rows are kept.  A mirrored JSON form is accepted as well and is
// recognized by a leading '{'.

namespace detail {

enum class TokenKind : uint8_t {
  kIdent,
  kNumber,
  kPlus,
  kMinus,
  kStar,
  kSlash,
  kLe,
  kGe,
  kEq,
  kColon,
  kEnd,
};

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;
  int column = 0;  // 1-based
};

inline bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '~';
}

inline bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '~';
}

inline std::vector<Token> tokenize_line(const std::string& line,
                                        int line_number) {
  std::vector<Token> tokens;
  size_t pos = 0;
  while (pos < line.size()) {
    const char c = line[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c == '#') break;
    Token token;
    token.column = static_cast<int>(pos) + 1;
    if (ident_start(c)) {
      size_t end = pos;
      while (end < line.size() && ident_char(line[end])) ++end;
      token.kind = TokenKind::kIdent;
      token.text = line.substr(pos, end - pos);
      pos = end;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t end = pos;
      while (end < line.size() &&
             (std::isdigit(static_cast<unsigned char>(line[end])) ||
              line[end] == '.'))
        ++end;
      token.kind = TokenKind::kNumber;
      token.text = line.substr(pos, end - pos);
      pos = end;
    } else if (c == '+') {
      token.kind = TokenKind::kPlus;
      ++pos;
    } else if (c == '-') {
      token.kind = TokenKind::kMinus;
      ++pos;
    } else if (c == '*') {
      token.kind = TokenKind::kStar;
      ++pos;
    } else if (c == '/') {
      token.kind = TokenKind::kSlash;
      ++pos;
    } else if (c == ':') {
      token.kind = TokenKind::kColon;
      ++pos;
    } else if (c == '<' && pos + 1 < line.size() && line[pos + 1] == '=') {
      token.kind = TokenKind::kLe;
      pos += 2;
    } else if (c == '>' && pos + 1 < line.size() && line[pos + 1] == '=') {
      token.kind = TokenKind::kGe;
      pos += 2;
    } else if (c == '=') {
      token.kind = TokenKind::kEq;
      ++pos;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'",
                       line_number, static_cast<int>(pos) + 1);
    }
    tokens.push_back(std::move(token));
  }
  Token end;
  end.column = static_cast<int>(line.size()) + 1;
  tokens.push_back(end);
  return tokens;
}

// Linear expression: variable terms plus a constant.
struct LinearExpr {
  std::vector<std::pair<int, Rat>> terms;
  Rat constant{0};
};

class ExprParser {
 public:
  ExprParser(const std::vector<Token>& tokens, size_t pos,
             const std::map<std::string, int>& variables, int line)
      : tokens_(tokens), pos_(pos), variables_(variables), line_(line) {}

  size_t position() const { return pos_; }

  const Token& peek() const { return tokens_[pos_]; }

  // Parses until a sense token or end of line.
  LinearExpr parse() {
    LinearExpr expr;
    bool first = true;
    while (true) {
      const TokenKind kind = peek().kind;
      if (kind == TokenKind::kEnd || kind == TokenKind::kLe ||
          kind == TokenKind::kGe || kind == TokenKind::kEq)
        break;
      int sign = 1;
      if (kind == TokenKind::kPlus || kind == TokenKind::kMinus) {
        sign = kind == TokenKind::kMinus ? -1 : 1;
        ++pos_;
      } else if (!first) {
        throw ParseError("expected '+' or '-' between terms", line_,
                         peek().column);
      }
      parse_term(expr, sign);
      first = false;
    }
    if (first)
      throw ParseError("empty expression", line_, peek().column);
    return expr;
  }

 private:
  void parse_term(LinearExpr& expr, int sign) {
    Rat coefficient(sign);
    bool saw_number = false;
    if (peek().kind == TokenKind::kNumber) {
      coefficient *= parse_number();
      saw_number = true;
      if (peek().kind == TokenKind::kStar) ++pos_;
    }
    if (peek().kind == TokenKind::kIdent) {
      const Token& token = peek();
      auto it = variables_.find(token.text);
      if (it == variables_.end())
        throw ParseError("unknown variable '" + token.text + "'", line_,
                         token.column);
      expr.terms.emplace_back(it->second, coefficient);
      ++pos_;
    } else if (saw_number) {
      expr.constant += coefficient;
    } else {
      throw ParseError("expected a number or variable", line_,
                       peek().column);
    }
  }

  Rat parse_number() {
    const Token& token = peek();
    Rat value = parse_rational(token.text, line_, token.column);
    ++pos_;
    if (peek().kind == TokenKind::kSlash &&
        pos_ + 1 < tokens_.size() &&
        tokens_[pos_ + 1].kind == TokenKind::kNumber) {
      ++pos_;
      const Token& denominator = peek();
      const Rat d = parse_rational(denominator.text, line_, denominator.column);
      if (d == Rat(0))
        throw ParseError("zero denominator", line_, denominator.column);
      value /= d;
      ++pos_;
    }
    return value;
  }

  const std::vector<Token>& tokens_;
  size_t pos_;
  const std::map<std::string, int>& variables_;
  int line_;
};

inline const std::vector<std::string> kRejectedDeclarations = {
    "integer", "int", "general", "continuous", "free", "semicontinuous"};

}  // namespace detail

inline BinaryProblem parse_problem_text(const std::string& text) {
  std::string name;
  std::vector<std::string> var_names;
  std::map<std::string, int> variables;
  std::optional<detail::LinearExpr> objective;
  std::vector<Constraint> rows;

  std::istringstream stream(text);
  std::string line;
  int line_number = 0;
  while (std::getline(stream, line)) {
    ++line_number;
    const std::vector<detail::Token> tokens =
        detail::tokenize_line(line, line_number);
    if (tokens.front().kind == detail::TokenKind::kEnd) continue;

    if (tokens.front().kind == detail::TokenKind::kIdent) {
      const std::string& head = tokens.front().text;
      if (head == "problem") {
        if (tokens.size() != 3 ||
            tokens[1].kind != detail::TokenKind::kIdent)
          throw ParseError("expected 'problem NAME'", line_number,
                           tokens[1].column);
        name = tokens[1].text;
        continue;
      }
      if (head == "binary" || head == "bin") {
        for (size_t k = 1; k + 1 < tokens.size(); ++k) {
          if (tokens[k].kind != detail::TokenKind::kIdent)
            throw ParseError("expected variable name", line_number,
                             tokens[k].column);
          if (variables.contains(tokens[k].text))
            throw ParseError("duplicate variable '" + tokens[k].text + "'",
                             line_number, tokens[k].column);
          variables.emplace(tokens[k].text,
                            static_cast<int>(var_names.size()));
          var_names.push_back(tokens[k].text);
        }
        continue;
      }
      for (const std::string& keyword : detail::kRejectedDeclarations)
        if (head == keyword)
          throw ParseError("only binary variables are supported, got '" +
                               head + "' declaration",
                           line_number, tokens.front().column);
      if (head == "max" || head == "maximize")
        throw ParseError("only minimization is supported", line_number,
                         tokens.front().column);
      if ((head == "min" || head == "minimize") && tokens.size() > 1 &&
          tokens[1].kind == detail::TokenKind::kColon) {
        if (objective)
          throw ParseError("duplicate objective", line_number,
                           tokens.front().column);
        detail::ExprParser parser(tokens, 2, variables, line_number);
        objective = parser.parse();
        if (parser.peek().kind != detail::TokenKind::kEnd)
          throw ParseError("trailing tokens after objective", line_number,
                           parser.peek().column);
        continue;
      }
    }

    // Anything else is a constraint line: expr SENSE expr.
    detail::ExprParser left_parser(tokens, 0, variables, line_number);
    detail::LinearExpr left = left_parser.parse();
    const detail::Token& sense_token = tokens[left_parser.position()];
    if (sense_token.kind != detail::TokenKind::kLe &&
        sense_token.kind != detail::TokenKind::kGe &&
        sense_token.kind != detail::TokenKind::kEq)
      throw ParseError("expected '<=', '>=' or '=' in constraint",
                       line_number, sense_token.column);
    detail::ExprParser right_parser(tokens, left_parser.position() + 1,
                                    variables, line_number);
    detail::LinearExpr right = right_parser.parse();
    if (right_parser.peek().kind != detail::TokenKind::kEnd)
      throw ParseError("trailing tokens after constraint", line_number,
                       right_parser.peek().column);

    // Move variables left, constants right; flip >= to <=.
    std::vector<std::pair<int, Rat>> terms = std::move(left.terms);
    for (auto& [column, value] : right.terms)
      terms.emplace_back(column, -value);
    Rat rhs = right.constant - left.constant;
    Sense sense = Sense::kEq;
    if (sense_token.kind == detail::TokenKind::kLe) sense = Sense::kLe;
    if (sense_token.kind == detail::TokenKind::kGe) {
      sense = Sense::kLe;
      for (auto& [column, value] : terms) value = -value;
      rhs = -rhs;
    }
    rows.push_back(Constraint::make(std::move(terms), sense, std::move(rhs)));
  }

  const int n = static_cast<int>(var_names.size());
  std::vector<Rat> c(n, Rat(0));
  Rat offset(0);
  if (objective) {
    for (const auto& [column, value] : objective->terms) c[column] += value;
    offset = objective->constant;
  }
  return make_problem(std::move(name), n, std::move(rows), std::move(c),
                      std::move(offset), std::move(var_names));
}

// --- JSON mirror --------------------------------------------------------------

namespace detail {

inline Rat json_rational(const nlohmann::ordered_json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer())
    return Rat(value.get<long long>());
  throw ParseError(
      "coefficients must be strings or integers (floats are inexact)");
}

}  // namespace detail

inline nlohmann::ordered_json problem_to_json(const BinaryProblem& problem) {
  nlohmann::ordered_json document;
  document["name"] = problem.name;
  nlohmann::ordered_json variables = nlohmann::ordered_json::array();
  for (int j = 0; j < problem.n; ++j)
    variables.push_back(problem.variable_name(j));
  document["variables"] = std::move(variables);
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (int j = 0; j < problem.n; ++j)
    if (problem.objective[j] != Rat(0))
      terms.push_back({problem.variable_name(j),
                       rational_to_string(problem.objective[j])});
  document["minimize"] = {{"terms", std::move(terms)},
                          {"offset",
                           rational_to_string(problem.objective_offset)}};
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const Constraint& row : problem.rows) {
    nlohmann::ordered_json row_terms = nlohmann::ordered_json::array();
    for (const auto& [column, value] : row.terms)
      row_terms.push_back(
          {problem.variable_name(column), rational_to_string(value)});
    rows.push_back({{"terms", std::move(row_terms)},
                    {"sense", row.sense == Sense::kLe ? "<=" : "="},
                    {"rhs", rational_to_string(row.rhs)}});
  }
  document["constraints"] = std::move(rows);
  return document;
}

inline BinaryProblem parse_problem_json(const std::string& text) {
  nlohmann::ordered_json document;
  try {
    document = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& error) {
    throw ParseError(std::string("invalid JSON: ") + error.what());
  }
  std::string name = document.value("name", std::string());
  std::vector<std::string> var_names;
  std::map<std::string, int> variables;
  for (const auto& entry : document.value("variables",
                                          nlohmann::ordered_json::array())) {
    const std::string var = entry.get<std::string>();
    if (variables.contains(var))
      throw ParseError("duplicate variable '" + var + "'");
    variables.emplace(var, static_cast<int>(var_names.size()));
    var_names.push_back(var);
  }
  const int n = static_cast<int>(var_names.size());
  auto column_of = [&](const nlohmann::ordered_json& key) {
    const std::string var = key.get<std::string>();
    auto it = variables.find(var);
    if (it == variables.end())
      throw ParseError("unknown variable '" + var + "'");
    return it->second;
  };

  std::vector<Rat> c(n, Rat(0));
  Rat offset(0);
  if (document.contains("minimize")) {
    const auto& objective = document["minimize"];
    for (const auto& term : objective.value("terms",
                                            nlohmann::ordered_json::array()))
      c[column_of(term.at(0))] += detail::json_rational(term.at(1));
    if (objective.contains("offset"))
      offset = detail::json_rational(objective["offset"]);
  }
  if (document.contains("maximize"))
    throw ParseError("only minimization is supported");

  std::vector<Constraint> rows;
  for (const auto& row : document.value("constraints",
                                        nlohmann::ordered_json::array())) {
    std::vector<std::pair<int, Rat>> terms;
    for (const auto& term : row.value("terms",
                                      nlohmann::ordered_json::array()))
      terms.emplace_back(column_of(term.at(0)),
                         detail::json_rational(term.at(1)));
    const std::string sense_text = row.value("sense", "<=");
    Rat rhs = detail::json_rational(row.at("rhs"));
    Sense sense = Sense::kEq;
    if (sense_text == "<=") {
      sense = Sense::kLe;
    } else if (sense_text == ">=") {
      sense = Sense::kLe;
      for (auto& [column, value] : terms) value = -value;
      rhs = -rhs;
    } else if (sense_text != "=") {
      throw ParseError("unknown sense '" + sense_text + "'");
    }
    rows.push_back(Constraint::make(std::move(terms), sense, std::move(rhs)));
  }
  return make_problem(std::move(name), n, std::move(rows), std::move(c),
                      std::move(offset), std::move(var_names));
}

// Dispatches on the leading non-space character: '{' selects JSON.
inline BinaryProblem parse_problem(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_problem_json(text);
    break;
  }
  return parse_problem_text(text);
}

// --- Printing -----------------------------------------------------------------

namespace detail {

inline void append_term(std::string& out, bool first, const Rat& coefficient,
                        const std::string& label) {
  Rat magnitude = coefficient;
  if (first) {
    if (coefficient < Rat(0)) {
      out += "-";
      magnitude = -coefficient;
    }
  } else {
    out += coefficient < Rat(0) ? " - " : " + ";
    if (coefficient < Rat(0)) magnitude = -coefficient;
  }
  if (label.empty()) {
    out += rational_to_string(magnitude);
  } else {
    if (magnitude != Rat(1)) out += rational_to_string(magnitude) + " ";
    out += label;
  }
}

inline std::string expression_text(const BinaryProblem& problem,
                                   const std::vector<std::pair<int, Rat>>& terms,
                                   const Rat& constant) {
  std::string out;
  bool first = true;
  for (const auto& [column, value] : terms) {
    append_term(out, first, value, problem.variable_name(column));
    first = false;
  }
  if (constant != Rat(0) || first) {
    append_term(out, first, constant, "");
  }
  return out;
}

}  // namespace detail

// Canonical document: parse_problem(print_problem(p)) reproduces p exactly
// (stored rows are already <=-normalized, so no '>=' appears).
inline std::string print_problem(const BinaryProblem& problem) {
  std::string out;
  if (!problem.name.empty()) out += "problem " + problem.name + "\n";
  if (problem.n > 0) {
    out += "binary";
    for (int j = 0; j < problem.n; ++j)
      out += " " + problem.variable_name(j);
    out += "\n";
  }
  std::vector<std::pair<int, Rat>> objective_terms;
  for (int j = 0; j < problem.n; ++j)
    if (problem.objective[j] != Rat(0))
      objective_terms.emplace_back(j, problem.objective[j]);
  out += "min: " +
         detail::expression_text(problem, objective_terms,
                                 problem.objective_offset) +
         "\n";
  for (const Constraint& row : problem.rows) {
    out += detail::expression_text(problem, row.terms, Rat(0));
    out += row.sense == Sense::kLe ? " <= " : " = ";
    out += rational_to_string(row.rhs) + "\n";
  }
  return out;
}

// --- Solution files -----------------------------------------------------------

inline BitVector parse_solution(const std::string& text, int n) {
  BitVector values;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') continue;
    if (c == '0' || c == '1')
      values.push_back(c == '1');
    else
      throw ParseError(std::string("unexpected character '") + c +
                       "' in solution (expected 0/1)");
  }
  if (static_cast<int>(values.size()) != n)
    throw ParseError("solution has " + std::to_string(values.size()) +
                     " bits, expected " + std::to_string(n));
  return values;
}

inline std::string format_solution(const BitVector& values) {
  std::string out;
  out.reserve(values.size());
  for (uint8_t bit : values) out += bit ? '1' : '0';
  return out;
}

// --- Cycle notation -----------------------------------------------------------
//
// Signed cycles over 1-based variable indices: "(1 -2 3)" maps x1 to the
// complement of x2, the complement of x2 to x3, and x3 back to x1.  A
// negative entry means the value arrives complemented.  "(-2)" alone maps x2
// to its own complement.  Fixed points are omitted; the identity prints as
// "()".  A self-paired cycle such as "(1 -2 -1 2)" lists each literal (index
// with polarity) at most once even though the index appears twice.

inline SignedPermutation parse_cycles(const std::string& text, int n) {
  std::vector<std::vector<int>> cycles;
  size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c != '(')
      throw ParseError("expected '(' in cycle notation", 0,
                       static_cast<int>(pos) + 1);
    ++pos;
    std::vector<int> cycle;
    while (true) {
      while (pos < text.size() &&
             (std::isspace(static_cast<unsigned char>(text[pos])) ||
              text[pos] == ','))
        ++pos;
      if (pos >= text.size())
        throw ParseError("unterminated cycle", 0,
                         static_cast<int>(pos) + 1);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      int sign = 1;
      if (text[pos] == '-') {
        sign = -1;
        ++pos;
      }
      if (pos >= text.size() ||
          !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("expected an index in cycle notation", 0,
                         static_cast<int>(pos) + 1);
      int value = 0;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos])))
        value = value * 10 + (text[pos++] - '0');
      if (value < 1 || value > n)
        throw ParseError("cycle index " + std::to_string(value) +
                         " outside 1.." + std::to_string(n));
      cycle.push_back(sign * value);
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
  }

  SignedPermutation perm = SignedPermutation::identity(n);
  std::vector<char> assigned(n, 0);
  std::vector<char> literal_used(2 * n, 0);
  auto use_literal = [&](int literal) {
    const int id = 2 * (std::abs(literal) - 1) + (literal < 0 ? 1 : 0);
    if (literal_used[id]++)
      throw ParseError("literal " + std::to_string(literal) +
                       " appears more than once in cycles");
  };
  auto assign = [&](int from, SignedTarget target) {
    const int j = std::abs(from) - 1;
    if (assigned[j] && perm.targets[j] != target)
      throw ParseError("conflicting images for index " +
                       std::to_string(std::abs(from)));
    assigned[j] = 1;
    perm.targets[j] = target;
  };
  for (const std::vector<int>& cycle : cycles) {
    for (int literal : cycle) use_literal(literal);
    if (cycle.size() == 1) {
      const int literal = cycle[0];
      const int j = std::abs(literal) - 1;
      assign(literal, {j, literal < 0 ? -1 : 1});
      continue;
    }
    for (size_t k = 0; k < cycle.size(); ++k) {
      const int current = cycle[k];
      const int next = cycle[(k + 1) % cycle.size()];
      const int sign = (current < 0 ? -1 : 1) * (next < 0 ? -1 : 1);
      assign(current, {std::abs(next) - 1, sign});
    }
  }
  validate(perm);
  return perm;
}

inline std::string format_cycles(const SignedPermutation& perm) {
  const int n = perm.size();
  std::vector<char> visited(2 * n, 0);
  const auto id = [](int var, bool complemented) {
    return 2 * var + (complemented ? 1 : 0);
  };
  std::string out;
  for (int v = 0; v < n; ++v) {
    if (visited[id(v, false)]) continue;
    // Walk the literal cycle starting from the positive literal.
    std::vector<std::pair<int, bool>> chain{{v, false}};
    while (true) {
      const auto [var, complemented] = chain.back();
      const SignedTarget& target = perm.targets[var];
      const std::pair<int, bool> next{target.index,
                                      complemented != (target.sign < 0)};
      if (next == chain.front()) break;
      chain.push_back(next);
    }
    for (const auto& [var, complemented] : chain) {
      visited[id(var, complemented)] = 1;
      visited[id(var, !complemented)] = 1;
    }
    if (chain.size() == 1) continue;  // fixed point
    if (chain.size() == 2 && chain[1].first == v) {
      out += "(-" + std::to_string(v + 1) + ")";
      continue;
    }
    out += "(";
    for (size_t k = 0; k < chain.size(); ++k) {
      if (k) out += " ";
      if (chain[k].second) out += "-";
      out += std::to_string(chain[k].first + 1);
    }
    out += ")";
  }
  if (out.empty()) return "()";
  return out;
}

// Plain cycles over 1-based row indices; "()" for the identity.
inline std::string format_row_cycles(const RowPermutation& perm) {
  const int m = perm.size();
  std::vector<char> visited(m, 0);
  std::string out;
  for (int start = 0; start < m; ++start) {
    if (visited[start] || perm.mapping[start] == start) {
      visited[start] = 1;
      continue;
    }
    out += "(" + std::to_string(start + 1);
    visited[start] = 1;
    for (int i = perm.mapping[start]; i != start; i = perm.mapping[i]) {
      visited[i] = 1;
      out += " " + std::to_string(i + 1);
    }
    out += ")";
  }
  if (out.empty()) return "()";
  return out;
}

// --- Orbit listings -----------------------------------------------------------

inline std::string format_orbit(const BinaryProblem& problem,
                                const std::vector<int>& members) {
  std::string out = "{";
  for (size_t k = 0; k < members.size(); ++k) {
    if (k) out += ", ";
    out += problem.variable_name(members[k]);
  }
  return out + "}";
}

inline std::string format_signed_orbit(const BinaryProblem& problem,
                                       const std::vector<Literal>& members) {
  std::string out = "{";
  for (size_t k = 0; k < members.size(); ++k) {
    if (k) out += ", ";
    if (members[k].complemented) out += "~";
    out += problem.variable_name(members[k].var);
  }
  return out + "}";
}

}  // namespace binsym

#endif  // BINSYM_FORMAT_HPP_
