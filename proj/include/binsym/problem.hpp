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

#ifndef BINSYM_PROBLEM_HPP_
#define BINSYM_PROBLEM_HPP_

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "binsym/errors.hpp"
#include "binsym/rational.hpp"

namespace binsym {

// Bit vector holding one value per binary variable.
using BitVector = std::vector<uint8_t>;

enum class Sense : uint8_t {
  kLe,  // a'x <= rhs
  kEq,  // a'x  = rhs
};

// One linear row in canonical sparse form: column indices strictly
// increasing, no explicit zeros.  Greater-equal rows do not exist in a
// stored problem; they are flipped to less-equal at construction time.
struct Constraint {
  std::vector<std::pair<int, Rat>> terms;
  Sense sense = Sense::kLe;
  Rat rhs{0};

  bool operator==(const Constraint&) const = default;

  // Canonicalizes arbitrary term lists: sorts by column, merges duplicate
  // columns, drops zero coefficients.
  static Constraint make(std::vector<std::pair<int, Rat>> raw_terms,
                         Sense sense, Rat rhs) {
    std::stable_sort(raw_terms.begin(), raw_terms.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    Constraint row;
    row.sense = sense;
    row.rhs = std::move(rhs);
    for (auto& [column, value] : raw_terms) {
      if (!row.terms.empty() && row.terms.back().first == column) {
        row.terms.back().second += value;
        if (row.terms.back().second == Rat(0)) row.terms.pop_back();
      } else if (value != Rat(0)) {
        row.terms.emplace_back(column, std::move(value));
      }
    }
    return row;
  }
};

// A pure binary minimization problem: min c'x + offset subject to the rows,
// x in {0,1}^n.  Instances are immutable once built; every operation in the
// library is a pure function over them.
struct BinaryProblem {
  std::string name;
  int n = 0;
  std::vector<Constraint> rows;
  std::vector<Rat> objective;      // dense, size n
  Rat objective_offset{0};
  std::vector<std::string> var_names;  // optional; empty means x1..xn

  int m() const { return static_cast<int>(rows.size()); }

  bool operator==(const BinaryProblem&) const = default;

  std::string variable_name(int j) const {
    if (j >= 0 && j < static_cast<int>(var_names.size())) return var_names[j];
    return "x" + std::to_string(j + 1);
  }
};

// Builds and validates a problem.  Throws DimensionError if a row references
// a column outside [0, n) or the objective length differs from n.
inline BinaryProblem make_problem(std::string name, int n,
                                  std::vector<Constraint> rows,
                                  std::vector<Rat> objective,
                                  Rat objective_offset = Rat(0),
                                  std::vector<std::string> var_names = {}) {
  if (n < 0) throw DimensionError("variable count must be non-negative");
  if (static_cast<int>(objective.size()) != n)
    throw DimensionError("objective length does not match variable count");
  if (!var_names.empty() && static_cast<int>(var_names.size()) != n)
    throw DimensionError("variable name list does not match variable count");
  for (const Constraint& row : rows) {
    int previous = -1;
    for (const auto& [column, value] : row.terms) {
      if (column < 0 || column >= n)
        throw DimensionError("row references column " +
                             std::to_string(column) + " outside [0, " +
                             std::to_string(n) + ")");
      if (column <= previous)
        throw InternalError("row terms are not in canonical sparse form");
      if (value == Rat(0))
        throw InternalError("row stores an explicit zero coefficient");
      previous = column;
    }
  }
  BinaryProblem problem;
  problem.name = std::move(name);
  problem.n = n;
  problem.rows = std::move(rows);
  problem.objective = std::move(objective);
  problem.objective_offset = std::move(objective_offset);
  problem.var_names = std::move(var_names);
  return problem;
}

// A candidate point together with its cached evaluation.
struct Solution {
  BitVector values;
  Rat objective{0};
  bool feasible = false;

  bool operator==(const Solution&) const = default;
};

inline Rat row_activity(const Constraint& row, const BitVector& values) {
  Rat activity(0);
  for (const auto& [column, value] : row.terms)
    if (values[column]) activity += value;
  return activity;
}

inline bool row_satisfied(const Constraint& row, const BitVector& values) {
  const Rat activity = row_activity(row, values);
  return row.sense == Sense::kLe ? activity <= row.rhs : activity == row.rhs;
}

// Evaluates a point with exact arithmetic: objective value and row-by-row
// feasibility.
inline Solution evaluate(const BinaryProblem& problem,
                         const BitVector& values) {
  if (static_cast<int>(values.size()) != problem.n)
    throw DimensionError("point length does not match variable count");
  Solution solution;
  solution.values = values;
  solution.objective = problem.objective_offset;
  for (int j = 0; j < problem.n; ++j)
    if (values[j]) solution.objective += problem.objective[j];
  solution.feasible = true;
  for (const Constraint& row : problem.rows) {
    if (!row_satisfied(row, values)) {
      solution.feasible = false;
      break;
    }
  }
  return solution;
}

}  // namespace binsym

#endif  // BINSYM_PROBLEM_HPP_
