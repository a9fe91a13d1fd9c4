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

#ifndef BINSYM_SOLVER_HPP_
#define BINSYM_SOLVER_HPP_

#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "binsym/errors.hpp"
#include "binsym/problem.hpp"

namespace binsym {

// Depth-first branch and bound for small binary problems.  No LP relaxation:
// an additive objective bound plus activity-based propagation is enough at
// the instance sizes this library targets.

// Variable states plus cached per-row activity bounds over all completions
// of the free variables.  The cached bounds always equal what a from-scratch
// recomputation would give.
struct PartialAssignment {
  std::vector<int8_t> state;  // -1 free, otherwise the fixed value
  std::vector<Rat> min_activity;
  std::vector<Rat> max_activity;
  std::vector<std::vector<std::pair<int, Rat>>> column_rows;  // (row, coef)

  static PartialAssignment make(const BinaryProblem& problem) {
    PartialAssignment assignment;
    assignment.state.assign(problem.n, -1);
    assignment.min_activity.assign(problem.m(), Rat(0));
    assignment.max_activity.assign(problem.m(), Rat(0));
    assignment.column_rows.resize(problem.n);
    for (int r = 0; r < problem.m(); ++r) {
      for (const auto& [column, value] : problem.rows[r].terms) {
        if (value < Rat(0))
          assignment.min_activity[r] += value;
        else
          assignment.max_activity[r] += value;
        assignment.column_rows[column].emplace_back(r, value);
      }
    }
    return assignment;
  }

  int free_count() const {
    int count = 0;
    for (int8_t s : state) count += s < 0;
    return count;
  }

  void fix(int var, int value) {
    state[var] = static_cast<int8_t>(value);
    for (const auto& [row, coef] : column_rows[var]) {
      // Remove the free-range contribution, add the fixed one.
      const Rat fixed = value ? coef : Rat(0);
      if (coef < Rat(0)) {
        min_activity[row] += fixed - coef;
        max_activity[row] += fixed;
      } else {
        min_activity[row] += fixed;
        max_activity[row] += fixed - coef;
      }
    }
  }

  void unfix(int var) {
    const int value = state[var];
    state[var] = -1;
    for (const auto& [row, coef] : column_rows[var]) {
      const Rat fixed = value ? coef : Rat(0);
      if (coef < Rat(0)) {
        min_activity[row] -= fixed - coef;
        max_activity[row] -= fixed;
      } else {
        min_activity[row] -= fixed;
        max_activity[row] -= fixed - coef;
      }
    }
  }
};

struct PropagationResult {
  std::vector<std::pair<int, int>> fixings;  // applied to the assignment
  bool conflict = false;
};

// Fixpoint propagation over row activity bounds: a free variable is fixed
// when one of its values makes some row unsatisfiable; a conflict is raised
// when a row excludes both values or is already unsatisfiable.  Fixings are
// applied to the assignment and reported so the caller can undo them.
inline PropagationResult propagate(const BinaryProblem& problem,
                                   PartialAssignment& assignment) {
  PropagationResult result;
  auto row_excludes = [&](int r, const Rat& min_act, const Rat& max_act) {
    const Constraint& row = problem.rows[r];
    if (row.sense == Sense::kLe) return min_act > row.rhs;
    return min_act > row.rhs || max_act < row.rhs;
  };
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (int r = 0; r < problem.m(); ++r) {
      if (row_excludes(r, assignment.min_activity[r],
                       assignment.max_activity[r])) {
        result.conflict = true;
        return result;
      }
      for (const auto& [column, value] : problem.rows[r].terms) {
        if (assignment.state[column] >= 0) continue;
        // Activity bounds with this variable forced to 0 or to 1.
        const Rat free_min = value < Rat(0) ? value : Rat(0);
        const Rat free_max = value < Rat(0) ? Rat(0) : value;
        bool zero_ok = true, one_ok = true;
        {
          const Rat min0 = assignment.min_activity[r] - free_min;
          const Rat max0 = assignment.max_activity[r] - free_max;
          if (row_excludes(r, min0, max0)) zero_ok = false;
          const Rat min1 = min0 + value;
          const Rat max1 = max0 + value;
          if (row_excludes(r, min1, max1)) one_ok = false;
        }
        if (!zero_ok && !one_ok) {
          result.conflict = true;
          return result;
        }
        if (zero_ok == one_ok) continue;
        const int forced = one_ok ? 1 : 0;
        assignment.fix(column, forced);
        result.fixings.emplace_back(column, forced);
        progressed = true;
      }
    }
  }
  return result;
}

enum class SolveStatus : uint8_t {
  kOptimal,
  kInfeasible,
  kLimitReached,
};

struct SolveLimits {
  long long node_cap = 10'000'000;
  double time_limit_seconds = 0;  // 0 means no time limit
};

struct SolveResult {
  SolveStatus status = SolveStatus::kInfeasible;
  std::optional<Solution> best;
  long long nodes = 0;
};

namespace detail {

class BranchAndBound {
 public:
  BranchAndBound(const BinaryProblem& problem, SolveLimits limits)
      : problem_(problem),
        limits_(limits),
        assignment_(PartialAssignment::make(problem)),
        start_(std::chrono::steady_clock::now()) {
    // Static branching order: descending |c|, ties by index.
    branch_order_.resize(problem.n);
    std::iota(branch_order_.begin(), branch_order_.end(), 0);
    std::stable_sort(branch_order_.begin(), branch_order_.end(),
                     [&](int a, int b) {
                       const Rat abs_a = problem_.objective[a] < Rat(0)
                                             ? -problem_.objective[a]
                                             : problem_.objective[a];
                       const Rat abs_b = problem_.objective[b] < Rat(0)
                                             ? -problem_.objective[b]
                                             : problem_.objective[b];
                       return abs_b < abs_a;
                     });
  }

  SolveResult run(const std::optional<Solution>& incumbent) {
    if (incumbent) best_ = *incumbent;
    dfs();
    SolveResult result;
    result.nodes = nodes_;
    result.best = best_;
    if (limit_hit_)
      result.status = SolveStatus::kLimitReached;
    else
      result.status = best_ ? SolveStatus::kOptimal : SolveStatus::kInfeasible;
    return result;
  }

 private:
  bool over_limit() {
    if (nodes_ > limits_.node_cap) return true;
    if (limits_.time_limit_seconds > 0 && (nodes_ & 1023) == 0) {
      const std::chrono::duration<double> elapsed =
          std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > limits_.time_limit_seconds) return true;
    }
    return false;
  }

  // Lower bound on any completion: fixed objective part plus every negative
  // coefficient of a free variable.
  Rat bound() const {
    Rat value = problem_.objective_offset;
    for (int j = 0; j < problem_.n; ++j) {
      if (assignment_.state[j] > 0)
        value += problem_.objective[j];
      else if (assignment_.state[j] < 0 && problem_.objective[j] < Rat(0))
        value += problem_.objective[j];
    }
    return value;
  }

  void record_leaf() {
    BitVector values(problem_.n);
    for (int j = 0; j < problem_.n; ++j)
      values[j] = assignment_.state[j] > 0;
    Solution candidate = evaluate(problem_, values);
    if (!candidate.feasible) return;
    if (!best_ || candidate.objective < best_->objective)
      best_ = std::move(candidate);
  }

  void dfs() {
    ++nodes_;
    if (over_limit()) {
      limit_hit_ = true;
      return;
    }
    PropagationResult prop = propagate(problem_, assignment_);
    if (!prop.conflict) {
      if (best_ && bound() >= best_->objective) {
        // Cannot strictly improve; prune.
      } else if (assignment_.free_count() == 0) {
        record_leaf();
      } else {
        int branch_var = -1;
        for (int j : branch_order_)
          if (assignment_.state[j] < 0) {
            branch_var = j;
            break;
          }
        // Sign-favorable value first: the value that shrinks the objective.
        const int first = problem_.objective[branch_var] < Rat(0) ? 1 : 0;
        for (const int value : {first, 1 - first}) {
          assignment_.fix(branch_var, value);
          dfs();
          assignment_.unfix(branch_var);
          if (limit_hit_) break;
        }
      }
    }
    for (auto it = prop.fixings.rbegin(); it != prop.fixings.rend(); ++it)
      assignment_.unfix(it->first);
  }

  const BinaryProblem& problem_;
  const SolveLimits limits_;
  PartialAssignment assignment_;
  std::chrono::steady_clock::time_point start_;
  std::vector<int> branch_order_;
  std::optional<Solution> best_;
  long long nodes_ = 0;
  bool limit_hit_ = false;
};

}  // namespace detail

// Exact minimization within the given limits.  A feasible incumbent warm
// start is used for pruning; it never changes the reported optimum, only the
// node count.  When a limit is hit the status says so and the best solution
// found so far (possibly the incumbent) is returned.
inline SolveResult solve(const BinaryProblem& problem,
                         const std::optional<Solution>& incumbent = {},
                         SolveLimits limits = {}) {
  std::optional<Solution> start;
  if (incumbent) {
    start = evaluate(problem, incumbent->values);
    if (!start->feasible)
      throw PreconditionError("warm-start incumbent is infeasible");
  }
  detail::BranchAndBound engine(problem, limits);
  return engine.run(start);
}

}  // namespace binsym

#endif  // BINSYM_SOLVER_HPP_
