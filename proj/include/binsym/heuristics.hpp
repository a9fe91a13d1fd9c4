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

#ifndef BINSYM_HEURISTICS_HPP_
#define BINSYM_HEURISTICS_HPP_

#include <algorithm>
#include <cassert>
#include <optional>
#include <utility>
#include <vector>

#include "binsym/errors.hpp"
#include "binsym/permutation.hpp"
#include "binsym/problem.hpp"
#include "binsym/solver.hpp"
#include "binsym/symmetry.hpp"

namespace binsym {

// Bounded best-K set of distinct feasible solutions, ordered by objective.
// Inserting into a full pool evicts the worst entry.
class SolutionPool {
 public:
  explicit SolutionPool(int capacity) : capacity_(capacity) {}

  const std::vector<Solution>& entries() const { return entries_; }
  const Solution& best() const { return entries_.front(); }
  bool empty() const { return entries_.empty(); }

  bool contains(const BitVector& values) const {
    for (const Solution& entry : entries_)
      if (entry.values == values) return true;
    return false;
  }

  bool insert(Solution solution) {
    if (contains(solution.values)) return false;
    if (static_cast<int>(entries_.size()) >= capacity_) {
      if (!(solution.objective < entries_.back().objective)) return false;
      entries_.pop_back();
    }
    auto where = std::upper_bound(
        entries_.begin(), entries_.end(), solution,
        [](const Solution& a, const Solution& b) {
          return a.objective < b.objective;
        });
    entries_.insert(where, std::move(solution));
    return true;
  }

 private:
  int capacity_;
  std::vector<Solution> entries_;
};

// Growable deduplicated set of non-identity permutations, capped in size.
class SymmetryPool {
 public:
  explicit SymmetryPool(int cap) : cap_(cap) {}

  const std::vector<SignedPermutation>& perms() const { return perms_; }

  bool insert(const SignedPermutation& perm) {
    if (perm.is_identity()) return false;
    if (static_cast<int>(perms_.size()) >= cap_) return false;
    if (std::find(perms_.begin(), perms_.end(), perm) != perms_.end())
      return false;
    perms_.push_back(perm);
    return true;
  }

  // One breadth-first growth step: pairwise products of the current members,
  // in insertion order.  Returns whether anything new was admitted.
  bool grow() {
    const size_t before = perms_.size();
    const std::vector<SignedPermutation> snapshot = perms_;
    for (const SignedPermutation& outer : snapshot)
      for (const SignedPermutation& inner : snapshot) {
        if (static_cast<int>(perms_.size()) >= cap_) return perms_.size() > before;
        insert(compose(outer, inner));
      }
    return perms_.size() > before;
  }

 private:
  int cap_;
  std::vector<SignedPermutation> perms_;
};

struct HeurConfig {
  int rounds = 100;        // max outer iterations
  int pool_capacity = 10;  // K best solutions kept
  int symmetry_cap = 1000;
  int compose_depth = 2;   // growth steps before giving up
  unsigned seed = 0;       // reserved; the heuristic itself is deterministic

  void validate() const {
    if (rounds <= 0 || pool_capacity <= 0 || symmetry_cap <= 0 ||
        compose_depth <= 0)
      throw PreconditionError("heuristic configuration must be positive");
  }
};

struct TraceStep {
  SignedPermutation symmetry;
  Rat source_objective{0};
  Rat new_objective{0};
  BitVector solution;  // the improved point
};

// Accepted improvement steps; new objectives strictly decrease.
struct ImprovementTrace {
  std::vector<TraceStep> steps;
};

struct ImproveResult {
  Solution best;
  ImprovementTrace trace;
  int rounds_used = 0;
};

// Direct improvement: apply every pooled permutation to every pooled
// solution, keep strictly better images, and when a round stalls grow the
// symmetry pool by pairwise composition.  Images of feasible points under
// constraint symmetries are feasible by construction, so no feasibility
// check is needed on the hot path (debug builds assert it).  Equal-objective
// images are discarded, which guarantees termination without a visited set.
inline ImproveResult direct_improve(
    const BinaryProblem& problem, const std::vector<Solution>& seeds,
    const std::vector<SignedPermutation>& generators,
    const HeurConfig& config = {}) {
  config.validate();
  if (seeds.empty()) throw PreconditionError("at least one seed is required");

  SolutionPool pool(config.pool_capacity);
  for (const Solution& seed : seeds) {
    Solution checked = evaluate(problem, seed.values);
    if (!checked.feasible)
      throw PreconditionError("seed solution is infeasible");
    pool.insert(std::move(checked));
  }
  SymmetryPool symmetries(config.symmetry_cap);
  for (const SignedPermutation& generator : generators) {
    if (!check_symmetry(problem, generator, SymmetryMode::kConstraintOnly))
      throw PreconditionError(
          "generator is not a constraint symmetry of the problem");
    symmetries.insert(generator);
  }

  ImproveResult result;
  result.best = pool.best();
  int growth_steps = 0;
  for (int round = 0; round < config.rounds; ++round) {
    result.rounds_used = round + 1;
    bool improved = false;
    const std::vector<Solution> snapshot = pool.entries();
    for (const Solution& source : snapshot) {
      for (const SignedPermutation& perm : symmetries.perms()) {
        BitVector image = perm.apply(source.values);
        Rat objective = problem.objective_offset;
        for (int j = 0; j < problem.n; ++j)
          if (image[j]) objective += problem.objective[j];
        assert(evaluate(problem, image).feasible);
        if (!(objective < source.objective)) continue;
        Solution candidate{std::move(image), objective, true};
        if (objective < result.best.objective) {
          result.trace.steps.push_back(
              {perm, source.objective, objective, candidate.values});
          result.best = candidate;
        }
        if (pool.insert(std::move(candidate))) improved = true;
      }
    }
    if (!improved) {
      if (growth_steps >= config.compose_depth) break;
      ++growth_steps;
      if (!symmetries.grow()) break;
    }
  }
  return result;
}

// --- Orbit MIPping ----------------------------------------------------------

// Restriction of the problem to points whose per-orbit variable sums match
// the reference solution: one extra equality row per orbit class.
inline BinaryProblem build_orbit_subproblem(const BinaryProblem& problem,
                                            const Solution& reference,
                                            const OrbitPartition& partition) {
  if (static_cast<int>(reference.values.size()) != problem.n)
    throw DimensionError("reference length does not match variable count");
  int covered = 0;
  for (const auto& members : partition.classes)
    covered += static_cast<int>(members.size());
  if (covered != problem.n)
    throw DimensionError("orbit partition does not cover the variables");

  BinaryProblem restricted = problem;
  restricted.name = problem.name.empty() ? "orbit" : problem.name + "_orbit";
  for (const auto& members : partition.classes) {
    Constraint row;
    row.sense = Sense::kEq;
    Rat total(0);
    for (int j : members) {
      row.terms.emplace_back(j, Rat(1));
      if (reference.values[j]) total += Rat(1);
    }
    row.rhs = total;
    restricted.rows.push_back(std::move(row));
  }
  return restricted;
}

// Signed variant: positive literals contribute x_i, complemented literals
// contribute (1 - x_i) with the constant moved to the right-hand side.  Only
// one class per mirror pair produces a row (the mirror row is affinely
// identical), and self-mirrored classes are vacuous and skipped.
inline BinaryProblem build_orbit_subproblem(
    const BinaryProblem& problem, const Solution& reference,
    const SignedOrbitPartition& partition) {
  if (static_cast<int>(reference.values.size()) != problem.n)
    throw DimensionError("reference length does not match variable count");
  int covered = 0;
  for (const auto& members : partition.classes)
    covered += static_cast<int>(members.size());
  if (covered != 2 * problem.n)
    throw DimensionError("signed orbit partition does not cover the literals");

  // Class id per literal, to recognize mirror pairs.
  std::vector<int> class_of(2 * problem.n, -1);
  for (size_t which = 0; which < partition.classes.size(); ++which)
    for (const Literal& literal : partition.classes[which])
      class_of[2 * literal.var + literal.complemented] =
          static_cast<int>(which);

  BinaryProblem restricted = problem;
  restricted.name = problem.name.empty() ? "orbit" : problem.name + "_orbit";
  std::vector<char> emitted(partition.classes.size(), 0);
  for (size_t which = 0; which < partition.classes.size(); ++which) {
    if (emitted[which]) continue;
    const auto& members = partition.classes[which];
    const Literal first = members.front();
    const int mirror = class_of[2 * first.var + !first.complemented];
    emitted[which] = 1;
    if (mirror == static_cast<int>(which)) continue;  // vacuous: constant row
    emitted[mirror] = 1;
    Constraint row;
    row.sense = Sense::kEq;
    Rat rhs(0);
    for (const Literal& literal : members) {
      row.terms.emplace_back(literal.var,
                             literal.complemented ? Rat(-1) : Rat(1));
      if (reference.values[literal.var])
        rhs += literal.complemented ? Rat(-1) : Rat(1);
    }
    row.rhs = rhs;
    restricted.rows.push_back(std::move(row));
  }
  return restricted;
}

struct OrbitMipResult {
  Solution best;           // evaluated against the original problem
  SolveStatus status = SolveStatus::kOptimal;
  long long nodes = 0;
};

// Solves the orbit-restricted problem exactly, warm-started at the
// reference.  The result is feasible for the original problem and never
// worse than the reference; on a solver limit the incumbent comes back with
// the limit status.
template <typename PartitionType>
OrbitMipResult orbit_mip(const BinaryProblem& problem,
                         const Solution& reference,
                         const PartitionType& partition,
                         SolveLimits limits = {}) {
  const Solution checked = evaluate(problem, reference.values);
  if (!checked.feasible)
    throw PreconditionError("reference solution is infeasible");
  const BinaryProblem restricted =
      build_orbit_subproblem(problem, checked, partition);
  const SolveResult solved =
      solve(restricted, evaluate(restricted, checked.values), limits);
  OrbitMipResult result;
  result.status = solved.status;
  result.nodes = solved.nodes;
  result.best = evaluate(problem, solved.best ? solved.best->values
                                              : checked.values);
  return result;
}

}  // namespace binsym

#endif  // BINSYM_HEURISTICS_HPP_
