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

#ifndef BINSYM_LIFT_HPP_
#define BINSYM_LIFT_HPP_

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "binsym/automorphism.hpp"
#include "binsym/errors.hpp"
#include "binsym/permutation.hpp"
#include "binsym/problem.hpp"
#include "binsym/symmetry.hpp"

namespace binsym {

// The doubled problem whose ordinary column permutations correspond one to
// one with the signed symmetries of the original problem.  Columns 0..n-1
// are the original variables, columns n..2n-1 their complements.  The first
// m rows are the folded constraints A x - A xbar <= 2b - Ae; the next n rows
// are the complement links x_j + xbar_j = 1.
//
// The lifted objective is stored as (c, -c): the affine normalization (add
// c'e, halve) is dropped because it does not change coefficient equality
// classes, hence not the automorphism group.  Equivalence tests reapply the
// full affine form.
struct LiftedProblem {
  BinaryProblem problem;
  int origin_n = 0;
};

// Rewrites every equality row as a pair of opposing <= rows.  Lifting
// requires a pure <= system so that the lifted equality block consists of
// the complement links only.
inline BinaryProblem split_equalities(const BinaryProblem& problem) {
  BinaryProblem result = problem;
  result.rows.clear();
  for (const Constraint& row : problem.rows) {
    if (row.sense == Sense::kLe) {
      result.rows.push_back(row);
      continue;
    }
    Constraint le = row;
    le.sense = Sense::kLe;
    result.rows.push_back(le);
    Constraint ge_flipped;
    ge_flipped.sense = Sense::kLe;
    ge_flipped.rhs = -row.rhs;
    for (const auto& [column, value] : row.terms)
      ge_flipped.terms.emplace_back(column, -value);
    result.rows.push_back(std::move(ge_flipped));
  }
  return result;
}

inline LiftedProblem lift(const BinaryProblem& problem) {
  for (const Constraint& row : problem.rows)
    if (row.sense != Sense::kLe)
      throw PreconditionError(
          "lift requires a pure <= system; split equalities first");
  const int n = problem.n;
  LiftedProblem lifted;
  lifted.origin_n = n;
  lifted.problem.name = problem.name.empty() ? "lifted"
                                             : problem.name + "_lifted";
  lifted.problem.n = 2 * n;
  lifted.problem.objective.reserve(2 * n);
  for (const Rat& value : problem.objective)
    lifted.problem.objective.push_back(value);
  for (const Rat& value : problem.objective)
    lifted.problem.objective.push_back(-value);
  if (!problem.var_names.empty() || n > 0) {
    lifted.problem.var_names.reserve(2 * n);
    for (int j = 0; j < n; ++j)
      lifted.problem.var_names.push_back(problem.variable_name(j));
    for (int j = 0; j < n; ++j)
      lifted.problem.var_names.push_back("~" + problem.variable_name(j));
  }
  for (const Constraint& row : problem.rows) {
    Constraint folded;
    folded.sense = Sense::kLe;
    Rat row_sum(0);
    for (const auto& [column, value] : row.terms) row_sum += value;
    folded.rhs = Rat(2) * row.rhs - row_sum;
    for (const auto& [column, value] : row.terms)
      folded.terms.emplace_back(column, value);
    for (const auto& [column, value] : row.terms)
      folded.terms.emplace_back(n + column, -value);
    lifted.problem.rows.push_back(std::move(folded));
  }
  for (int j = 0; j < n; ++j) {
    Constraint link;
    link.sense = Sense::kEq;
    link.rhs = Rat(1);
    link.terms.emplace_back(j, Rat(1));
    link.terms.emplace_back(n + j, Rat(1));
    lifted.problem.rows.push_back(std::move(link));
  }
  return lifted;
}

// Translates an automorphism of a lifted problem back to a signed symmetry
// of the original.  With the column permutation partitioned into n x n
// blocks [[Q1, Q2], [Q3, Q4]], the translation is Q := Q1 - Q2 and P := the
// action on the first m rows.  The block identities Q1 = Q4 and Q2 = Q3, the
// block-diagonal row structure, and the forced action on the complement-link
// rows are all verified; a violation means the input was not an automorphism
// of a lifted problem and raises InternalError.
inline SymmetryPair extract(const SignedPermutation& lifted_cols,
                            const RowPermutation& lifted_rows) {
  if (!lifted_cols.is_unsigned())
    throw PreconditionError("lifted column permutation must be unsigned");
  if (lifted_cols.size() % 2 != 0)
    throw DimensionError("lifted column permutation must have even size");
  const int n = lifted_cols.size() / 2;
  const int m = lifted_rows.size() - n;
  if (m < 0)
    throw DimensionError(
        "lifted row permutation is shorter than the complement-link block");

  SymmetryPair pair;
  pair.cols.targets.resize(n);
  for (int j = 0; j < n; ++j) {
    const int image = lifted_cols.targets[j].index;
    const int image_bar = lifted_cols.targets[n + j].index;
    if (image < n) {
      if (image_bar != n + image)
        throw InternalError("lifted automorphism violates block symmetry");
      pair.cols.targets[j] = {image, 1};
    } else {
      if (image_bar != image - n)
        throw InternalError("lifted automorphism violates block symmetry");
      pair.cols.targets[j] = {image - n, -1};
    }
  }

  pair.rows.mapping.resize(m);
  for (int i = 0; i < m; ++i) {
    if (lifted_rows.mapping[i] >= m)
      throw InternalError("lifted automorphism mixes constraint blocks");
    pair.rows.mapping[i] = lifted_rows.mapping[i];
  }
  // The action on the link block is forced: link row j follows variable j.
  for (int j = 0; j < n; ++j)
    if (lifted_rows.mapping[m + j] != m + pair.cols.targets[j].index)
      throw InternalError(
          "lifted automorphism moves complement links inconsistently");
  return pair;
}

// The forward direction: builds the lifted automorphism of a signed
// symmetry, with column blocks [[Q+, -Q-], [-Q-, Q+]] and the forced action
// on the complement-link rows.  The pair must satisfy the constraint
// conditions P A Q = A and P (b - A q) = b on the given pure <= problem;
// otherwise a precondition error is raised.  extract(embed(s, p)) == (s, p)
// exactly.
inline std::pair<SignedPermutation, RowPermutation> embed(
    const BinaryProblem& problem, const SymmetryPair& symmetry) {
  const int n = problem.n;
  const int m = problem.m();
  if (symmetry.cols.size() != n || symmetry.rows.size() != m)
    throw DimensionError("symmetry size does not match problem");
  validate(symmetry.cols);
  validate(symmetry.rows);
  for (const Constraint& row : problem.rows)
    if (row.sense != Sense::kLe)
      throw PreconditionError("embed requires a pure <= system");

  // Verify the constraint conditions with the given witness.
  {
    const std::vector<Rat> q = complement_shift(symmetry.cols);
    const SignedPermutation inv = inverse(symmetry.cols);
    for (int i = 0; i < m; ++i) {
      const detail::RowKey transformed = detail::transformed_row_key(
          problem.rows[symmetry.rows.mapping[i]], inv, q);
      const detail::RowKey original = {problem.rows[i].sense,
                                       problem.rows[i].rhs,
                                       problem.rows[i].terms};
      if (detail::compare(original, transformed) != 0)
        throw PreconditionError(
            "pair is not a constraint symmetry of the problem");
    }
  }

  SignedPermutation cols;
  cols.targets.resize(2 * n);
  RowPermutation rows;
  rows.mapping.resize(m + n);
  for (int i = 0; i < m; ++i) rows.mapping[i] = symmetry.rows.mapping[i];
  for (int j = 0; j < n; ++j) {
    const SignedTarget& target = symmetry.cols.targets[j];
    if (target.sign > 0) {
      cols.targets[j] = {target.index, 1};
      cols.targets[n + j] = {n + target.index, 1};
    } else {
      cols.targets[j] = {n + target.index, 1};
      cols.targets[n + j] = {target.index, 1};
    }
    rows.mapping[m + j] = m + target.index;
  }
  return {std::move(cols), std::move(rows)};
}

struct SignedDetectionResult {
  std::vector<SymmetryPair> generators;
  bool complete = true;
};

// Signed symmetry detection: lift, run the unsigned engine on the lifted
// problem, translate every generator back.  The closure of the output is the
// problem's signed symmetry group in the given mode, and every returned pair
// passes check_symmetry on the original problem.
inline SignedDetectionResult detect_signed(
    const BinaryProblem& problem, SymmetryMode mode,
    long long node_budget = kDefaultNodeBudget) {
  const BinaryProblem le_problem = split_equalities(problem);
  const bool had_equalities = le_problem.m() != problem.m();
  const LiftedProblem lifted = lift(le_problem);
  const GeneratorSearchResult search =
      find_generators(build_graph(lifted.problem, mode), node_budget);

  SignedDetectionResult result;
  result.complete = search.complete;
  for (const SymmetryPair& generator : search.generators) {
    SymmetryPair pair = extract(generator.cols, generator.rows);
    if (pair.cols.is_identity()) continue;  // pure row shuffle
    if (had_equalities) {
      // The witness from the split system does not act on the original
      // rows; recompute it there.  Splitting can also accept maps that
      // reverse an equality row's sign, which the exact row matching on the
      // original rejects; such generators are dropped.
      std::optional<RowPermutation> witness =
          check_symmetry(problem, pair.cols, mode);
      if (!witness) continue;
      pair.rows = *std::move(witness);
    }
    result.generators.push_back(std::move(pair));
  }
  return result;
}

// Exhaustive oracle over all 2^n n! signed permutations, keeping those for
// which check_symmetry yields a witness.  Requires 2^n n! <= cap.
inline std::vector<SymmetryPair> brute_force_signed(
    const BinaryProblem& problem, SymmetryMode mode, long long cap) {
  long long work = 1;
  for (int k = 1; k <= problem.n; ++k) {
    work *= 2 * k;  // 2^n * n!
    if (work > cap) throw BudgetError("signed enumeration exceeds cap");
  }

  std::vector<SymmetryPair> found;
  std::vector<int> images(problem.n);
  std::iota(images.begin(), images.end(), 0);
  do {
    const int patterns = 1 << problem.n;
    for (int bits = 0; bits < patterns; ++bits) {
      SignedPermutation perm;
      perm.targets.resize(problem.n);
      for (int j = 0; j < problem.n; ++j)
        perm.targets[j] = {images[j], (bits >> j) & 1 ? -1 : 1};
      std::optional<RowPermutation> witness =
          check_symmetry(problem, perm, mode);
      if (witness) found.push_back({std::move(perm), *std::move(witness)});
    }
  } while (std::next_permutation(images.begin(), images.end()));
  return found;
}

}  // namespace binsym

#endif  // BINSYM_LIFT_HPP_
