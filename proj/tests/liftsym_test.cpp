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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "binsym/format.hpp"
#include "binsym/lift.hpp"
#include "test_support.hpp"

namespace binsym {
namespace {

using testing::all_points;
using testing::as_set;
using testing::columns_of;
using testing::cover6;
using testing::example2d;
using testing::example3d;

TEST(SplitEqualitiesTest, SplitsIntoOpposingRows) {
  const BinaryProblem problem = make_problem(
      "eq", 2,
      {Constraint::make({{0, Rat(1)}, {1, Rat(1)}}, Sense::kEq, Rat(1))},
      {Rat(0), Rat(0)});
  const BinaryProblem split = split_equalities(problem);
  ASSERT_EQ(split.m(), 2);
  EXPECT_EQ(split.rows[0].sense, Sense::kLe);
  EXPECT_EQ(split.rows[0].rhs, Rat(1));
  EXPECT_EQ(split.rows[1].sense, Sense::kLe);
  EXPECT_EQ(split.rows[1].rhs, Rat(-1));
  EXPECT_EQ(split.rows[1].terms[0].second, Rat(-1));
  // Same feasible set.
  for (const BitVector& point : all_points(2))
    EXPECT_EQ(evaluate(problem, point).feasible,
              evaluate(split, point).feasible);
}

TEST(LiftTest, ThreeVariableExample) {
  const LiftedProblem lifted = lift(example3d());
  const BinaryProblem& doubled = lifted.problem;
  EXPECT_EQ(lifted.origin_n, 3);
  EXPECT_EQ(doubled.n, 6);
  ASSERT_EQ(doubled.m(), 4);
  // Folded row: coefficients (1 -1 1 -1 1 -1), rhs 2*1 - (1-1+1) = 1.
  const Constraint& folded = doubled.rows[0];
  EXPECT_EQ(folded.sense, Sense::kLe);
  EXPECT_EQ(folded.rhs, Rat(1));
  ASSERT_EQ(folded.terms.size(), 6u);
  for (int j = 0; j < 6; ++j) {
    EXPECT_EQ(folded.terms[j].first, j);
    EXPECT_EQ(folded.terms[j].second, j % 2 == 0 ? Rat(1) : Rat(-1));
  }
  // Complement links x_j + ~x_j = 1.
  for (int j = 0; j < 3; ++j) {
    const Constraint& link = doubled.rows[1 + j];
    EXPECT_EQ(link.sense, Sense::kEq);
    EXPECT_EQ(link.rhs, Rat(1));
    ASSERT_EQ(link.terms.size(), 2u);
    EXPECT_EQ(link.terms[0].first, j);
    EXPECT_EQ(link.terms[1].first, 3 + j);
  }
  // Objective (c, -c).
  EXPECT_EQ(doubled.objective,
            (std::vector<Rat>{Rat(1), Rat(-1), Rat(1), Rat(-1), Rat(1),
                              Rat(-1)}));
}

TEST(LiftTest, TwoVariableExample) {
  const LiftedProblem lifted = lift(example2d());
  const Constraint& folded = lifted.problem.rows[0];
  ASSERT_EQ(folded.terms.size(), 4u);
  EXPECT_EQ(folded.terms[0].second, Rat(-1));
  EXPECT_EQ(folded.terms[1].second, Rat(1));
  EXPECT_EQ(folded.terms[2].second, Rat(1));
  EXPECT_EQ(folded.terms[3].second, Rat(-1));
  EXPECT_EQ(folded.rhs, Rat(0));
}

TEST(LiftTest, ZeroDataGivesZeroRows) {
  const BinaryProblem problem = make_problem(
      "zero", 2, {Constraint::make({}, Sense::kLe, Rat(0))}, {Rat(0), Rat(0)});
  const LiftedProblem lifted = lift(problem);
  EXPECT_TRUE(lifted.problem.rows[0].terms.empty());
  EXPECT_EQ(lifted.problem.rows[0].rhs, Rat(0));
}

TEST(LiftTest, RequiresPureLeSystem) {
  const BinaryProblem problem = make_problem(
      "eq", 1, {Constraint::make({{0, Rat(1)}}, Sense::kEq, Rat(1))},
      {Rat(1)});
  EXPECT_THROW(lift(problem), PreconditionError);
  EXPECT_NO_THROW(lift(split_equalities(problem)));
}

// The lifted problem is equivalent to the original: x is feasible iff
// (x, e-x) is, with the same objective value after undoing the dropped
// affine normalization.
TEST(LiftTest, EquivalenceOnAllPoints) {
  std::mt19937 rng(41);
  std::vector<BinaryProblem> instances = {cover6(), example2d(), example3d()};
  for (int trial = 0; trial < 20; ++trial)
    instances.push_back(binsym::testing::random_problem(rng, 5, 4));
  for (const BinaryProblem& problem : instances) {
    const LiftedProblem lifted = lift(split_equalities(problem));
    Rat objective_sum(0);
    for (const Rat& value : problem.objective) objective_sum += value;
    for (const BitVector& point : all_points(problem.n)) {
      BitVector doubled(2 * problem.n);
      for (int j = 0; j < problem.n; ++j) {
        doubled[j] = point[j];
        doubled[problem.n + j] = 1 - point[j];
      }
      const Solution original = evaluate(problem, point);
      const Solution image = evaluate(lifted.problem, doubled);
      EXPECT_EQ(original.feasible, image.feasible);
      EXPECT_EQ(original.objective,
                (image.objective + objective_sum) / Rat(2) +
                    problem.objective_offset);
    }
  }
}

TEST(ExtractTest, IdentityMapsToIdentity) {
  const SymmetryPair pair = extract(SignedPermutation::identity(6),
                                    RowPermutation::identity(4));
  EXPECT_TRUE(pair.cols.is_identity());
  EXPECT_TRUE(pair.rows.is_identity());
  for (const Rat& entry : complement_shift(pair.cols))
    EXPECT_EQ(entry, Rat(0));
}

TEST(ExtractTest, TwistedThreeCycleFromLiftedAutomorphism) {
  // Lifted columns (x1 x2 x3 ~x1 ~x2 ~x3): the automorphism pairing
  // (x1 ~x2 x3)(~x1 x2 ~x3) with links following their variables.
  const SignedPermutation lifted_cols = parse_cycles("(1 5 3)(4 2 6)", 6);
  RowPermutation lifted_rows;
  lifted_rows.mapping = {0, 2, 3, 1};  // folded row fixed, links rotate
  const SymmetryPair pair = extract(lifted_cols, lifted_rows);
  EXPECT_EQ(pair.cols, parse_cycles("(1 -2 3)", 3));
  const std::vector<Rat> q = complement_shift(pair.cols);
  EXPECT_EQ(q, (std::vector<Rat>{Rat(0), Rat(1), Rat(1)}));
  EXPECT_TRUE(pair.rows.is_identity());
}

TEST(ExtractTest, TwoVariableComplementSwap) {
  // x1 <-> ~x2 and x2 <-> ~x1 on lifted columns (x1 x2 ~x1 ~x2).
  const SignedPermutation lifted_cols = parse_cycles("(1 4)(2 3)", 4);
  RowPermutation lifted_rows;
  lifted_rows.mapping = {0, 2, 1};
  const SymmetryPair pair = extract(lifted_cols, lifted_rows);
  EXPECT_EQ(pair.cols.targets[0], (SignedTarget{1, -1}));
  EXPECT_EQ(pair.cols.targets[1], (SignedTarget{0, -1}));
}

TEST(ExtractTest, BlockViolationsRaiseInternalError) {
  // x1 -> ~x1 while ~x1 -> ~x2 breaks the block pairing.
  SignedPermutation cols = SignedPermutation::identity(4);
  cols.targets[0] = {2, 1};
  cols.targets[2] = {3, 1};
  cols.targets[3] = {0, 1};
  cols.targets[1] = {1, 1};
  EXPECT_THROW(extract(cols, RowPermutation::identity(3)), InternalError);
}

TEST(EmbedTest, IdentityAndBlockDiagonal) {
  const BinaryProblem problem = example3d();
  const auto [cols, rows] =
      embed(problem, {SignedPermutation::identity(3),
                      RowPermutation::identity(1)});
  EXPECT_TRUE(cols.is_identity());
  EXPECT_TRUE(rows.is_identity());
  // An all-positive symmetry embeds block-diagonally.
  const SignedPermutation swap13 = parse_cycles("(1 3)", 3);
  const auto witness =
      check_symmetry(problem, swap13, SymmetryMode::kFull);
  ASSERT_TRUE(witness);
  const auto [swap_cols, swap_rows] = embed(problem, {swap13, *witness});
  EXPECT_EQ(swap_cols, parse_cycles("(1 3)(4 6)", 6));
}

TEST(EmbedTest, TwistedThreeCycle) {
  const BinaryProblem problem = example3d();
  const SignedPermutation cycle = parse_cycles("(1 -2 3)", 3);
  const auto witness = check_symmetry(problem, cycle, SymmetryMode::kFull);
  ASSERT_TRUE(witness);
  const auto [cols, rows] = embed(problem, {cycle, *witness});
  EXPECT_EQ(cols, parse_cycles("(1 5 3)(4 2 6)", 6));
  EXPECT_EQ(rows.mapping, (std::vector<int>{0, 2, 3, 1}));
  // The embedded pair is an automorphism of the lifted problem.
  const LiftedProblem lifted = lift(problem);
  EXPECT_TRUE(
      check_symmetry(lifted.problem, cols, SymmetryMode::kFull));
}

TEST(EmbedTest, RejectsNonSymmetries) {
  const BinaryProblem problem = example3d();
  EXPECT_THROW(embed(problem, {parse_cycles("(1 2)", 3),
                               RowPermutation::identity(1)}),
               PreconditionError);
}

TEST(DetectSignedTest, ThreeVariableGroupOfOrderSix) {
  const SignedDetectionResult result =
      detect_signed(example3d(), SymmetryMode::kFull);
  ASSERT_TRUE(result.complete);
  const ClosureResult group =
      closure(columns_of(result.generators), 1000, 3);
  ASSERT_FALSE(group.overflow);
  EXPECT_EQ(group.elements.size(), 6u);
  EXPECT_TRUE(as_set(group.elements).contains(parse_cycles("(1 -2 3)", 3)));
  // Signed orbit: {x1, ~x2, x3} and its mirror.
  const SignedOrbitPartition partition =
      signed_orbits(columns_of(result.generators), 3);
  ASSERT_EQ(partition.classes.size(), 2u);
  EXPECT_EQ(partition.classes[0],
            (std::vector<Literal>{{0, false}, {1, true}, {2, false}}));
  for (const SymmetryPair& pair : result.generators)
    EXPECT_TRUE(check_symmetry(example3d(), pair.cols, SymmetryMode::kFull));
}

TEST(DetectSignedTest, TwoVariableGroupOfOrderTwo) {
  const SignedDetectionResult result =
      detect_signed(example2d(), SymmetryMode::kFull);
  const ClosureResult group =
      closure(columns_of(result.generators), 1000, 2);
  EXPECT_EQ(group.elements.size(), 2u);
  EXPECT_TRUE(as_set(group.elements).contains(parse_cycles("(1 -2)", 2)));
  // The nonidentity element maps (0,0) to (1,1).
  EXPECT_EQ(parse_cycles("(1 -2)", 2).apply({0, 0}), (BitVector{1, 1}));
}

TEST(DetectSignedTest, AsymmetricProblemIsTrivial) {
  const BinaryProblem problem = make_problem(
      "tiny", 1, {Constraint::make({{0, Rat(1)}}, Sense::kLe, Rat(0))},
      {Rat(1)});
  const SignedDetectionResult result =
      detect_signed(problem, SymmetryMode::kFull);
  EXPECT_TRUE(result.generators.empty());
}

TEST(BruteForceSignedTest, SingleFreeVariable) {
  const BinaryProblem problem = make_problem("one", 1, {}, {Rat(1)});
  const std::vector<SymmetryPair> full =
      brute_force_signed(problem, SymmetryMode::kFull, 1000);
  ASSERT_EQ(full.size(), 1u);
  EXPECT_TRUE(full[0].cols.is_identity());
  // Complementing the variable preserves the (empty) constraints but not
  // the objective, so it shows up only in constraint-only mode.
  const std::vector<SymmetryPair> constraint =
      brute_force_signed(problem, SymmetryMode::kConstraintOnly, 1000);
  EXPECT_EQ(constraint.size(), 2u);
}

TEST(BruteForceSignedTest, EmptyProblem) {
  const BinaryProblem problem = make_problem("void", 0, {}, {});
  const std::vector<SymmetryPair> all =
      brute_force_signed(problem, SymmetryMode::kFull, 10);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_TRUE(all[0].cols.is_identity());
}

TEST(BruteForceSignedTest, CapIsEnforced) {
  EXPECT_THROW(brute_force_signed(cover6(), SymmetryMode::kFull, 100),
               BudgetError);
}

TEST(BruteForceSignedTest, TwoVariableOracle) {
  const std::vector<SymmetryPair> all =
      brute_force_signed(example2d(), SymmetryMode::kFull, 1000);
  ASSERT_EQ(all.size(), 2u);
  const std::set<SignedPermutation> cols = as_set(columns_of(all));
  EXPECT_TRUE(cols.contains(SignedPermutation::identity(2)));
  EXPECT_TRUE(cols.contains(parse_cycles("(1 -2)", 2)));
}

// Theorem-style round trips: extract(embed(s, p)) == (s, p) on detected
// symmetries, and embed(extract(g)) == g on lifted automorphisms.
TEST(RoundTripTest, EmbedExtractIdentities) {
  std::mt19937 rng(43);
  std::vector<BinaryProblem> instances = {cover6(), example2d(), example3d()};
  for (int trial = 0; trial < 10; ++trial) {
    const auto planted =
        binsym::testing::planted_symmetric_problem(rng, 4, 2, true);
    instances.push_back(planted.problem);
  }
  int pairs_checked = 0;
  for (const BinaryProblem& problem : instances) {
    for (const SymmetryMode mode :
         {SymmetryMode::kFull, SymmetryMode::kConstraintOnly}) {
      const SignedDetectionResult detected = detect_signed(problem, mode);
      for (const SymmetryPair& pair : detected.generators) {
        const auto [lifted_cols, lifted_rows] = embed(problem, pair);
        const SymmetryPair back = extract(lifted_cols, lifted_rows);
        EXPECT_EQ(back.cols, pair.cols);
        EXPECT_EQ(back.rows, pair.rows);
        ++pairs_checked;
      }
      // Raw lifted automorphisms round-trip the other way.
      const LiftedProblem lifted = lift(split_equalities(problem));
      const GeneratorSearchResult raw =
          find_generators(build_graph(lifted.problem, mode));
      for (const SymmetryPair& generator : raw.generators) {
        const SymmetryPair pair = extract(generator.cols, generator.rows);
        const auto [cols2, rows2] =
            embed(split_equalities(problem), pair);
        EXPECT_EQ(cols2, generator.cols);
        EXPECT_EQ(rows2, generator.rows);
      }
    }
  }
  EXPECT_GT(pairs_checked, 10);
}

// Lifted automorphisms never mix the folded block with the link block.
TEST(PropertyTest, LiftedAutomorphismsPreserveBlocks) {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    const BinaryProblem problem = binsym::testing::random_problem(rng, 4, 3);
    const LiftedProblem lifted = lift(problem);
    const GeneratorSearchResult raw = find_generators(
        build_graph(lifted.problem, SymmetryMode::kConstraintOnly));
    for (const SymmetryPair& generator : raw.generators) {
      for (int i = 0; i < problem.m(); ++i)
        EXPECT_LT(generator.rows.mapping[i], problem.m());
      for (int j = 0; j < problem.n; ++j)
        EXPECT_GE(generator.rows.mapping[problem.m() + j], problem.m());
    }
  }
}

// Small-scale oracle equivalence across the four detection modes.
TEST(PropertyTest, DetectionMatchesBruteForceOracle) {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 15; ++trial) {
    const BinaryProblem problem = binsym::testing::random_problem(rng, 4, 3);
    for (const SymmetryMode mode :
         {SymmetryMode::kFull, SymmetryMode::kConstraintOnly}) {
      const SignedDetectionResult detected = detect_signed(problem, mode);
      const ClosureResult detected_closure =
          closure(columns_of(detected.generators), 100'000, problem.n);
      ASSERT_FALSE(detected_closure.overflow);
      const std::vector<SymmetryPair> oracle =
          brute_force_signed(problem, mode, 1'000'000);
      EXPECT_EQ(as_set(detected_closure.elements),
                as_set(columns_of(oracle)));
    }
  }
}

// Unsigned symmetries are the all-positive subgroup of the signed group.
TEST(PropertyTest, UnsignedGroupIsSignedSubgroup) {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 15; ++trial) {
    const BinaryProblem problem = binsym::testing::random_problem(rng, 4, 3);
    const SignedDetectionResult signed_detected =
        detect_signed(problem, SymmetryMode::kFull);
    const UnsignedDetectionResult unsigned_detected =
        detect_unsigned(problem, SymmetryMode::kFull);
    const auto signed_closure = as_set(
        closure(columns_of(signed_detected.generators), 100'000, problem.n)
            .elements);
    const auto unsigned_closure = as_set(
        closure(columns_of(unsigned_detected.generators), 100'000, problem.n)
            .elements);
    std::set<SignedPermutation> all_positive;
    for (const SignedPermutation& perm : signed_closure)
      if (perm.is_unsigned()) all_positive.insert(perm);
    EXPECT_EQ(all_positive, unsigned_closure);
  }
}

}  // namespace
}  // namespace binsym
