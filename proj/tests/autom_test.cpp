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

#include "binsym/automorphism.hpp"
#include "binsym/format.hpp"
#include "binsym/graph.hpp"
#include "test_support.hpp"

namespace binsym {
namespace {

using testing::as_set;
using testing::columns_of;
using testing::cover6;
using testing::example2d;
using testing::example3d;

TEST(BuildGraphTest, TwoVariableExampleConstraintOnly) {
  const ColoredBipartiteGraph graph =
      build_graph(example2d(), SymmetryMode::kConstraintOnly);
  EXPECT_EQ(graph.num_rows, 1);
  EXPECT_EQ(graph.num_cols, 2);
  // Both columns share one color; the two edges carry distinct colors
  // because the coefficients are -1 and +1.
  EXPECT_EQ(graph.vertex_color[1], graph.vertex_color[2]);
  const int e1 = graph.edge_color(0, 1);
  const int e2 = graph.edge_color(0, 2);
  ASSERT_GE(e1, 0);
  ASSERT_GE(e2, 0);
  EXPECT_NE(e1, e2);
}

TEST(BuildGraphTest, CoverObjectiveColorClasses) {
  // c = (1 2 3 3 1 2): columns {1,5}, {2,6}, {3,4} share colors.
  const ColoredBipartiteGraph graph =
      build_graph(cover6(), SymmetryMode::kFull);
  const int m = graph.num_rows;
  EXPECT_EQ(graph.vertex_color[m + 0], graph.vertex_color[m + 4]);
  EXPECT_EQ(graph.vertex_color[m + 1], graph.vertex_color[m + 5]);
  EXPECT_EQ(graph.vertex_color[m + 2], graph.vertex_color[m + 3]);
  std::set<int> distinct;
  for (int j = 0; j < 6; ++j) distinct.insert(graph.vertex_color[m + j]);
  EXPECT_EQ(distinct.size(), 3u);
}

TEST(BuildGraphTest, NoRowsUniformObjectiveIsEdgeless) {
  const BinaryProblem problem =
      make_problem("flat", 3, {}, {Rat(1), Rat(1), Rat(1)});
  const ColoredBipartiteGraph graph =
      build_graph(problem, SymmetryMode::kFull);
  EXPECT_EQ(graph.num_rows, 0);
  for (const auto& neighbors : graph.adj) EXPECT_TRUE(neighbors.empty());
  EXPECT_EQ(graph.vertex_color[0], graph.vertex_color[1]);
  EXPECT_EQ(graph.vertex_color[1], graph.vertex_color[2]);
}

TEST(RefineTest, DiscretePartitionIsFixedPoint) {
  const ColoredBipartiteGraph graph =
      build_graph(cover6(), SymmetryMode::kFull);
  Partition discrete;
  for (int v = 0; v < graph.vertex_count(); ++v) discrete.cells.push_back({v});
  EXPECT_EQ(refine(graph, discrete), discrete);
}

TEST(RefineTest, EdgelessUniformGraphStaysCoarse) {
  const BinaryProblem problem =
      make_problem("flat", 4, {}, {Rat(0), Rat(0), Rat(0), Rat(0)});
  const ColoredBipartiteGraph graph =
      build_graph(problem, SymmetryMode::kFull);
  const Partition unit = color_partition(graph);
  EXPECT_EQ(refine(graph, unit), unit);
}

TEST(RefineTest, RefinementIsIdempotentAndNeverMerges) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const BinaryProblem problem = binsym::testing::random_problem(rng, 5, 4);
    const ColoredBipartiteGraph graph =
        build_graph(problem, SymmetryMode::kFull);
    const Partition unit = color_partition(graph);
    const Partition refined = refine(graph, unit);
    EXPECT_GE(refined.cells.size(), unit.cells.size());
    EXPECT_EQ(refine(graph, refined), refined);
  }
}

TEST(RefineTest, CoverColumnsSplitIntoObjectiveClasses) {
  const ColoredBipartiteGraph graph =
      build_graph(cover6(), SymmetryMode::kFull);
  const Partition refined = refine(graph, color_partition(graph));
  // Refinement only splits, so at least the three objective classes remain
  // separate cells.
  for (const auto& cell : refined.cells) {
    std::set<int> colors;
    for (int v : cell) colors.insert(graph.vertex_color[v]);
    EXPECT_EQ(colors.size(), 1u);
  }
}

TEST(FindGeneratorsTest, CoverConstraintGroupMatchesKnownGenerators) {
  const UnsignedDetectionResult result =
      detect_unsigned(cover6(), SymmetryMode::kConstraintOnly);
  ASSERT_TRUE(result.complete);
  const std::vector<SignedPermutation> known = {
      parse_cycles("(1 3)", 6), parse_cycles("(2 4)", 6),
      parse_cycles("(4 6)", 6), parse_cycles("(1 2)(3 4)(5 6)", 6)};
  const ClosureResult detected_closure =
      closure(columns_of(result.generators), 10'000, 6);
  const ClosureResult known_closure = closure(known, 10'000);
  ASSERT_FALSE(detected_closure.overflow);
  ASSERT_FALSE(known_closure.overflow);
  // Two disjoint triangles with interchangeable parts: order (3!)^2 * 2.
  EXPECT_EQ(known_closure.elements.size(), 72u);
  EXPECT_EQ(as_set(detected_closure.elements), as_set(known_closure.elements));
}

TEST(FindGeneratorsTest, SingleSymmetricRow) {
  const BinaryProblem problem = make_problem(
      "pair", 2,
      {Constraint::make({{0, Rat(1)}, {1, Rat(1)}}, Sense::kLe, Rat(1))},
      {Rat(1), Rat(1)});
  const UnsignedDetectionResult result =
      detect_unsigned(problem, SymmetryMode::kFull);
  const ClosureResult group = closure(columns_of(result.generators), 100, problem.n);
  EXPECT_EQ(group.elements.size(), 2u);
}

TEST(FindGeneratorsTest, BudgetExhaustionIsFlagged) {
  const GeneratorSearchResult result =
      find_generators(build_graph(cover6(), SymmetryMode::kConstraintOnly),
                      /*node_budget=*/2);
  EXPECT_FALSE(result.complete);
}

TEST(FindGeneratorsTest, MatchesBruteForceOnRandomInstances) {
  std::mt19937 rng(23);
  for (int seed = 0; seed < 100; ++seed) {
    const BinaryProblem problem =
        binsym::testing::random_problem(rng, 4, 3, /*coefficient_range=*/1);
    for (const SymmetryMode mode :
         {SymmetryMode::kFull, SymmetryMode::kConstraintOnly}) {
      const ColoredBipartiteGraph graph = build_graph(problem, mode);
      const GeneratorSearchResult found = find_generators(graph);
      ASSERT_TRUE(found.complete);
      const std::vector<SymmetryPair> oracle =
          brute_force_automorphisms(graph, 1'000'000);
      const ClosureResult fast = closure(columns_of(found.generators), 100'000, problem.n);
      // The oracle returns whole-graph automorphisms; compare the column
      // groups (row actions are determined up to equal-row swaps, which the
      // column closure comparison deliberately ignores).
      std::set<SignedPermutation> oracle_cols;
      for (const SymmetryPair& pair : oracle) oracle_cols.insert(pair.cols);
      std::set<SignedPermutation> fast_cols(fast.elements.begin(),
                                            fast.elements.end());
      EXPECT_TRUE(std::includes(oracle_cols.begin(), oracle_cols.end(),
                                fast_cols.begin(), fast_cols.end()))
          << "detected column group not contained in oracle";
      // And every oracle column permutation must be detected.
      EXPECT_TRUE(std::includes(fast_cols.begin(), fast_cols.end(),
                                oracle_cols.begin(), oracle_cols.end()))
          << "oracle column permutation missed by the search";
    }
  }
}

TEST(BruteForceTest, EdgelessTwoColumnGraph) {
  const BinaryProblem problem = make_problem("flat", 2, {}, {Rat(0), Rat(0)});
  const ColoredBipartiteGraph graph =
      build_graph(problem, SymmetryMode::kFull);
  EXPECT_EQ(brute_force_automorphisms(graph, 100).size(), 2u);
}

TEST(BruteForceTest, TwoVariableExampleHasTrivialUnsignedGroup) {
  const ColoredBipartiteGraph graph =
      build_graph(example2d(), SymmetryMode::kConstraintOnly);
  const std::vector<SymmetryPair> all = brute_force_automorphisms(graph, 100);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_TRUE(all[0].cols.is_identity());
}

TEST(BruteForceTest, SingleSignedRowExampleFullMode) {
  // Coefficients (1 -1 1) admit exactly the swap of columns 1 and 3.
  const ColoredBipartiteGraph graph =
      build_graph(example3d(), SymmetryMode::kFull);
  const std::vector<SymmetryPair> all = brute_force_automorphisms(graph, 100);
  EXPECT_EQ(all.size(), 2u);
}

TEST(BruteForceTest, CapIsEnforced) {
  const ColoredBipartiteGraph graph =
      build_graph(cover6(), SymmetryMode::kFull);
  EXPECT_THROW(brute_force_automorphisms(graph, 10), BudgetError);
}

TEST(PropertyTest, GeneratorsPassCheckSymmetry) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const BinaryProblem problem = binsym::testing::random_problem(rng, 5, 4);
    for (const SymmetryMode mode :
         {SymmetryMode::kFull, SymmetryMode::kConstraintOnly}) {
      const UnsignedDetectionResult result = detect_unsigned(problem, mode);
      for (const SymmetryPair& pair : result.generators)
        EXPECT_TRUE(check_symmetry(problem, pair.cols, mode));
    }
  }
}

TEST(PropertyTest, FullModeNeverMapsAcrossObjectiveClasses) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const BinaryProblem problem = binsym::testing::random_problem(rng, 5, 3);
    const UnsignedDetectionResult result =
        detect_unsigned(problem, SymmetryMode::kFull);
    for (const SymmetryPair& pair : result.generators)
      for (int j = 0; j < problem.n; ++j)
        EXPECT_EQ(problem.objective[j],
                  problem.objective[pair.cols.targets[j].index]);
  }
}

TEST(PropertyTest, RefinedCellsAreUnionsOfOrbits) {
  // Every automorphism maps each refined cell onto itself.
  std::mt19937 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const BinaryProblem problem = binsym::testing::random_problem(rng, 5, 3);
    const ColoredBipartiteGraph graph =
        build_graph(problem, SymmetryMode::kFull);
    const Partition refined = refine(graph, color_partition(graph));
    const GeneratorSearchResult result = find_generators(graph);
    for (const SymmetryPair& pair : result.generators) {
      for (const auto& cell : refined.cells) {
        std::set<int> members(cell.begin(), cell.end());
        for (int v : cell) {
          const int image =
              graph.is_row_vertex(v)
                  ? pair.rows.mapping[v]
                  : graph.num_rows +
                        pair.cols.targets[v - graph.num_rows].index;
          EXPECT_TRUE(members.contains(image));
        }
      }
    }
  }
}

}  // namespace
}  // namespace binsym
