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

#ifndef BINSYM_AUTOMORPHISM_HPP_
#define BINSYM_AUTOMORPHISM_HPP_

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "binsym/errors.hpp"
#include "binsym/graph.hpp"
#include "binsym/permutation.hpp"
#include "binsym/symmetry.hpp"

namespace binsym {

// Checks a full vertex bijection against colors, adjacency and edge colors.
inline bool is_automorphism(const ColoredBipartiteGraph& graph,
                            const std::vector<int>& perm) {
  const int count = graph.vertex_count();
  for (int v = 0; v < count; ++v) {
    if (graph.vertex_color[v] != graph.vertex_color[perm[v]]) return false;
    if (graph.adj[v].size() != graph.adj[perm[v]].size()) return false;
    for (const auto& [u, color] : graph.adj[v])
      if (graph.edge_color(perm[v], perm[u]) != color) return false;
  }
  return true;
}

// Splits one graph automorphism into its row and column actions.  Vertex
// colors keep rows and columns apart, so the restriction is well defined.
inline SymmetryPair split_automorphism(const ColoredBipartiteGraph& graph,
                                       const std::vector<int>& perm) {
  SymmetryPair pair;
  pair.rows.mapping.resize(graph.num_rows);
  for (int r = 0; r < graph.num_rows; ++r) pair.rows.mapping[r] = perm[r];
  pair.cols.targets.resize(graph.num_cols);
  for (int j = 0; j < graph.num_cols; ++j)
    pair.cols.targets[j] = {perm[graph.num_rows + j] - graph.num_rows, 1};
  return pair;
}

struct GeneratorSearchResult {
  std::vector<SymmetryPair> generators;
  bool complete = true;       // false when the node budget ran out
  long long nodes = 0;        // search tree nodes visited
};

inline constexpr long long kDefaultNodeBudget = 1'000'000;

namespace detail {

// Individualization-refinement backtracking over an ordered partition.
// Leaves are compared against the first discovered leaf; matching leaves
// yield automorphisms.  Subtrees whose refinement invariant differs from the
// first path are pruned, as are branch vertices lying in the orbit of an
// already-explored sibling under generators that fix the current path.
class AutomorphismSearch {
 public:
  AutomorphismSearch(const ColoredBipartiteGraph& graph, long long budget)
      : graph_(graph), budget_(budget) {}

  GeneratorSearchResult run() {
    search(refine(graph_, color_partition(graph_)), 0);
    GeneratorSearchResult result;
    result.complete = !out_of_budget_;
    result.nodes = nodes_;
    result.generators.reserve(generators_.size());
    for (const std::vector<int>& perm : generators_)
      result.generators.push_back(split_automorphism(graph_, perm));
    return result;
  }

 private:
  using UnionFind = detail::UnionFind;

  // Invariant of a refined node: the (size, color) profile of its cells.
  // Isomorphic search states produce identical profiles.
  std::vector<int> invariant(const Partition& partition) const {
    std::vector<int> profile;
    profile.reserve(2 * partition.cells.size());
    for (const auto& cell : partition.cells) {
      profile.push_back(static_cast<int>(cell.size()));
      profile.push_back(graph_.vertex_color[cell[0]]);
    }
    return profile;
  }

  static int target_cell(const Partition& partition) {
    size_t best = partition.cells.size();
    for (size_t ci = 0; ci < partition.cells.size(); ++ci) {
      const size_t size = partition.cells[ci].size();
      if (size > 1 && (best == partition.cells.size() ||
                       size < partition.cells[best].size()))
        best = ci;
    }
    return static_cast<int>(best);
  }

  static Partition individualize(const Partition& partition, int cell_index,
                                 int vertex) {
    Partition next;
    next.cells.reserve(partition.cells.size() + 1);
    for (size_t ci = 0; ci < partition.cells.size(); ++ci) {
      if (static_cast<int>(ci) != cell_index) {
        next.cells.push_back(partition.cells[ci]);
        continue;
      }
      next.cells.push_back({vertex});
      std::vector<int> rest;
      rest.reserve(partition.cells[ci].size() - 1);
      for (int v : partition.cells[ci])
        if (v != vertex) rest.push_back(v);
      next.cells.push_back(std::move(rest));
    }
    return next;
  }

  // Orbit partition of the vertex set under all found generators that fix
  // every vertex on the current search path.
  UnionFind path_stabilizer_orbits() const {
    UnionFind dsu(graph_.vertex_count());
    for (const std::vector<int>& generator : generators_) {
      bool fixes_path = true;
      for (int w : path_)
        if (generator[w] != w) {
          fixes_path = false;
          break;
        }
      if (!fixes_path) continue;
      for (int v = 0; v < graph_.vertex_count(); ++v)
        dsu.unite(v, generator[v]);
    }
    return dsu;
  }

  void search(Partition partition, size_t depth) {
    if (out_of_budget_) return;
    if (++nodes_ > budget_) {
      out_of_budget_ = true;
      return;
    }
    if (depth > 0) partition = refine(graph_, std::move(partition));
    const std::vector<int> profile = invariant(partition);
    if (!first_leaf_) {
      first_path_profiles_.push_back(profile);
    } else if (depth >= first_path_profiles_.size() ||
               profile != first_path_profiles_[depth]) {
      return;  // no automorphism can map the first leaf into this subtree
    }

    if (partition.discrete()) {
      std::vector<int> order;
      order.reserve(partition.cells.size());
      for (const auto& cell : partition.cells) order.push_back(cell[0]);
      if (!first_leaf_) {
        first_leaf_ = std::move(order);
        return;
      }
      std::vector<int> candidate(graph_.vertex_count());
      for (size_t k = 0; k < order.size(); ++k)
        candidate[(*first_leaf_)[k]] = order[k];
      bool is_id = true;
      for (int v = 0; v < graph_.vertex_count(); ++v)
        if (candidate[v] != v) {
          is_id = false;
          break;
        }
      if (!is_id && is_automorphism(graph_, candidate) &&
          std::find(generators_.begin(), generators_.end(), candidate) ==
              generators_.end())
        generators_.push_back(std::move(candidate));
      return;
    }

    const int cell_index = target_cell(partition);
    std::vector<int> tried;
    UnionFind orbits = path_stabilizer_orbits();
    size_t known_generators = generators_.size();
    for (int vertex : partition.cells[cell_index]) {
      bool redundant = false;
      for (int earlier : tried)
        if (orbits.find(earlier) == orbits.find(vertex)) {
          redundant = true;
          break;
        }
      if (redundant) continue;
      tried.push_back(vertex);
      path_.push_back(vertex);
      search(individualize(partition, cell_index, vertex), depth + 1);
      path_.pop_back();
      if (out_of_budget_) return;
      if (generators_.size() != known_generators) {
        orbits = path_stabilizer_orbits();
        known_generators = generators_.size();
      }
    }
  }

  const ColoredBipartiteGraph& graph_;
  const long long budget_;
  long long nodes_ = 0;
  bool out_of_budget_ = false;
  std::optional<std::vector<int>> first_leaf_;
  std::vector<std::vector<int>> first_path_profiles_;
  std::vector<std::vector<int>> generators_;
  std::vector<int> path_;
};

}  // namespace detail

// Finds a generator set whose closure is the full color- and
// adjacency-preserving automorphism group of the graph, split into (row,
// column) actions.  Deterministic for a fixed input.  When the node budget
// is exhausted the result carries the generators found so far and
// `complete == false`; the truncation is never silent.
inline GeneratorSearchResult find_generators(
    const ColoredBipartiteGraph& graph,
    long long node_budget = kDefaultNodeBudget) {
  detail::AutomorphismSearch search(graph, node_budget);
  return search.run();
}

// Exhaustive testing oracle: enumerates all bipartition-respecting vertex
// bijections and keeps the automorphisms, identity included.  Requires
// m! * n! <= cap, otherwise throws BudgetError.
inline std::vector<SymmetryPair> brute_force_automorphisms(
    const ColoredBipartiteGraph& graph, long long cap) {
  long long work = 1;
  for (int k = 2; k <= graph.num_rows; ++k) {
    work *= k;
    if (work > cap) throw BudgetError("automorphism enumeration exceeds cap");
  }
  for (int k = 2; k <= graph.num_cols; ++k) {
    work *= k;
    if (work > cap) throw BudgetError("automorphism enumeration exceeds cap");
  }

  std::vector<SymmetryPair> found;
  std::vector<int> row_perm(graph.num_rows), col_perm(graph.num_cols);
  std::iota(row_perm.begin(), row_perm.end(), 0);
  std::vector<int> candidate(graph.vertex_count());
  do {
    std::iota(col_perm.begin(), col_perm.end(), 0);
    do {
      for (int r = 0; r < graph.num_rows; ++r) candidate[r] = row_perm[r];
      for (int j = 0; j < graph.num_cols; ++j)
        candidate[graph.num_rows + j] = graph.num_rows + col_perm[j];
      if (is_automorphism(graph, candidate))
        found.push_back(split_automorphism(graph, candidate));
    } while (std::next_permutation(col_perm.begin(), col_perm.end()));
  } while (std::next_permutation(row_perm.begin(), row_perm.end()));
  return found;
}

struct UnsignedDetectionResult {
  std::vector<SymmetryPair> generators;
  bool complete = true;
};

// Unsigned symmetry detection: graph construction plus generator search.
// Every returned pair passes check_symmetry on the problem in the same mode.
inline UnsignedDetectionResult detect_unsigned(
    const BinaryProblem& problem, SymmetryMode mode,
    long long node_budget = kDefaultNodeBudget) {
  const GeneratorSearchResult search =
      find_generators(build_graph(problem, mode), node_budget);
  return {search.generators, search.complete};
}

}  // namespace binsym

#endif  // BINSYM_AUTOMORPHISM_HPP_
