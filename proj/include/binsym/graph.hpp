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

#ifndef BINSYM_GRAPH_HPP_
#define BINSYM_GRAPH_HPP_

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "binsym/problem.hpp"
#include "binsym/symmetry.hpp"

namespace binsym {

// Bipartite encoding of a problem's symmetry conditions.  Vertices 0..m-1
// are rows, m..m+n-1 are columns.  Vertex colors separate rows from columns
// and encode (sense, rhs) respectively the objective coefficient; edge
// colors encode matrix coefficients.  Color-preserving automorphisms of this
// graph are exactly the problem's (row, column) symmetries in the chosen
// mode.  Edge colors are native: no gadget vertices are introduced.
struct ColoredBipartiteGraph {
  int num_rows = 0;
  int num_cols = 0;
  std::vector<int> vertex_color;  // dense ids; row and column ids disjoint
  std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbor, edge color)
  std::vector<std::string> vertex_color_legend;       // color id -> source value
  std::vector<std::string> edge_color_legend;

  int vertex_count() const { return num_rows + num_cols; }
  bool is_row_vertex(int v) const { return v < num_rows; }

  // Edge color lookup; -1 when the edge is absent.
  int edge_color(int v, int u) const {
    const auto& neighbors = adj[v];
    auto it = std::lower_bound(
        neighbors.begin(), neighbors.end(), u,
        [](const std::pair<int, int>& edge, int vertex) {
          return edge.first < vertex;
        });
    if (it == neighbors.end() || it->first != u) return -1;
    return it->second;
  }
};

inline ColoredBipartiteGraph build_graph(const BinaryProblem& problem,
                                         SymmetryMode mode) {
  ColoredBipartiteGraph graph;
  graph.num_rows = problem.m();
  graph.num_cols = problem.n;
  graph.vertex_color.resize(graph.vertex_count());
  graph.adj.resize(graph.vertex_count());

  // Row colors: one id per distinct (sense, rhs) pair, in sorted order so
  // the numbering does not depend on row order.
  std::map<std::pair<int, Rat>, int> row_color;
  for (const Constraint& row : problem.rows)
    row_color.emplace(std::make_pair(static_cast<int>(row.sense), row.rhs),
                      0);
  for (auto& [key, id] : row_color) {
    id = static_cast<int>(graph.vertex_color_legend.size());
    graph.vertex_color_legend.push_back(
        std::string(key.first == static_cast<int>(Sense::kLe) ? "row <= "
                                                              : "row = ") +
        rational_to_string(key.second));
  }
  for (int r = 0; r < problem.m(); ++r)
    graph.vertex_color[r] =
        row_color.at({static_cast<int>(problem.rows[r].sense),
                      problem.rows[r].rhs});

  // Column colors: objective classes in full mode, a single class otherwise.
  if (mode == SymmetryMode::kFull) {
    std::map<Rat, int> col_color;
    for (const Rat& value : problem.objective) col_color.emplace(value, 0);
    for (auto& [value, id] : col_color) {
      id = static_cast<int>(graph.vertex_color_legend.size());
      graph.vertex_color_legend.push_back("col c=" +
                                          rational_to_string(value));
    }
    for (int j = 0; j < problem.n; ++j)
      graph.vertex_color[problem.m() + j] = col_color.at(problem.objective[j]);
  } else {
    const int id = static_cast<int>(graph.vertex_color_legend.size());
    graph.vertex_color_legend.push_back("col");
    for (int j = 0; j < problem.n; ++j)
      graph.vertex_color[problem.m() + j] = id;
  }

  // Edge colors: one id per distinct coefficient.  Zero coefficients are
  // never stored, so they produce no edge.
  std::map<Rat, int> edge_color;
  for (const Constraint& row : problem.rows)
    for (const auto& [column, value] : row.terms) edge_color.emplace(value, 0);
  for (auto& [value, id] : edge_color) {
    id = static_cast<int>(graph.edge_color_legend.size());
    graph.edge_color_legend.push_back("coef " + rational_to_string(value));
  }
  for (int r = 0; r < problem.m(); ++r) {
    for (const auto& [column, value] : problem.rows[r].terms) {
      const int color = edge_color.at(value);
      graph.adj[r].emplace_back(problem.m() + column, color);
      graph.adj[problem.m() + column].emplace_back(r, color);
    }
  }
  for (auto& neighbors : graph.adj)
    std::sort(neighbors.begin(), neighbors.end());
  return graph;
}

// An ordered partition of the vertex set.  Cell order is significant; all
// operations keep cell members in ascending order and produce the same cell
// sequence for the same input.
struct Partition {
  std::vector<std::vector<int>> cells;

  bool discrete() const {
    for (const auto& cell : cells)
      if (cell.size() > 1) return false;
    return true;
  }

  bool operator==(const Partition&) const = default;
};

// Initial partition: one cell per vertex color, ordered by color id.
inline Partition color_partition(const ColoredBipartiteGraph& graph) {
  std::map<int, std::vector<int>> by_color;
  for (int v = 0; v < graph.vertex_count(); ++v)
    by_color[graph.vertex_color[v]].push_back(v);
  Partition partition;
  for (auto& [color, members] : by_color)
    partition.cells.push_back(std::move(members));
  return partition;
}

// Coarsest equitable refinement: cells are repeatedly split by the multiset
// of (neighbor cell, edge color) pairs until stable.  Idempotent; never
// merges cells; the resulting cell order depends only on the input partition
// and graph structure, not on vertex labels within color classes.
inline Partition refine(const ColoredBipartiteGraph& graph,
                        Partition partition) {
  const int count = graph.vertex_count();
  std::vector<int> cell_of(count);
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t ci = 0; ci < partition.cells.size(); ++ci)
      for (int v : partition.cells[ci]) cell_of[v] = static_cast<int>(ci);
    std::vector<std::vector<int>> next;
    next.reserve(partition.cells.size());
    for (const auto& cell : partition.cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::map<std::vector<std::pair<int, int>>, std::vector<int>> groups;
      for (int v : cell) {
        std::vector<std::pair<int, int>> signature;
        signature.reserve(graph.adj[v].size());
        for (const auto& [u, color] : graph.adj[v])
          signature.emplace_back(cell_of[u], color);
        std::sort(signature.begin(), signature.end());
        groups[std::move(signature)].push_back(v);
      }
      if (groups.size() == 1) {
        next.push_back(cell);
      } else {
        changed = true;
        for (auto& [signature, members] : groups)
          next.push_back(std::move(members));
      }
    }
    partition.cells = std::move(next);
  }
  return partition;
}

}  // namespace binsym

#endif  // BINSYM_GRAPH_HPP_
