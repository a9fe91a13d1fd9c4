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

#ifndef BINSYM_SYMMETRY_HPP_
#define BINSYM_SYMMETRY_HPP_

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "binsym/errors.hpp"
#include "binsym/permutation.hpp"
#include "binsym/problem.hpp"

namespace binsym {

enum class SymmetryMode : uint8_t {
  kFull,            // preserve constraints and objective
  kConstraintOnly,  // preserve constraints only; the objective may change
};

namespace detail {

// Content of one row after applying a column permutation: the row of A Q
// together with the shifted right-hand side (b - A q) and the sense.
struct RowKey {
  Sense sense;
  Rat rhs;
  std::vector<std::pair<int, Rat>> terms;
};

inline int compare(const Rat& a, const Rat& b) {
  if (a < b) return -1;
  return b < a ? 1 : 0;
}

inline int compare(const RowKey& a, const RowKey& b) {
  if (a.sense != b.sense) return a.sense < b.sense ? -1 : 1;
  if (int c = compare(a.rhs, b.rhs)) return c;
  const size_t common = std::min(a.terms.size(), b.terms.size());
  for (size_t k = 0; k < common; ++k) {
    if (a.terms[k].first != b.terms[k].first)
      return a.terms[k].first < b.terms[k].first ? -1 : 1;
    if (int c = compare(a.terms[k].second, b.terms[k].second)) return c;
  }
  if (a.terms.size() != b.terms.size())
    return a.terms.size() < b.terms.size() ? -1 : 1;
  return 0;
}

inline RowKey transformed_row_key(const Constraint& row,
                                  const SignedPermutation& inverse_perm,
                                  const std::vector<Rat>& q) {
  RowKey key;
  key.sense = row.sense;
  key.rhs = row.rhs;
  key.terms.reserve(row.terms.size());
  for (const auto& [column, value] : row.terms) {
    // Column k of A meets column inv(k) of Q; the sign rides along.
    const SignedTarget& target = inverse_perm.targets[column];
    key.terms.emplace_back(target.index,
                           target.sign > 0 ? value : -value);
    if (q[column] != Rat(0)) key.rhs -= value;
  }
  std::sort(key.terms.begin(), key.terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return key;
}

}  // namespace detail

// Decides whether `perm` is a symmetry of `problem` in the given mode, i.e.
// whether Q'c = c (skipped in constraint-only mode) and a row permutation P
// exists with P A Q = A and P (b - A q) = b.  The witness is found by
// canonical multiset matching of the transformed rows against the original
// rows; rows match only if sense, right-hand side and coefficients agree
// exactly, so equality rows can only map to equality rows.  Absence of a
// witness is a regular return value, not an error.
inline std::optional<RowPermutation> check_symmetry(
    const BinaryProblem& problem, const SignedPermutation& perm,
    SymmetryMode mode) {
  if (perm.size() != problem.n)
    throw DimensionError("permutation size does not match variable count");
  if (mode == SymmetryMode::kFull) {
    for (int j = 0; j < problem.n; ++j) {
      const SignedTarget& target = perm.targets[j];
      const Rat image = target.sign > 0 ? problem.objective[target.index]
                                        : -problem.objective[target.index];
      if (image != problem.objective[j]) return std::nullopt;
    }
  }

  const std::vector<Rat> q = complement_shift(perm);
  const SignedPermutation inv = inverse(perm);
  const int m = problem.m();

  std::vector<detail::RowKey> original(m), transformed(m);
  for (int r = 0; r < m; ++r) {
    const Constraint& row = problem.rows[r];
    original[r] = {row.sense, row.rhs, row.terms};
    transformed[r] = detail::transformed_row_key(row, inv, q);
  }

  // Stable canonical matching: sort both sides by (key, row index) and pair
  // them off positionally.
  std::vector<int> original_order(m), transformed_order(m);
  std::iota(original_order.begin(), original_order.end(), 0);
  std::iota(transformed_order.begin(), transformed_order.end(), 0);
  auto by_key = [](const std::vector<detail::RowKey>& keys) {
    return [&keys](int a, int b) {
      if (int c = detail::compare(keys[a], keys[b])) return c < 0;
      return a < b;
    };
  };
  std::sort(original_order.begin(), original_order.end(), by_key(original));
  std::sort(transformed_order.begin(), transformed_order.end(),
            by_key(transformed));

  RowPermutation witness;
  witness.mapping.resize(m);
  for (int k = 0; k < m; ++k) {
    if (detail::compare(original[original_order[k]],
                        transformed[transformed_order[k]]) != 0)
      return std::nullopt;
    witness.mapping[original_order[k]] = transformed_order[k];
  }
  return witness;
}

// --- Orbits -----------------------------------------------------------------

// Partition of the variable set under a generator set; each class is sorted
// and the smallest member serves as the representative.
struct OrbitPartition {
  std::vector<std::vector<int>> classes;

  int representative(int which) const { return classes[which][0]; }
};

// A variable or its complement.
struct Literal {
  int var = 0;
  bool complemented = false;

  auto operator<=>(const Literal&) const = default;
};

inline Literal complement(const Literal& literal) {
  return {literal.var, !literal.complemented};
}

// Partition of the 2n literals.  Closed under the generator action and under
// global complementation: the class of a literal mirrors the class of its
// complement.
struct SignedOrbitPartition {
  std::vector<std::vector<Literal>> classes;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

// Union-find closure over variables.  All generators must be unsigned;
// passing a generator with a complementing entry is a mode error.
inline OrbitPartition orbits(const std::vector<SignedPermutation>& generators,
                             int n) {
  detail::UnionFind dsu(n);
  for (const SignedPermutation& generator : generators) {
    if (generator.size() != n)
      throw DimensionError("generator size does not match variable count");
    if (!generator.is_unsigned())
      throw ModeError(
          "signed generator passed to unsigned orbit computation");
    for (int j = 0; j < n; ++j) dsu.unite(j, generator.targets[j].index);
  }
  std::vector<std::vector<int>> by_root(n);
  for (int j = 0; j < n; ++j) by_root[dsu.find(j)].push_back(j);
  OrbitPartition partition;
  for (int root = 0; root < n; ++root)
    if (!by_root[root].empty()) partition.classes.push_back(by_root[root]);
  return partition;
}

// Union-find closure over the 2n literals.  Entry j -> (i, s) identifies
// literal x_j with x_i (s = +1) or with the complement of x_i (s = -1), and
// the complement of x_j with the mirrored literal.
inline SignedOrbitPartition signed_orbits(
    const std::vector<SignedPermutation>& generators, int n) {
  const auto id = [](const Literal& literal) {
    return 2 * literal.var + (literal.complemented ? 1 : 0);
  };
  detail::UnionFind dsu(2 * n);
  for (const SignedPermutation& generator : generators) {
    if (generator.size() != n)
      throw DimensionError("generator size does not match variable count");
    for (int j = 0; j < n; ++j) {
      const SignedTarget& target = generator.targets[j];
      const bool flips = target.sign < 0;
      dsu.unite(id({j, false}), id({target.index, flips}));
      dsu.unite(id({j, true}), id({target.index, !flips}));
    }
  }
  std::vector<std::vector<Literal>> by_root(2 * n);
  for (int var = 0; var < n; ++var)
    for (bool complemented : {false, true}) {
      const Literal literal{var, complemented};
      by_root[dsu.find(id(literal))].push_back(literal);
    }
  SignedOrbitPartition partition;
  for (auto& members : by_root)
    if (!members.empty()) partition.classes.push_back(std::move(members));
  return partition;
}

// --- Group closure ----------------------------------------------------------

struct ClosureResult {
  std::vector<SignedPermutation> elements;  // breadth-first order, id first
  bool overflow = false;                    // true when the cap was hit
};

// Breadth-first product closure of a generator set.  Stops and flags
// overflow as soon as the element count would exceed `cap`; the returned
// elements are then a subset of the group.  `size_hint` supplies the
// permutation size when the generator list is empty.
inline ClosureResult closure(const std::vector<SignedPermutation>& generators,
                             size_t cap, int size_hint = 0) {
  ClosureResult result;
  if (cap == 0) {
    result.overflow = true;
    return result;
  }
  const int n = generators.empty() ? size_hint : generators.front().size();
  for (const SignedPermutation& generator : generators)
    if (generator.size() != n)
      throw DimensionError("closure generators have inconsistent sizes");

  std::set<SignedPermutation> seen;
  std::vector<SignedPermutation> queue;
  auto push = [&](const SignedPermutation& perm) {
    if (seen.contains(perm)) return true;
    if (seen.size() >= cap) {
      result.overflow = true;
      return false;
    }
    seen.insert(perm);
    result.elements.push_back(perm);
    queue.push_back(perm);
    return true;
  };
  push(SignedPermutation::identity(n));
  for (size_t head = 0; head < queue.size() && !result.overflow; ++head) {
    const SignedPermutation current = queue[head];
    for (const SignedPermutation& generator : generators) {
      if (!push(compose(generator, current))) break;
    }
  }
  return result;
}

}  // namespace binsym

#endif  // BINSYM_SYMMETRY_HPP_
