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

#ifndef BINSYM_PERMUTATION_HPP_
#define BINSYM_PERMUTATION_HPP_

#include <compare>
#include <cstdint>
#include <vector>

#include "binsym/errors.hpp"
#include "binsym/problem.hpp"
#include "binsym/rational.hpp"

namespace binsym {

// Destination of one variable's value under a signed permutation.
struct SignedTarget {
  int index = 0;  // position the value lands at
  int sign = 1;   // +1 keeps the bit, -1 complements it

  auto operator<=>(const SignedTarget&) const = default;
};

// An element of the hyperoctahedral group on n binary variables, stored as a
// per-variable target table:
//
//   targets[j] == {i, +1}  means  y[i] = x[j]
//   targets[j] == {i, -1}  means  y[i] = 1 - x[j]
//
// Equivalently the pair (Q, q) with Q[i][j] = sign and q = (e - Q e) / 2, so
// that the mapping is x -> Qx + q.  Target indices form a bijection.  A
// permutation with all signs positive is an ordinary (unsigned) permutation.
struct SignedPermutation {
  std::vector<SignedTarget> targets;

  int size() const { return static_cast<int>(targets.size()); }

  static SignedPermutation identity(int n) {
    SignedPermutation perm;
    perm.targets.reserve(n);
    for (int j = 0; j < n; ++j) perm.targets.push_back({j, 1});
    return perm;
  }

  bool is_identity() const {
    for (int j = 0; j < size(); ++j)
      if (targets[j].index != j || targets[j].sign != 1) return false;
    return true;
  }

  bool is_unsigned() const {
    for (const SignedTarget& target : targets)
      if (target.sign != 1) return false;
    return true;
  }

  // y = Qx + q.  The output is binary whenever the input is.
  BitVector apply(const BitVector& x) const {
    if (size() != static_cast<int>(x.size()))
      throw DimensionError("permutation size does not match point length");
    BitVector y(x.size());
    for (int j = 0; j < size(); ++j) {
      const SignedTarget& target = targets[j];
      y[target.index] = target.sign > 0 ? x[j] : uint8_t(1 - x[j]);
    }
    return y;
  }

  auto operator<=>(const SignedPermutation&) const = default;
};

// Validates the bijection invariant; throws InternalError on violation.
inline void validate(const SignedPermutation& perm) {
  std::vector<char> seen(perm.targets.size(), 0);
  for (const SignedTarget& target : perm.targets) {
    if (target.index < 0 || target.index >= perm.size() ||
        (target.sign != 1 && target.sign != -1))
      throw InternalError("signed permutation entry out of range");
    if (seen[target.index]++)
      throw InternalError("signed permutation targets are not a bijection");
  }
}

// Composition: compose(outer, inner).apply(x) == outer.apply(inner.apply(x)).
// Signs multiply along the composed targets.
inline SignedPermutation compose(const SignedPermutation& outer,
                                 const SignedPermutation& inner) {
  if (outer.size() != inner.size())
    throw DimensionError("cannot compose permutations of different sizes");
  SignedPermutation result;
  result.targets.resize(inner.size());
  for (int j = 0; j < inner.size(); ++j) {
    const SignedTarget& first = inner.targets[j];
    const SignedTarget& second = outer.targets[first.index];
    result.targets[j] = {second.index, first.sign * second.sign};
  }
  return result;
}

inline SignedPermutation inverse(const SignedPermutation& perm) {
  SignedPermutation result;
  result.targets.resize(perm.targets.size());
  for (int j = 0; j < perm.size(); ++j) {
    const SignedTarget& target = perm.targets[j];
    // The complement relation is symmetric: y = 1 - x iff x = 1 - y.
    result.targets[target.index] = {j, target.sign};
  }
  return result;
}

// The vector q = (e - Qe)/2: entry i is 1 exactly when the value landing at
// position i arrives complemented.
inline std::vector<Rat> complement_shift(const SignedPermutation& perm) {
  std::vector<Rat> q(perm.targets.size(), Rat(0));
  for (const SignedTarget& target : perm.targets)
    if (target.sign < 0) q[target.index] = Rat(1);
  return q;
}

// A permutation of constraint rows.  mapping[i] = p(i) names, for original
// row i, the transformed row it must equal; as a matrix, P has its row-i one
// in column p(i), so that (P v)_i = v_{p(i)}.
struct RowPermutation {
  std::vector<int> mapping;

  int size() const { return static_cast<int>(mapping.size()); }

  static RowPermutation identity(int m) {
    RowPermutation perm;
    perm.mapping.reserve(m);
    for (int i = 0; i < m; ++i) perm.mapping.push_back(i);
    return perm;
  }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (mapping[i] != i) return false;
    return true;
  }

  auto operator<=>(const RowPermutation&) const = default;
};

inline void validate(const RowPermutation& perm) {
  std::vector<char> seen(perm.mapping.size(), 0);
  for (int image : perm.mapping) {
    if (image < 0 || image >= perm.size())
      throw InternalError("row permutation entry out of range");
    if (seen[image]++)
      throw InternalError("row permutation is not a bijection");
  }
}

// A column permutation paired with a witnessing row permutation.
struct SymmetryPair {
  SignedPermutation cols;
  RowPermutation rows;

  auto operator<=>(const SymmetryPair&) const = default;
};

}  // namespace binsym

#endif  // BINSYM_PERMUTATION_HPP_
