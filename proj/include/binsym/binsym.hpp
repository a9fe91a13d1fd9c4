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

// Umbrella header.

#ifndef BINSYM_BINSYM_HPP_
#define BINSYM_BINSYM_HPP_

#include "binsym/automorphism.hpp"
#include "binsym/errors.hpp"
#include "binsym/format.hpp"
#include "binsym/graph.hpp"
#include "binsym/heuristics.hpp"
#include "binsym/lift.hpp"
#include "binsym/permutation.hpp"
#include "binsym/problem.hpp"
#include "binsym/rational.hpp"
#include "binsym/solver.hpp"
#include "binsym/symmetry.hpp"

#endif  // BINSYM_BINSYM_HPP_
