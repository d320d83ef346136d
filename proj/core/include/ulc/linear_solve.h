// Copyright 2026 The ulc Authors
//
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

#ifndef ULC_LINEAR_SOLVE_H_
#define ULC_LINEAR_SOLVE_H_

#include <vector>

#include "ulc/rational.h"

namespace ulc {

// Solves the square system A x = b by Bareiss fraction-free elimination on
// the integer matrix [A | D b], D being the common denominator of b, and
// exact back substitution. Throws PreconditionError if A is singular or
// the shapes disagree.
std::vector<Rat> SolveFractionFree(std::vector<std::vector<BigInt>> a,
                                   const std::vector<Rat>& b);

// Determinant of a square integer matrix by Bareiss elimination.
BigInt DeterminantFractionFree(std::vector<std::vector<BigInt>> a);

}  // namespace ulc

#endif  // ULC_LINEAR_SOLVE_H_
