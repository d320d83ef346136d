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

#ifndef ULC_COUNTEREXAMPLE_H_
#define ULC_COUNTEREXAMPLE_H_

#include <cstddef>
#include <span>
#include <vector>

#include "ulc/rational.h"
#include "ulc/sequence.h"

namespace ulc {

// Index of the order-8 Newton inequality broken by the self-convolution of
// (1, a, 0, -b, 1).
inline constexpr std::size_t kCounterexampleIndex = 5;

// The signed sequence s = (1, a, 0, -b, 1) and its square c = s * s. The
// ratio c_5^2 / (c_4 c_6) must reach C(8,5)^2 / (C(8,4) C(8,6)) = 8/5 for
// c to satisfy the order-8 Newton inequality at index 5.
struct FamilyPoint {
  Rat a;
  Rat b;
  Seq seq;
  Seq conv;
  Rat ratio;
  Rat threshold;
  bool violated;              // ratio < threshold
  ViolationReport seq_newton;   // NewtonCheck(seq, 4)
  ViolationReport conv_newton;  // NewtonCheck(conv, 8)
};

// Throws PreconditionError unless a, b > 0 and ab < 1. Raises
// VerificationError if the closed form 2a^2 / (b^2 (1 - ab)) disagrees with
// the ratio read off the convolution.
FamilyPoint EvaluateFamilyPoint(const Rat& a, const Rat& b);

// Family points along a = eps^2, b = eps. Each eps must lie in (0, 1/2].
std::vector<FamilyPoint> LimitScan(std::span<const Rat> epsilons);

}  // namespace ulc

#endif  // ULC_COUNTEREXAMPLE_H_
