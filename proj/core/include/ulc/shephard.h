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

#ifndef ULC_SHEPHARD_H_
#define ULC_SHEPHARD_H_

#include <cstddef>
#include <span>
#include <vector>

#include "ulc/geometry.h"
#include "ulc/rational.h"
#include "ulc/sequence.h"

namespace ulc {

// A pair of simplices P = Diag(lambda) S, Q = S (S the standard simplex)
// together with a positive constant c, representing the sequence
// c * Vol_n(tP + Q).
class Realization {
 public:
  // Throws PreconditionError unless lambda is nonempty, weakly descending
  // and strictly positive, and proportionality > 0.
  Realization(std::vector<Rat> lambda, Rat proportionality);

  std::size_t n() const { return lambda_.size(); }
  std::span<const Rat> lambda() const { return lambda_; }
  const Rat& proportionality() const { return proportionality_; }

  // (Diag(lambda) S, S).
  BodyPair bodies() const;

 private:
  std::vector<Rat> lambda_;
  Rat proportionality_;
};

// a_k = C(n, k) * lambda_1 ... lambda_k / n! for k = 0..n, with no ordering
// requirement on lambda. Entries must be positive.
Seq ForwardFormula(std::span<const Rat> lambda);

// ForwardFormula restricted to weakly descending lambda, where it equals
// the coefficients of Vol_n(t Diag(lambda) S + S).
Seq ForwardCoeffs(std::span<const Rat> lambda);

// Inverts ForwardCoeffs up to scale: lambda_k is the ratio of consecutive
// binomially normalized entries and c = a_0 n!. The result is checked
// against the volume oracle; a mismatch raises VerificationError.
// Throws PreconditionError for non-positive or non-ULC(len - 1) input.
Realization Realize(const Seq& a);

// c * VolumePoly(bodies) == a, exactly.
bool VerifyRealization(const Seq& a, const Realization& realization);

}  // namespace ulc

#endif  // ULC_SHEPHARD_H_
