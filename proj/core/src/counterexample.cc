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

#include "ulc/counterexample.h"

#include "ulc/errors.h"

namespace ulc {

FamilyPoint EvaluateFamilyPoint(const Rat& a, const Rat& b) {
  if (sgn(a) <= 0 || sgn(b) <= 0) {
    throw PreconditionError("family parameters must be positive");
  }
  if (a * b >= 1) {
    throw PreconditionError("family parameters need ab < 1 so that c_4 > 0");
  }
  Seq seq{Rat(1), a, Rat(0), Rat(-b), Rat(1)};
  Seq conv = Convolve(seq, seq);

  const Rat& c4 = conv[4];
  const Rat& c5 = conv[5];
  const Rat& c6 = conv[6];
  Rat ratio = c5 * c5 / (c4 * c6);
  const Rat closed_form = 2 * a * a / (b * b * (1 - a * b));
  if (c6 != b * b || c5 != 2 * a || c4 != 2 * (1 - a * b) ||
      ratio != closed_form) {
    throw VerificationError("closed-form entries disagree with convolution");
  }
  const Rat c85 = Binomial(8, 5);
  Rat threshold = c85 * c85 / (Binomial(8, 4) * Binomial(8, 6));
  const bool violated = ratio < threshold;

  ViolationReport seq_newton = NewtonCheck(seq, 4);
  ViolationReport conv_newton = NewtonCheck(conv, 8);
  return FamilyPoint{a,
                     b,
                     std::move(seq),
                     std::move(conv),
                     std::move(ratio),
                     std::move(threshold),
                     violated,
                     std::move(seq_newton),
                     std::move(conv_newton)};
}

std::vector<FamilyPoint> LimitScan(std::span<const Rat> epsilons) {
  const Rat half(1, 2);
  std::vector<FamilyPoint> out;
  out.reserve(epsilons.size());
  for (const Rat& eps : epsilons) {
    if (sgn(eps) <= 0 || eps > half) {
      throw PreconditionError("scan parameter " + ToString(eps) +
                              " outside (0, 1/2]");
    }
    out.push_back(EvaluateFamilyPoint(eps * eps, eps));
  }
  return out;
}

}  // namespace ulc
