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

#include <algorithm>
#include <functional>
#include <string>
#include <utility>

#include "ulc/errors.h"
#include "ulc/sequence.h"
#include "ulc/shephard.h"

namespace ulc {
namespace {

constexpr int kMaxAttempts = 16;

}  // namespace

Seq RandomUlc(unsigned order, std::size_t length, std::mt19937_64& rng) {
  if (length == 0 || length > std::size_t{order} + 1) {
    throw PreconditionError("random ULC(" + std::to_string(order) +
                            ") sequence cannot have length " +
                            std::to_string(length));
  }
  std::uniform_int_distribution<long> ratio_part(1, 100);
  std::uniform_int_distribution<long> scale_part(1, 10);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Rat> lambda;
    lambda.reserve(order);
    for (unsigned i = 0; i < order; ++i) {
      const long num = ratio_part(rng);
      const long den = ratio_part(rng);
      Rat x(num, den);
      x.canonicalize();
      lambda.push_back(std::move(x));
    }
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    const Seq full = ForwardCoeffs(lambda).Scaled(Rat(scale_part(rng)));
    Seq out(std::vector<Rat>(full.begin(), full.begin() + length));
    if (IsUlc(out, order).holds && out.IsStrictlyPositive()) return out;
  }
  throw VerificationError("could not draw a ULC sequence");
}

Seq RandomUlc(unsigned order, std::size_t length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return RandomUlc(order, length, rng);
}

}  // namespace ulc
