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

#include "ulc/shephard.h"

#include <string>
#include <utility>

#include "ulc/errors.h"

namespace ulc {

Realization::Realization(std::vector<Rat> lambda, Rat proportionality)
    : lambda_(std::move(lambda)), proportionality_(std::move(proportionality)) {
  if (lambda_.empty()) throw PreconditionError("lambda must be nonempty");
  for (std::size_t i = 0; i < lambda_.size(); ++i) {
    if (sgn(lambda_[i]) <= 0) {
      throw PreconditionError("lambda entries must be positive");
    }
    if (i > 0 && lambda_[i] > lambda_[i - 1]) {
      throw PreconditionError("lambda must be descending; entry " +
                              std::to_string(i) + " exceeds its predecessor");
    }
  }
  if (sgn(proportionality_) <= 0) {
    throw PreconditionError("proportionality constant must be positive");
  }
}

BodyPair Realization::bodies() const {
  return BodyPair{DiagSimplex(lambda_), StandardSimplex(n())};
}

Seq ForwardFormula(std::span<const Rat> lambda) {
  const std::size_t n = lambda.size();
  for (const Rat& x : lambda) {
    if (sgn(x) <= 0) throw PreconditionError("lambda entries must be positive");
  }
  std::vector<Rat> out;
  out.reserve(n + 1);
  Rat prefix(1, 1);
  prefix /= Rat(Factorial(n));
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) prefix *= lambda[k - 1];
    out.emplace_back(Binomial(n, static_cast<long>(k)) * prefix);
  }
  return Seq(std::move(out));
}

Seq ForwardCoeffs(std::span<const Rat> lambda) {
  for (std::size_t i = 1; i < lambda.size(); ++i) {
    if (lambda[i] > lambda[i - 1]) {
      throw PreconditionError("lambda must be descending");
    }
  }
  return ForwardFormula(lambda);
}

Realization Realize(const Seq& a) {
  const std::size_t n = a.degree();
  if (n == 0) {
    throw PreconditionError("cannot realize a sequence of length 1");
  }
  if (!a.IsStrictlyPositive()) {
    throw PreconditionError("realization requires strictly positive entries");
  }
  const ViolationReport report = IsUlc(a, static_cast<unsigned>(n));
  if (!report.holds) {
    throw PreconditionError("sequence is not ULC(" + std::to_string(n) +
                            "): fails at index " +
                            std::to_string(*report.index));
  }
  std::vector<Rat> lambda;
  lambda.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const Rat cur = a[k] / Binomial(n, static_cast<long>(k));
    const Rat prev = a[k - 1] / Binomial(n, static_cast<long>(k - 1));
    lambda.emplace_back(cur / prev);
  }
  Realization out(std::move(lambda), a[0] * Rat(Factorial(n)));
  if (!VerifyRealization(a, out)) {
    throw VerificationError(
        "realized bodies do not reproduce the sequence; the forward "
        "coefficient formula or the volume computation is wrong");
  }
  return out;
}

bool VerifyRealization(const Seq& a, const Realization& realization) {
  const BodyPair bodies = realization.bodies();
  const VolPoly poly = VolumePoly(bodies.p, bodies.q);
  return poly.coeffs.Scaled(realization.proportionality()) == a;
}

}  // namespace ulc
