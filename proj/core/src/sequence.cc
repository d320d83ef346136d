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

#include "ulc/sequence.h"

#include <algorithm>
#include <string>
#include <utility>

#include "ulc/errors.h"

namespace ulc {

Seq::Seq(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw PreconditionError("sequence must be nonempty");
}

Seq::Seq(std::initializer_list<Rat> coeffs)
    : Seq(std::vector<Rat>(coeffs)) {}

bool Seq::IsNonNegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rat& x) { return sgn(x) >= 0; });
}

bool Seq::IsStrictlyPositive() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rat& x) { return sgn(x) > 0; });
}

Seq Seq::Scaled(const Rat& factor) const {
  std::vector<Rat> out;
  out.reserve(coeffs_.size());
  for (const Rat& x : coeffs_) out.emplace_back(x * factor);
  return Seq(std::move(out));
}

std::string_view ToString(CheckKind kind) {
  switch (kind) {
    case CheckKind::kLogConcave:
      return "logconcave";
    case CheckKind::kUlc:
      return "ulc";
    case CheckKind::kNewton:
      return "newton";
    case CheckKind::kNonNegativity:
      return "nonnegativity";
  }
  return "unknown";
}

ViolationReport ViolationReport::Holds(CheckKind kind) {
  ViolationReport r;
  r.holds = true;
  r.kind = kind;
  return r;
}

ViolationReport ViolationReport::Violation(CheckKind kind, std::size_t index,
                                           Rat lhs, Rat rhs) {
  ViolationReport r;
  r.holds = false;
  r.kind = kind;
  r.index = index;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

Seq Convolve(const Seq& a, const Seq& b) {
  std::vector<Rat> c(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return Seq(std::move(c));
}

namespace {

std::optional<ViolationReport> FirstNegative(const Seq& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) < 0) {
      return ViolationReport::Violation(CheckKind::kNonNegativity, i, a[i],
                                        Rat(0));
    }
  }
  return std::nullopt;
}

// First index i in [1, m-1] with w_i^2 < w_{i-1} w_{i+1}.
ViolationReport CheckLogConcaveWeights(std::span<const Rat> w,
                                       CheckKind kind) {
  for (std::size_t i = 1; i + 1 < w.size(); ++i) {
    Rat lhs = w[i] * w[i];
    Rat rhs = w[i - 1] * w[i + 1];
    if (lhs < rhs) {
      return ViolationReport::Violation(kind, i, std::move(lhs),
                                        std::move(rhs));
    }
  }
  return ViolationReport::Holds(kind);
}

std::vector<Rat> NormalizeByBinomials(const Seq& a, unsigned order) {
  if (order < a.degree()) {
    throw OrderTooSmallError("order " + std::to_string(order) +
                             " is smaller than the sequence degree " +
                             std::to_string(a.degree()));
  }
  std::vector<Rat> w;
  w.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    w.emplace_back(a[i] / Binomial(order, static_cast<long>(i)));
  }
  return w;
}

}  // namespace

ViolationReport IsLogConcave(const Seq& a) {
  if (auto neg = FirstNegative(a)) return *neg;
  return CheckLogConcaveWeights(a.coeffs(), CheckKind::kLogConcave);
}

ViolationReport IsUlc(const Seq& a, unsigned order) {
  const std::vector<Rat> w = NormalizeByBinomials(a, order);
  if (auto neg = FirstNegative(a)) return *neg;
  return CheckLogConcaveWeights(w, CheckKind::kUlc);
}

ViolationReport NewtonCheck(const Seq& a, unsigned order) {
  return CheckLogConcaveWeights(NormalizeByBinomials(a, order),
                                CheckKind::kNewton);
}

Seq PerturbPositive(const Seq& a, unsigned order, const Rat& epsilon) {
  if (sgn(epsilon) <= 0) {
    throw PreconditionError("perturbation size must be positive");
  }
  const ViolationReport report = IsUlc(a, order);
  if (!report.holds) {
    throw PreconditionError("input is not ULC(" + std::to_string(order) +
                            "): " + std::string(ToString(report.kind)) +
                            " fails at index " +
                            std::to_string(*report.index));
  }
  if (a.IsStrictlyPositive()) return a;

  const std::size_t m = a.degree();
  auto weight = [order](std::size_t i) {
    return Binomial(order, static_cast<long>(i));
  };

  std::vector<Rat> out(a.begin(), a.end());
  const auto first = std::find_if(out.begin(), out.end(),
                                  [](const Rat& x) { return sgn(x) != 0; });
  if (first == out.end()) {
    // Zero sequence: a flat normalized sequence is ULC with equality.
    Rat peak(0);
    for (std::size_t i = 0; i <= m; ++i) peak = std::max(peak, weight(i));
    for (std::size_t i = 0; i <= m; ++i) out[i] = epsilon * weight(i) / peak;
    return Seq(std::move(out));
  }
  std::size_t lo = static_cast<std::size_t>(first - out.begin());
  std::size_t hi = lo;
  while (hi < m && sgn(out[hi + 1]) != 0) ++hi;
  for (std::size_t i = hi + 1; i <= m; ++i) {
    if (sgn(out[i]) != 0) {
      throw PreconditionError(
          "support is not contiguous: zero at index " + std::to_string(hi + 1) +
          " between nonzero entries");
    }
  }

  // The new entry x at `slot` next to the support end `edge` must satisfy
  //   (a_edge / C_edge)^2 >= (x / C_slot) * (a_inner / C_inner),
  // where `inner` is the support entry on the other side of `edge`.
  auto extend = [&](std::size_t slot, std::size_t edge,
                    std::optional<std::size_t> inner) {
    Rat value = epsilon;
    if (inner) {
      const Rat edge_norm = out[edge] / weight(edge);
      const Rat inner_norm = out[*inner] / weight(*inner);
      const Rat bound = edge_norm * edge_norm / inner_norm * weight(slot);
      value = std::min(value, Rat(bound / 2));
    }
    out[slot] = value;
  };

  bool left_turn = true;
  while (lo > 0 || hi < m) {
    if (left_turn && lo > 0) {
      extend(lo - 1, lo, lo < hi ? std::optional(lo + 1) : std::nullopt);
      --lo;
    } else if (!left_turn && hi < m) {
      extend(hi + 1, hi, lo < hi ? std::optional(hi - 1) : std::nullopt);
      ++hi;
    }
    left_turn = !left_turn;
  }

  Seq result(std::move(out));
  if (!IsUlc(result, order).holds || !result.IsStrictlyPositive()) {
    throw VerificationError("positive perturbation lost the ULC property");
  }
  return result;
}

}  // namespace ulc
