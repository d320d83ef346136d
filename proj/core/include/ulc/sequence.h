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

#ifndef ULC_SEQUENCE_H_
#define ULC_SEQUENCE_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "ulc/rational.h"

namespace ulc {

// A finite sequence (a_0, ..., a_m), m >= 0. Also serves as the coefficient
// vector of the polynomial a_0 + a_1 t + ... + a_m t^m.
class Seq {
 public:
  // Throws PreconditionError when `coeffs` is empty.
  explicit Seq(std::vector<Rat> coeffs);
  Seq(std::initializer_list<Rat> coeffs);

  std::size_t size() const { return coeffs_.size(); }
  // m, the index of the last entry.
  std::size_t degree() const { return coeffs_.size() - 1; }

  const Rat& operator[](std::size_t i) const { return coeffs_[i]; }
  std::span<const Rat> coeffs() const { return coeffs_; }
  auto begin() const { return coeffs_.begin(); }
  auto end() const { return coeffs_.end(); }

  bool IsNonNegative() const;
  bool IsStrictlyPositive() const;

  // Every entry multiplied by `factor`.
  Seq Scaled(const Rat& factor) const;

  friend bool operator==(const Seq&, const Seq&) = default;

 private:
  std::vector<Rat> coeffs_;
};

enum class CheckKind { kLogConcave, kUlc, kNewton, kNonNegativity };

std::string_view ToString(CheckKind kind);

// Outcome of an inequality check. A failed check carries the offending
// index and the two sides of the inequality, with lhs < rhs. For a
// nonnegativity failure lhs is the negative entry and rhs is 0.
struct ViolationReport {
  bool holds = true;
  CheckKind kind = CheckKind::kLogConcave;
  std::optional<std::size_t> index;
  std::optional<Rat> lhs;
  std::optional<Rat> rhs;

  static ViolationReport Holds(CheckKind kind);
  static ViolationReport Violation(CheckKind kind, std::size_t index, Rat lhs,
                                   Rat rhs);

  friend bool operator==(const ViolationReport&,
                         const ViolationReport&) = default;
};

// c_k = sum_{i+j=k} a_i b_j.
Seq Convolve(const Seq& a, const Seq& b);

// a_i^2 >= a_{i-1} a_{i+1} for 1 <= i <= m-1, after checking a >= 0.
ViolationReport IsLogConcave(const Seq& a);

// Logconcavity of a_i / C(d, i). Requires d >= m (OrderTooSmallError).
ViolationReport IsUlc(const Seq& a, unsigned order);

// The same inequality as IsUlc without the nonnegativity requirement.
ViolationReport NewtonCheck(const Seq& a, unsigned order);

// Fills the zero tails of a nonnegative ULC(order) sequence with small
// positive entries so that the result is strictly positive, still
// ULC(order), and within `epsilon` of `a` coefficientwise. Entries on the
// original support are untouched.
//
// The support must be contiguous; (1, 0, 0, 1) is ULC(3) but is rejected.
// Throws PreconditionError.
Seq PerturbPositive(const Seq& a, unsigned order, const Rat& epsilon);

// A strictly positive ULC(order) sequence with `length` entries
// (1 <= length <= order + 1), generated from a random descending lambda
// vector through ForwardFormula and a random integer scale in [1, 10].
Seq RandomUlc(unsigned order, std::size_t length, std::mt19937_64& rng);
Seq RandomUlc(unsigned order, std::size_t length, std::uint64_t seed);

}  // namespace ulc

#endif  // ULC_SEQUENCE_H_
