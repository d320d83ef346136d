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

#ifndef ULC_LIGGETT_H_
#define ULC_LIGGETT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ulc/geometry.h"
#include "ulc/sequence.h"

namespace ulc {

// Largest l + d for which the geometric route is attempted.
inline constexpr unsigned kMaxGeometricDim = 5;

// The outcome of checking that a ULC(l) sequence convolved with a ULC(d)
// sequence is ULC(l + d).
struct TheoremVerdict {
  Seq a;
  unsigned l;
  Seq b;
  unsigned d;
  Seq c;  // Convolve(a, b)
  ViolationReport ulc_report;  // IsUlc(c, l + d)
  bool geometric_checked = false;
  std::optional<bool> geometric_match;  // set iff geometric_checked

  bool ok() const {
    return ulc_report.holds && geometric_match.value_or(true);
  }
};

// P = K1 x C1, Q = K2 x C2. Throws DimensionMismatchError unless
// dim K1 = dim K2 and dim C1 = dim C2.
BodyPair ProductConstruction(const Body& k1, const Body& k2, const Body& c1,
                             const Body& c2);

// Compares Convolve(VolumePoly(K1, K2), VolumePoly(C1, C2)) with
// VolumePoly(P, Q) for the product bodies. Requires l + d <= 5.
bool ProductIdentityCheck(const Body& k1, const Body& k2, const Body& c1,
                          const Body& c2);

// Runs the sequence route, and with `geometric` also realizes a and b as
// simplex pairs, builds the product bodies and compares their volume
// polynomial (times c_a c_b) against the convolution.
//
// Throws PreconditionError if a is not ULC(l) or b is not ULC(d). The
// geometric route further needs strictly positive a, b with l = len(a) - 1,
// d = len(b) - 1 and l + d <= 5.
TheoremVerdict TheoremCheck(const Seq& a, unsigned l, const Seq& b,
                            unsigned d, bool geometric);

struct FuzzOptions {
  std::size_t trials = 100;
  unsigned max_order = 8;
  std::uint64_t seed = 0;
  // Every k-th trial (trial % k == 0) also runs the geometric route; 0
  // disables it. Geometric trials draw full-length sequences with
  // l + d <= kMaxGeometricDim.
  std::size_t geometric_every = 0;
  unsigned threads = 1;
  // Detector self-test: zero out c_1 of this trial's convolution before
  // checking it.
  std::optional<std::size_t> inject_fault_at;
};

struct FuzzFailure {
  std::size_t trial;
  TheoremVerdict verdict;
};

struct FuzzSummary {
  std::size_t trials = 0;
  std::size_t geometric_checks = 0;
  std::size_t ulc_violations = 0;
  std::size_t geometric_mismatches = 0;
  std::vector<FuzzFailure> failures;  // ordered by trial index
  double elapsed_seconds = 0;

  bool clean() const { return failures.empty(); }
};

// Deterministic in `seed`: trial i draws from a generator seeded with
// (seed, i), so the outcome does not depend on `threads`.
FuzzSummary Fuzz(const FuzzOptions& options);

}  // namespace ulc

#endif  // ULC_LIGGETT_H_
