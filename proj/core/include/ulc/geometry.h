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

#ifndef ULC_GEOMETRY_H_
#define ULC_GEOMETRY_H_

#include <cstddef>
#include <span>
#include <vector>

#include "ulc/rational.h"
#include "ulc/sequence.h"

namespace ulc {

using Point = std::vector<Rat>;

// A V-polytope: the convex hull of a finite point set in R^dim. The stored
// list is deduplicated and sorted lexicographically; points that are not
// hull vertices are kept and simply ignored by the volume computation.
class Body {
 public:
  // Throws PreconditionError if dim == 0, `points` is empty or a point has
  // the wrong length.
  Body(std::size_t dim, std::vector<Point> points);

  std::size_t dim() const { return dim_; }
  std::span<const Point> vertices() const { return vertices_; }

  friend bool operator==(const Body&, const Body&) = default;

 private:
  std::size_t dim_;
  std::vector<Point> vertices_;
};

struct BodyPair {
  Body p;
  Body q;
};

// Coefficients a_0..a_n of Vol_n(tP + Q).
struct VolPoly {
  std::size_t dim;
  Seq coeffs;
};

// tA. Throws PreconditionError for t < 0.
Body ScaleBody(const Body& body, const Rat& t);

// A + B as the set of pairwise vertex sums. Throws DimensionMismatchError.
Body MinkowskiSum(const Body& a, const Body& b);

// A x B in R^{dim A + dim B}.
Body CartesianProduct(const Body& a, const Body& b);

// Exact dim-dimensional volume of the convex hull; 0 for flat hulls.
Rat Volume(const Body& body);

// Interpolates Vol_n(tP + Q) at t = 0..n. Throws DimensionMismatchError, and
// VerificationError if the endpoint identities a_0 = Vol(Q), a_n = Vol(P)
// or coefficient nonnegativity fail.
VolPoly VolumePoly(const Body& p, const Body& q);

// k! (n-k)! a_k, the mixed volume V(P[k], Q[n-k]) normalized so that
// V(Q, ..., Q) = n! Vol(Q). Throws PreconditionError unless 0 <= k <= n.
Rat MixedVolume(const Body& p, const Body& q, long k);

// conv{0, e_1, ..., e_n}.
Body StandardSimplex(std::size_t n);
// Diag(lambda) applied to the standard simplex; lambda entries must be > 0.
Body DiagSimplex(std::span<const Rat> lambda);
// [0, e_1] x ... x [0, e_n]; edges must be > 0.
Body Box(std::span<const Rat> edges);

}  // namespace ulc

#endif  // ULC_GEOMETRY_H_
