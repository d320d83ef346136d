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

// Reference computations used only by the tests. Each one follows a
// different route from the library code it checks: Pascal's rule instead of
// GMP binomials, recursive facet enumeration instead of the placing
// triangulation, Lagrange interpolation instead of fraction-free
// elimination.

#ifndef ULC_TESTS_SUPPORT_ORACLES_H_
#define ULC_TESTS_SUPPORT_ORACLES_H_

#include <cstddef>
#include <random>
#include <vector>

#include "ulc/geometry.h"
#include "ulc/rational.h"
#include "ulc/sequence.h"

namespace ulc::testing {

Rat PascalBinomial(long n, long k);

// c_k summed straight from the definition.
std::vector<Rat> DefinitionConvolve(const std::vector<Rat>& a,
                                    const std::vector<Rat>& b);

// Hull volume by exhaustive supporting-hyperplane enumeration over every
// dim-subset of points, summing pyramids from the centroid and recursing
// into each facet after projecting out one coordinate.
Rat FacetScanVolume(const std::vector<Point>& points, std::size_t dim);

// Area of a simple polygon given in boundary order.
Rat Shoelace(const std::vector<Point>& polygon);

// Coefficients of the interpolating polynomial through (x_i, y_i).
std::vector<Rat> LagrangeCoefficients(const std::vector<Rat>& xs,
                                      const std::vector<Rat>& ys);

// Evaluates sum c_k t^k.
Rat Evaluate(const Seq& coeffs, const Rat& t);

// Positive logconcave sequence: a_0 > 0 and a_k = a_{k-1} r_k with random
// descending positive ratios r_k.
Seq RandomLogConcave(std::size_t length, std::mt19937_64& rng);

// Random rational in [0, hi] with denominator up to `max_den`.
Rat RandomRational(long hi, long max_den, std::mt19937_64& rng);

// `count` random points with small rational coordinates; retried until the
// hull is full-dimensional.
Body RandomFullBody(std::size_t dim, std::size_t count, std::mt19937_64& rng);

}  // namespace ulc::testing

#endif  // ULC_TESTS_SUPPORT_ORACLES_H_
