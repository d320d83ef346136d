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

#ifndef ULC_RATIONAL_H_
#define ULC_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ulc {

// Exact scalars. mpq_class keeps numerator and denominator coprime with a
// positive denominator as long as values are produced by arithmetic or by
// ParseRational; never build a Rat from a raw string constructor.
using Rat = mpq_class;
using BigInt = mpz_class;

// Parses "p", "-p", "p/q" or "-p/q" with decimal digits. Rejects empty
// input, whitespace, decimal points, signs on the denominator and q = 0.
// Throws ParseError.
Rat ParseRational(std::string_view text);

// Canonical "p/q" form, or "p" when the denominator is 1.
std::string ToString(const Rat& value);

// C(n, k) exactly; 0 when k < 0 or k > n.
Rat Binomial(unsigned long n, long k);

// n! as an exact integer.
BigInt Factorial(unsigned long n);

}  // namespace ulc

#endif  // ULC_RATIONAL_H_
