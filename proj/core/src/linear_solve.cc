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

#include "ulc/linear_solve.h"

#include <cstddef>
#include <utility>

#include "ulc/errors.h"

namespace ulc {
namespace {

// In-place Bareiss elimination over the first `rows` columns of `a`.
// Afterwards a[i][j] = 0 for j < i and a[k][k] are the fraction-free
// pivots. Returns the row-swap parity, or 0 if the leading block is
// singular.
int Bareiss(std::vector<std::vector<BigInt>>& a, std::size_t rows) {
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k < rows; ++k) {
    std::size_t pivot = k;
    while (pivot < rows && a[pivot][k] == 0) ++pivot;
    if (pivot == rows) return 0;
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < a[i].size(); ++j) {
        BigInt num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign;
}

}  // namespace

BigInt DeterminantFractionFree(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  for (const auto& row : a) {
    if (row.size() != n) throw PreconditionError("matrix is not square");
  }
  const int sign = Bareiss(a, n);
  if (sign == 0) return 0;
  return sign * a[n - 1][n - 1];
}

std::vector<Rat> SolveFractionFree(std::vector<std::vector<BigInt>> a,
                                   const std::vector<Rat>& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw PreconditionError("right-hand side size mismatch");
  BigInt common = 1;
  for (const Rat& x : b) {
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(),
            x.get_den_mpz_t());
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw PreconditionError("matrix is not square");
    Rat scaled = b[i] * common;
    a[i].push_back(scaled.get_num());
  }
  if (Bareiss(a, n) == 0) throw PreconditionError("singular system");

  std::vector<Rat> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rat acc(a[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) acc -= Rat(a[i][j]) * x[j];
    x[i] = acc / Rat(a[i][i]);
  }
  for (Rat& xi : x) xi /= common;
  return x;
}

}  // namespace ulc
