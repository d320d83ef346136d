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

// Acceptance suite. Each criterion prints one PASS/FAIL line; the process
// exits non-zero if any criterion fails. All comparisons are exact, so the
// only thresholds are the counts and wall-clock budgets below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/oracles.h"
#include "ulc/counterexample.h"
#include "ulc/geometry.h"
#include "ulc/liggett.h"
#include "ulc/sequence.h"
#include "ulc/shephard.h"

namespace ulc {
namespace {

using testing::RandomFullBody;
using testing::RandomLogConcave;
using testing::RandomRational;

constexpr double kFuzzBudgetSeconds = 30;
constexpr double kGeometricBudgetSeconds = 300;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure and keeps a running description.
class Tally {
 public:
  void Expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && outcome_.pass) {
      outcome_.pass = false;
      outcome_.detail = what;
    }
  }
  Outcome Finish(const std::string& summary) {
    if (outcome_.pass) outcome_.detail = summary;
    return outcome_;
  }
  int checks() const { return checks_; }

 private:
  Outcome outcome_;
  int checks_ = 0;
};

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string Fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

Outcome TheoremFuzz() {
  FuzzOptions options;
  options.trials = 1000;
  options.max_order = 8;
  options.seed = 20260101;
  const auto start = std::chrono::steady_clock::now();
  const FuzzSummary s = Fuzz(options);
  const double elapsed = Seconds(start);
  Tally t;
  t.Expect(s.trials == 1000, "trial count");
  t.Expect(s.ulc_violations == 0,
           std::to_string(s.ulc_violations) + " ULC(l+d) violations");
  t.Expect(elapsed < kFuzzBudgetSeconds, "took " + Fmt(elapsed) + " s");
  return t.Finish("1000 pairs, l,d <= 8, 0 violations in " + Fmt(elapsed) +
                  " s");
}

Outcome GeometricPipeline() {
  std::mt19937_64 rng(2);
  const auto start = std::chrono::steady_clock::now();
  Tally t;
  for (int trial = 0; trial < 25; ++trial) {
    const unsigned l = std::uniform_int_distribution<unsigned>(1, 2)(rng);
    const unsigned d = std::uniform_int_distribution<unsigned>(1, 2)(rng);
    const Seq a = RandomUlc(l, l + 1, rng);
    const Seq b = RandomUlc(d, d + 1, rng);
    const BodyPair k = Realize(a).bodies();
    const BodyPair c = Realize(b).bodies();
    t.Expect(ProductIdentityCheck(k.p, k.q, c.p, c.q),
             "product identity fails at trial " + std::to_string(trial));
    const TheoremVerdict v = TheoremCheck(a, l, b, d, true);
    t.Expect(v.geometric_match == true,
             "geometric mismatch at trial " + std::to_string(trial));
    t.Expect(v.ulc_report.holds,
             "ULC violation at trial " + std::to_string(trial));
  }
  const double elapsed = Seconds(start);
  t.Expect(elapsed < kGeometricBudgetSeconds, "took " + Fmt(elapsed) + " s");
  return t.Finish("25 instances, l,d <= 2, exact agreement in " +
                  Fmt(elapsed) + " s");
}

std::vector<Rat> RandomDescending(std::size_t n, std::mt19937_64& rng) {
  std::vector<Rat> lambda;
  for (std::size_t i = 0; i < n; ++i) {
    lambda.push_back(RandomRational(10, 12, rng) + Rat(1, 13));
  }
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return lambda;
}

Outcome ForwardFormulaValidation() {
  std::mt19937_64 rng(3);
  Tally t;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const std::vector<Rat> lambda = RandomDescending(n, rng);
      t.Expect(ForwardCoeffs(lambda) ==
                   VolumePoly(DiagSimplex(lambda), StandardSimplex(n)).coeffs,
               "mismatch at n=" + std::to_string(n));
    }
  }
  return t.Finish("30 lambda vectors, n in {1,2,3}, exact agreement");
}

Outcome ShephardRoundTrip() {
  std::mt19937_64 rng(4);
  Tally t;
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned n = 1 + trial % 4;
    const Seq a = RandomUlc(n, n + 1, rng);
    const Realization r = Realize(a);
    t.Expect(VerifyRealization(a, r),
             "verify_realization false at trial " + std::to_string(trial));
    const Rat s = RandomRational(20, 17, rng) + Rat(1, 19);
    const Realization rs = Realize(a.Scaled(s));
    t.Expect(std::equal(r.lambda().begin(), r.lambda().end(),
                        rs.lambda().begin(), rs.lambda().end()),
             "lambda changed under scaling at trial " + std::to_string(trial));
  }
  return t.Finish("50 sequences, n <= 4, all verified, lambda scale-invariant");
}

Outcome Counterexample() {
  Tally t;
  const FamilyPoint p = EvaluateFamilyPoint(Rat(1, 100), Rat(1, 10));
  t.Expect(p.ratio == Rat(20, 999), "ratio " + ToString(p.ratio));
  t.Expect(p.threshold == Rat(8, 5), "threshold " + ToString(p.threshold));
  t.Expect(p.violated && p.ratio < p.threshold, "not violated");
  t.Expect(!p.conv_newton.holds && p.conv_newton.index == kCounterexampleIndex,
           "order-8 Newton check does not fail at index 5");
  t.Expect(p.seq_newton.holds, "input fails Newton order 4");

  const std::vector<Rat> eps{Rat(1, 2), Rat(1, 4), Rat(1, 8), Rat(1, 16)};
  const std::vector<FamilyPoint> scan = LimitScan(eps);
  for (std::size_t i = 1; i < scan.size(); ++i) {
    t.Expect(scan[i].ratio < scan[i - 1].ratio, "scan not strictly decreasing");
  }
  t.Expect(scan.back().ratio < Rat(1, 100),
           "last ratio " + ToString(scan.back().ratio));
  return t.Finish("ratio 20/999 < 8/5 at index 5; scan ends at " +
                  ToString(scan.back().ratio));
}

Outcome AlexandrovFenchel() {
  std::mt19937_64 rng(6);
  Tally t;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t dim = 2 + trial % 2;
    const Body p = RandomFullBody(dim, dim + 1 + trial % 3, rng);
    const Body q = RandomFullBody(dim, dim + 2, rng);
    const VolPoly poly = VolumePoly(p, q);
    t.Expect(IsUlc(poly.coeffs, static_cast<unsigned>(dim)).holds,
             "ULC fails at trial " + std::to_string(trial));
  }
  return t.Finish("20 body pairs in dims 2-3, 0 violations");
}

Outcome GeometrySanity() {
  std::mt19937_64 rng(7);
  Tally t;
  for (std::size_t n = 1; n <= 5; ++n) {
    t.Expect(Volume(StandardSimplex(n)) == Rat(1) / Rat(Factorial(n)),
             "simplex volume n=" + std::to_string(n));
  }
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t dim = 1 + trial % 4;
    const Body a = RandomFullBody(dim, dim + 3, rng);
    const Rat s = RandomRational(6, 11, rng);
    Rat sn(1);
    for (std::size_t i = 0; i < dim; ++i) sn *= s;
    t.Expect(Volume(ScaleBody(a, s)) == sn * Volume(a), "homogeneity");
  }
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t da = 1 + trial % 3, db = 1 + (trial / 3) % 2;
    const Body a = RandomFullBody(da, da + 2, rng);
    const Body b = RandomFullBody(db, db + 2, rng);
    t.Expect(Volume(CartesianProduct(a, b)) == Volume(a) * Volume(b),
             "product multiplicativity");
  }
  return t.Finish("simplices n <= 5, 20 homogeneity, 20 product checks");
}

Outcome LogConcaveClosure() {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::size_t> len(1, 9);
  Tally t;
  for (int trial = 0; trial < 500; ++trial) {
    const Seq a = RandomLogConcave(len(rng), rng);
    const Seq b = RandomLogConcave(len(rng), rng);
    t.Expect(IsLogConcave(a).holds && IsLogConcave(b).holds, "bad input");
    t.Expect(IsLogConcave(Convolve(a, b)).holds,
             "closure fails at trial " + std::to_string(trial));
  }
  return t.Finish("500 pairs, all convolutions logconcave");
}

Outcome OrderMonotonicity() {
  std::mt19937_64 rng(9);
  Tally t;
  for (int trial = 0; trial < 500; ++trial) {
    const unsigned d = std::uniform_int_distribution<unsigned>(1, 10)(rng);
    const std::size_t len =
        std::uniform_int_distribution<std::size_t>(1, d + 1)(rng);
    const Seq a = RandomUlc(d, len, rng);
    t.Expect(IsUlc(a, d).holds, "bad input");
    t.Expect(IsUlc(a, d + 1).holds,
             "ULC(d+1) fails at trial " + std::to_string(trial));
  }
  return t.Finish("500 sequences, all ULC(d+1)");
}

struct Criterion {
  const char* id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace ulc

int main() {
  using ulc::Criterion;
  const std::vector<Criterion> criteria = {
      {"AC1", "theorem fuzz", ulc::TheoremFuzz},
      {"AC2", "geometric proof pipeline", ulc::GeometricPipeline},
      {"AC3", "forward formula vs volume oracle", ulc::ForwardFormulaValidation},
      {"AC4", "realization round trip", ulc::ShephardRoundTrip},
      {"AC5", "signed counterexample", ulc::Counterexample},
      {"AC6", "volume polynomial is ULC(n)", ulc::AlexandrovFenchel},
      {"AC7", "geometry sanity", ulc::GeometrySanity},
      {"AC8", "logconcave closure", ulc::LogConcaveClosure},
      {"AC9", "order monotonicity", ulc::OrderMonotonicity},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    ulc::Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (outcome.pass ? "PASS " : "FAIL ") << c.id << " " << c.name
              << ": " << outcome.detail << std::endl;
    failures += !outcome.pass;
  }
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
