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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support/oracles.h"
#include "ulc/errors.h"

namespace ulc {
namespace {

using testing::DefinitionConvolve;
using testing::RandomLogConcave;
using testing::RandomRational;

Rat R(const char* text) { return ParseRational(text); }

std::vector<Rat> Vec(const Seq& s) { return {s.begin(), s.end()}; }

TEST(SeqTest, RejectsEmpty) {
  EXPECT_THROW(Seq(std::vector<Rat>{}), PreconditionError);
}

TEST(ConvolveTest, SmallExamples) {
  EXPECT_EQ(Convolve(Seq{1, 1}, Seq{1, 1}), (Seq{1, 2, 1}));
  const Seq a{R("1/3"), 0, R("-7/2"), 5};
  EXPECT_EQ(Convolve(a, Seq{1}), a);
  EXPECT_EQ(Convolve(Seq{1}, a), a);
}

TEST(ConvolveTest, SignedFamilySquare) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    const Rat a = RandomRational(3, 17, rng);
    const Rat b = RandomRational(3, 17, rng);
    const Seq s{1, a, 0, -b, 1};
    const Seq c = Convolve(s, s);
    EXPECT_EQ(c, (Seq{1, 2 * a, a * a, -2 * b, 2 - 2 * a * b, 2 * a, b * b,
                      -2 * b, 1}));
    EXPECT_EQ(Vec(c), DefinitionConvolve(Vec(s), Vec(s)));
  }
}

TEST(ConvolveTest, CommutativeAssociativeAndMatchesDefinition) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::size_t> len(1, 7);
  auto draw = [&] {
    std::vector<Rat> v;
    const std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) v.push_back(RandomRational(9, 7, rng) - 4);
    return Seq(std::move(v));
  };
  for (int i = 0; i < 100; ++i) {
    const Seq a = draw(), b = draw(), c = draw();
    EXPECT_EQ(Convolve(a, b), Convolve(b, a));
    EXPECT_EQ(Convolve(Convolve(a, b), c), Convolve(a, Convolve(b, c)));
    EXPECT_EQ(Vec(Convolve(a, b)), DefinitionConvolve(Vec(a), Vec(b)));
  }
}

TEST(IsLogConcaveTest, Examples) {
  EXPECT_TRUE(IsLogConcave(Seq{1, 2, 1}).holds);
  EXPECT_TRUE(IsLogConcave(Seq{5}).holds);
  EXPECT_TRUE(IsLogConcave(Seq{5, 0}).holds);

  const ViolationReport r = IsLogConcave(Seq{1, 1, 2});
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.kind, CheckKind::kLogConcave);
  EXPECT_EQ(r.index, 1u);
  EXPECT_EQ(r.lhs, Rat(1));
  EXPECT_EQ(r.rhs, Rat(2));
}

TEST(IsLogConcaveTest, NegativeEntryIsNonNegativityFailure) {
  const ViolationReport r = IsLogConcave(Seq{1, -1});
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.kind, CheckKind::kNonNegativity);
  EXPECT_EQ(r.index, 1u);
  EXPECT_EQ(r.lhs, Rat(-1));
  EXPECT_EQ(r.rhs, Rat(0));
}

TEST(IsLogConcaveTest, ReportInvariants) {
  const ViolationReport ok = IsLogConcave(Seq{1, 2, 1});
  EXPECT_FALSE(ok.index || ok.lhs || ok.rhs);
  const ViolationReport bad = IsLogConcave(Seq{1, 1, 3, 1});
  ASSERT_FALSE(bad.holds);
  EXPECT_LT(*bad.lhs, *bad.rhs);
}

TEST(IsUlcTest, Examples) {
  const ViolationReport eq = IsUlc(Seq{1, 3, 3, 1}, 3);
  EXPECT_TRUE(eq.holds);
  EXPECT_EQ(eq.kind, CheckKind::kUlc);

  const ViolationReport r = IsUlc(Seq{1, 1, 1}, 2);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.index, 1u);
  EXPECT_EQ(r.lhs, Rat(1, 4));
  EXPECT_EQ(r.rhs, Rat(1));

  EXPECT_TRUE(IsUlc(Seq{1, 0, 0, 1}, 3).holds);
  EXPECT_TRUE(IsUlc(Seq{4}, 0).holds);
}

TEST(IsUlcTest, OrderTooSmall) {
  EXPECT_THROW(IsUlc(Seq{1, 3, 3, 1}, 2), OrderTooSmallError);
  EXPECT_THROW(NewtonCheck(Seq{1, 3, 3, 1}, 2), OrderTooSmallError);
}

TEST(IsUlcTest, NegativeEntry) {
  const ViolationReport r = IsUlc(Seq{1, -2, 1}, 2);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.kind, CheckKind::kNonNegativity);
}

TEST(NewtonCheckTest, SignedExamples) {
  const Rat a = R("1/100"), b = R("1/10");
  const Seq s{1, a, 0, -b, 1};
  EXPECT_TRUE(NewtonCheck(s, 4).holds);

  const ViolationReport r = NewtonCheck(Convolve(s, s), 8);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.kind, CheckKind::kNewton);
  EXPECT_EQ(r.index, 5u);
  EXPECT_EQ(r.lhs, R("1/7840000"));
  EXPECT_EQ(r.rhs, R("999/98000000"));

  const ViolationReport eq = NewtonCheck(Seq{1, -2, 1}, 2);
  EXPECT_TRUE(eq.holds);
  EXPECT_EQ(eq.kind, CheckKind::kNewton);
}

TEST(PerturbPositiveTest, ExtendsRightTail) {
  EXPECT_EQ(PerturbPositive(Seq{1, 1, 0}, 2, Rat(1)), (Seq{1, 1, R("1/8")}));
}

TEST(PerturbPositiveTest, PositiveInputUnchanged) {
  const Seq a{1, 3, 3, 1};
  EXPECT_EQ(PerturbPositive(a, 3, R("1/1000")), a);
}

TEST(PerturbPositiveTest, Rejections) {
  EXPECT_THROW(PerturbPositive(Seq{1, 0, 0, 1}, 3, Rat(1)), PreconditionError);
  EXPECT_THROW(PerturbPositive(Seq{1, 1, 1}, 2, Rat(1)), PreconditionError);
  EXPECT_THROW(PerturbPositive(Seq{1, 1, 0}, 2, Rat(0)), PreconditionError);
  EXPECT_THROW(PerturbPositive(Seq{1, -1, 0}, 2, Rat(1)), PreconditionError);
  EXPECT_THROW(PerturbPositive(Seq{1, 1, 0}, 1, Rat(1)), OrderTooSmallError);
}

TEST(PerturbPositiveTest, BothTailsAndSinglePoint) {
  for (const Seq& a : {Seq{0, 0, 2, 3, 0, 0}, Seq{0, 0, 1, 0}, Seq{0, 0, 0}}) {
    const Seq p = PerturbPositive(a, 6, R("1/3"));
    EXPECT_TRUE(p.IsStrictlyPositive());
    EXPECT_TRUE(IsUlc(p, 6).holds);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (sgn(a[i]) != 0) EXPECT_EQ(p[i], a[i]);
      EXPECT_LE(abs(p[i] - a[i]), R("1/3"));
    }
  }
}

TEST(PerturbPositiveTest, RandomContiguousSupport) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned d = std::uniform_int_distribution<unsigned>(1, 7)(rng);
    const std::size_t len =
        std::uniform_int_distribution<std::size_t>(2, d + 1)(rng);
    const Seq base = RandomUlc(d, len, rng);
    std::vector<Rat> v(base.begin(), base.end());
    const std::size_t lo = std::uniform_int_distribution<std::size_t>(0, len - 1)(rng);
    const std::size_t hi = std::uniform_int_distribution<std::size_t>(lo, len - 1)(rng);
    for (std::size_t i = 0; i < len; ++i) {
      if (i < lo || i > hi) v[i] = 0;
    }
    const Seq a(v);
    ASSERT_TRUE(IsUlc(a, d).holds);
    const Rat eps = RandomRational(2, 50, rng) + R("1/100");
    const Seq p = PerturbPositive(a, d, eps);
    EXPECT_TRUE(p.IsStrictlyPositive());
    EXPECT_TRUE(IsUlc(p, d).holds);
    for (std::size_t i = 0; i < len; ++i) {
      if (i >= lo && i <= hi) EXPECT_EQ(p[i], a[i]);
      EXPECT_LE(abs(p[i] - a[i]), eps);
    }
  }
}

TEST(PerturbPositiveTest, ConvergesAsEpsilonShrinks) {
  const Seq a{0, 3, 5, 2, 0, 0};
  Rat eps(1);
  Rat previous_gap(100);
  for (int step = 0; step < 30; ++step, eps /= 2) {
    const Seq p = PerturbPositive(a, 5, eps);
    Rat gap(0);
    for (std::size_t i = 0; i < a.size(); ++i) gap = std::max<Rat>(gap, abs(p[i] - a[i]));
    EXPECT_LE(gap, eps);
    EXPECT_LE(gap, previous_gap);
    previous_gap = gap;
  }
  EXPECT_LT(previous_gap, Rat(1, 1 << 28));
}

TEST(RandomUlcTest, PostconditionsAndDeterminism) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const unsigned d = 1 + seed % 8;
    const std::size_t len = 1 + seed % (d + 1);
    const Seq a = RandomUlc(d, len, seed);
    EXPECT_EQ(a.size(), len);
    EXPECT_TRUE(a.IsStrictlyPositive());
    EXPECT_TRUE(IsUlc(a, d).holds);
    EXPECT_EQ(a, RandomUlc(d, len, seed));
  }
  EXPECT_NE(RandomUlc(5, 6, 1), RandomUlc(5, 6, 2));
  EXPECT_THROW(RandomUlc(3, 5, 0), PreconditionError);
  EXPECT_THROW(RandomUlc(3, 0, 0), PreconditionError);
}

TEST(RandomUlcTest, OrderThreeAlsoOrderFour) {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    EXPECT_TRUE(IsUlc(RandomUlc(3, 4, seed), 4).holds);
  }
}

TEST(SequencePropertyTest, OrderMonotonicity) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned d = std::uniform_int_distribution<unsigned>(1, 9)(rng);
    const Seq a = RandomUlc(d, d + 1, rng);
    for (unsigned extra = 1; extra <= 3; ++extra) {
      EXPECT_TRUE(IsUlc(a, d + extra).holds);
    }
  }
}

TEST(SequencePropertyTest, LogConcaveClosedUnderConvolution) {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<std::size_t> len(1, 8);
  for (int trial = 0; trial < 200; ++trial) {
    const Seq a = RandomLogConcave(len(rng), rng);
    const Seq b = RandomLogConcave(len(rng), rng);
    ASSERT_TRUE(IsLogConcave(a).holds);
    ASSERT_TRUE(IsLogConcave(b).holds);
    EXPECT_TRUE(IsLogConcave(Convolve(a, b)).holds);
  }
}

TEST(SequencePropertyTest, UlcImpliesLogConcave) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned d = std::uniform_int_distribution<unsigned>(1, 8)(rng);
    EXPECT_TRUE(IsLogConcave(RandomUlc(d, d + 1, rng)).holds);
  }
}

}  // namespace
}  // namespace ulc
