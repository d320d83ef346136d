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

#include "ulc/liggett.h"

#include <algorithm>
#include <chrono>
#include <exception>
#include <random>
#include <string>
#include <thread>
#include <utility>

#include "ulc/errors.h"
#include "ulc/shephard.h"

namespace ulc {

BodyPair ProductConstruction(const Body& k1, const Body& k2, const Body& c1,
                             const Body& c2) {
  if (k1.dim() != k2.dim() || c1.dim() != c2.dim()) {
    throw DimensionMismatchError(
        "product construction needs dim K1 = dim K2 and dim C1 = dim C2");
  }
  return BodyPair{CartesianProduct(k1, c1), CartesianProduct(k2, c2)};
}

bool ProductIdentityCheck(const Body& k1, const Body& k2, const Body& c1,
                          const Body& c2) {
  const BodyPair pq = ProductConstruction(k1, k2, c1, c2);
  if (pq.p.dim() > kMaxGeometricDim) {
    throw PreconditionError("product dimension " + std::to_string(pq.p.dim()) +
                            " exceeds the geometric budget");
  }
  const Seq lhs =
      Convolve(VolumePoly(k1, k2).coeffs, VolumePoly(c1, c2).coeffs);
  return lhs == VolumePoly(pq.p, pq.q).coeffs;
}

namespace {

void RequireUlc(const Seq& s, unsigned order, const char* name) {
  const ViolationReport r = IsUlc(s, order);
  if (!r.holds) {
    throw PreconditionError(std::string("input ") + name + " is not ULC(" +
                            std::to_string(order) + "): " +
                            std::string(ToString(r.kind)) +
                            " fails at index " + std::to_string(*r.index));
  }
}

TheoremVerdict Evaluate(const Seq& a, unsigned l, const Seq& b, unsigned d,
                        bool geometric, bool inject_fault) {
  RequireUlc(a, l, "a");
  RequireUlc(b, d, "b");
  if (geometric) {
    if (!a.IsStrictlyPositive() || !b.IsStrictlyPositive()) {
      throw PreconditionError("geometric route needs strictly positive inputs");
    }
    if (a.degree() != l || b.degree() != d) {
      throw PreconditionError(
          "geometric route needs orders equal to the sequence degrees");
    }
    if (l + d > kMaxGeometricDim) {
      throw PreconditionError("geometric route is limited to l + d <= " +
                              std::to_string(kMaxGeometricDim));
    }
  }

  Seq c = Convolve(a, b);
  if (inject_fault && c.size() >= 3) {
    std::vector<Rat> broken(c.begin(), c.end());
    broken[1] = 0;
    c = Seq(std::move(broken));
  }
  TheoremVerdict v{a, l, b, d, c, IsUlc(c, l + d), false, std::nullopt};
  if (geometric) {
    const Realization ra = Realize(a);
    const Realization rb = Realize(b);
    const BodyPair ka = ra.bodies();
    const BodyPair kb = rb.bodies();
    const BodyPair pq = ProductConstruction(ka.p, ka.q, kb.p, kb.q);
    const Seq scaled = VolumePoly(pq.p, pq.q).coeffs.Scaled(
        ra.proportionality() * rb.proportionality());
    v.geometric_checked = true;
    v.geometric_match = scaled == v.c;
  }
  return v;
}

struct Draw {
  Seq a;
  unsigned l;
  Seq b;
  unsigned d;
  bool geometric;
};

Draw DrawTrial(const FuzzOptions& options, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                    static_cast<std::uint32_t>(options.seed >> 32),
                    static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(std::uint64_t{trial} >> 32)};
  std::mt19937_64 rng(seq);
  const bool geometric =
      options.geometric_every > 0 && trial % options.geometric_every == 0;
  using Dist = std::uniform_int_distribution<unsigned>;
  if (geometric) {
    const unsigned cap = std::min(options.max_order, kMaxGeometricDim - 1);
    const unsigned l = Dist(1, cap)(rng);
    const unsigned d =
        Dist(1, std::min(options.max_order, kMaxGeometricDim - l))(rng);
    Seq a = RandomUlc(l, l + 1, rng);
    Seq b = RandomUlc(d, d + 1, rng);
    return Draw{std::move(a), l, std::move(b), d, true};
  }
  const unsigned l = Dist(1, options.max_order)(rng);
  const unsigned d = Dist(1, options.max_order)(rng);
  const std::size_t la = Dist(2, l + 1)(rng);
  const std::size_t lb = Dist(2, d + 1)(rng);
  Seq a = RandomUlc(l, la, rng);
  Seq b = RandomUlc(d, lb, rng);
  return Draw{std::move(a), l, std::move(b), d, false};
}

}  // namespace

TheoremVerdict TheoremCheck(const Seq& a, unsigned l, const Seq& b,
                            unsigned d, bool geometric) {
  return Evaluate(a, l, b, d, geometric, false);
}

FuzzSummary Fuzz(const FuzzOptions& options) {
  if (options.max_order == 0) {
    throw PreconditionError("fuzz needs max order >= 1");
  }
  const auto start = std::chrono::steady_clock::now();

  std::vector<std::optional<TheoremVerdict>> verdicts(options.trials);
  const unsigned workers = std::max(1u, options.threads);
  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](unsigned worker) {
    try {
      for (std::size_t t = worker; t < options.trials; t += workers) {
        Draw draw = DrawTrial(options, t);
        verdicts[t] = Evaluate(draw.a, draw.l, draw.b, draw.d, draw.geometric,
                               options.inject_fault_at == t);
      }
    } catch (...) {
      errors[worker] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  FuzzSummary summary;
  summary.trials = options.trials;
  for (std::size_t t = 0; t < options.trials; ++t) {
    TheoremVerdict& v = *verdicts[t];
    if (v.geometric_checked) ++summary.geometric_checks;
    if (!v.ulc_report.holds) ++summary.ulc_violations;
    if (v.geometric_match == false) ++summary.geometric_mismatches;
    if (!v.ok()) summary.failures.push_back(FuzzFailure{t, std::move(v)});
  }
  summary.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return summary;
}

}  // namespace ulc
