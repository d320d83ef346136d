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


#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "ulc/geometry.h"
#include "ulc/liggett.h"
#include "ulc/sequence.h"
#include "ulc/shephard.h"

namespace ulc {
namespace {

void BM_Convolve(benchmark::State& state) {
  const unsigned d = static_cast<unsigned>(state.range(0));
  const Seq a = RandomUlc(d, d + 1, 1);
  const Seq b = RandomUlc(d, d + 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Convolve(a, b));
}
BENCHMARK(BM_Convolve)->Arg(4)->Arg(8)->Arg(16);

void BM_IsUlc(benchmark::State& state) {
  const unsigned d = static_cast<unsigned>(state.range(0));
  const Seq a = RandomUlc(d, d + 1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(IsUlc(a, d));
}
BENCHMARK(BM_IsUlc)->Arg(4)->Arg(8)->Arg(16);

void BM_SimplexVolume(benchmark::State& state) {
  const Body s = StandardSimplex(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Volume(s));
}
BENCHMARK(BM_SimplexVolume)->DenseRange(2, 5);

void BM_CubeVolume(benchmark::State& state) {
  const std::vector<Rat> sides(static_cast<std::size_t>(state.range(0)), Rat(1));
  const Body cube = Box(sides);
  for (auto _ : state) benchmark::DoNotOptimize(Volume(cube));
}
BENCHMARK(BM_CubeVolume)->DenseRange(2, 5);

void BM_VolumePoly(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const Realization r = Realize(RandomUlc(n, n + 1, 4));
  const BodyPair bodies = r.bodies();
  for (auto _ : state) benchmark::DoNotOptimize(VolumePoly(bodies.p, bodies.q));
}
BENCHMARK(BM_VolumePoly)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_TheoremGeometric(benchmark::State& state) {
  const unsigned l = static_cast<unsigned>(state.range(0));
  const unsigned d = static_cast<unsigned>(state.range(1));
  const Seq a = RandomUlc(l, l + 1, 5);
  const Seq b = RandomUlc(d, d + 1, 6);
  for (auto _ : state) benchmark::DoNotOptimize(TheoremCheck(a, l, b, d, true));
}
BENCHMARK(BM_TheoremGeometric)
    ->Args({1, 1})
    ->Args({2, 2})
    ->Args({2, 3})
    ->Unit(benchmark::kMillisecond);

void BM_Fuzz(benchmark::State& state) {
  FuzzOptions options;
  options.trials = 100;
  options.max_order = 8;
  for (auto _ : state) benchmark::DoNotOptimize(Fuzz(options));
}
BENCHMARK(BM_Fuzz)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace ulc

BENCHMARK_MAIN();
