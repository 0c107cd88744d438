// Copyright 2026 The beattyqe Authors
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

#include <benchmark/benchmark.h>

#include "bqe/analysis.hpp"
#include "bqe/beatty.hpp"
#include "bqe/logic.hpp"
#include "bqe/pattern.hpp"

namespace {

using bqe::beatty::BeattyContext;
using bqe::exact::Int;
using bqe::exact::IrrationalSlope;

const BeattyContext& golden() {
  static BeattyContext ctx(IrrationalSlope::parse("golden"));
  return ctx;
}

void BM_member_fast(benchmark::State& state) {
  const BeattyContext& ctx = golden();
  long long n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ctx.member_P(n));
    n = n * 48271 % 2147483647;
  }
}
BENCHMARK(BM_member_fast);

void BM_member_bignum(benchmark::State& state) {
  const BeattyContext& ctx = golden();
  Int n = Int("123456789012345678901234567890");
  for (auto _ : state) {
    benchmark::DoNotOptimize(ctx.member_P(n));
    n += 1;
  }
}
BENCHMARK(BM_member_bignum);

void BM_membership_via_U(benchmark::State& state) {
  const BeattyContext& ctx = golden();
  long long c = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        bqe::pattern::membership_via_U(ctx, 7, 3, Int(static_cast<long>(c))));
    ++c;
  }
}
BENCHMARK(BM_membership_via_U);

void BM_realizes_pattern(benchmark::State& state) {
  const BeattyContext& ctx = golden();
  bqe::pattern::PatternQuery q;
  q.a = {Int(0), Int(3), Int(-5)};
  q.k = {Int(1), Int(2), Int(4)};
  q.I = {1, 3};
  for (auto _ : state)
    benchmark::DoNotOptimize(bqe::pattern::realizes_pattern(ctx, q));
}
BENCHMARK(BM_realizes_pattern);

void BM_eliminate(benchmark::State& state) {
  const BeattyContext& ctx = golden();
  std::vector<Int> k = {Int(2), Int(3), Int(-1)};
  std::set<int> I = {1, 2};
  for (auto _ : state)
    benchmark::DoNotOptimize(bqe::logic::eliminate(k, I, ctx));
}
BENCHMARK(BM_eliminate);

void BM_sturmian_prefix(benchmark::State& state) {
  const BeattyContext& ctx = golden();
  for (auto _ : state)
    benchmark::DoNotOptimize(ctx.sturmian_prefix(state.range(0)));
}
BENCHMARK(BM_sturmian_prefix)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
