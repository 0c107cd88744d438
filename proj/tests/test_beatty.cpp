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

#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "bqe/beatty.hpp"

namespace {

using namespace bqe::beatty;
using bqe::exact::IrrationalSlope;

const BeattyContext& golden() {
  static BeattyContext ctx(IrrationalSlope::parse("golden"));
  return ctx;
}

TEST_SUITE("beatty") {

TEST_CASE("beatty prefix") {
  const BeattyContext& ctx = golden();
  std::vector<long> expect = {1, 3, 4, 6, 8, 9};
  for (size_t i = 0; i < expect.size(); ++i)
    CHECK(ctx.b(Int(static_cast<long>(i) + 1)) == expect[i]);
  CHECK(ctx.b(0) == 0);

  BeattyContext rt2(IrrationalSlope::parse("sqrt:2"));
  CHECK(rt2.b(3) == 4);
}

TEST_CASE("sturmian word") {
  const BeattyContext& ctx = golden();
  CHECK(ctx.s(1) == 1);
  CHECK(ctx.s(2) == 0);
  std::vector<std::uint8_t> expect = {1, 0, 1, 1, 0};
  CHECK(ctx.sturmian_prefix(5) == expect);

  BeattyContext rt2(IrrationalSlope::parse("sqrt:2"));
  CHECK(rt2.s(1) == 1);

  // Word values agree with floor differences of b: s_n = 1 iff some b(m)
  // equals n (Beatty/Sturmian coding).
  std::set<Int> bvals;
  for (long m = 1; m <= 80; ++m) bvals.insert(ctx.b(Int(m)));
  std::vector<std::uint8_t> w = ctx.sturmian_prefix(100);
  for (long n = 1; n <= 100; ++n)
    CHECK((w[static_cast<size_t>(n - 1)] == 1) == (bvals.count(Int(n)) > 0));
}

TEST_CASE("membership examples") {
  const BeattyContext& ctx = golden();
  CHECK(ctx.member_P(Int(1)));
  CHECK(!ctx.member_P(Int(2)));
  CHECK(ctx.member_P(Int(3)));
  CHECK(ctx.member_P(Int(4)));
  CHECK(!ctx.member_P(Int(5)));
  CHECK(!ctx.member_P(Int(0)));
  CHECK(!ctx.member_P(Int(-1)));
  CHECK(ctx.member_P(Int(-2)));  // floor(-phi) = -2
  CHECK(!ctx.member_P(Int(-3)));
  CHECK(ctx.member_P(Int(-4)));
}

TEST_CASE("P decomposes as positive part and its reflection") {
  for (const char* spec : {"golden", "sqrt:2", "quad:1,1,2,13"}) {
    BeattyContext ctx{IrrationalSlope::parse(spec)};
    std::set<Int> pos;
    for (long m = 1; m <= 2000; ++m) pos.insert(ctx.b(Int(m)));
    for (long n = -1000; n <= 1000; ++n) {
      bool expect = n > 0 ? pos.count(Int(n)) > 0 : pos.count(Int(-n - 1)) > 0;
      CHECK(ctx.member_P(Int(n)) == expect);
      // Reflection symmetry n in P <=> -n-1 in P.
      CHECK(ctx.member_P(Int(n)) == ctx.member_P(Int(-n - 1)));
    }
  }
}

TEST_CASE("membership inverts through floor_div") {
  const BeattyContext& ctx = golden();
  for (long n = 1; n <= 2000; ++n) {
    if (!ctx.member_P(Int(n))) continue;
    Int m1 = bqe::exact::floor_div(Int(n), ctx.slope());
    CHECK((ctx.b(m1) == n || ctx.b(m1 + 1) == n));
  }
}

TEST_CASE("gaps of P lie in {floor(r), floor(r)+1} away from the origin") {
  // The single exception is the origin crossing: floor(-r) = -floor(r)-1
  // is followed by floor(r), a gap of 2*floor(r)+1, because neither 0 nor
  // -1 is a member.
  for (const char* spec : {"golden", "sqrt:2", "quad:1,1,2,13"}) {
    BeattyContext ctx{IrrationalSlope::parse(spec)};
    Int fr = ctx.slope().floor_r();
    std::optional<long> prev;
    for (long n = -1000; n <= 1000; ++n) {
      if (!ctx.member_P(n)) continue;
      if (prev) {
        Int gap(n - *prev);
        if (*prev == -fr - 1 && Int(n) == fr) {
          CHECK(gap == 2 * fr + 1);
        } else {
          CHECK((gap == fr || gap == fr + 1));
        }
      }
      prev = n;
    }
  }
}

TEST_CASE("fast path agrees with arbitrary precision") {
  std::mt19937_64 rng(5);
  for (const char* spec : {"golden", "sqrt:2", "quad:1,1,2,13",
                           "quad:12345,6789,541,9973"}) {
    BeattyContext ctx{IrrationalSlope::parse(spec)};
    std::uniform_int_distribution<long> dist(-1000000000L, 1000000000L);
    for (int it = 0; it < 500; ++it) {
      long n = dist(rng);
      CHECK(ctx.member_P(static_cast<long long>(n)) == ctx.member_P(Int(n)));
    }
    // Near the fast-path boundary values the two routes must still agree.
    for (long long n : {1LL, -1LL, 1000000000000LL, -999999999999LL})
      CHECK(ctx.member_P(n) == ctx.member_P(Int(static_cast<long>(n))));
  }
}

TEST_CASE("factor complexity") {
  const BeattyContext& ctx = golden();
  CHECK(ctx.factor_count(1, 100) == 2);
  for (int m = 1; m <= 8; ++m) CHECK(ctx.factor_count(m, 10000) == m + 1);

  BeattyContext rt2(IrrationalSlope::parse("sqrt:2"));
  CHECK(rt2.factor_count(7, 10000) == 8);

  CHECK_THROWS_AS(ctx.factor_count(0, 100), std::invalid_argument);
  CHECK_THROWS_AS(ctx.factor_count(61, 100), std::invalid_argument);
  CHECK_THROWS_AS(ctx.factor_count(10, 5), std::invalid_argument);
}

TEST_CASE("argument validation") {
  const BeattyContext& ctx = golden();
  CHECK_THROWS_AS(ctx.sturmian_prefix(0), std::invalid_argument);
}

}  // TEST_SUITE

}  // namespace
