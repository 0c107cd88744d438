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

#include <optional>
#include <random>

#include "bqe/analysis.hpp"
#include "bqe/pattern.hpp"

namespace {

using namespace bqe::pattern;
using bqe::circle::CirclePoint;
using bqe::exact::IrrationalSlope;
using bqe::exact::Rat;

const BeattyContext& golden() {
  static BeattyContext ctx(IrrationalSlope::parse("golden"));
  return ctx;
}

// Direct reading of the pair set A_{k,l}: some k-th root point of h(x)
// lies in the U_{y,l} family.
bool a_set_by_enumeration(const BeattyContext& ctx, const Int& k, const Int& l,
                          const Int& x, const Int& y) {
  const auto& c = ctx.circle();
  UVFamily fam = u_family(ctx, y, l);
  CirclePoint base = c.kth_root_base(c.h(x), k);
  for (long s = 0; s < k.get_si(); ++s)
    if (family_contains(ctx, fam, c.mul(c.zeta_pow(k, s), base))) return true;
  return false;
}

TEST_SUITE("pattern") {

TEST_CASE("degenerate families at k = 0") {
  const BeattyContext& ctx = golden();
  CHECK(!u_family(ctx, 0, 0).whole);  // 0 not in P
  CHECK(v_family(ctx, 0, 0).whole);
  CHECK(u_family(ctx, 1, 0).whole);  // 1 in P
  CHECK(!v_family(ctx, 1, 0).whole);
}

TEST_CASE("U_{0,1} is the canonical membership arc") {
  const BeattyContext& ctx = golden();
  const auto& c = ctx.circle();
  UVFamily fam = u_family(ctx, 0, 1);
  REQUIRE(fam.slices.size() == 1);
  CHECK(fam.slices[0] == c.open_interval(c.h(-1), c.one()));
}

TEST_CASE("U and V slices partition the circle") {
  const BeattyContext& ctx = golden();
  const auto& c = ctx.circle();
  for (long a = -5; a <= 5; ++a) {
    for (long k = 1; k <= 4; ++k) {
      UVFamily u = u_family(ctx, Int(a), Int(k));
      UVFamily v = v_family(ctx, Int(a), Int(k));
      REQUIRE(u.slices.size() == static_cast<size_t>(k));
      REQUIRE(v.slices.size() == static_cast<size_t>(k));
      for (long n = -30; n <= 30; ++n) {
        CirclePoint p = c.h(Int(n));
        CHECK(family_contains(ctx, u, p) != family_contains(ctx, v, p));
      }
    }
  }
}

TEST_CASE("membership_via_U examples") {
  const BeattyContext& ctx = golden();
  CHECK(membership_via_U(ctx, 0, 1, 1));
  CHECK(!membership_via_U(ctx, 0, 2, 1));
  CHECK(!membership_via_U(ctx, 5, 0, 123));
  CHECK(membership_via_U(ctx, 1, 0, 123));
}

TEST_CASE("membership_via_U equals member_P on a small box") {
  for (const char* spec : {"golden", "sqrt:2"}) {
    BeattyContext ctx{IrrationalSlope::parse(spec)};
    for (long a = -6; a <= 6; ++a)
      for (long k = 0; k <= 3; ++k)
        for (long cc = -25; cc <= 25; ++cc)
          CHECK(membership_via_U(ctx, Int(a), Int(k), Int(cc)) ==
                ctx.member_P(Int(a + k * cc)));
  }
}

TEST_CASE("normalize_query") {
  PatternQuery q{{Int(0)}, {Int(-1)}, {1}};
  PatternQuery n = normalize_query(q);
  CHECK(n.a[0] == -1);
  CHECK(n.k[0] == 1);

  PatternQuery q2{{Int(3)}, {Int(2)}, {}};
  PatternQuery n2 = normalize_query(q2);
  CHECK(n2.a[0] == 3);
  CHECK(n2.k[0] == 2);

  // Involution and witness preservation.
  const BeattyContext& ctx = golden();
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> ad(-10, 10), kd(-4, 4), id(0, 1);
  for (int it = 0; it < 200; ++it) {
    PatternQuery r;
    int n_constraints = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < n_constraints; ++i) {
      r.a.push_back(Int(ad(rng)));
      r.k.push_back(Int(kd(rng)));
      if (id(rng)) r.I.insert(i + 1);
    }
    PatternQuery rn = normalize_query(r);
    CHECK(normalize_query(normalize_query(r)).a == rn.a);
    CHECK(normalize_query(normalize_query(r)).k == rn.k);
    for (long c = -20; c <= 20; ++c)
      CHECK(check_pointwise(ctx, r, Int(c)) ==
            check_pointwise(ctx, rn, Int(c)));
  }
}

TEST_CASE("a_set_member closed form equals root enumeration") {
  for (const char* spec : {"golden", "quad:1,1,2,13"}) {
    BeattyContext ctx{IrrationalSlope::parse(spec)};
    for (long k = 1; k <= 5; ++k)
      for (long l = 1; l <= 5; ++l)
        for (long x = -8; x <= 8; ++x)
          for (long y = -8; y <= 8; ++y)
            CHECK(a_set_member(ctx, Int(k), Int(l), Int(x), Int(y)) ==
                  a_set_by_enumeration(ctx, Int(k), Int(l), Int(x), Int(y)));
  }
}

TEST_CASE("pair sets at k = l = 1 reduce to shifted membership") {
  const BeattyContext& ctx = golden();
  for (long x = -15; x <= 15; ++x) {
    for (long y = -15; y <= 15; ++y) {
      long z = x + y;
      CHECK(a_set_member(ctx, 1, 1, Int(x), Int(y)) == ctx.member_P(z));
      CHECK(b_set_member(ctx, 1, 1, Int(x), Int(y)) ==
            (!ctx.member_P(z) && z != 0 && z != -1));
    }
  }
}

TEST_CASE("finite_component examples") {
  const BeattyContext& ctx = golden();
  PatternQuery q1{{Int(4)}, {Int(2)}, {}};
  auto w1 = finite_component(ctx, q1);
  REQUIRE(w1.has_value());
  CHECK(*w1 == -2);

  PatternQuery q2{{Int(1)}, {Int(3)}, {}};
  CHECK(!finite_component(ctx, q2).has_value());

  PatternQuery q3{{Int(0), Int(-1)}, {Int(1), Int(1)}, {}};
  auto w3 = finite_component(ctx, q3);
  REQUIRE(w3.has_value());
  CHECK(*w3 == 0);

  PatternQuery bad{{Int(0)}, {Int(-1)}, {}};
  CHECK_THROWS_AS(finite_component(ctx, bad), std::invalid_argument);
}

TEST_CASE("realizes_pattern examples") {
  const BeattyContext& ctx = golden();

  Decision contradictory =
      realizes_pattern(ctx, {{Int(0), Int(0)}, {Int(1), Int(1)}, {1}});
  CHECK(!contradictory.realizable);
  CHECK(contradictory.certificate == Certificate::Contradictory);

  Decision simple = realizes_pattern(ctx, {{Int(0)}, {Int(1)}, {1}});
  REQUIRE(simple.realizable);
  REQUIRE(simple.witness.has_value());
  CHECK(*simple.witness == 1);  // smallest-|c| scan order 0, 1, -1, ...

  Decision pair = realizes_pattern(ctx, {{Int(0), Int(0)}, {Int(1), Int(2)},
                                         {1, 2}});
  REQUIRE(pair.realizable);
  REQUIRE(pair.witness.has_value());
  CHECK(check_pointwise(ctx, {{Int(0), Int(0)}, {Int(1), Int(2)}, {1, 2}},
                        *pair.witness));

  Decision kzero = realizes_pattern(ctx, {{Int(2)}, {Int(0)}, {}});
  CHECK(kzero.realizable);
  CHECK(kzero.certificate == Certificate::KZeroOnly);
  Decision kzero_bad = realizes_pattern(ctx, {{Int(2)}, {Int(0)}, {1}});
  CHECK(!kzero_bad.realizable);
}

TEST_CASE("realizes_pattern agrees with brute force") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> ad(-15, 15), kd(-4, 4), nd(1, 3),
      id(0, 1);
  for (const char* spec : {"golden", "sqrt:2"}) {
    BeattyContext ctx{IrrationalSlope::parse(spec)};
    for (int it = 0; it < 300; ++it) {
      PatternQuery q;
      int n = nd(rng);
      for (int i = 0; i < n; ++i) {
        q.a.push_back(Int(ad(rng)));
        q.k.push_back(Int(kd(rng)));
        if (id(rng)) q.I.insert(i + 1);
      }
      Decision d = realizes_pattern(ctx, q);
      auto brute = bqe::analysis::brute_force_pattern(ctx, q, 10000);
      if (d.realizable) {
        REQUIRE(d.witness.has_value());
        CHECK(check_pointwise(ctx, q, *d.witness));
      } else {
        CHECK(!brute.has_value());
      }
      if (brute.has_value()) CHECK(d.realizable);
    }
  }
}

}  // TEST_SUITE

}  // namespace
