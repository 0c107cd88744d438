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
#include <gmpxx.h>

#include <random>
#include <vector>

#include "bqe/exact.hpp"

namespace {

using namespace bqe::exact;

// 512-bit float value of the slope, for cross-checks only.
mpf_class approx_512(const IrrationalSlope& r) {
  mpf_class root(0, 512);
  mpf_sqrt(root.get_mpf_t(), mpf_class(r.value().d(), 512).get_mpf_t());
  mpf_class v(0, 512);
  v = (mpf_class(r.value().p(), 512) + mpf_class(r.value().q(), 512) * root) /
      mpf_class(r.value().s(), 512);
  return v;
}

TEST_SUITE("exact") {

TEST_CASE("slope parsing") {
  IrrationalSlope phi = IrrationalSlope::parse("golden");
  CHECK(phi.spec() == "quad:1,1,2,5");
  CHECK(phi.floor_r() == 1);

  IrrationalSlope rt2 = IrrationalSlope::parse("sqrt:2");
  CHECK(rt2.spec() == "quad:0,1,1,2");
  CHECK(rt2.floor_r() == 1);

  // Square parts are factored out: sqrt(8) = 2 sqrt(2).
  IrrationalSlope rt8 = IrrationalSlope::parse("sqrt:8");
  CHECK(rt8.spec() == "quad:0,2,1,2");
  CHECK(rt8.floor_r() == 2);

  IrrationalSlope q13 = IrrationalSlope::parse("quad:1,1,2,13");
  CHECK(q13.floor_r() == 2);

  CHECK_THROWS_AS(IrrationalSlope::parse("sqrt:1"), std::invalid_argument);
  CHECK_THROWS_AS(IrrationalSlope::parse("sqrt:4"), std::invalid_argument);
  CHECK_THROWS_AS(IrrationalSlope::parse("quad:1,1,1,8"),
                  std::invalid_argument);
  CHECK_THROWS_AS(IrrationalSlope::parse("quad:1,0,1,5"),
                  std::invalid_argument);
  // (1 - sqrt(2)) < 1 is not a valid slope.
  CHECK_THROWS_AS(IrrationalSlope::parse("quad:1,-1,1,2"),
                  std::invalid_argument);
  CHECK_THROWS_AS(IrrationalSlope::parse("bogus"), std::invalid_argument);
}

TEST_CASE("sign_affine examples") {
  IrrationalSlope phi = IrrationalSlope::parse("golden");
  IrrationalSlope rt2 = IrrationalSlope::parse("sqrt:2");
  CHECK(sign_affine(0, 0, phi) == 0);
  CHECK(sign_affine(-1, 1, phi) == 1);   // phi - 1 > 0
  CHECK(sign_affine(2, -1, rt2) == 1);   // 2 - sqrt(2) > 0
  CHECK(sign_affine(1, -1, rt2) == -1);  // 1 - sqrt(2) < 0
  CHECK(sign_affine(make_rat(-8, 5), 1, phi) == 1);  // phi > 8/5
  CHECK(sign_affine(make_rat(-13, 8), 1, phi) == -1);  // phi < 13/8
}

TEST_CASE("floor examples") {
  IrrationalSlope phi = IrrationalSlope::parse("golden");
  IrrationalSlope rt2 = IrrationalSlope::parse("sqrt:2");
  CHECK(floor_mul(1, phi) == 1);
  CHECK(floor_mul(0, phi) == 0);
  CHECK(floor_mul(-1, phi) == -2);
  CHECK(floor_mul(3, rt2) == 4);
  CHECK(floor_div(1, phi) == 0);
  CHECK(floor_div(0, phi) == 0);
  CHECK(floor_div(-1, phi) == -1);
}

TEST_CASE("floor bracketing invariant") {
  std::vector<IrrationalSlope> slopes = {
      IrrationalSlope::parse("golden"), IrrationalSlope::parse("sqrt:2"),
      IrrationalSlope::parse("quad:1,1,2,13")};
  for (const auto& r : slopes) {
    for (long n = -10000; n <= 10000; n += 37) {
      Int f = floor_mul(Int(n), r);
      // f <= n r < f + 1 via exact signs.
      CHECK(r.value().sign_affine(Rat(Int(-f)), Rat(Int(n))) >= 0);
      CHECK(r.value().sign_affine(Rat(Int(-f - 1)), Rat(Int(n))) < 0);
    }
  }
}

TEST_CASE("reciprocal inverts the slope") {
  for (const char* spec :
       {"golden", "sqrt:2", "quad:1,1,2,13", "quad:7,3,5,6"}) {
    IrrationalSlope r = IrrationalSlope::parse(spec);
    const QuadSurd& inv = r.reciprocal();
    // floor(n / r) computed through the reciprocal agrees with the 512-bit
    // numeric value.
    mpf_class rv = approx_512(r);
    for (long n = -500; n <= 500; n += 13) {
      mpf_class t(0, 512);
      mpf_floor(t.get_mpf_t(), mpf_class(mpf_class(n, 512) / rv).get_mpf_t());
      CHECK(inv.floor_affine(0, Rat(Int(n))) == Int(mpz_class(t)));
    }
  }
}

TEST_CASE("floor_mul agrees with 512-bit numeric floor") {
  std::mt19937_64 rng(20260824);
  std::uniform_int_distribution<long> dist(-1000000000L, 1000000000L);
  for (const char* spec : {"golden", "sqrt:2", "quad:1,1,2,13"}) {
    IrrationalSlope r = IrrationalSlope::parse(spec);
    mpf_class rv = approx_512(r);
    for (int it = 0; it < 200; ++it) {
      long n = dist(rng);
      mpf_class t(0, 512);
      mpf_floor(t.get_mpf_t(), mpf_class(mpf_class(n, 512) * rv).get_mpf_t());
      CHECK(floor_mul(Int(n), r) == Int(mpz_class(t)));
    }
  }
}

TEST_CASE("rational helpers") {
  CHECK(make_rat(2, -4) == Rat(-1, 2));
  CHECK(floor_rat(make_rat(7, 2)) == 3);
  CHECK(floor_rat(make_rat(-7, 2)) == -4);
  CHECK(fdiv(Int(7), Int(2)) == 3);
  CHECK(fdiv(Int(-7), Int(2)) == -4);
  CHECK(fdiv(Int(7), Int(-2)) == -4);
  CHECK(sgn_rat(make_rat(-3, 7)) == -1);
  CHECK(sgn_rat(Rat(0)) == 0);
}

TEST_CASE("is_squarefree") {
  CHECK(is_squarefree(2));
  CHECK(is_squarefree(30));
  CHECK(is_squarefree(9973));
  CHECK(!is_squarefree(4));
  CHECK(!is_squarefree(12));
  CHECK(!is_squarefree(50));
}

}  // TEST_SUITE

}  // namespace
