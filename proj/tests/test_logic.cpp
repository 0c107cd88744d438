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
#include <vector>

#include "bqe/analysis.hpp"
#include "bqe/logic.hpp"

namespace {

using namespace bqe::logic;
using bqe::exact::IrrationalSlope;

const BeattyContext& golden() {
  static BeattyContext ctx(IrrationalSlope::parse("golden"));
  return ctx;
}

struct AstGen {
  std::mt19937_64 rng;
  explicit AstGen(std::uint64_t seed) : rng(seed) {}

  int pick(int lo, int hi) {
    return lo + static_cast<int>(rng() % (hi - lo + 1));
  }

  Term term() {
    Term t = term_const(pick(-5, 5));
    const char* vars[] = {"x", "y", "z"};
    int nv = pick(0, 2);
    for (int i = 0; i < nv; ++i) {
      int c = pick(-3, 3);
      if (c != 0) t = term_add(t, term_var(vars[pick(0, 2)], c));
    }
    return t;
  }

  FormulaPtr atom() {
    switch (pick(0, 3)) {
      case 0: return mk_in_p(term());
      case 1: return mk_eq0(term());
      case 2: return mk_div(true, pick(1, 4), term());
      default: return mk_div(false, pick(1, 4), term());
    }
  }

  FormulaPtr formula(int depth) {
    if (depth == 0) return atom();
    switch (pick(0, 4)) {
      case 0: return atom();
      case 1: return mk_not(formula(depth - 1));
      case 2:
      case 3: {
        std::vector<FormulaPtr> args;
        int n = pick(2, 3);
        for (int i = 0; i < n; ++i) args.push_back(formula(depth - 1));
        return pick(0, 1) ? mk_and(std::move(args)) : mk_or(std::move(args));
      }
      default: {
        const char* vars[] = {"x", "y", "z"};
        return mk_exists(vars[pick(0, 2)], formula(depth - 1));
      }
    }
  }
};

TEST_SUITE("logic") {

TEST_CASE("parsing examples") {
  FormulaPtr f1 = parse("P(x + 2*y)");
  REQUIRE(f1->kind == FKind::Atom);
  CHECK(f1->atom.kind == AtomKind::InP);
  CHECK(term_to_string(f1->atom.term) == "x + 2*y");

  FormulaPtr f2 = parse("exists y (P(x+y) & !P(x+2*y))");
  REQUIRE(f2->kind == FKind::Exists);
  CHECK(f2->var == "y");
  CHECK(f2->args[0]->kind == FKind::And);

  FormulaPtr f3 = parse("D+[3](x)");
  REQUIRE(f3->kind == FKind::Atom);
  CHECK(f3->atom.kind == AtomKind::DivPlus);
  CHECK(f3->atom.modulus == 3);

  FormulaPtr f4 = parse("x = 3");
  REQUIRE(f4->kind == FKind::Atom);
  CHECK(f4->atom.kind == AtomKind::Eq0);
  CHECK(term_to_string(f4->atom.term) == "x - 3");

  CHECK(formula_equal(parse("P(x) & P(y) | P(z)"),
                      parse("(P(x) & P(y)) | P(z)")));

  CHECK_THROWS_AS(parse("P("), ParseError);
  CHECK_THROWS_AS(parse("exists (P(x))"), ParseError);
  CHECK_THROWS_AS(parse("P(x) &"), ParseError);
  CHECK_THROWS_AS(parse("D*[2](x)"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
}

TEST_CASE("free variables and quantifier detection") {
  FormulaPtr f = parse("exists y (P(x+y) & !P(z))");
  auto fv = free_vars(f);
  CHECK(fv == std::set<std::string>{"x", "z"});
  CHECK(!is_quantifier_free(f));
  CHECK(is_quantifier_free(parse("P(x) | x = 0")));
}

TEST_CASE("print/parse round trip on random ASTs") {
  AstGen gen(20260824);
  for (int it = 0; it < 1000; ++it) {
    FormulaPtr f = gen.formula(3);
    FormulaPtr g = parse(print(f));
    CHECK(formula_equal(f, g));
  }
}

TEST_CASE("eval_ground semantics") {
  const BeattyContext& ctx = golden();
  auto ev = [&](const char* text, long x) {
    return eval_ground(parse(text), {{"x", Int(x)}}, ctx);
  };
  CHECK(ev("P(x)", 3));
  CHECK(!ev("P(x)", 2));
  CHECK(!ev("D+[2](x)", 3));  // 2 does not divide 3
  CHECK(ev("D+[2](x)", 2));   // member_P(1)
  CHECK(!ev("D+[2](x)", 4));  // member_P(2) fails
  CHECK(ev("D-[2](x)", 4));
  CHECK(ev("x = 7", 7));
  CHECK(!ev("x = 7", 6));
  CHECK(ev("!(x = 7)", 6));

  // D_{1,+} is exactly the membership predicate.
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> dist(-100000, 100000);
  for (int it = 0; it < 1000; ++it) {
    long v = dist(rng);
    CHECK(ev("D+[1](x)", v) == ctx.member_P(Int(v)));
    CHECK(ev("D-[1](x)", v) == !ctx.member_P(Int(v)));
  }

  CHECK_THROWS_AS(eval_ground(parse("P(x)"), {}, ctx), std::invalid_argument);
}

TEST_CASE("eval_sentence exact fragment") {
  const BeattyContext& ctx = golden();
  SentenceResult r1 = eval_sentence(parse("exists y (P(y))"), ctx);
  CHECK(r1.value);
  CHECK(r1.exact);

  SentenceResult r2 = eval_sentence(parse("exists y (P(y) & P(2*y))"), ctx);
  CHECK(r2.value);
  CHECK(r2.exact);

  SentenceResult r3 = eval_sentence(parse("exists y (P(y) & P(y+1))"), ctx);
  CHECK(r3.value);  // 3, 4 consecutive in the Wythoff set
  CHECK(r3.exact);

  // Slope (1+sqrt(13))/2 > 2: gaps are >= 2, consecutive members never occur.
  BeattyContext wide(IrrationalSlope::parse("quad:1,1,2,13"));
  SentenceResult r4 = eval_sentence(parse("exists y (P(y) & P(y+1))"), wide);
  CHECK(!r4.value);
  CHECK(r4.exact);

  SentenceResult r5 =
      eval_sentence(parse("exists y (P(y) & !(y = 1) & !(y = 3) & P(y+1))"),
                    ctx);
  CHECK(r5.value);  // 8, 9 remain after excluding 1 and 3
  CHECK(r5.exact);

  CHECK(eval_sentence(parse("P(1)"), ctx).value);
  CHECK(!eval_sentence(parse("P(2)"), ctx).value);
}

TEST_CASE("eval_sentence bounded fallback") {
  const BeattyContext& ctx = golden();
  // Divisibility atoms leave the exact fragment; a witness found by the
  // scan is still a proof, so the true answer is exact.
  SentenceResult r = eval_sentence(parse("exists y (D+[2](y))"), ctx, 1000);
  CHECK(r.value);
  CHECK(r.exact);
  // An exhausted scan proves nothing and is flagged inexact.
  SentenceResult r2 =
      eval_sentence(parse("exists y (D+[2](y) & y = 0)"), ctx, 1000);
  CHECK(!r2.value);
  CHECK(!r2.exact);
}

TEST_CASE("eliminate trivial families") {
  const BeattyContext& ctx = golden();
  FormulaPtr all = eliminate({Int(1)}, {1}, ctx);
  CHECK(is_quantifier_free(all));
  for (long x = -50; x <= 50; ++x)
    CHECK(eval_ground(all, {{"x1", Int(x)}}, ctx));

  FormulaPtr constant = eliminate({Int(0)}, {1}, ctx);
  CHECK(formula_equal(constant, parse("P(x1)")));
}

TEST_CASE("eliminate two-constraint families match brute force") {
  const BeattyContext& ctx = golden();
  struct Case {
    std::vector<Int> k;
    std::set<int> I;
  };
  std::vector<Case> cases = {{{Int(1), Int(1)}, {1}},
                             {{Int(2), Int(3)}, {1}},
                             {{Int(1), Int(-2)}, {1, 2}}};
  for (const auto& cs : cases) {
    FormulaPtr psi = eliminate(cs.k, cs.I, ctx);
    CHECK(is_quantifier_free(psi));
    for (long x1 = -15; x1 <= 15; ++x1) {
      for (long x2 = -15; x2 <= 15; ++x2) {
        bqe::pattern::PatternQuery q{{Int(x1), Int(x2)}, cs.k, cs.I};
        bool expect =
            bqe::analysis::brute_force_pattern(ctx, q, 10000).has_value();
        CHECK(eval_ground(psi, {{"x1", Int(x1)}, {"x2", Int(x2)}}, ctx) ==
              expect);
      }
    }
  }
}

TEST_CASE("z_axioms") {
  const BeattyContext& ctx = golden();
  std::vector<std::pair<Int, bool>> expect = {
      {Int(1), true}, {Int(2), false}, {Int(3), true}, {Int(4), true}};
  CHECK(z_axioms(4, ctx) == expect);

  BeattyContext rt2(IrrationalSlope::parse("sqrt:2"));
  std::vector<std::pair<Int, bool>> expect2 = {{Int(1), true}};
  CHECK(z_axioms(1, rt2) == expect2);
}

}  // TEST_SUITE

}  // namespace
