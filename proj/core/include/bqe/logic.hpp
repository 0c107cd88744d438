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

#ifndef BQE_LOGIC_HPP
#define BQE_LOGIC_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "bqe/beatty.hpp"
#include "bqe/pattern.hpp"

namespace bqe::logic {

using beatty::BeattyContext;
using exact::Int;

/// Integer-linear term: constant + sum of coeff * variable. Coefficient
/// maps never store zeros.
struct Term {
  Int constant;
  std::map<std::string, Int> coeffs;
};

Term term_const(const Int& c);
Term term_var(const std::string& v, const Int& coeff = 1);
Term term_add(const Term& a, const Term& b);
Term term_neg(const Term& a);
Term term_scale(const Int& c, const Term& a);
Term term_shift(const Term& a, const Int& c);
bool term_equal(const Term& a, const Term& b);
std::string term_to_string(const Term& t);
Int term_eval(const Term& t, const std::map<std::string, Int>& env);

enum class AtomKind {
  Eq0,       // t = 0
  InP,       // t in P_r
  DivPlus,   // m | t and t/m in P_r
  DivMinus,  // m | t and t/m not in P_r
};

struct Atom {
  AtomKind kind = AtomKind::Eq0;
  Int modulus = 1;  // m for the Div atoms
  Term term;
};

enum class FKind { Atom, Not, And, Or, Exists };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  FKind kind = FKind::Atom;
  Atom atom;                     // FKind::Atom
  std::vector<FormulaPtr> args;  // Not: 1; And/Or: >= 1; Exists: 1 (body)
  std::string var;               // Exists
};

FormulaPtr mk_atom(Atom a);
FormulaPtr mk_in_p(Term t);
FormulaPtr mk_eq0(Term t);
FormulaPtr mk_div(bool plus, const Int& m, Term t);
FormulaPtr mk_not(FormulaPtr f);
FormulaPtr mk_and(std::vector<FormulaPtr> args);
FormulaPtr mk_or(std::vector<FormulaPtr> args);
FormulaPtr mk_exists(std::string var, FormulaPtr body);

/// Constants true / false as the atoms "0 = 0" / "!(0 = 0)".
FormulaPtr mk_true();
FormulaPtr mk_false();

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b);
bool is_quantifier_free(const FormulaPtr& f);
std::set<std::string> free_vars(const FormulaPtr& f);

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"),
        position(pos) {}
};

/// Grammar (ASCII):
///   formula := or ; or := and ("|" and)* ; and := unary ("&" unary)*
///   unary   := "!" unary | "exists" var "(" formula ")" | "(" formula ")"
///            | atom
///   atom    := "P" "(" term ")" | "D+" "[" int "]" "(" term ")"
///            | "D-" "[" int "]" "(" term ")" | term "=" term
///   term    := ["-"] addend (("+"|"-") addend)* ;
///   addend  := int | int "*" var | var
/// "P", "D" and "exists" are reserved words.
FormulaPtr parse(const std::string& text);

/// Inverse of parse up to the Eq0 normal form (t1 = t2 prints as
/// "t1 - t2 = 0" after one round trip).
std::string print(const FormulaPtr& f);

bool eval_ground(const FormulaPtr& f, const std::map<std::string, Int>& env,
                 const BeattyContext& ctx);

struct SentenceResult {
  bool value = false;
  bool exact = true;  // false when decided by bounded search only
};

/// Decides a sentence. Single existentials over conjunctions of P-literals
/// and linear (dis)equalities are decided exactly through the pattern
/// machinery; anything else falls back to bounded search over
/// [-search_bound, search_bound] per quantifier. A witness found by the
/// search still proves the sentence (exact = true); an exhausted scan is
/// inconclusive and flagged inexact.
SentenceResult eval_sentence(const FormulaPtr& f, const BeattyContext& ctx,
                             long long search_bound = 100000);

/// eval_sentence generalized to formulas whose free variables are pinned
/// by `env`.
SentenceResult eval_formula(const FormulaPtr& f,
                            const std::map<std::string, Int>& env,
                            const BeattyContext& ctx,
                            long long search_bound = 100000);

/// Quantifier-free psi with free variables x1..xn equivalent over ZZ to
/// "exists y: /\_{i in I} x_i + k_i y in P and /\_{i not in I} not in P".
/// Output is in disjunctive normal form with a deterministic disjunct
/// order; it depends on the slope through exact regime comparisons.
FormulaPtr eliminate(const std::vector<Int>& k, const std::set<int>& I,
                     const BeattyContext& ctx);

/// The membership type of each generator value 1..kmax.
std::vector<std::pair<Int, bool>> z_axioms(const Int& kmax,
                                           const BeattyContext& ctx);

}  // namespace bqe::logic

#endif  // BQE_LOGIC_HPP
