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

#include "bqe/logic.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace bqe::logic {

// ---------------------------------------------------------------------------
// Terms

Term term_const(const Int& c) { return Term{c, {}}; }

Term term_var(const std::string& v, const Int& coeff) {
  Term t;
  if (coeff != 0) t.coeffs[v] = coeff;
  return t;
}

Term term_add(const Term& a, const Term& b) {
  Term out = a;
  out.constant += b.constant;
  for (const auto& [v, c] : b.coeffs) {
    Int& slot = out.coeffs[v];
    slot += c;
    if (slot == 0) out.coeffs.erase(v);
  }
  return out;
}

Term term_neg(const Term& a) { return term_scale(-1, a); }

Term term_scale(const Int& c, const Term& a) {
  Term out;
  if (c == 0) return out;
  out.constant = a.constant * c;
  for (const auto& [v, k] : a.coeffs) out.coeffs[v] = k * c;
  return out;
}

Term term_shift(const Term& a, const Int& c) {
  Term out = a;
  out.constant += c;
  return out;
}

bool term_equal(const Term& a, const Term& b) {
  if (a.constant != b.constant) return false;
  if (a.coeffs.size() != b.coeffs.size()) return false;
  for (auto ia = a.coeffs.begin(), ib = b.coeffs.begin(); ia != a.coeffs.end();
       ++ia, ++ib) {
    if (ia->first != ib->first || ia->second != ib->second) return false;
  }
  return true;
}

std::string term_to_string(const Term& t) {
  std::string out;
  for (const auto& [v, c] : t.coeffs) {
    Int ac = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (ac != 1) out += ac.get_str() + "*";
    out += v;
  }
  if (out.empty()) return t.constant.get_str();
  if (t.constant != 0) {
    Int ac = abs(t.constant);
    out += t.constant < 0 ? " - " : " + ";
    out += ac.get_str();
  }
  return out;
}

Int term_eval(const Term& t, const std::map<std::string, Int>& env) {
  Int v = t.constant;
  for (const auto& [var, c] : t.coeffs) {
    auto it = env.find(var);
    if (it == env.end())
      throw std::invalid_argument("unbound variable '" + var + "'");
    v += c * it->second;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Formula construction

FormulaPtr mk_atom(Atom a) {
  auto f = std::make_shared<Formula>();
  f->kind = FKind::Atom;
  f->atom = std::move(a);
  return f;
}

FormulaPtr mk_in_p(Term t) {
  return mk_atom(Atom{AtomKind::InP, 1, std::move(t)});
}

FormulaPtr mk_eq0(Term t) {
  return mk_atom(Atom{AtomKind::Eq0, 1, std::move(t)});
}

FormulaPtr mk_div(bool plus, const Int& m, Term t) {
  if (m < 1) throw std::invalid_argument("D atom: modulus must be positive");
  return mk_atom(
      Atom{plus ? AtomKind::DivPlus : AtomKind::DivMinus, m, std::move(t)});
}

FormulaPtr mk_not(FormulaPtr f) {
  auto out = std::make_shared<Formula>();
  out->kind = FKind::Not;
  out->args = {std::move(f)};
  return out;
}

FormulaPtr mk_and(std::vector<FormulaPtr> args) {
  if (args.empty()) return mk_true();
  if (args.size() == 1) return args[0];
  auto out = std::make_shared<Formula>();
  out->kind = FKind::And;
  out->args = std::move(args);
  return out;
}

FormulaPtr mk_or(std::vector<FormulaPtr> args) {
  if (args.empty()) return mk_false();
  if (args.size() == 1) return args[0];
  auto out = std::make_shared<Formula>();
  out->kind = FKind::Or;
  out->args = std::move(args);
  return out;
}

FormulaPtr mk_exists(std::string var, FormulaPtr body) {
  auto out = std::make_shared<Formula>();
  out->kind = FKind::Exists;
  out->var = std::move(var);
  out->args = {std::move(body)};
  return out;
}

FormulaPtr mk_true() { return mk_eq0(term_const(0)); }
FormulaPtr mk_false() { return mk_not(mk_eq0(term_const(0))); }

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case FKind::Atom:
      return a->atom.kind == b->atom.kind && a->atom.modulus == b->atom.modulus &&
             term_equal(a->atom.term, b->atom.term);
    case FKind::Exists:
      if (a->var != b->var) return false;
      [[fallthrough]];
    case FKind::Not:
    case FKind::And:
    case FKind::Or:
      if (a->args.size() != b->args.size()) return false;
      for (size_t i = 0; i < a->args.size(); ++i)
        if (!formula_equal(a->args[i], b->args[i])) return false;
      return true;
  }
  return false;
}

bool is_quantifier_free(const FormulaPtr& f) {
  if (f->kind == FKind::Exists) return false;
  for (const auto& arg : f->args)
    if (!is_quantifier_free(arg)) return false;
  return true;
}

namespace {

void free_vars_rec(const FormulaPtr& f, std::set<std::string>& bound,
                   std::set<std::string>& out) {
  switch (f->kind) {
    case FKind::Atom:
      for (const auto& [v, c] : f->atom.term.coeffs)
        if (!bound.count(v)) out.insert(v);
      return;
    case FKind::Exists: {
      bool inserted = bound.insert(f->var).second;
      free_vars_rec(f->args[0], bound, out);
      if (inserted) bound.erase(f->var);
      return;
    }
    default:
      for (const auto& arg : f->args) free_vars_rec(arg, bound, out);
  }
}

}  // namespace

std::set<std::string> free_vars(const FormulaPtr& f) {
  std::set<std::string> bound, out;
  free_vars_rec(f, bound, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Lexer {
  const std::string& text;
  size_t pos = 0;

  explicit Lexer(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c))
      throw ParseError(std::string("expected '") + c + "'", pos);
  }

  bool at_ident() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())); }

  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_'))
      ++pos;
    if (start == pos) throw ParseError("expected identifier", pos);
    return text.substr(start, pos - start);
  }

  Int integer() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (start == pos) throw ParseError("expected integer", pos);
    return Int(text.substr(start, pos - start));
  }
};

bool reserved(const std::string& w) {
  return w == "P" || w == "D" || w == "exists";
}

struct Parser {
  Lexer lex;

  explicit Parser(const std::string& t) : lex(t) {}

  FormulaPtr formula() {
    std::vector<FormulaPtr> args{conjunction()};
    while (lex.eat('|')) args.push_back(conjunction());
    return args.size() == 1 ? args[0] : mk_or(std::move(args));
  }

  FormulaPtr conjunction() {
    std::vector<FormulaPtr> args{unary()};
    while (lex.eat('&')) args.push_back(unary());
    return args.size() == 1 ? args[0] : mk_and(std::move(args));
  }

  FormulaPtr unary() {
    if (lex.eat('!')) return mk_not(unary());
    if (lex.eat('(')) {
      FormulaPtr f = formula();
      lex.expect(')');
      return f;
    }
    if (lex.at_ident()) {
      size_t save = lex.pos;
      std::string w = lex.ident();
      if (w == "exists") {
        std::string v = lex.ident();
        if (reserved(v)) throw ParseError("reserved word '" + v + "'", lex.pos);
        lex.expect('(');
        FormulaPtr body = formula();
        lex.expect(')');
        return mk_exists(std::move(v), std::move(body));
      }
      if (w == "P" && lex.peek() == '(') {
        lex.expect('(');
        Term t = term();
        lex.expect(')');
        return mk_in_p(std::move(t));
      }
      if (w == "D" && (lex.peek() == '+' || lex.peek() == '-')) {
        bool plus = lex.eat('+');
        if (!plus) lex.expect('-');
        lex.expect('[');
        Int m = lex.integer();
        lex.expect(']');
        lex.expect('(');
        Term t = term();
        lex.expect(')');
        return mk_div(plus, m, std::move(t));
      }
      if (reserved(w)) throw ParseError("misused reserved word '" + w + "'", lex.pos);
      lex.pos = save;  // plain variable: must be an equality atom
    }
    return equality();
  }

  FormulaPtr equality() {
    Term lhs = term();
    lex.expect('=');
    Term rhs = term();
    return mk_eq0(term_add(lhs, term_neg(rhs)));
  }

  Term term() {
    bool neg = lex.eat('-');
    Term t = addend();
    if (neg) t = term_neg(t);
    while (true) {
      if (lex.eat('+')) {
        t = term_add(t, addend());
      } else if (lex.eat('-')) {
        t = term_add(t, term_neg(addend()));
      } else {
        return t;
      }
    }
  }

  Term addend() {
    if (lex.at_digit()) {
      Int c = lex.integer();
      if (lex.eat('*')) {
        std::string v = lex.ident();
        if (reserved(v)) throw ParseError("reserved word '" + v + "'", lex.pos);
        return term_var(v, c);
      }
      return term_const(c);
    }
    if (lex.at_ident()) {
      std::string v = lex.ident();
      if (reserved(v)) throw ParseError("reserved word '" + v + "'", lex.pos);
      return term_var(v, 1);
    }
    throw ParseError("expected term", lex.pos);
  }
};

}  // namespace

FormulaPtr parse(const std::string& text) {
  Parser p(text);
  FormulaPtr f = p.formula();
  p.lex.skip_ws();
  if (p.lex.pos != text.size())
    throw ParseError("trailing input", p.lex.pos);
  return f;
}

// ---------------------------------------------------------------------------
// Printer

namespace {

int precedence(const FormulaPtr& f) {
  switch (f->kind) {
    case FKind::Or: return 1;
    case FKind::And: return 2;
    default: return 3;
  }
}

std::string atom_to_string(const Atom& a) {
  switch (a.kind) {
    case AtomKind::Eq0: return term_to_string(a.term) + " = 0";
    case AtomKind::InP: return "P(" + term_to_string(a.term) + ")";
    case AtomKind::DivPlus:
      return "D+[" + a.modulus.get_str() + "](" + term_to_string(a.term) + ")";
    case AtomKind::DivMinus:
      return "D-[" + a.modulus.get_str() + "](" + term_to_string(a.term) + ")";
  }
  return "?";
}

}  // namespace

std::string print(const FormulaPtr& f) {
  switch (f->kind) {
    case FKind::Atom:
      return atom_to_string(f->atom);
    case FKind::Not: {
      const FormulaPtr& arg = f->args[0];
      if (precedence(arg) < 3) return "!(" + print(arg) + ")";
      // Negated equalities would re-parse as "!<term> = 0"; keep parens.
      if (arg->kind == FKind::Atom && arg->atom.kind == AtomKind::Eq0)
        return "!(" + print(arg) + ")";
      return "!" + print(arg);
    }
    case FKind::And: {
      std::string out;
      for (const auto& arg : f->args) {
        if (!out.empty()) out += " & ";
        out += precedence(arg) <= 2 ? "(" + print(arg) + ")" : print(arg);
      }
      return out;
    }
    case FKind::Or: {
      std::string out;
      for (const auto& arg : f->args) {
        if (!out.empty()) out += " | ";
        out += precedence(arg) <= 1 ? "(" + print(arg) + ")" : print(arg);
      }
      return out;
    }
    case FKind::Exists:
      return "exists " + f->var + " (" + print(f->args[0]) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

bool eval_atom(const Atom& a, const std::map<std::string, Int>& env,
               const BeattyContext& ctx) {
  Int v = term_eval(a.term, env);
  switch (a.kind) {
    case AtomKind::Eq0: return v == 0;
    case AtomKind::InP: return ctx.member_P(v);
    case AtomKind::DivPlus:
      return v % a.modulus == 0 && ctx.member_P(Int(v / a.modulus));
    case AtomKind::DivMinus:
      return v % a.modulus == 0 && !ctx.member_P(Int(v / a.modulus));
  }
  return false;
}

}  // namespace

bool eval_ground(const FormulaPtr& f, const std::map<std::string, Int>& env,
                 const BeattyContext& ctx) {
  switch (f->kind) {
    case FKind::Atom: return eval_atom(f->atom, env, ctx);
    case FKind::Not: return !eval_ground(f->args[0], env, ctx);
    case FKind::And:
      for (const auto& arg : f->args)
        if (!eval_ground(arg, env, ctx)) return false;
      return true;
    case FKind::Or:
      for (const auto& arg : f->args)
        if (eval_ground(arg, env, ctx)) return true;
      return false;
    case FKind::Exists:
      throw std::invalid_argument("eval_ground: formula is not quantifier-free");
  }
  return false;
}

// ---------------------------------------------------------------------------
// Sentence evaluation

namespace {

struct FragLit {
  bool positive;
  const Atom* atom;
};

// Flattens a conjunction of (possibly negated) atoms; false when the body
// leaves the exactly-decidable shape.
bool collect_literals(const FormulaPtr& f, std::vector<FragLit>& out) {
  switch (f->kind) {
    case FKind::Atom:
      out.push_back({true, &f->atom});
      return true;
    case FKind::Not:
      if (f->args[0]->kind != FKind::Atom) return false;
      out.push_back({false, &f->args[0]->atom});
      return true;
    case FKind::And:
      for (const auto& arg : f->args)
        if (!collect_literals(arg, out)) return false;
      return true;
    default:
      return false;
  }
}

SentenceResult eval_rec(const FormulaPtr& f, std::map<std::string, Int>& env,
                        const BeattyContext& ctx, long long bound);

// Exact decision of exists var (conjunction of InP literals and linear
// (dis)equalities). Returns nullopt when the body is outside the fragment.
std::optional<SentenceResult> try_fragment(const std::string& var,
                                           const FormulaPtr& body,
                                           std::map<std::string, Int>& env,
                                           const BeattyContext& ctx) {
  std::vector<FragLit> lits;
  if (!collect_literals(body, lits)) return std::nullopt;

  // Each literal becomes (k, a) with term value k*var + a under env.
  struct Entry {
    Int k, a;
    bool positive;
  };
  std::vector<Entry> members;
  std::vector<std::pair<Int, Int>> equalities;  // k*var + a = 0, k != 0
  std::set<Int> excluded;
  for (const FragLit& lit : lits) {
    const Atom& at = *lit.atom;
    if (at.kind == AtomKind::DivPlus || at.kind == AtomKind::DivMinus)
      return std::nullopt;
    Int k = 0, a = at.term.constant;
    for (const auto& [v, c] : at.term.coeffs) {
      if (v == var) {
        k = c;
        continue;
      }
      auto it = env.find(v);
      if (it == env.end())
        throw std::invalid_argument("unbound variable '" + v + "'");
      a += c * it->second;
    }
    if (at.kind == AtomKind::InP) {
      members.push_back({k, a, lit.positive});
    } else {  // Eq0
      if (k == 0) {
        bool holds = (a == 0) == lit.positive;
        if (!holds) return SentenceResult{false, true};
      } else if (lit.positive) {
        equalities.emplace_back(k, a);
      } else if (a % k == 0) {
        excluded.insert(Int(-a / k));
      }
    }
  }

  if (!equalities.empty()) {
    // Pin the variable and evaluate the body outright.
    auto [k, a] = equalities.front();
    if (a % k != 0) return SentenceResult{false, true};
    Int v = -a / k;
    if (excluded.count(v)) return SentenceResult{false, true};
    env[var] = v;
    bool value = eval_ground(body, env, ctx);
    env.erase(var);
    return SentenceResult{value, true};
  }

  if (members.empty()) {
    // Only disequalities: any integer off the finite excluded set works.
    return SentenceResult{true, true};
  }

  pattern::PatternQuery q;
  for (size_t i = 0; i < members.size(); ++i) {
    q.a.push_back(members[i].a);
    q.k.push_back(members[i].k);
    if (members[i].positive) q.I.insert(static_cast<int>(i) + 1);
  }
  pattern::PatternQuery qn = pattern::normalize_query(q);
  pattern::Analysis an = pattern::analyze(ctx, qn);
  if (an.contradictory || an.kzero_violation) return SentenceResult{false, true};
  if (an.all_kzero || an.open_nonempty()) {
    // The witness set is infinite (or all of ZZ); finitely many excluded
    // values cannot exhaust it.
    return SentenceResult{true, true};
  }
  for (const Int& c : an.finite_candidates)
    if (!excluded.count(c)) return SentenceResult{true, true};
  return SentenceResult{false, true};
}

SentenceResult eval_rec(const FormulaPtr& f, std::map<std::string, Int>& env,
                        const BeattyContext& ctx, long long bound) {
  switch (f->kind) {
    case FKind::Atom:
      return {eval_atom(f->atom, env, ctx), true};
    case FKind::Not: {
      SentenceResult r = eval_rec(f->args[0], env, ctx, bound);
      return {!r.value, r.exact};
    }
    case FKind::And: {
      bool all_exact = true, any_exact_false = false, value = true;
      for (const auto& arg : f->args) {
        SentenceResult r = eval_rec(arg, env, ctx, bound);
        value = value && r.value;
        all_exact = all_exact && r.exact;
        any_exact_false = any_exact_false || (!r.value && r.exact);
      }
      return {value, value ? all_exact : any_exact_false};
    }
    case FKind::Or: {
      bool all_exact = true, any_exact_true = false, value = false;
      for (const auto& arg : f->args) {
        SentenceResult r = eval_rec(arg, env, ctx, bound);
        value = value || r.value;
        all_exact = all_exact && r.exact;
        any_exact_true = any_exact_true || (r.value && r.exact);
      }
      return {value, value ? any_exact_true : all_exact};
    }
    case FKind::Exists: {
      if (auto exact = try_fragment(f->var, f->args[0], env, ctx))
        return *exact;
      // Bounded fallback: a found witness is a real witness (sound), but a
      // failed scan is inconclusive.
      for (long long i = 0; i <= bound; ++i) {
        for (int sign = 0; sign < (i == 0 ? 1 : 2); ++sign) {
          env[f->var] = Int(static_cast<long>(sign == 0 ? i : -i));
          SentenceResult r = eval_rec(f->args[0], env, ctx, bound);
          env.erase(f->var);
          if (r.value) return {true, r.exact};
        }
      }
      return {false, false};
    }
  }
  return {false, false};
}

}  // namespace

SentenceResult eval_sentence(const FormulaPtr& f, const BeattyContext& ctx,
                             long long search_bound) {
  if (!free_vars(f).empty())
    throw std::invalid_argument("eval_sentence: formula has free variables");
  std::map<std::string, Int> env;
  return eval_rec(f, env, ctx, search_bound);
}

SentenceResult eval_formula(const FormulaPtr& f,
                            const std::map<std::string, Int>& env,
                            const BeattyContext& ctx, long long search_bound) {
  std::map<std::string, Int> scratch = env;
  return eval_rec(f, scratch, ctx, search_bound);
}

// ---------------------------------------------------------------------------
// Quantifier elimination

namespace {

// h(z) in (h(-k'), 1): union of P_r-coset arcs plus the grid points
// strictly between the endpoints. Valid in the regime k' < r; for k' > r
// the condition is constantly true (returns nullptr).
FormulaPtr a_condition(const Int& k, const Int& l, const Term& X, const Term& Y,
                       const BeattyContext& ctx) {
  Int g = gcd(k, l);
  Int kp = k / g, lp = l / g;
  if (ctx.slope().value().sign_affine(exact::Rat(kp), exact::Rat(-1)) > 0)
    return nullptr;
  Term z = term_add(term_scale(lp, X), term_scale(kp, Y));
  std::vector<FormulaPtr> parts;
  long kk = kp.get_si();
  for (long i = 0; i < kk; ++i) parts.push_back(mk_in_p(term_shift(z, i)));
  // The left boundary h(z) = h(-k') counts: the candidate endpoint then
  // coincides with a slice endpoint and a right-neighbourhood still lies
  // inside the family. The right boundary (z = 0) stays excluded.
  for (long i = 1; i <= kk; ++i) parts.push_back(mk_eq0(term_shift(z, i)));
  return mk_or(std::move(parts));
}

// h(z) in (1, h(-k')): the complement-side analogue, valid in the regime
// k' < r/(r-1); for k' > r/(r-1) constantly true (nullptr).
FormulaPtr b_condition(const Int& k, const Int& l, const Term& X, const Term& Y,
                       const BeattyContext& ctx) {
  Int g = gcd(k, l);
  Int kp = k / g, lp = l / g;
  // k'(r-1) > r, exactly: sign of -k' + (k'-1) r.
  if (ctx.slope().value().sign_affine(exact::Rat(-kp), exact::Rat(Int(kp - 1))) >
      0)
    return nullptr;
  Term z = term_add(term_scale(lp, X), term_scale(kp, Y));
  std::vector<FormulaPtr> parts;
  long kk = kp.get_si();
  for (long i = 0; i < kk; ++i) {
    parts.push_back(mk_and({mk_not(mk_in_p(term_shift(z, i))),
                            mk_not(mk_eq0(term_shift(z, i))),
                            mk_not(mk_eq0(term_shift(z, i + 1)))}));
  }
  // As in a_condition, the left boundary h(z) = 1 (z = 0) is included:
  // the closed V slices contain their left endpoints.
  for (long i = 0; i < kk; ++i) parts.push_back(mk_eq0(term_shift(z, i)));
  return mk_or(std::move(parts));
}

// DNF with deterministic ordering. Only And/Or/Atom/Not(Atom) appear in
// the eliminator's raw output.
using Conjunct = std::vector<FormulaPtr>;

std::vector<Conjunct> dnf(const FormulaPtr& f) {
  switch (f->kind) {
    case FKind::Atom:
      return {{f}};
    case FKind::Not:
      if (f->args[0]->kind != FKind::Atom)
        throw std::logic_error("dnf: negation of a non-atom");
      return {{f}};
    case FKind::Or: {
      std::vector<Conjunct> out;
      for (const auto& arg : f->args)
        for (auto& c : dnf(arg)) out.push_back(std::move(c));
      return out;
    }
    case FKind::And: {
      std::vector<Conjunct> acc{{}};
      for (const auto& arg : f->args) {
        std::vector<Conjunct> arg_dnf = dnf(arg);
        std::vector<Conjunct> next;
        for (const auto& left : acc) {
          for (const auto& right : arg_dnf) {
            Conjunct merged = left;
            merged.insert(merged.end(), right.begin(), right.end());
            next.push_back(std::move(merged));
          }
        }
        acc = std::move(next);
      }
      return acc;
    }
    default:
      throw std::logic_error("dnf: unexpected quantifier");
  }
}

FormulaPtr normalize_dnf(const FormulaPtr& raw, const BeattyContext& ctx) {
  std::vector<std::string> keys;
  std::vector<FormulaPtr> disjuncts;
  for (const Conjunct& conj : dnf(raw)) {
    std::map<std::string, FormulaPtr> lits;  // print key -> literal
    bool dead = false;
    for (const FormulaPtr& lit : conj) {
      bool positive = lit->kind == FKind::Atom;
      const Atom& at = positive ? lit->atom : lit->args[0]->atom;
      if (at.term.coeffs.empty()) {
        // Ground literal: fold it away.
        bool v = eval_atom(at, {}, ctx);
        if (v != positive) {
          dead = true;
          break;
        }
        continue;
      }
      std::string key = print(lit);
      std::string opposite =
          positive ? print(mk_not(lit)) : print(lit->args[0]);
      if (lits.count(opposite)) {
        dead = true;
        break;
      }
      lits.emplace(std::move(key), lit);
    }
    if (dead) continue;
    if (lits.empty()) return mk_true();  // a tautological disjunct
    std::vector<FormulaPtr> ordered;
    std::string key;
    for (const auto& [k, lit] : lits) {
      ordered.push_back(lit);
      key += k + " & ";
    }
    if (std::find(keys.begin(), keys.end(), key) != keys.end()) continue;
    keys.push_back(key);
    disjuncts.push_back(mk_and(std::move(ordered)));
  }
  // Sort disjuncts by their rendered text for reproducible output.
  std::vector<size_t> order(disjuncts.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return keys[a] < keys[b]; });
  std::vector<FormulaPtr> sorted;
  for (size_t i : order) sorted.push_back(disjuncts[i]);
  if (sorted.empty()) return mk_false();
  return mk_or(std::move(sorted));
}

}  // namespace

FormulaPtr eliminate(const std::vector<Int>& k, const std::set<int>& I,
                     const BeattyContext& ctx) {
  const size_t n = k.size();
  if (n == 0) throw std::invalid_argument("eliminate: empty coefficient list");
  for (int i : I)
    if (i < 1 || static_cast<size_t>(i) > n)
      throw std::invalid_argument("eliminate: index out of range");

  // Negative coefficients are folded away first: a_i + k_i y in P_r iff
  // (-a_i - 1) + (-k_i) y in P_r, so entry i contributes the term e_i
  // below with a nonnegative coefficient kk_i.
  std::vector<Term> e(n);
  std::vector<Int> kk(n);
  std::vector<bool> in_I(n), active(n);
  for (size_t i = 0; i < n; ++i) {
    std::string xi = "x" + std::to_string(i + 1);
    if (k[i] >= 0) {
      e[i] = term_var(xi);
      kk[i] = k[i];
    } else {
      e[i] = term_shift(term_neg(term_var(xi)), -1);
      kk[i] = -k[i];
    }
    in_I[i] = I.count(static_cast<int>(i) + 1) > 0;
    active[i] = kk[i] >= 1;
  }

  std::vector<FormulaPtr> constant_lits;  // k = 0 entries
  for (size_t i = 0; i < n; ++i) {
    if (!active[i])
      constant_lits.push_back(in_I[i] ? mk_in_p(e[i]) : mk_not(mk_in_p(e[i])));
  }

  bool any_active = std::find(active.begin(), active.end(), true) != active.end();
  if (!any_active) return normalize_dnf(mk_and(constant_lits), ctx);

  std::vector<FormulaPtr> disjuncts;

  // Finite component: the witness sits on a V-family boundary, i.e.
  // kk_j0 * y = -e_j0 - eps for some j0 outside I and eps in {0,1}; the
  // remaining constraints transfer through D_{m,+/-} after scaling by m.
  for (size_t j0 = 0; j0 < n; ++j0) {
    if (!active[j0] || in_I[j0]) continue;
    const Int& m = kk[j0];
    for (int eps = 0; eps <= 1; ++eps) {
      Term t = term_shift(term_neg(e[j0]), -eps);  // t = m*y
      std::vector<FormulaPtr> conj = constant_lits;
      if (m > 1)
        conj.push_back(mk_or({mk_div(true, m, t), mk_div(false, m, t)}));
      for (size_t i = 0; i < n; ++i) {
        if (!active[i] || i == j0) continue;
        Term w = term_add(term_scale(m, e[i]), term_scale(kk[i], t));
        if (m == 1) {
          conj.push_back(in_I[i] ? mk_in_p(w) : mk_not(mk_in_p(w)));
        } else {
          conj.push_back(mk_div(in_I[i], m, w));
        }
      }
      disjuncts.push_back(mk_and(std::move(conj)));
    }
  }

  // U-endpoint case: some left endpoint of U_{e_i0, kk_i0} lies in every
  // other family.
  for (size_t i0 = 0; i0 < n; ++i0) {
    if (!active[i0] || !in_I[i0]) continue;
    Term X = term_shift(term_neg(e[i0]), -1);
    std::vector<FormulaPtr> conj = constant_lits;
    for (size_t i = 0; i < n; ++i) {
      if (!active[i] || i == i0) continue;
      FormulaPtr cond = in_I[i] ? a_condition(kk[i0], kk[i], X, e[i], ctx)
                                : b_condition(kk[i0], kk[i], X, e[i], ctx);
      if (cond) conj.push_back(std::move(cond));
    }
    disjuncts.push_back(mk_and(std::move(conj)));
  }

  // V-endpoint case: dually with the left endpoints of the interior of
  // V_{e_j0, kk_j0}.
  for (size_t j0 = 0; j0 < n; ++j0) {
    if (!active[j0] || in_I[j0]) continue;
    Term X = term_neg(e[j0]);
    std::vector<FormulaPtr> conj = constant_lits;
    for (size_t i = 0; i < n; ++i) {
      if (!active[i] || i == j0) continue;
      FormulaPtr cond = in_I[i] ? a_condition(kk[j0], kk[i], X, e[i], ctx)
                                : b_condition(kk[j0], kk[i], X, e[i], ctx);
      if (cond) conj.push_back(std::move(cond));
    }
    disjuncts.push_back(mk_and(std::move(conj)));
  }

  return normalize_dnf(mk_or(std::move(disjuncts)), ctx);
}

std::vector<std::pair<Int, bool>> z_axioms(const Int& kmax,
                                           const BeattyContext& ctx) {
  if (kmax < 1) throw std::invalid_argument("z_axioms: kmax must be >= 1");
  std::vector<std::pair<Int, bool>> out;
  for (Int k = 1; k <= kmax; ++k) out.emplace_back(k, ctx.member_P(k));
  return out;
}

}  // namespace bqe::logic
