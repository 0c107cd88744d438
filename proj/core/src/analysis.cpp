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

#include "bqe/analysis.hpp"

#include <cstdlib>
#include <stdexcept>

namespace bqe::analysis {

using logic::AtomKind;
using logic::FKind;
using logic::Formula;
using logic::FormulaPtr;

namespace {

bool fits_ll(const Int& v, long long* out) {
  if (!v.fits_slong_p()) return false;
  *out = v.get_si();
  return true;
}

}  // namespace

std::optional<Int> brute_force_pattern(const BeattyContext& ctx,
                                       const pattern::PatternQuery& q,
                                       long long bound) {
  if (bound < 1) throw std::invalid_argument("brute_force_pattern: bound >= 1");
  // Word-sized scan when the coefficients allow it.
  struct Row {
    long long a, k;
    bool in;
  };
  std::vector<Row> rows;
  bool fast = true;
  for (size_t i = 0; i < q.size() && fast; ++i) {
    Row r{0, 0, q.in_I(i)};
    fast = fits_ll(q.a[i], &r.a) && fits_ll(q.k[i], &r.k) &&
           std::llabs(r.a) < (1LL << 40) && std::llabs(r.k) < (1LL << 40) &&
           bound < (1LL << 40);
    rows.push_back(r);
  }
  if (fast) {
    for (long long i = 0; i <= bound; ++i) {
      for (int sign = 0; sign < (i == 0 ? 1 : 2); ++sign) {
        long long c = sign == 0 ? i : -i;
        bool ok = true;
        for (const Row& r : rows) {
          if (ctx.member_P(r.a + r.k * c) != r.in) {
            ok = false;
            break;
          }
        }
        if (ok) return Int(static_cast<long>(c));
      }
    }
    return std::nullopt;
  }
  for (long long i = 0; i <= bound; ++i) {
    for (int sign = 0; sign < (i == 0 ? 1 : 2); ++sign) {
      Int c = Int(static_cast<long>(sign == 0 ? i : -i));
      if (pattern::check_pointwise(ctx, q, c)) return c;
    }
  }
  return std::nullopt;
}

namespace {

// Compiled form of a quantifier-free single-variable formula: each atom
// becomes (kind, m, k, a) evaluated at v = k c + a over long long.
struct CompiledAtom {
  AtomKind kind;
  long long m, k, a;
};

struct Compiler {
  const std::string& var;
  long long max_abs_c;
  std::vector<CompiledAtom> atoms;

  // Returns an atom index or -1 when the formula cannot be compiled.
  bool compile_atom(const logic::Atom& at) {
    long long k = 0, a = 0, m = 1;
    if (!fits_ll(at.term.constant, &a)) return false;
    if (!fits_ll(at.modulus, &m)) return false;
    for (const auto& [v, c] : at.term.coeffs) {
      if (v != var) return false;
      if (!fits_ll(c, &k)) return false;
    }
    if (std::llabs(k) > (1LL << 30) || std::llabs(a) > (1LL << 40)) return false;
    if (std::llabs(k) * max_abs_c + std::llabs(a) > (1LL << 50)) return false;
    atoms.push_back({at.kind, m, k, a});
    return true;
  }
};

bool compile_rec(const FormulaPtr& f, Compiler& comp,
                 std::vector<std::pair<const Formula*, int>>& atom_ids) {
  switch (f->kind) {
    case FKind::Atom:
      if (!comp.compile_atom(f->atom)) return false;
      atom_ids.emplace_back(f.get(), static_cast<int>(comp.atoms.size()) - 1);
      return true;
    case FKind::Exists:
      return false;
    default:
      for (const auto& arg : f->args)
        if (!compile_rec(arg, comp, atom_ids)) return false;
      return true;
  }
}

bool eval_compiled(const FormulaPtr& f, long long c, const BeattyContext& ctx,
                   const Compiler& comp,
                   const std::vector<std::pair<const Formula*, int>>& atom_ids,
                   size_t& cursor) {
  switch (f->kind) {
    case FKind::Atom: {
      const CompiledAtom& at = comp.atoms[atom_ids[cursor++].second];
      long long v = at.k * c + at.a;
      switch (at.kind) {
        case AtomKind::Eq0: return v == 0;
        case AtomKind::InP: return ctx.member_P(v);
        case AtomKind::DivPlus: return v % at.m == 0 && ctx.member_P(v / at.m);
        case AtomKind::DivMinus:
          return v % at.m == 0 && !ctx.member_P(v / at.m);
      }
      return false;
    }
    case FKind::Not: {
      bool r = eval_compiled(f->args[0], c, ctx, comp, atom_ids, cursor);
      return !r;
    }
    case FKind::And: {
      bool out = true;
      for (const auto& arg : f->args)
        out = eval_compiled(arg, c, ctx, comp, atom_ids, cursor) && out;
      return out;
    }
    case FKind::Or: {
      bool out = false;
      for (const auto& arg : f->args)
        out = eval_compiled(arg, c, ctx, comp, atom_ids, cursor) || out;
      return out;
    }
    default:
      return false;
  }
}

}  // namespace

std::vector<Int> enumerate_definable(const FormulaPtr& f, const Int& lo,
                                     const Int& hi, const BeattyContext& ctx,
                                     long long search_bound) {
  std::set<std::string> fv = logic::free_vars(f);
  if (fv.size() != 1)
    throw std::invalid_argument(
        "enumerate_definable: formula must have exactly one free variable");
  const std::string var = *fv.begin();
  if (lo > hi) return {};

  std::vector<Int> out;
  long long llo, lhi;
  if (logic::is_quantifier_free(f) && fits_ll(lo, &llo) && fits_ll(hi, &lhi)) {
    Compiler comp{var, std::max(std::llabs(llo), std::llabs(lhi)), {}};
    std::vector<std::pair<const Formula*, int>> atom_ids;
    if (compile_rec(f, comp, atom_ids)) {
      for (long long c = llo; c <= lhi; ++c) {
        size_t cursor = 0;
        if (eval_compiled(f, c, ctx, comp, atom_ids, cursor))
          out.push_back(Int(static_cast<long>(c)));
      }
      return out;
    }
  }
  for (Int c = lo; c <= hi; ++c) {
    logic::SentenceResult r = logic::eval_formula(f, {{var, c}}, ctx,
                                                  search_bound);
    if (r.value) out.push_back(c);
  }
  return out;
}

GapReport gap_report(const FormulaPtr& f, const Int& lo, const Int& hi,
                     const BeattyContext& ctx, long long search_bound) {
  std::vector<Int> pts = enumerate_definable(f, lo, hi, ctx, search_bound);
  GapReport rep;
  rep.lo = lo;
  rep.hi = hi;
  rep.points_found = static_cast<long long>(pts.size());
  for (size_t i = 1; i < pts.size(); ++i) {
    Int gap = pts[i] - pts[i - 1];
    if (gap > rep.max_gap) rep.max_gap = gap;
  }
  rep.gap_bound_estimate = rep.max_gap;
  return rep;
}

Int instability_witness(const Int& n, const BeattyContext& ctx) {
  if (n < 1) throw std::invalid_argument("instability_witness: n >= 1");
  long long nn = n.get_si();
  for (long long m = 1; m <= 1000000000LL; ++m) {
    bool ok = true;
    for (long long i = 1; i <= nn && ok; ++i)
      ok = ctx.member_P(i * m) && !ctx.member_P(-i * m);
    if (ok) return Int(static_cast<long>(m));
  }
  throw std::logic_error("instability_witness: scan bound exceeded");
}

std::vector<std::vector<bool>> instability_matrix(const Int& n, const Int& m,
                                                  const BeattyContext& ctx) {
  long long nn = n.get_si();
  long long mm = m.get_si();
  std::vector<std::vector<bool>> out(static_cast<size_t>(nn));
  for (long long i = 1; i <= nn; ++i) {
    auto& row = out[static_cast<size_t>(i - 1)];
    for (long long j = 1; j <= nn; ++j)
      row.push_back(ctx.member_P(Int(static_cast<long>((j - i) * mm))));
  }
  return out;
}

}  // namespace bqe::analysis
