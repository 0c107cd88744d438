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

#include "bqe/json.hpp"

namespace bqe::json {

using logic::AtomKind;
using logic::FKind;

ordered_json term_to_json(const logic::Term& t) {
  ordered_json coeffs = ordered_json::object();
  for (const auto& [v, c] : t.coeffs) coeffs[v] = c.get_str();
  return ordered_json{{"constant", t.constant.get_str()}, {"coeffs", coeffs}};
}

ordered_json formula_to_json(const logic::FormulaPtr& f) {
  switch (f->kind) {
    case FKind::Atom: {
      const logic::Atom& a = f->atom;
      ordered_json out;
      switch (a.kind) {
        case AtomKind::Eq0: out["kind"] = "eq0"; break;
        case AtomKind::InP: out["kind"] = "in_p"; break;
        case AtomKind::DivPlus: out["kind"] = "div_plus"; break;
        case AtomKind::DivMinus: out["kind"] = "div_minus"; break;
      }
      if (a.kind == AtomKind::DivPlus || a.kind == AtomKind::DivMinus)
        out["modulus"] = a.modulus.get_str();
      out["term"] = term_to_json(a.term);
      return out;
    }
    case FKind::Not:
      return ordered_json{{"kind", "not"},
                          {"args", {formula_to_json(f->args[0])}}};
    case FKind::And:
    case FKind::Or: {
      ordered_json args = ordered_json::array();
      for (const auto& arg : f->args) args.push_back(formula_to_json(arg));
      return ordered_json{{"kind", f->kind == FKind::And ? "and" : "or"},
                          {"args", args}};
    }
    case FKind::Exists:
      return ordered_json{{"kind", "exists"},
                          {"var", f->var},
                          {"args", {formula_to_json(f->args[0])}}};
  }
  return nullptr;
}

ordered_json decision_to_json(const pattern::Decision& d) {
  ordered_json out;
  out["realizable"] = d.realizable;
  out["certificate"] = pattern::certificate_name(d.certificate);
  if (d.witness)
    out["witness"] = d.witness->get_str();
  else
    out["witness"] = nullptr;
  return out;
}

ordered_json interval_to_json(const circle::OrientedInterval& I) {
  auto pt = [](const circle::CirclePoint& p) {
    return ordered_json{{"rot", p.rot.get_str()}, {"rat", p.rat.get_str()}};
  };
  return ordered_json{{"lo", pt(I.lo)},
                      {"hi", pt(I.hi)},
                      {"lo_closed", I.lo_closed},
                      {"hi_closed", I.hi_closed}};
}

ordered_json family_to_json(const pattern::UVFamily& fam) {
  ordered_json out;
  out["a"] = fam.a.get_str();
  out["k"] = fam.k.get_str();
  if (fam.k == 0) out["whole"] = fam.whole;
  ordered_json slices = ordered_json::array();
  for (const auto& s : fam.slices) slices.push_back(interval_to_json(s));
  out["slices"] = slices;
  return out;
}

}  // namespace bqe::json
