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

#include "bqe/pattern.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace bqe::pattern {

using circle::CirclePoint;
using circle::OrientedInterval;

const char* certificate_name(Certificate c) {
  switch (c) {
    case Certificate::FiniteComponent: return "FiniteComponent";
    case Certificate::UEndpointCase: return "UEndpointCase";
    case Certificate::VEndpointCase: return "VEndpointCase";
    case Certificate::KZeroOnly: return "KZeroOnly";
    case Certificate::Contradictory: return "Contradictory";
    case Certificate::NoCase: return "NoCase";
  }
  return "?";
}

UVFamily u_family(const BeattyContext& ctx, const Int& a, const Int& k) {
  if (k < 0) throw std::invalid_argument("u_family: k must be >= 0");
  UVFamily fam{a, k, false, {}};
  if (k == 0) {
    fam.whole = ctx.member_P(a);
    return fam;
  }
  const circle::Ctx& c = ctx.circle();
  CirclePoint lo_base = c.kth_root_base(c.h(-a - 1), k);
  CirclePoint hi_base = c.kth_root_base(c.h(-a), k);
  // The upper root wraps past the lower one exactly when h(-a) precedes
  // h(-a-1) in the based order; the shift then moves it to the next root.
  Int sa = c.lt(hi_base, lo_base) ? 1 : 0;
  long kk = k.get_si();
  for (long s = 0; s < kk; ++s) {
    CirclePoint lo = c.mul(c.zeta_pow(k, s), lo_base);
    CirclePoint hi = c.mul(c.zeta_pow(k, Int(s) + sa), hi_base);
    fam.slices.push_back(c.open_interval(lo, hi));
  }
  return fam;
}

UVFamily v_family(const BeattyContext& ctx, const Int& a, const Int& k) {
  if (k < 0) throw std::invalid_argument("v_family: k must be >= 0");
  UVFamily fam{a, k, false, {}};
  if (k == 0) {
    fam.whole = !ctx.member_P(a);
    return fam;
  }
  const circle::Ctx& c = ctx.circle();
  CirclePoint lo_base = c.kth_root_base(c.h(-a), k);
  CirclePoint hi_base = c.kth_root_base(c.h(-a - 1), k);
  // Same wrap rule as in u_family, applied to the h(-a) root.
  Int sa = c.lt(lo_base, hi_base) ? 1 : 0;
  long kk = k.get_si();
  for (long s = 0; s < kk; ++s) {
    CirclePoint lo = c.mul(c.zeta_pow(k, Int(s) + sa), lo_base);
    CirclePoint hi = c.mul(c.zeta_pow(k, s + 1), hi_base);
    fam.slices.push_back(c.closed_interval(lo, hi));
  }
  return fam;
}

std::vector<OrientedInterval> family_interior(const UVFamily& fam) {
  std::vector<OrientedInterval> out;
  out.reserve(fam.slices.size());
  for (const auto& s : fam.slices) out.push_back({s.lo, s.hi, false, false});
  return out;
}

bool family_contains(const BeattyContext& ctx, const UVFamily& fam,
                     const CirclePoint& p) {
  if (fam.k == 0) return fam.whole;
  for (const auto& s : fam.slices)
    if (ctx.circle().contains(s, p)) return true;
  return false;
}

bool membership_via_U(const BeattyContext& ctx, const Int& a, const Int& k,
                      const Int& c) {
  UVFamily fam = u_family(ctx, a, k);
  if (k == 0) return fam.whole;
  return family_contains(ctx, fam, ctx.circle().h(c));
}

PatternQuery normalize_query(const PatternQuery& q) {
  PatternQuery out = q;
  for (size_t i = 0; i < out.size(); ++i) {
    if (out.k[i] < 0) {
      out.a[i] = -out.a[i] - 1;
      out.k[i] = -out.k[i];
    }
  }
  return out;
}

bool a_set_member(const BeattyContext& ctx, const Int& k, const Int& l,
                  const Int& x, const Int& y) {
  if (k < 1 || l < 1) throw std::invalid_argument("a_set_member: k,l >= 1");
  Int g = gcd(k, l);
  Int kp = k / g, lp = l / g;
  // When the root spacing 1/k' is finer than the arc length 1/r, some
  // root always lands inside; exact test k' > r.
  if (ctx.slope().value().sign_affine(exact::Rat(kp), exact::Rat(-1)) > 0)
    return true;
  const circle::Ctx& c = ctx.circle();
  Int z = lp * x + kp * y;
  return c.contains(c.open_interval(c.h(-kp), c.one()), c.h(z));
}

bool b_set_member(const BeattyContext& ctx, const Int& k, const Int& l,
                  const Int& x, const Int& y) {
  if (k < 1 || l < 1) throw std::invalid_argument("b_set_member: k,l >= 1");
  // Decided by direct enumeration of the k root-slice endpoints of h(x)
  // against the interior of V_{y,l}; no closed/open reading of the pair
  // set is assumed.
  const circle::Ctx& c = ctx.circle();
  CirclePoint base = c.kth_root_base(c.h(x), k);
  std::vector<OrientedInterval> vint = family_interior(v_family(ctx, y, l));
  long kk = k.get_si();
  for (long s = 0; s < kk; ++s) {
    CirclePoint pt = c.mul(c.zeta_pow(k, s), base);
    for (const auto& arc : vint)
      if (c.contains(arc, pt)) return true;
  }
  return false;
}

bool check_pointwise(const BeattyContext& ctx, const PatternQuery& q,
                     const Int& c) {
  for (size_t i = 0; i < q.size(); ++i) {
    Int v = q.a[i] + q.k[i] * c;
    if (ctx.member_P(v) != q.in_I(i)) return false;
  }
  return true;
}

namespace {

std::vector<Int> finite_candidates_of(const BeattyContext& ctx,
                                      const PatternQuery& q) {
  std::set<Int> cand;
  for (size_t j = 0; j < q.size(); ++j) {
    if (q.in_I(j) || q.k[j] < 1) continue;
    if (q.a[j] % q.k[j] == 0) cand.insert(-q.a[j] / q.k[j]);
    if ((q.a[j] + 1) % q.k[j] == 0) cand.insert(-(q.a[j] + 1) / q.k[j]);
  }
  std::vector<Int> out(cand.begin(), cand.end());
  std::sort(out.begin(), out.end(), [](const Int& x, const Int& y) {
    Int ax = abs(x), ay = abs(y);
    return ax != ay ? ax < ay : x < y;
  });
  std::vector<Int> valid;
  for (const Int& c : out)
    if (check_pointwise(ctx, q, c)) valid.push_back(c);
  return valid;
}

}  // namespace

std::optional<Int> finite_component(const BeattyContext& ctx,
                                    const PatternQuery& q) {
  for (const Int& k : q.k)
    if (k < 0)
      throw std::invalid_argument("finite_component: query not normalized");
  std::vector<Int> valid = finite_candidates_of(ctx, q);
  if (valid.empty()) return std::nullopt;
  return valid.front();
}

Analysis analyze(const BeattyContext& ctx, const PatternQuery& normalized) {
  const PatternQuery& q = normalized;
  Analysis out;
  if (q.size() == 0) throw std::invalid_argument("analyze: empty query");

  // Duplicate (a, k) demanded on both sides is a contradiction; duplicates
  // on the same side collapse to one constraint.
  std::map<std::pair<Int, Int>, bool> seen;
  for (size_t i = 0; i < q.size(); ++i) {
    if (q.k[i] < 0) throw std::invalid_argument("analyze: query not normalized");
    auto key = std::make_pair(q.a[i], q.k[i]);
    auto [it, inserted] = seen.emplace(key, q.in_I(i));
    if (!inserted && it->second != q.in_I(i)) {
      out.contradictory = true;
      return out;
    }
  }

  // Constant (k = 0) constraints hold or fail outright.
  bool any_positive = false;
  for (size_t i = 0; i < q.size(); ++i) {
    if (q.k[i] == 0) {
      if (ctx.member_P(q.a[i]) != q.in_I(i)) {
        out.kzero_violation = true;
        return out;
      }
    } else {
      any_positive = true;
    }
  }
  if (!any_positive) {
    out.all_kzero = true;
    return out;
  }

  out.finite_candidates = finite_candidates_of(ctx, q);

  // Open part: intersection of the U families (i in I) with the V
  // interiors (i not in I), all unions of open arcs. It is nonempty iff
  // some arc's left endpoint admits a right-neighborhood inside every
  // family, i.e. lies in the family or on one of its arcs' left ends.
  const circle::Ctx& c = ctx.circle();
  std::vector<std::vector<OrientedInterval>> u_fams, v_fams;
  for (const auto& [key, in_i] : seen) {
    if (key.second == 0) continue;
    if (in_i)
      u_fams.push_back(u_family(ctx, key.first, key.second).slices);
    else
      v_fams.push_back(family_interior(v_family(ctx, key.first, key.second)));
  }
  std::vector<const std::vector<OrientedInterval>*> fams;
  for (const auto& f : u_fams) fams.push_back(&f);
  for (const auto& f : v_fams) fams.push_back(&f);

  auto admits_right = [&](const std::vector<OrientedInterval>& fam,
                          const CirclePoint& p) {
    for (const auto& arc : fam)
      if (p == arc.lo || c.contains(arc, p)) return true;
    return false;
  };
  auto certify = [&](const CirclePoint& p) {
    for (const auto* fam : fams)
      if (!admits_right(*fam, p)) return false;
    return true;
  };
  for (const auto& fam : u_fams) {
    for (const auto& arc : fam) {
      if (certify(arc.lo)) {
        out.u_endpoint = true;
        return out;
      }
    }
  }
  for (const auto& fam : v_fams) {
    for (const auto& arc : fam) {
      if (certify(arc.lo)) {
        out.v_endpoint = true;
        return out;
      }
    }
  }
  return out;
}

Int find_witness(const BeattyContext& ctx, const PatternQuery& q,
                 long long bound, const std::set<Int>* excluded) {
  for (long long i = 0; i <= bound; ++i) {
    for (int sign = 0; sign < (i == 0 ? 1 : 2); ++sign) {
      Int c = Int(static_cast<long>(sign == 0 ? i : -i));
      if (excluded && excluded->count(c)) continue;
      if (check_pointwise(ctx, q, c)) return c;
    }
  }
  throw std::logic_error(
      "find_witness: no witness within bound; decision layer inconsistent");
}

Decision realizes_pattern(const BeattyContext& ctx, const PatternQuery& q,
                          long long witness_bound) {
  if (q.a.size() != q.k.size() || q.size() == 0)
    throw std::invalid_argument("realizes_pattern: malformed query");
  PatternQuery qn = normalize_query(q);
  Analysis an = analyze(ctx, qn);
  Decision d;
  if (an.contradictory) {
    d.certificate = Certificate::Contradictory;
    return d;
  }
  if (an.kzero_violation) {
    d.certificate = Certificate::KZeroOnly;
    return d;
  }
  auto finish = [&](const Int& w, Certificate cert) {
    if (!check_pointwise(ctx, q, w))
      throw std::logic_error("realizes_pattern: witness failed verification");
    d.realizable = true;
    d.witness = w;
    d.certificate = cert;
    return d;
  };
  if (an.all_kzero) return finish(0, Certificate::KZeroOnly);
  if (!an.finite_candidates.empty())
    return finish(an.finite_candidates.front(), Certificate::FiniteComponent);
  if (an.u_endpoint)
    return finish(find_witness(ctx, qn, witness_bound),
                  Certificate::UEndpointCase);
  if (an.v_endpoint)
    return finish(find_witness(ctx, qn, witness_bound),
                  Certificate::VEndpointCase);
  d.certificate = Certificate::NoCase;
  return d;
}

}  // namespace bqe::pattern
