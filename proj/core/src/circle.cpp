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

#include "bqe/circle.hpp"

#include <algorithm>
#include <utility>

namespace bqe::circle {

Ctx::Ctx(IrrationalSlope slope) : slope_(std::move(slope)) {}

CirclePoint Ctx::point(const Rat& rot, const Rat& rat) const {
  // theta = rot/r + rat; shift rat by -floor(theta).
  Int f = slope_.reciprocal().floor_affine(rat, rot);
  CirclePoint p{rot, rat - Rat(f)};
  p.rot.canonicalize();
  p.rat.canonicalize();
  return p;
}

CirclePoint Ctx::h(const Int& n) const { return point(Rat(n), Rat(0)); }

CirclePoint Ctx::zeta(const Int& k) const {
  if (k < 1) throw std::invalid_argument("zeta: k must be positive");
  return point(Rat(0), exact::make_rat(1, k));
}

CirclePoint Ctx::zeta_pow(const Int& k, const Int& s) const {
  if (k < 1) throw std::invalid_argument("zeta_pow: k must be positive");
  return point(Rat(0), exact::make_rat(s, k));
}

CirclePoint Ctx::mul(const CirclePoint& p, const CirclePoint& q) const {
  return point(p.rot + q.rot, p.rat + q.rat);
}

CirclePoint Ctx::inv(const CirclePoint& p) const {
  return point(-p.rot, -p.rat);
}

CirclePoint Ctx::pow(const CirclePoint& p, const Int& n) const {
  return point(p.rot * Rat(n), p.rat * Rat(n));
}

CirclePoint Ctx::kth_root_base(const CirclePoint& p, const Int& k) const {
  if (k < 1) throw std::invalid_argument("kth_root_base: k must be positive");
  Rat rk = exact::make_rat(1, k);
  // p is canonical, so its rot/rat already encode theta in [0,1);
  // dividing by k keeps theta/k in [0,1/k) and the result is canonical.
  CirclePoint out{p.rot * rk, p.rat * rk};
  out.rot.canonicalize();
  out.rat.canonicalize();
  return out;
}

int Ctx::cmp_arg(const CirclePoint& p, const CirclePoint& q) const {
  // theta_p - theta_q = (p.rat - q.rat) + (p.rot - q.rot)/r
  return slope_.reciprocal().sign_affine(p.rat - q.rat, p.rot - q.rot);
}

bool Ctx::orientation(const CirclePoint& a, const CirclePoint& b,
                      const CirclePoint& c) const {
  int ab = cmp_arg(a, b), bc = cmp_arg(b, c), ca = cmp_arg(c, a);
  if (ab == 0 || bc == 0 || ca == 0) return false;
  // Exactly two of the three cyclic comparisons ascend iff a -> b -> c is
  // counter-clockwise.
  int ascending = (ab < 0) + (bc < 0) + (ca < 0);
  return ascending == 2;
}

bool Ctx::lt(const CirclePoint& b, const CirclePoint& c) const {
  CirclePoint id = one();
  if (b == c) return false;
  if (b == id) return true;   // 1 < p for p != 1
  if (c == id) return false;
  return orientation(id, b, c);
}

bool Ctx::contains(const OrientedInterval& I, const CirclePoint& p) const {
  if (p == I.lo) return I.lo_closed;
  if (p == I.hi) return I.hi_closed;
  if (I.lo == I.hi) return false;  // degenerate: only the endpoint qualifies
  return orientation(I.lo, p, I.hi);
}

std::optional<OrientedInterval> Ctx::intersect_open(
    std::span<const OrientedInterval> intervals) const {
  std::vector<OrientedInterval> in;
  for (const auto& I : intervals) {
    if (I.lo_closed || I.hi_closed)
      throw std::invalid_argument("intersect_open: intervals must be open");
    if (is_empty_open(I)) return std::nullopt;
    if (std::find(in.begin(), in.end(), I) == in.end()) in.push_back(I);
  }
  if (in.empty()) throw std::invalid_argument("intersect_open: empty input");
  if (in.size() == 1) return in[0];

  // A candidate is a left endpoint lying in (or on the left boundary of)
  // every other arc; a right-neighborhood of such a point is contained in
  // the whole intersection.
  std::vector<size_t> passing;
  for (size_t i0 = 0; i0 < in.size(); ++i0) {
    bool ok = true;
    for (size_t j = 0; j < in.size() && ok; ++j) {
      if (j == i0) continue;
      const CirclePoint& p = in[i0].lo;
      ok = (p == in[j].lo) || contains(in[j], p);
    }
    if (ok) passing.push_back(i0);
  }
  if (passing.empty()) return std::nullopt;
  for (size_t t = 1; t < passing.size(); ++t)
    if (!(in[passing[t]].lo == in[passing[0]].lo))
      throw DisconnectedIntersection();
  const CirclePoint& alpha = in[passing[0]].lo;

  // Right endpoint: the minimal hi in the order based at alpha. No hi can
  // equal alpha (that arc would have failed the candidate check).
  CirclePoint beta = in[0].hi;
  for (size_t j = 1; j < in.size(); ++j) {
    const CirclePoint& cand = in[j].hi;
    if (cand == beta) continue;
    if (orientation(alpha, cand, beta)) beta = cand;
  }
  return open_interval(alpha, beta);
}

std::vector<OrientedInterval> Ctx::root_slices(const CirclePoint& a,
                                               const CirclePoint& c,
                                               const Int& k) const {
  if (k < 1) throw std::invalid_argument("root_slices: k must be positive");
  if (k > 1000000) throw std::invalid_argument("root_slices: k too large");
  CirclePoint ra = kth_root_base(a, k);
  CirclePoint rc = kth_root_base(c, k);
  // When arg(c) < arg(a) the upper root wraps into the next sector.
  bool shift_hi = lt(c, a);
  std::vector<OrientedInterval> out;
  long kk = k.get_si();
  out.reserve(static_cast<size_t>(kk));
  for (long s = 0; s < kk; ++s) {
    CirclePoint lo = mul(zeta_pow(k, s), ra);
    CirclePoint hi = mul(zeta_pow(k, shift_hi ? s + 1 : s), rc);
    out.push_back(open_interval(lo, hi));
  }
  return out;
}

bool Ctx::power_in_interval(const CirclePoint& b, const Int& k,
                            const OrientedInterval& I) const {
  if (I.lo_closed || I.hi_closed)
    throw std::invalid_argument("power_in_interval: interval must be open");
  for (const auto& slice : root_slices(I.lo, I.hi, k))
    if (contains(slice, b)) return true;
  return false;
}

std::string Ctx::to_string(const CirclePoint& p) {
  return "rot=" + p.rot.get_str() + " rat=" + p.rat.get_str();
}

}  // namespace bqe::circle
