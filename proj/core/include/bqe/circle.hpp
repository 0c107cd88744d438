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

#ifndef BQE_CIRCLE_HPP
#define BQE_CIRCLE_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bqe/exact.hpp"

namespace bqe::circle {

using exact::Int;
using exact::IrrationalSlope;
using exact::Rat;

/// A point e(rot/r + rat) of the unit circle, canonicalized so that the
/// real argument theta = rot/r + rat lies in [0, 1). Since 1/r is
/// irrational the pair (rot, rat) is then unique, so equality is
/// structural. The identity 1 is (0, 0); h(n) has rot = n; zeta_k has
/// rat = 1/k.
struct CirclePoint {
  Rat rot;
  Rat rat;
  friend bool operator==(const CirclePoint& a, const CirclePoint& b) {
    return cmp(a.rot, b.rot) == 0 && cmp(a.rat, b.rat) == 0;
  }
};

/// An arc from lo to hi counter-clockwise, with endpoint-closure flags.
/// (a, a) open is empty; [a, a] closed is the singleton {a}.
struct OrientedInterval {
  CirclePoint lo;
  CirclePoint hi;
  bool lo_closed = false;
  bool hi_closed = false;
  friend bool operator==(const OrientedInterval& a, const OrientedInterval& b) {
    return a.lo == b.lo && a.hi == b.hi && a.lo_closed == b.lo_closed &&
           a.hi_closed == b.hi_closed;
  }
};

/// Raised by intersect_open when the candidate-endpoint analysis detects
/// that the intersection is a disjoint union of more than one arc. The
/// interval families produced by the pattern machinery never trigger this.
struct DisconnectedIntersection : std::runtime_error {
  DisconnectedIntersection()
      : std::runtime_error("intersect_open: intersection is disconnected") {}
};

/// Exact arithmetic on circle points for a fixed slope r.
class Ctx {
 public:
  explicit Ctx(IrrationalSlope slope);

  const IrrationalSlope& slope() const { return slope_; }

  /// Canonicalizes (rot, rat) by shifting rat into the unique integer
  /// translate with theta in [0, 1).
  CirclePoint point(const Rat& rot, const Rat& rat) const;

  CirclePoint one() const { return {Rat(0), Rat(0)}; }
  CirclePoint h(const Int& n) const;
  CirclePoint zeta(const Int& k) const;
  CirclePoint zeta_pow(const Int& k, const Int& s) const;

  CirclePoint mul(const CirclePoint& p, const CirclePoint& q) const;
  CirclePoint inv(const CirclePoint& p) const;
  CirclePoint pow(const CirclePoint& p, const Int& n) const;

  /// Root with the smallest argument: e(theta/k), theta in [0,1).
  CirclePoint kth_root_base(const CirclePoint& p, const Int& k) const;

  /// Compares canonical arguments; <0, 0, >0 like a three-way compare.
  int cmp_arg(const CirclePoint& p, const CirclePoint& q) const;

  /// Counter-clockwise cyclic order; false unless a, b, c are distinct.
  bool orientation(const CirclePoint& a, const CirclePoint& b,
                   const CirclePoint& c) const;

  /// The total order based at 1: lt(b, c) iff orientation(1, b, c), with
  /// the convention 1 < p for every p != 1.
  bool lt(const CirclePoint& b, const CirclePoint& c) const;

  bool contains(const OrientedInterval& I, const CirclePoint& p) const;

  OrientedInterval open_interval(const CirclePoint& lo,
                                 const CirclePoint& hi) const {
    return {lo, hi, false, false};
  }
  OrientedInterval closed_interval(const CirclePoint& lo,
                                   const CirclePoint& hi) const {
    return {lo, hi, true, true};
  }

  bool is_empty_open(const OrientedInterval& I) const {
    return !I.lo_closed && !I.hi_closed && I.lo == I.hi;
  }

  /// l(I) = hi * lo^-1.
  CirclePoint length(const OrientedInterval& I) const {
    return mul(I.hi, inv(I.lo));
  }

  /// Common intersection of open arcs, via the candidate-left-endpoint
  /// analysis; identical arcs are deduplicated first. Returns nullopt for
  /// an empty intersection and throws DisconnectedIntersection when the
  /// intersection is not a single arc.
  std::optional<OrientedInterval> intersect_open(
      std::span<const OrientedInterval> intervals) const;

  /// The k open arcs whose union is the preimage of (a, c) under p -> p^k.
  std::vector<OrientedInterval> root_slices(const CirclePoint& a,
                                            const CirclePoint& c,
                                            const Int& k) const;

  /// Whether b^k lands in the open arc I, decided on the root side.
  bool power_in_interval(const CirclePoint& b, const Int& k,
                         const OrientedInterval& I) const;

  /// "rot=../.. rat=../.." rendering, for diagnostics and JSON dumps.
  static std::string to_string(const CirclePoint& p);

 private:
  IrrationalSlope slope_;
};

}  // namespace bqe::circle

#endif  // BQE_CIRCLE_HPP
