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

#ifndef BQE_EXACT_HPP
#define BQE_EXACT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace bqe::exact {

using Int = mpz_class;
using Rat = mpq_class;

/// Reduced rational with positive denominator.
Rat make_rat(const Int& num, const Int& den);

/// floor(x) for a rational x.
Int floor_rat(const Rat& x);

/// Floor division of integers (rounds toward -infinity).
Int fdiv(const Int& num, const Int& den);

int sgn_rat(const Rat& x);

/// True iff d has no repeated prime factor. Throws std::invalid_argument
/// for d > 10^12 (trial division would be too slow to be worth it).
bool is_squarefree(const Int& d);

/// A real quadratic surd (p + q*sqrt(d))/s with s > 0 and d squarefree > 1.
///
/// Every comparison in the library bottoms out in QuadSurd::sign_affine,
/// which is exact: for q != 0 the value is irrational, so zero signs can
/// only come from the trivial combination a = b = 0.
class QuadSurd {
 public:
  // Normalizes the sign of s and divides out gcd(p, q, s). The caller is
  // responsible for d being squarefree (IrrationalSlope validates).
  QuadSurd(Int p, Int q, Int s, Int d);

  const Int& p() const { return p_; }
  const Int& q() const { return q_; }
  const Int& s() const { return s_; }
  const Int& d() const { return d_; }

  /// Exact sign of a + b * value.
  int sign_affine(const Rat& a, const Rat& b) const;

  /// Exact floor of a + b * value.
  Int floor_affine(const Rat& a, const Rat& b) const;

  int sign() const { return sign_affine(0, 1); }
  Int floor() const { return floor_affine(0, 1); }

  /// 1 / value as a surd over the same d. Throws if the value is zero.
  QuadSurd reciprocal() const;

  /// double approximation, for diagnostics only. Never used in decisions.
  double approx() const;

 private:
  Int p_, q_, s_, d_;
};

/// The slope r > 1 of a Beatty sequence, as an exact quadratic surd.
class IrrationalSlope {
 public:
  /// Throws std::invalid_argument unless q != 0, s != 0, d squarefree > 1
  /// and (p + q*sqrt(d))/s > 1.
  IrrationalSlope(const Int& p, const Int& q, const Int& s, const Int& d);

  /// Accepts "golden", "sqrt:d" (d > 1; square parts are factored out,
  /// perfect squares rejected) and "quad:p,q,s,d".
  static IrrationalSlope parse(std::string_view text);

  const QuadSurd& value() const { return r_; }
  const QuadSurd& reciprocal() const { return inv_; }
  Int floor_r() const { return r_.floor(); }

  /// "quad:p,q,s,d" form that parses back to this slope.
  std::string spec() const;

  bool operator==(const IrrationalSlope& o) const;

 private:
  QuadSurd r_;
  QuadSurd inv_;
};

/// Exact sign of a + b*r. Zero only for a = b = 0.
int sign_affine(const Rat& a, const Rat& b, const IrrationalSlope& r);

/// floor(n * r), exact.
Int floor_mul(const Int& n, const IrrationalSlope& r);

/// floor(n / r), exact.
Int floor_div(const Int& n, const IrrationalSlope& r);

}  // namespace bqe::exact

#endif  // BQE_EXACT_HPP
