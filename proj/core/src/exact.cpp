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

#include "bqe/exact.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

namespace bqe::exact {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int floor_rat(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Int fdiv(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("fdiv: zero denominator");
  Int q;
  if (den > 0) {
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  } else {
    Int nn = -num, nd = -den;
    mpz_fdiv_q(q.get_mpz_t(), nn.get_mpz_t(), nd.get_mpz_t());
  }
  return q;
}

int sgn_rat(const Rat& x) { return sgn(x); }

bool is_squarefree(const Int& d) {
  if (d <= 0) return false;
  if (d > Int("1000000000000"))
    throw std::invalid_argument("is_squarefree: d too large (limit 10^12)");
  unsigned long long v = mpz_get_ui(d.get_mpz_t());
  // mpz_get_ui truncates to unsigned long; d <= 10^12 fits on LP64.
  for (unsigned long long i = 2; i * i <= v; ++i) {
    if (v % i == 0) {
      v /= i;
      if (v % i == 0) return false;
      // i no longer divides v, continue with the cofactor.
    }
  }
  return true;
}

QuadSurd::QuadSurd(Int p, Int q, Int s, Int d)
    : p_(std::move(p)), q_(std::move(q)), s_(std::move(s)), d_(std::move(d)) {
  if (s_ == 0) throw std::invalid_argument("QuadSurd: s must be nonzero");
  if (d_ <= 1) throw std::invalid_argument("QuadSurd: d must exceed 1");
  if (s_ < 0) {
    p_ = -p_;
    q_ = -q_;
    s_ = -s_;
  }
  Int g = gcd(gcd(p_, q_), s_);
  if (g > 1) {
    p_ /= g;
    q_ /= g;
    s_ /= g;
  }
}

int QuadSurd::sign_affine(const Rat& a, const Rat& b) const {
  // a + b*(p + q sqrt d)/s has the sign of (a s + b p) + (b q) sqrt d.
  Rat A = a * Rat(s_) + b * Rat(p_);
  Rat B = b * Rat(q_);
  int sa = sgn(A), sb = sgn(B);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare |A| vs |B| sqrt(d) via A^2 vs B^2 d.
  int c = cmp(Rat(A * A), Rat(B * B * Rat(d_)));
  if (c == 0)
    throw std::logic_error("QuadSurd::sign_affine: A^2 = B^2 d with q != 0");
  return c > 0 ? sa : sb;
}

Int QuadSurd::floor_affine(const Rat& a, const Rat& b) const {
  // x = a + b*(p + q sqrt d)/s = (P + Q sqrt d)/S with integer P, Q, S > 0.
  Rat A = a + b * make_rat(p_, s_);
  Rat B = b * make_rat(q_, s_);
  Int da = A.get_den(), db = B.get_den();
  Int S = lcm(da, db);
  Int P = A.get_num() * (S / da);
  Int Q = B.get_num() * (S / db);
  Int T;  // floor(Q sqrt d); exact because Q sqrt d is irrational for Q != 0
  if (Q != 0) {
    Int u = Q * Q * d_, t;
    mpz_sqrt(t.get_mpz_t(), u.get_mpz_t());
    T = Q > 0 ? t : Int(-t - 1);
  }
  return fdiv(P + T, S);
}

QuadSurd QuadSurd::reciprocal() const {
  // s/(p + q sqrt d) = s (p - q sqrt d) / (p^2 - q^2 d)
  Int denom = p_ * p_ - q_ * q_ * d_;
  if (denom == 0 || (p_ == 0 && q_ == 0))
    throw std::invalid_argument("QuadSurd::reciprocal of zero");
  return QuadSurd(s_ * p_, -s_ * q_, denom, d_);
}

double QuadSurd::approx() const {
  return (p_.get_d() + q_.get_d() * std::sqrt(d_.get_d())) / s_.get_d();
}

IrrationalSlope::IrrationalSlope(const Int& p, const Int& q, const Int& s,
                                 const Int& d)
    : r_(p, q, s, d), inv_(r_.reciprocal()) {
  if (q == 0) throw std::invalid_argument("slope: q must be nonzero");
  if (!is_squarefree(d) || d <= 1)
    throw std::invalid_argument("slope: d must be squarefree and > 1");
  if (r_.sign_affine(-1, 1) <= 0)
    throw std::invalid_argument("slope: r must exceed 1");
}

namespace {

Int parse_int(std::string_view text) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("slope: bad integer '" + std::string(text) +
                                "'");
  return Int(static_cast<long>(v));
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  size_t pos = 0;
  while (true) {
    size_t next = text.find(sep, pos);
    if (next == std::string_view::npos) {
      out.push_back(text.substr(pos));
      return out;
    }
    out.push_back(text.substr(pos, next - pos));
    pos = next + 1;
  }
}

}  // namespace

IrrationalSlope IrrationalSlope::parse(std::string_view text) {
  if (text == "golden") return IrrationalSlope(1, 1, 2, 5);
  constexpr std::string_view kSqrt = "sqrt:", kQuad = "quad:";
  if (text.substr(0, kSqrt.size()) == kSqrt) {
    Int d = parse_int(text.substr(kSqrt.size()));
    if (d <= 1) throw std::invalid_argument("slope: sqrt:d requires d > 1");
    // Factor out the square part so d becomes squarefree.
    Int q = 1;
    for (Int f = 2; f * f <= d; ++f) {
      while (d % (f * f) == 0) {
        d /= f * f;
        q *= f;
      }
    }
    if (d == 1)
      throw std::invalid_argument("slope: sqrt of a perfect square is rational");
    return IrrationalSlope(0, q, 1, d);
  }
  if (text.substr(0, kQuad.size()) == kQuad) {
    auto parts = split(text.substr(kQuad.size()), ',');
    if (parts.size() != 4)
      throw std::invalid_argument("slope: quad:p,q,s,d needs four integers");
    return IrrationalSlope(parse_int(parts[0]), parse_int(parts[1]),
                           parse_int(parts[2]), parse_int(parts[3]));
  }
  throw std::invalid_argument("slope: unrecognized spec '" + std::string(text) +
                              "' (expected golden | sqrt:d | quad:p,q,s,d)");
}

std::string IrrationalSlope::spec() const {
  return "quad:" + r_.p().get_str() + "," + r_.q().get_str() + "," +
         r_.s().get_str() + "," + r_.d().get_str();
}

bool IrrationalSlope::operator==(const IrrationalSlope& o) const {
  return r_.p() == o.r_.p() && r_.q() == o.r_.q() && r_.s() == o.r_.s() &&
         r_.d() == o.r_.d();
}

int sign_affine(const Rat& a, const Rat& b, const IrrationalSlope& r) {
  return r.value().sign_affine(a, b);
}

Int floor_mul(const Int& n, const IrrationalSlope& r) {
  return r.value().floor_affine(0, Rat(n));
}

Int floor_div(const Int& n, const IrrationalSlope& r) {
  return r.reciprocal().floor_affine(0, Rat(n));
}

}  // namespace bqe::exact
