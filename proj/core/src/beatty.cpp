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

#include "bqe/beatty.hpp"

#include <cmath>
#include <cstdlib>
#include <set>
#include <utility>

namespace bqe::beatty {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

// floor(sqrt(u)), exact; u must fit the long double mantissa error budget
// (u <= ~1.5e36), which the nmax bound guarantees.
u128 isqrt128(u128 u) {
  if (u == 0) return 0;
  u128 t = static_cast<u128>(sqrtl(static_cast<long double>(u)));
  while (t > 0 && t * t > u) --t;
  while ((t + 1) * (t + 1) <= u) ++t;
  return t;
}

long long fdiv_ll(i128 num, long long den) {
  // den > 0; round toward -infinity.
  i128 q = num / den;
  if (num % den != 0 && num < 0) --q;
  return static_cast<long long>(q);
}

bool fits_ll(const exact::Int& v, long long* out) {
  if (!v.fits_slong_p()) return false;
  *out = v.get_si();
  return true;
}

}  // namespace

BeattyContext::BeattyContext(IrrationalSlope slope)
    : slope_(std::move(slope)), circle_(slope_) {
  const exact::QuadSurd& inv = slope_.reciprocal();
  long long p, q, s, d;
  if (fits_ll(inv.p(), &p) && fits_ll(inv.q(), &q) && fits_ll(inv.s(), &s) &&
      fits_ll(inv.d(), &d) && d <= 1000000000000LL) {
    fp_ = p;
    fq_ = q;
    fs_ = s;
    fd_ = d;
    // Bounds: (n q)^2 d <= 1e36 for the exact sqrt, and |n p| <= 1e17 so
    // the numerator stays far inside 128 bits.
    double lim_sqrt = 1e18 / (std::sqrt(static_cast<double>(d)) *
                              (std::abs(static_cast<double>(q)) + 1.0));
    double lim_lin = 1e17 / (std::abs(static_cast<double>(p)) + 1.0);
    double lim = std::min(lim_sqrt, lim_lin);
    fast_nmax_ = lim > 4e18 ? 4000000000000000000LL
                            : static_cast<long long>(lim) - 4;
    if (fast_nmax_ < 0) fast_nmax_ = 0;
  }
}

long long BeattyContext::floor_div_fast(long long n) const {
  // floor(n/r) = floor((n fp_ + floor(n fq_ sqrt(fd_))) / fs_)
  i128 qn = static_cast<i128>(n) * fq_;
  i128 t = 0;
  if (qn != 0) {
    u128 u = static_cast<u128>(qn < 0 ? -qn : qn);
    u128 rt = isqrt128(u * u * static_cast<u128>(fd_));
    t = qn > 0 ? static_cast<i128>(rt) : -static_cast<i128>(rt) - 1;
  }
  return fdiv_ll(static_cast<i128>(n) * fp_ + t, fs_);
}

Int BeattyContext::b(const Int& n) const {
  return exact::floor_mul(n, slope_);
}

int BeattyContext::s(const Int& n) const {
  long long v;
  if (fast_nmax_ > 0 && fits_ll(n, &v) && v < fast_nmax_ && v > -fast_nmax_)
    return static_cast<int>(floor_div_fast(v + 1) - floor_div_fast(v));
  Int lo = exact::floor_div(n, slope_);
  Int hi = exact::floor_div(n + 1, slope_);
  return static_cast<int>(Int(hi - lo).get_si());
}

bool BeattyContext::member_P(const Int& n) const {
  // s_n = 1 characterizes membership except at n = -1, where s_{-1} = 1 but
  // no nonzero multiple of r floors to -1.
  if (n == -1) return false;
  return s(n) == 1;
}

bool BeattyContext::member_P(long long n) const {
  if (n == -1) return false;
  if (fast_nmax_ > 0 && n < fast_nmax_ && n > -fast_nmax_)
    return floor_div_fast(n + 1) - floor_div_fast(n) == 1;
  return member_P(Int(static_cast<long>(n)));
}

std::vector<std::uint8_t> BeattyContext::sturmian_prefix(long long len) const {
  if (len < 1) throw std::invalid_argument("sturmian_prefix: len must be >= 1");
  std::vector<std::uint8_t> out;
  out.reserve(static_cast<size_t>(len));
  if (fast_nmax_ > len + 1) {
    long long prev = floor_div_fast(1);
    for (long long n = 1; n <= len; ++n) {
      long long next = floor_div_fast(n + 1);
      out.push_back(static_cast<std::uint8_t>(next - prev));
      prev = next;
    }
  } else {
    for (long long n = 1; n <= len; ++n)
      out.push_back(static_cast<std::uint8_t>(s(Int(static_cast<long>(n)))));
  }
  return out;
}

long long BeattyContext::factor_count(int m, long long window) const {
  if (m < 1 || m > 60)
    throw std::invalid_argument("factor_count: m must be in [1, 60]");
  if (window < m) throw std::invalid_argument("factor_count: window < m");
  std::vector<std::uint8_t> word = sturmian_prefix(window);
  std::set<std::uint64_t> codes;
  std::uint64_t code = 0;
  const std::uint64_t mask = m == 60 ? ((1ULL << 60) - 1) : ((1ULL << m) - 1);
  for (long long i = 0; i < window; ++i) {
    code = ((code << 1) | word[static_cast<size_t>(i)]) & mask;
    if (i >= m - 1) codes.insert(code);
  }
  return static_cast<long long>(codes.size());
}

}  // namespace bqe::beatty
