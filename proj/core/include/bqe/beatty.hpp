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

#ifndef BQE_BEATTY_HPP
#define BQE_BEATTY_HPP

#include <cstdint>
#include <vector>

#include "bqe/circle.hpp"
#include "bqe/exact.hpp"

namespace bqe::beatty {

using exact::Int;
using exact::IrrationalSlope;

/// Beatty sequence b_n = floor(n r), the Sturmian word
/// s_n = floor((n+1)/r) - floor(n/r) and the set P_r = {floor(nr) : n != 0}.
///
/// Membership is decided through s_n = 1, which is equivalent to the
/// fractional-part criterion {n/r} > 1 - 1/r; 0 and -1 are never members.
/// A word-sized fast path (128-bit intermediate products, hardware sqrt
/// with exact correction) is used when the inputs provably fit; it
/// computes the same floors as the arbitrary-precision route.
class BeattyContext {
 public:
  explicit BeattyContext(IrrationalSlope slope);

  const IrrationalSlope& slope() const { return slope_; }
  const circle::Ctx& circle() const { return circle_; }

  /// floor(n r).
  Int b(const Int& n) const;

  /// s_n = floor((n+1)/r) - floor(n/r), always 0 or 1.
  int s(const Int& n) const;

  bool member_P(const Int& n) const;
  bool member_P(long long n) const;

  /// s_1 .. s_len.
  std::vector<std::uint8_t> sturmian_prefix(long long len) const;

  /// Number of distinct length-m factors of s_1 .. s_window.
  long long factor_count(int m, long long window) const;

 private:
  long long floor_div_fast(long long n) const;

  IrrationalSlope slope_;
  circle::Ctx circle_;

  // Fast path: 1/r = (fp_ + fq_ sqrt(fd_)) / fs_ in word-sized integers,
  // valid for |n| <= fast_nmax_ (0 disables it).
  long long fp_ = 0, fq_ = 0, fs_ = 1, fd_ = 0;
  long long fast_nmax_ = 0;
};

}  // namespace bqe::beatty

#endif  // BQE_BEATTY_HPP
