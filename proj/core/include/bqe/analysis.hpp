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

#ifndef BQE_ANALYSIS_HPP
#define BQE_ANALYSIS_HPP

#include <optional>
#include <vector>

#include "bqe/beatty.hpp"
#include "bqe/logic.hpp"
#include "bqe/pattern.hpp"

namespace bqe::analysis {

using beatty::BeattyContext;
using exact::Int;

/// Independent oracle for pattern realization: scans c = 0, 1, -1, ... up
/// to |c| <= bound checking every constraint through member_P, and returns
/// the first (hence smallest-|c|) witness.
std::optional<Int> brute_force_pattern(const BeattyContext& ctx,
                                       const pattern::PatternQuery& q,
                                       long long bound);

/// {x in [lo, hi] : f(x)} for a formula with exactly one free variable.
/// Quantifier-free formulas with word-sized coefficients run on a compiled
/// fast path; anything else goes through the generic evaluator.
std::vector<Int> enumerate_definable(const logic::FormulaPtr& f, const Int& lo,
                                     const Int& hi, const BeattyContext& ctx,
                                     long long search_bound = 100000);

struct GapReport {
  Int lo, hi;                // window
  long long points_found = 0;
  Int max_gap = 0;           // 0 when fewer than two points
  Int gap_bound_estimate = 0;
};

/// Maximum gap between consecutive elements of the enumerated set inside
/// the window. Gaps truncated by the window edges are not measured. The
/// estimate is empirical evidence of the uniform-gaps property, not a
/// certified bound.
GapReport gap_report(const logic::FormulaPtr& f, const Int& lo, const Int& hi,
                     const BeattyContext& ctx, long long search_bound = 100000);

/// Smallest m >= 1 with m, 2m, ..., nm all in P_r and -m, ..., -nm all
/// outside; such m always exists.
Int instability_witness(const Int& n, const BeattyContext& ctx);

/// The order-property matrix entry (i, j) = member_P((j - i) m),
/// 1 <= i, j <= n; equals [i < j] when m comes from instability_witness.
std::vector<std::vector<bool>> instability_matrix(const Int& n, const Int& m,
                                                  const BeattyContext& ctx);

}  // namespace bqe::analysis

#endif  // BQE_ANALYSIS_HPP
