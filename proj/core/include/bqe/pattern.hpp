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

#ifndef BQE_PATTERN_HPP
#define BQE_PATTERN_HPP

#include <optional>
#include <set>
#include <vector>

#include "bqe/beatty.hpp"
#include "bqe/circle.hpp"

namespace bqe::pattern {

using beatty::BeattyContext;
using exact::Int;

/// Does some integer c satisfy a_i + k_i c in P_r exactly for i in I?
/// Indices in I are 1-based.
struct PatternQuery {
  std::vector<Int> a;
  std::vector<Int> k;
  std::set<int> I;

  bool in_I(size_t idx0) const {
    return I.count(static_cast<int>(idx0) + 1) > 0;
  }
  size_t size() const { return a.size(); }
};

enum class Certificate {
  FiniteComponent,  // witness is a boundary point of some V family
  UEndpointCase,    // open region certified by a U-slice left endpoint
  VEndpointCase,    // open region certified by a V-interior left endpoint
  KZeroOnly,        // all constraints constant (k = 0)
  Contradictory,    // same (a, k) demanded both in and out of P_r
  NoCase,           // no case applies: unrealizable
};

const char* certificate_name(Certificate c);

struct Decision {
  bool realizable = false;
  std::optional<Int> witness;
  Certificate certificate = Certificate::NoCase;
};

/// U_{a,k} / V_{a,k}: for k >= 1, the k slices
///   U_{a,k,s} = (h(-a-1)^{1/k} z^s,  h(-a)^{1/k} z^{s+s_a})      open,
///   V_{a,k,s} = [h(-a)^{1/k} z^{s+s_a}, h(-a-1)^{1/k} z^{s+1}]   closed,
/// with z = zeta_k; h(c) in U_{a,k} iff a + kc in P_r, and V is the
/// complement. For k = 0 the family degenerates to the whole circle or
/// the empty set depending on member_P(a).
struct UVFamily {
  Int a;
  Int k;
  bool whole = false;  // meaningful only when k = 0
  std::vector<circle::OrientedInterval> slices;
};

UVFamily u_family(const BeattyContext& ctx, const Int& a, const Int& k);
UVFamily v_family(const BeattyContext& ctx, const Int& a, const Int& k);

/// The open interior of a family's slices (drops endpoint closure). Every
/// slice of either family has positive length, so no slice vanishes.
std::vector<circle::OrientedInterval> family_interior(const UVFamily& fam);

bool family_contains(const BeattyContext& ctx, const UVFamily& fam,
                     const circle::CirclePoint& p);

/// Decides a + kc in P_r by locating h(c) against U_{a,k}.
bool membership_via_U(const BeattyContext& ctx, const Int& a, const Int& k,
                      const Int& c);

/// Flips entries with k_i < 0 to (-a_i - 1, -k_i); witness-preserving.
PatternQuery normalize_query(const PatternQuery& q);

/// The pair sets A_{k,l} / B_{k,l} deciding whether some k-th root slice
/// endpoint of h(x) meets U_{y,l} (resp. the interior of V_{y,l}).
bool a_set_member(const BeattyContext& ctx, const Int& k, const Int& l,
                  const Int& x, const Int& y);
bool b_set_member(const BeattyContext& ctx, const Int& k, const Int& l,
                  const Int& x, const Int& y);

/// Witnesses sitting on V-family boundaries: candidates c with
/// k_j c = -a_j or -a_j - 1 for some j outside I with k_j >= 1, kept when
/// they satisfy the whole pattern pointwise. Query must be normalized.
std::optional<Int> finite_component(const BeattyContext& ctx,
                                    const PatternQuery& q);

/// Structure of the witness set of a normalized query. The witness set is
/// finite_candidates plus, when an endpoint case holds, the infinite set
/// {c : h(c) in the open intersection region}.
struct Analysis {
  bool contradictory = false;
  bool kzero_violation = false;
  bool all_kzero = false;
  std::vector<Int> finite_candidates;  // pointwise-verified, by |c|
  bool u_endpoint = false;
  bool v_endpoint = false;

  bool open_nonempty() const { return u_endpoint || v_endpoint; }
};

Analysis analyze(const BeattyContext& ctx, const PatternQuery& normalized);

bool check_pointwise(const BeattyContext& ctx, const PatternQuery& q,
                     const Int& c);

/// Scans c = 0, 1, -1, 2, -2, ... for a pointwise witness, skipping
/// `excluded`. Throws std::logic_error past `bound` (the decision layer
/// only calls this when a witness must exist).
Int find_witness(const BeattyContext& ctx, const PatternQuery& q,
                 long long bound = 10000000,
                 const std::set<Int>* excluded = nullptr);

/// Full decision: realizable verdict, certificate, pointwise-verified
/// witness.
Decision realizes_pattern(const BeattyContext& ctx, const PatternQuery& q,
                          long long witness_bound = 10000000);

}  // namespace bqe::pattern

#endif  // BQE_PATTERN_HPP
