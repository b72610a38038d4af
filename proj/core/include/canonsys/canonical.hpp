/*
 * Copyright 2026 The canonsys Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "canonsys/group.hpp"
#include "canonsys/invariants.hpp"
#include "canonsys/poly.hpp"
#include "canonsys/report.hpp"

namespace canonsys {

/// One member of a canonical system, encoded exactly: the normalized
/// invariant g together with c = <g,g>, standing for g / sqrt(c).
/// No square root is ever materialized; c stays a field element.
struct CanonicalPair {
  Poly g;
  CycloNum c;
};

/// A canonical system of basic invariants in the exact (g, c) encoding:
/// star_apply(g_i, g_j) = 0 for i != j and star_apply(g_i, g_i) = c_i.
struct CanonicalSystem {
  std::vector<CanonicalPair> pairs;
  std::vector<unsigned> degrees;
};

/// Rank of the degree-d slice of the harmonic space, with the expected
/// dimension from the coinvariant Hilbert series.
struct HarmonicWitness {
  unsigned degree = 0;
  unsigned rank = 0;
  unsigned expected = 0;
  bool ok() const { return rank == expected; }
};

/// f -> (f star delta) star delta. Linear, commutes with the group action,
/// lands in the harmonic space; vanishes exactly on the invariant ideal.
Poly phi(const ReflGroup& group, const Poly& f);

/// act(w, phi(f)) == phi(act(w, f)); true for every input.
bool w_equivariance_check(const ReflGroup& group, std::size_t w, const Poly& f);

/// The explicit candidates sum_j x_j phi(d h_i / d x_j), one per basic
/// invariant. Each is invariant and homogeneous of the same degree as its
/// source, and together they again form a system of basic invariants.
std::vector<Poly> candidates(const ReflGroup& group,
                             const InvariantSystem& system);

/// Gram-Schmidt inside each equal-degree block (distinct degrees are
/// orthogonal already and are verified, not re-orthogonalized), then
/// normalizes each g to leading coefficient 1 and records c = <g,g>.
CanonicalSystem orthogonalize(const ReflGroup& group, std::span<const Poly> cands);

/// Exact verification of the canonical property and its characterization:
/// pairwise star products vanish, diagonal star products equal the stored
/// norms, every g is invariant, the Jacobian is a nonzero constant multiple
/// of delta, and all lower-degree invariants annihilate every g.
Report verify_canonical(const ReflGroup& group, const CanonicalSystem& system);

/// (f star delta, whether that is zero); the boolean decides exactly
/// whether f lies in the ideal generated by positive-degree invariants.
std::pair<Poly, bool> steinberg_membership(const ReflGroup& group, const Poly& f);

/// Ranks of phi on each graded slice up to max_degree (at most deg delta),
/// paired with the coinvariant-series dimensions they must match.
std::vector<HarmonicWitness> harmonic_dims(const ReflGroup& group,
                                           unsigned max_degree);

/// sum_j x_j d h / d x_j == (deg h) h for homogeneous h.
bool euler_check(const Poly& h);

/// Coefficients of prod_i (1 + t + ... + t^(m_i - 1)) up to max_degree.
std::vector<Integer> coinvariant_series(std::span<const unsigned> degrees,
                                        unsigned max_degree);

/// Full pipeline: generate basic invariants, build candidates, orthogonalize.
CanonicalSystem compute_canonical_system(const ReflGroup& group,
                                         std::uint64_t seed = 0);

/// Pipeline starting from caller-supplied basic invariants.
CanonicalSystem compute_canonical_system(const ReflGroup& group,
                                         const InvariantSystem& system);

}  // namespace canonsys
