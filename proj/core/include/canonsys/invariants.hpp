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
#include <vector>

#include "canonsys/group.hpp"
#include "canonsys/poly.hpp"
#include "canonsys/report.hpp"

namespace canonsys {

/// An ordered system of homogeneous invariant generators h_1..h_n with
/// degrees m_1 <= ... <= m_n.
struct InvariantSystem {
  std::vector<Poly> polys;
  std::vector<unsigned> degrees;
};

/// Basis of the degree-d invariant subspace, computed by averaging every
/// degree-d monomial and row-reducing. The dimension is cross-checked
/// against the Molien coefficient and must agree.
std::vector<Poly> invariant_space(const ReflGroup& group, unsigned degree);

/// Produces a system of basic invariants: per target degree, picks the
/// sparsest invariant whose gradient at a seeded random rational point
/// grows the Jacobian rank, then certifies independence with the symbolic
/// Jacobian. Deterministic for a fixed seed.
InvariantSystem basic_invariants(const ReflGroup& group, std::uint64_t seed = 0);

/// Checks invariance, homogeneity, the degree multiset, Jacobian nonvanishing
/// and that the Jacobian is a nonzero constant multiple of delta.
Report verify_basic(const ReflGroup& group, const InvariantSystem& system);

}  // namespace canonsys
