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

#include <string>
#include <string_view>

#include "canonsys/canonical.hpp"
#include "canonsys/catalog.hpp"
#include "canonsys/invariants.hpp"
#include "canonsys/poly.hpp"
#include "canonsys/report.hpp"

// JSON and LaTeX forms of the file-level interfaces. Serialization is
// deterministic: identical values produce byte-identical documents.
//
//   polynomial        {"n": 2, "terms": [{"exp": [4,0], "coeff": "<literal>"}, ...]}
//   invariant system  {"degrees": [...], "polys": [<polynomial>, ...]}
//   canonical system  {"degrees": [...], "pairs": [{"g": <polynomial>, "c": "<literal>"}, ...]}
//   group spec        {"name": "...", "rank": n, "generators": [[["<literal>", ...], ...], ...]}

namespace canonsys {

std::string to_json(const Poly& f);
Poly poly_from_json(std::string_view text);

std::string to_json(const InvariantSystem& system);
InvariantSystem invariant_system_from_json(std::string_view text);

std::string to_json(const CanonicalSystem& system);
CanonicalSystem canonical_system_from_json(std::string_view text);

std::string to_json(const GroupSpec& spec);
GroupSpec group_spec_from_json(std::string_view text);

std::string to_json(const Report& report);

std::string to_latex(const Poly& f);

/// Renders each member as f_i = g_i / sqrt(c_i).
std::string to_latex(const CanonicalSystem& system);

}  // namespace canonsys
