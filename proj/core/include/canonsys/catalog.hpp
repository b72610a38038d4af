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
#include <vector>

#include "canonsys/linalg.hpp"

namespace canonsys {

/// A named set of generator matrices, either expanded from the catalog or
/// read from a group-spec JSON file.
struct GroupSpec {
  std::string name;
  unsigned rank = 0;
  std::vector<CMatrix> generators;
};

/// True when `ref` is one of the built-in catalog forms:
///   cyclic:m   dihedral:m (= G(m,m,2))   B:n (= G(2,1,n))   G:m,p,n   G4
bool is_catalog_name(std::string_view ref);

/// Expands a catalog reference into exact generator matrices.
/// The G4 data runs a one-time self check (order 24, degrees 4 and 6)
/// instead of being trusted. Throws ParseError on malformed references.
GroupSpec expand_catalog(std::string_view ref);

}  // namespace canonsys
