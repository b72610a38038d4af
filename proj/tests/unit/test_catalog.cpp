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

#include <doctest.h>

#include "canonsys/catalog.hpp"
#include "canonsys/errors.hpp"
#include "canonsys/group.hpp"
#include "support/testgen.hpp"

using namespace canonsys;

TEST_CASE("catalog names") {
  CHECK(is_catalog_name("cyclic:4"));
  CHECK(is_catalog_name("dihedral:7"));
  CHECK(is_catalog_name("B:3"));
  CHECK(is_catalog_name("G:4,2,2"));
  CHECK(is_catalog_name("G4"));
  CHECK(!is_catalog_name("E8"));
  CHECK(!is_catalog_name("some/file.json"));
}

TEST_CASE("catalog generators are unitary") {
  for (const char* ref : {"cyclic:6", "dihedral:5", "B:3", "G:6,2,2", "G4"}) {
    const GroupSpec spec = expand_catalog(ref);
    CHECK(spec.name == ref);
    for (const CMatrix& g : spec.generators) CHECK_NOTHROW(UnitaryMatrix{g});
  }
}

TEST_CASE("imprimitive family orders follow m^n n!/p") {
  struct Case {
    const char* ref;
    std::size_t order;
  };
  const Case cases[] = {
      {"G:4,2,2", 16}, {"G:4,1,2", 32}, {"G:2,2,3", 24},
      {"dihedral:5", 10}, {"B:3", 48},  {"G:6,6,2", 12},
      {"G:3,3,1", 1},  {"cyclic:1", 1},
  };
  for (const Case& c : cases) {
    const GroupSpec spec = expand_catalog(c.ref);
    CHECK(closure(spec.generators).size() == c.order);
  }
}

TEST_CASE("rank-two exceptional data self-checks") {
  const GroupSpec spec = expand_catalog("G4");
  CHECK(spec.rank == 2);
  REQUIRE(spec.generators.size() == 2);
  const ReflGroup g = testgen::group("G4");
  CHECK(g.order() == 24);
  CHECK(g.reflections().size() == 8);
  CHECK(g.hyperplanes().size() == 4);
  for (const Hyperplane& h : g.hyperplanes()) CHECK(h.order == 3);
  CHECK(g.degrees() == std::vector<unsigned>{4, 6});
  CHECK(g.is_irreducible());
  // generators have order three
  for (const CMatrix& m : spec.generators) {
    const CMatrix cube = m * m * m;
    CHECK(cube == CMatrix::identity(2));
    CHECK(m != CMatrix::identity(2));
  }
}

TEST_CASE("malformed references are rejected") {
  CHECK_THROWS_AS(expand_catalog("cyclic:0"), ParseError);
  CHECK_THROWS_AS(expand_catalog("cyclic:x"), ParseError);
  CHECK_THROWS_AS(expand_catalog("dihedral:1"), ParseError);
  CHECK_THROWS_AS(expand_catalog("G:4,3,2"), ParseError);  // p does not divide m
  CHECK_THROWS_AS(expand_catalog("G:4,2"), ParseError);
  CHECK_THROWS_AS(expand_catalog("E8"), ParseError);
}
