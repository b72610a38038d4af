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

#include "canonsys/canonical.hpp"
#include "canonsys/errors.hpp"
#include "canonsys/io.hpp"
#include "support/testgen.hpp"

using namespace canonsys;
using testgen::group;

TEST_CASE("polynomial JSON round trip") {
  SplitMix64 rng(51);
  for (int iter = 0; iter < 100; ++iter) {
    const unsigned n = 1 + static_cast<unsigned>(rng.below(3));
    const Poly f = testgen::random_poly(rng, n);
    const Poly back = poly_from_json(to_json(f));
    CHECK(back == f);
    // serialization is canonical, so a second pass is byte-identical
    CHECK(to_json(back) == to_json(f));
  }
}

TEST_CASE("polynomial JSON shape errors") {
  CHECK_THROWS_AS(poly_from_json("not json"), ParseError);
  CHECK_THROWS_AS(poly_from_json(R"({"n": 0, "terms": []})"), ParseError);
  CHECK_THROWS_AS(poly_from_json(R"({"terms": []})"), ParseError);
  CHECK_THROWS_AS(
      poly_from_json(R"({"n": 2, "terms": [{"exp": [1], "coeff": "1; 0:1"}]})"),
      ParseError);
  CHECK_THROWS_AS(
      poly_from_json(R"({"n": 1, "terms": [{"exp": [1], "coeff": 3}]})"),
      ParseError);
}

TEST_CASE("invariant system JSON round trip") {
  const ReflGroup& g = group("dihedral:4");
  const InvariantSystem sys = basic_invariants(g, 0);
  const InvariantSystem back = invariant_system_from_json(to_json(sys));
  REQUIRE(back.polys.size() == sys.polys.size());
  CHECK(back.degrees == sys.degrees);
  for (std::size_t i = 0; i < sys.polys.size(); ++i)
    CHECK(back.polys[i] == sys.polys[i]);
  CHECK(verify_basic(g, back).all_passed());
}

TEST_CASE("canonical system JSON reverifies identically") {
  for (const char* ref : {"B:2", "G4", "G:2,2,2"}) {
    const ReflGroup& g = group(ref);
    const CanonicalSystem cs = compute_canonical_system(g, 0);
    const CanonicalSystem back = canonical_system_from_json(to_json(cs));
    REQUIRE(back.pairs.size() == cs.pairs.size());
    CHECK(back.degrees == cs.degrees);
    for (std::size_t i = 0; i < cs.pairs.size(); ++i) {
      CHECK(back.pairs[i].g == cs.pairs[i].g);
      CHECK(back.pairs[i].c == cs.pairs[i].c);
    }
    CHECK(verify_canonical(g, back).all_passed());
    CHECK(to_json(back) == to_json(cs));
  }
}

TEST_CASE("group spec JSON round trip and analysis") {
  const GroupSpec spec = expand_catalog("dihedral:3");
  const GroupSpec back = group_spec_from_json(to_json(spec));
  CHECK(back.name == spec.name);
  CHECK(back.rank == spec.rank);
  REQUIRE(back.generators.size() == spec.generators.size());
  for (std::size_t i = 0; i < spec.generators.size(); ++i)
    CHECK(back.generators[i] == spec.generators[i]);
  const ReflGroup g = ReflGroup::analyze(back.generators, {});
  CHECK(g.order() == 6);
}

TEST_CASE("group spec JSON validation") {
  CHECK_THROWS_AS(group_spec_from_json(R"({"rank": 1})"), ParseError);
  CHECK_THROWS_AS(
      group_spec_from_json(R"({"rank": 2, "generators": [[["1; 0:1"]]]})"),
      ParseError);
  CHECK_THROWS_AS(
      group_spec_from_json(R"({"rank": 0, "generators": []})"), ParseError);
}

TEST_CASE("report JSON carries per-check results") {
  const ReflGroup& g = group("B:2");
  const Report report = verify_canonical(g, compute_canonical_system(g, 0));
  const std::string doc = to_json(report);
  CHECK(doc.find("\"passed\": true") != std::string::npos);
  CHECK(doc.find("pairwise-star-zero") != std::string::npos);
  CHECK(doc.find("lower-degree-annihilation") != std::string::npos);
}

TEST_CASE("latex rendering") {
  const Poly x = Poly::variable(2, 0);
  const Poly y = Poly::variable(2, 1);
  const Poly f = x * x - scale(CycloNum(6), x * y) + y * y;
  CHECK(to_latex(f) == "x_{1}^{2} - 6 x_{1}x_{2} + x_{2}^{2}");
  CHECK(to_latex(Poly(2)) == "0");
  CHECK(to_latex(scale(CycloNum(make_rational(1, 2)), x)) ==
        "\\tfrac{1}{2} x_{1}");

  const ReflGroup& g = group("B:2");
  const std::string doc = to_latex(compute_canonical_system(g, 0));
  CHECK(doc.find("\\sqrt{4}") != std::string::npos);
  CHECK(doc.find("\\sqrt{192}") != std::string::npos);
  CHECK(doc.find("x_{1}^{4} - 6 x_{1}^{2}x_{2}^{2} + x_{2}^{4}") !=
        std::string::npos);
}
