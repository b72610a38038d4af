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

#include <algorithm>
#include <set>
#include <vector>

#include "canonsys/errors.hpp"
#include "canonsys/group.hpp"
#include "support/testgen.hpp"

using namespace canonsys;
using testgen::group;

namespace {

const Poly X = Poly::variable(2, 0);
const Poly Y = Poly::variable(2, 1);

Poly ipow(const Poly& f, unsigned e) {
  Poly r = Poly::constant(f.var_count(), CycloNum(1));
  for (unsigned i = 0; i < e; ++i) r = r * f;
  return r;
}

}  // namespace

TEST_CASE("closure sizes") {
  CHECK(group("B:2").order() == 8);
  CHECK(group("cyclic:3").order() == 3);
  CHECK(group("dihedral:3").order() == 6);
  CHECK(group("G:3,1,2").order() == 18);
  CHECK(group("B:3").order() == 48);
}

TEST_CASE("closure respects the cap") {
  GroupSpec spec = expand_catalog("cyclic:5");
  CHECK_THROWS_AS(closure(spec.generators, 3), ClosureCapExceeded);
  CHECK(closure(spec.generators, 5).size() == 5);
}

TEST_CASE("closure order is deterministic") {
  GroupSpec spec = expand_catalog("B:2");
  const auto a = closure(spec.generators);
  const auto b = closure(spec.generators);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  CHECK(a[0] == CMatrix::identity(2));
}

TEST_CASE("non-unitary generators are rejected") {
  CMatrix m(1, 1);
  m.at(0, 0) = CycloNum(2);
  std::vector<CMatrix> gens{m};
  CHECK_THROWS_AS(closure(gens), NotUnitary);
}

TEST_CASE("signed permutations of rank two") {
  const ReflGroup& g = group("B:2");
  CHECK(g.rank() == 2);
  CHECK(g.reflections().size() == 4);
  REQUIRE(g.hyperplanes().size() == 4);
  std::set<std::string> forms;
  for (const Hyperplane& h : g.hyperplanes()) {
    CHECK(h.order == 2);
    forms.insert(h.linear_form.to_string());
  }
  CHECK(forms == std::set<std::string>{"x1", "x2", "x1 - x2", "x1 + x2"});
  // delta = x y (x - y)(x + y) under the leading-one normalization
  CHECK(g.delta() == ipow(X, 3) * Y - X * ipow(Y, 3));
  CHECK(g.degrees() == std::vector<unsigned>{2, 4});
  CHECK(g.is_irreducible());
}

TEST_CASE("rank-one cyclic groups") {
  const ReflGroup& g = group("cyclic:3");
  CHECK(g.reflections().size() == 2);
  REQUIRE(g.hyperplanes().size() == 1);
  CHECK(g.hyperplanes()[0].order == 3);
  CHECK(g.hyperplanes()[0].linear_form == Poly::variable(1, 0));
  const Poly x = Poly::variable(1, 0);
  CHECK(g.delta() == x * x);
  CHECK(g.degrees() == std::vector<unsigned>{3});
}

TEST_CASE("reflection count by enumeration") {
  // degrees (3, 6) force 7 reflections
  const ReflGroup& g = group("G:3,1,2");
  CHECK(g.reflections().size() == 7);
  CHECK(g.degrees() == std::vector<unsigned>{3, 6});
}

TEST_CASE("contravariant action") {
  const ReflGroup& g = group("B:2");
  // find the swap among the elements
  std::size_t swap_index = g.order();
  CMatrix swap(2, 2);
  swap.at(0, 1) = CycloNum(1);
  swap.at(1, 0) = CycloNum(1);
  for (std::size_t w = 0; w < g.order(); ++w)
    if (g.elements()[w].mat() == swap) swap_index = w;
  REQUIRE(swap_index < g.order());
  CHECK(g.act(swap_index, ipow(X, 2) - ipow(Y, 2)) ==
        ipow(Y, 2) - ipow(X, 2));

  const ReflGroup& c3 = group("cyclic:3");
  const Poly x3 = [&] {
    Poly x = Poly::variable(1, 0);
    return x * x * x;
  }();
  CHECK(c3.act(1, x3) == x3);
}

TEST_CASE("delta is skew-invariant") {
  for (const char* ref : {"B:2", "dihedral:3", "G4"}) {
    const ReflGroup& g = group(ref);
    for (std::size_t w = 0; w < g.order(); ++w)
      CHECK(g.act(w, g.delta()) == scale(g.determinant(w), g.delta()));
  }
}

TEST_CASE("reynolds averages onto invariants") {
  const ReflGroup& g = group("B:2");
  const CycloNum half(make_rational(1, 2));
  CHECK(g.reynolds(ipow(X, 2)) == scale(half, ipow(X, 2) + ipow(Y, 2)));
  CHECK(g.reynolds(X).is_zero());
  const Poly one = Poly::constant(2, CycloNum(1));
  CHECK(g.reynolds(one) == one);

  SplitMix64 rng(31);
  for (int iter = 0; iter < 50; ++iter) {
    const Poly f = testgen::random_poly(rng, 2);
    const Poly avg = g.reynolds(f);
    CHECK(g.reynolds(avg) == avg);
    for (std::size_t w : g.generator_indices()) CHECK(g.act(w, avg) == avg);
  }
}

TEST_CASE("molien coefficients") {
  CHECK(group("cyclic:2").molien_coeffs(5) ==
        std::vector<Integer>{1, 0, 1, 0, 1, 0});
  CHECK(group("B:2").molien_coeffs(6) ==
        std::vector<Integer>{1, 0, 1, 0, 2, 0, 2});
}

TEST_CASE("invariant degrees across the dihedral family") {
  for (unsigned m = 3; m <= 8; ++m) {
    const ReflGroup& g = group("dihedral:" + std::to_string(m));
    CHECK(g.degrees() == std::vector<unsigned>{2, m});
  }
  CHECK(group("cyclic:5").degrees() == std::vector<unsigned>{5});
}

TEST_CASE("action preserves the pairing and the star operator") {
  SplitMix64 rng(32);
  for (const char* ref : {"B:2", "dihedral:3"}) {
    const ReflGroup& g = group(ref);
    for (int iter = 0; iter < 100; ++iter) {
      const std::size_t w = rng.below(g.order());
      const Poly f = testgen::random_poly(rng, 2);
      const Poly h = testgen::random_poly(rng, 2);
      CHECK(inner(g.act(w, f), g.act(w, h)) == inner(f, h));
      CHECK(g.act(w, star_apply(f, h)) ==
            star_apply(g.act(w, f), g.act(w, h)));
    }
  }
}

TEST_CASE("degree identities hold on the catalog") {
  for (const char* ref :
       {"cyclic:4", "B:2", "B:3", "dihedral:5", "G:3,1,2", "G:2,2,2", "G4"}) {
    const ReflGroup& g = group(ref);
    Integer product = 1;
    unsigned sum = 0;
    for (unsigned m : g.degrees()) {
      product *= m;
      sum += m - 1;
    }
    CHECK(product == Integer(static_cast<unsigned long>(g.order())));
    CHECK(sum == g.reflections().size());
    CHECK(g.delta().degree() == static_cast<int>(g.reflections().size()));
    CHECK(!g.delta().is_zero());
  }
}

TEST_CASE("reducible groups are flagged and optionally rejected") {
  const ReflGroup& klein = group("G:2,2,2");
  CHECK(!klein.is_irreducible());
  CHECK(klein.character_norm() == 2);

  GroupSpec spec = expand_catalog("G:2,2,2");
  AnalyzeOptions strict;
  strict.reject_reducible = true;
  CHECK_THROWS_AS(ReflGroup::analyze(spec.generators, strict), ReducibleGroup);
}

TEST_CASE("scalar groups are not reflection groups") {
  CMatrix m(2, 2);
  m.at(0, 0) = CycloNum::root_of_unity(3);
  m.at(1, 1) = CycloNum::root_of_unity(3);
  std::vector<CMatrix> gens{m};
  CHECK_THROWS_AS(ReflGroup::analyze(gens, {}), NotReflectionGroup);
}

TEST_CASE("element indices are range-checked") {
  const ReflGroup& g = group("cyclic:3");
  CHECK_THROWS_AS(g.act(3, Poly::variable(1, 0)), std::out_of_range);
  CHECK_THROWS_AS(g.determinant(99), std::out_of_range);
  CHECK(g.molien_coeffs(0) == std::vector<Integer>{1});
}

TEST_CASE("non-essential permutation action still analyzes") {
  // the symmetric group on three coordinates fixes (1,1,1); degrees (1,2,3)
  CMatrix s1 = CMatrix::identity(3), s2 = CMatrix::identity(3);
  s1.at(0, 0) = CycloNum(0);
  s1.at(1, 1) = CycloNum(0);
  s1.at(0, 1) = CycloNum(1);
  s1.at(1, 0) = CycloNum(1);
  s2.at(1, 1) = CycloNum(0);
  s2.at(2, 2) = CycloNum(0);
  s2.at(1, 2) = CycloNum(1);
  s2.at(2, 1) = CycloNum(1);
  std::vector<CMatrix> gens{s1, s2};
  const ReflGroup g = ReflGroup::analyze(gens, {});
  CHECK(g.order() == 6);
  CHECK(g.degrees() == std::vector<unsigned>{1, 2, 3});
  CHECK(g.reflections().size() == 3);
  CHECK(!g.is_irreducible());
}

TEST_CASE("trivial group has degree one") {
  const ReflGroup& g = group("cyclic:1");
  CHECK(g.order() == 1);
  CHECK(g.degrees() == std::vector<unsigned>{1});
  CHECK(g.reflections().empty());
  CHECK(g.delta() == Poly::constant(1, CycloNum(1)));
}
