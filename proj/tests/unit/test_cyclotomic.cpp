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

#include "canonsys/cyclotomic.hpp"
#include "canonsys/errors.hpp"
#include "support/testgen.hpp"

using namespace canonsys;

namespace {
CycloNum zeta(unsigned m, unsigned long k = 1) {
  return CycloNum::root_of_unity(m, k);
}
}  // namespace

TEST_CASE("rational helpers") {
  CHECK(parse_rational("3/7") == make_rational(3, 7));
  CHECK(parse_rational("-2/4") == make_rational(-1, 2));
  CHECK(parse_rational("5") == Rational(5));
  CHECK(rational_str(make_rational(-6, 4)) == "-3/2");
  CHECK(is_integer(Rational(4)));
  CHECK(!is_integer(make_rational(1, 2)));
  CHECK(factorial(6) == 720);
  CHECK(falling_factorial(5, 2) == 20);
  CHECK(falling_factorial(5, 0) == 1);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}

TEST_CASE("cyclotomic relations") {
  // Phi_3: 1 + z + z^2 = 0
  CHECK((zeta(3) * zeta(3) + zeta(3) + CycloNum(1)).is_zero());
  // i^2 = -1
  CHECK(zeta(4) * zeta(4) == CycloNum(-1));
  // embedding: 1 from Q(zeta_2) lands in Q(zeta_6) with conductor 6
  const CycloNum one_at_2 = zeta(2, 0);
  CHECK(one_at_2.conductor() == 2);
  const CycloNum sum = one_at_2.promoted(6) + zeta(6);
  CHECK(sum.conductor() == 6);
  CHECK(sum == CycloNum(1) + zeta(6));
}

TEST_CASE("arithmetic promotes to the lcm conductor") {
  const CycloNum v = zeta(4) + zeta(6);
  CHECK(v.conductor() == 12);
  CHECK(v == zeta(12, 3) + zeta(12, 2));
}

TEST_CASE("inverses") {
  CHECK(inv(CycloNum(2)) == CycloNum(make_rational(1, 2)));
  // (1+i)^-1 = (1-i)/2, checked both by value and by product
  const CycloNum v = CycloNum(1) + zeta(4);
  const CycloNum w = inv(v);
  CHECK(w == (CycloNum(1) - zeta(4)) * CycloNum(make_rational(1, 2)));
  CHECK(v * w == CycloNum(1));
  // zeta_5^-1 = zeta_5^4
  CHECK(inv(zeta(5)) == zeta(5, 4));
  CHECK_THROWS_AS(inv(CycloNum(0)), DivisionByZero);
}

TEST_CASE("conjugation") {
  CHECK(conj(zeta(4)) == -zeta(4));
  CHECK(conj(CycloNum(make_rational(3, 7))) == CycloNum(make_rational(3, 7)));
  CHECK(conj(zeta(3)) == CycloNum(-1) - zeta(3));
}

TEST_CASE("reality and rationality queries") {
  const CycloNum v = zeta(3) + conj(zeta(3));
  CHECK(v.is_real());
  CHECK(v == CycloNum(-1));
  CHECK(!zeta(4).as_rational().has_value());
  const CycloNum w = zeta(6) + zeta(6, 5);
  REQUIRE(w.as_rational().has_value());
  CHECK(*w.as_rational() == 1);
}

TEST_CASE("field axioms on random operands") {
  SplitMix64 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    const CycloNum a = testgen::random_cyclo(rng);
    const CycloNum b = testgen::random_cyclo(rng);
    const CycloNum c = testgen::random_cyclo(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * inv(a) == CycloNum(1));
  }
}

TEST_CASE("conj is an involutive ring automorphism") {
  SplitMix64 rng(12);
  for (int iter = 0; iter < 200; ++iter) {
    const CycloNum a = testgen::random_cyclo(rng);
    const CycloNum b = testgen::random_cyclo(rng);
    CHECK(conj(conj(a)) == a);
    CHECK(conj(a * b) == conj(a) * conj(b));
    CHECK(conj(a + b) == conj(a) + conj(b));
    CHECK((a * conj(a)).is_real());
    if (!a.is_zero()) CHECK(!(a * conj(a)).is_zero());
  }
}

TEST_CASE("promotion then demotion round-trips") {
  SplitMix64 rng(13);
  for (int iter = 0; iter < 100; ++iter) {
    const CycloNum a = testgen::random_cyclo(rng);
    const CycloNum canonical = a.normalized();
    const unsigned multiple = a.conductor() * (1 + rng.below(3));
    if (multiple > conductor_cap()) continue;
    const CycloNum back = a.promoted(static_cast<unsigned>(multiple)).normalized();
    CHECK(back.conductor() == canonical.conductor());
    CHECK(back.coeffs() == canonical.coeffs());
  }
}

TEST_CASE("demotion finds the minimal conductor") {
  // Q(zeta_6) = Q(zeta_3), so zeta_12^2 = zeta_6 = 1 + zeta_3 demotes to 3.
  CHECK(zeta(12, 2).normalized().conductor() == 3);
  CHECK(zeta(12, 2).normalized() == zeta(6));
  CHECK(zeta(12, 3).normalized().conductor() == 4);
  // a rational hiding at conductor 12
  const CycloNum one = zeta(12, 0);
  CHECK(one.normalized().conductor() == 1);
  // sqrt(2) = zeta_8 + zeta_8^-1 genuinely needs conductor 8
  const CycloNum sqrt2 = zeta(8) + zeta(8, 7);
  CHECK(sqrt2.normalized().conductor() == 8);
  CHECK((sqrt2 * sqrt2).normalized() == CycloNum(2));
  CHECK((zeta(5) * zeta(5, 4)).normalized().conductor() == 1);
}

TEST_CASE("conductor cap guards arithmetic") {
  const unsigned old_cap = set_conductor_cap(10);
  CHECK_THROWS_AS(CycloNum::root_of_unity(12), ConductorCapExceeded);
  // lcm(4, 6) = 12 > 10
  CHECK_THROWS_AS(zeta(4) + zeta(6), ConductorCapExceeded);
  set_conductor_cap(old_cap);
  CHECK(conductor_cap() == old_cap);
}

TEST_CASE("literal round trip") {
  // zeta_12^7 = -zeta_12 in the power basis (t^4 = t^2 - 1)
  CHECK(zeta(12, 7).to_literal() == "12; 1:-1");
  CHECK(CycloNum::from_literal("12; 7:1") == zeta(12, 7));
  CHECK(CycloNum::from_literal("4; 0:1/2, 1:-1/2") ==
        (CycloNum(1) - zeta(4)) * CycloNum(make_rational(1, 2)));
  // exponents reduce modulo the conductor
  CHECK(CycloNum::from_literal("5; 7:1") == zeta(5, 2));
  // zero keeps its conductor
  const CycloNum zero = zeta(3) - zeta(3);
  CHECK(zero.to_literal() == "3;");
  CHECK(CycloNum::from_literal("3;").is_zero());

  SplitMix64 rng(14);
  for (int iter = 0; iter < 100; ++iter) {
    const CycloNum a = testgen::random_cyclo(rng);
    const CycloNum b = CycloNum::from_literal(a.to_literal());
    CHECK(b == a);
    CHECK(b.conductor() == a.conductor());
    CHECK(b.coeffs() == a.coeffs());
  }
}

TEST_CASE("literal parse errors") {
  CHECK_THROWS_AS(CycloNum::from_literal("nope"), ParseError);
  CHECK_THROWS_AS(CycloNum::from_literal("0; 0:1"), ParseError);
  CHECK_THROWS_AS(CycloNum::from_literal("4; 1"), ParseError);
  CHECK_THROWS_AS(CycloNum::from_literal("4; x:1"), ParseError);
  CHECK_THROWS_AS(CycloNum::from_literal("4; 1:1/0"), ParseError);
  CHECK_THROWS_AS(CycloNum::from_literal("-4; 0:1"), ParseError);
  CHECK_THROWS_AS(CycloNum::from_literal("4; -1:1"), ParseError);
}

TEST_CASE("equality ignores representation conductor") {
  CHECK(CycloNum(1) == zeta(6, 0));
  CHECK(zeta(6, 3) == CycloNum(-1));
  CHECK(zeta(4) != zeta(4, 3));
}
