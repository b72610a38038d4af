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

#include <vector>

#include "canonsys/errors.hpp"
#include "canonsys/poly.hpp"
#include "support/testgen.hpp"

using namespace canonsys;

namespace {

const Poly X = Poly::variable(2, 0);
const Poly Y = Poly::variable(2, 1);

Poly ipow(const Poly& f, unsigned e) {
  Poly r = Poly::constant(f.var_count(), CycloNum(1));
  for (unsigned i = 0; i < e; ++i) r = r * f;
  return r;
}

}  // namespace

TEST_CASE("ring arithmetic") {
  CHECK((X + Y) * (X - Y) == ipow(X, 2) - ipow(Y, 2));
  const CycloNum i = CycloNum::root_of_unity(4);
  CHECK((scale(i, X) + scale(-i, X)).is_zero());
  CHECK((X + Y) * (X + Y) == ipow(X, 2) + scale(CycloNum(2), X * Y) + ipow(Y, 2));
  CHECK_THROWS_AS(X + Poly::variable(3, 0), DimensionMismatch);
}

TEST_CASE("term order puts the graded-lex largest term first") {
  const Poly f = ipow(Y, 4) + ipow(X, 2) + X * Y;
  CHECK(f.leading_exponents() == ExpVec{0, 4});
  CHECK(f.degree() == 4);
  CHECK(!f.homogeneous_degree().has_value());
  CHECK(f.to_string() == "x2^4 + x1^2 + x1*x2");
}

TEST_CASE("partial derivatives") {
  const Poly f = ipow(X, 2) * Y;
  CHECK(partial(f, 0) == scale(CycloNum(2), X * Y));
  CHECK(partial(f, 1) == ipow(X, 2));
  CHECK(partial(Poly::constant(2, CycloNum(7)), 0).is_zero());
  CHECK_THROWS_AS(partial(f, 2), std::out_of_range);
}

TEST_CASE("star operator") {
  // (x^2)* x^3 = 6x
  CHECK(star_apply(ipow(X, 2), ipow(X, 3)) == scale(CycloNum(6), X));
  // coefficients conjugate: (i x)* x^2 = -2i x
  const CycloNum i = CycloNum::root_of_unity(4);
  CHECK(star_apply(scale(i, X), ipow(X, 2)) == scale(CycloNum(-2) * i, X));
  // product rule instance: (x^2)*(x * x) = x (x^2)* x + (2x)* x = 0 + 2
  CHECK(star_apply(ipow(X, 2), X * X) == Poly::constant(2, CycloNum(2)));
  CHECK_THROWS_AS(star_apply(X, Poly::variable(3, 0)), DimensionMismatch);
}

TEST_CASE("inner product on monomials") {
  const Poly x2y = ipow(X, 2) * Y;
  CHECK(inner(x2y, x2y) == CycloNum(2));  // 2! * 1!
  CHECK(inner(x2y, ipow(X, 3)).is_zero());
  const CycloNum i = CycloNum::root_of_unity(4);
  CHECK(inner(scale(i, X), X) == -i);
}

TEST_CASE("linear substitution") {
  CMatrix swap(2, 2);
  swap.at(0, 1) = CycloNum(1);
  swap.at(1, 0) = CycloNum(1);
  CHECK(subst_linear(ipow(X, 2) + ipow(Y, 2), swap) == ipow(X, 2) + ipow(Y, 2));

  CMatrix diag(2, 2);
  diag.at(0, 0) = CycloNum::root_of_unity(3);
  diag.at(1, 1) = CycloNum(1);
  CHECK(subst_linear(X, diag) == scale(CycloNum::root_of_unity(3), X));

  // x -> -y, y -> x sends xy to -xy
  CMatrix rot(2, 2);
  rot.at(0, 1) = CycloNum(-1);
  rot.at(1, 0) = CycloNum(1);
  CHECK(subst_linear(X * Y, rot) == -(X * Y));
  CHECK_THROWS_AS(subst_linear(X, CMatrix(2, 3)), DimensionMismatch);
}

TEST_CASE("jacobian determinants") {
  const std::vector<Poly> coords{X, Y};
  CHECK(jacobian(coords) == Poly::constant(2, CycloNum(1)));

  const std::vector<Poly> b2{ipow(X, 2) + ipow(Y, 2), ipow(X, 4) + ipow(Y, 4)};
  const Poly expected = scale(CycloNum(8), X * ipow(Y, 3)) -
                        scale(CycloNum(8), ipow(X, 3) * Y);
  CHECK(jacobian(b2) == expected);

  const std::vector<Poly> dependent{X + Y, scale(CycloNum(2), X + Y)};
  CHECK(jacobian(dependent).is_zero());
  const std::vector<Poly> wrong{X};
  CHECK_THROWS_AS(jacobian(wrong), DimensionMismatch);
}

TEST_CASE("evaluation") {
  const std::vector<CycloNum> p{CycloNum(1), CycloNum(2)};
  CHECK(evaluate(ipow(X, 2) + ipow(Y, 2), p) == CycloNum(5));
  const CycloNum z = CycloNum::root_of_unity(3);
  const std::vector<CycloNum> q{z, z};
  CHECK(evaluate(X - Y, q).is_zero());
  CHECK_THROWS_AS(evaluate(X, std::vector<CycloNum>{}), DimensionMismatch);
  CHECK_THROWS_AS(Poly(0), std::invalid_argument);
}

TEST_CASE("monomial pairing is delta_ab times a!") {
  SplitMix64 rng(21);
  for (int iter = 0; iter < 200; ++iter) {
    const unsigned n = 1 + static_cast<unsigned>(rng.below(3));
    const ExpVec a = testgen::random_exponents(rng, n, 3);
    const ExpVec b = testgen::random_exponents(rng, n, 3);
    const Poly ma = Poly::monomial(n, a, CycloNum(1));
    const Poly mb = Poly::monomial(n, b, CycloNum(1));
    Integer weight = 1;
    for (unsigned e : a) weight *= factorial(e);
    const CycloNum expected =
        a == b ? CycloNum(Rational(weight)) : CycloNum(0);
    CHECK(inner(ma, mb) == expected);
  }
}

TEST_CASE("pairing is Hermitian and positive on the diagonal") {
  SplitMix64 rng(22);
  for (int iter = 0; iter < 200; ++iter) {
    const unsigned n = 1 + static_cast<unsigned>(rng.below(3));
    const Poly f = testgen::random_poly(rng, n);
    const Poly g = testgen::random_poly(rng, n);
    CHECK(inner(f, g) == conj(inner(g, f)));
    const CycloNum norm = inner(f, f);
    CHECK(norm.is_real());
    if (!f.is_zero()) CHECK(!norm.is_zero());
    // rational coefficients make the positivity directly visible
    if (const auto r = norm.as_rational()) CHECK(*r >= 0);
  }
}

TEST_CASE("star operators compose multiplicatively") {
  SplitMix64 rng(23);
  for (int iter = 0; iter < 200; ++iter) {
    const unsigned n = 1 + static_cast<unsigned>(rng.below(2));
    const Poly f = testgen::random_poly(rng, n, 2, 2);
    const Poly g = testgen::random_poly(rng, n, 2, 2);
    const Poly h = testgen::random_poly(rng, n, 3, 3);
    CHECK(star_apply(f * g, h) == star_apply(f, star_apply(g, h)));
  }
}

TEST_CASE("derivation identity for star against a product") {
  SplitMix64 rng(24);
  for (int iter = 0; iter < 200; ++iter) {
    const unsigned n = 1 + static_cast<unsigned>(rng.below(3));
    const Poly g = testgen::random_poly(rng, n, 3, 3);
    const Poly h = testgen::random_poly(rng, n, 3, 3);
    for (unsigned j = 0; j < n; ++j) {
      const Poly xj = Poly::variable(n, j);
      const Poly lhs = star_apply(g, xj * h);
      const Poly rhs = xj * star_apply(g, h) + star_apply(partial(g, j), h);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("star lowers degree or annihilates") {
  SplitMix64 rng(25);
  for (int iter = 0; iter < 200; ++iter) {
    const unsigned n = 1 + static_cast<unsigned>(rng.below(2));
    const unsigned df = static_cast<unsigned>(rng.below(4));
    const unsigned dg = static_cast<unsigned>(rng.below(5));
    const Poly f = testgen::random_homogeneous(rng, n, df);
    const Poly g = testgen::random_homogeneous(rng, n, dg);
    const Poly result = star_apply(f, g);
    if (df > dg || f.is_zero() || g.is_zero()) {
      CHECK(result.is_zero());
    } else if (!result.is_zero()) {
      CHECK(result.homogeneous_degree() == dg - df);
    }
  }
}

TEST_CASE("homogeneous polynomials of different degrees are orthogonal") {
  SplitMix64 rng(26);
  for (int iter = 0; iter < 200; ++iter) {
    const unsigned n = 1 + static_cast<unsigned>(rng.below(2));
    const unsigned df = static_cast<unsigned>(rng.below(4));
    const unsigned dg = static_cast<unsigned>(rng.below(4));
    if (df == dg) continue;
    const Poly f = testgen::random_homogeneous(rng, n, df);
    const Poly g = testgen::random_homogeneous(rng, n, dg);
    CHECK(inner(f, g).is_zero());
  }
}

TEST_CASE("monic normalization") {
  const Poly f = scale(CycloNum(3), ipow(X, 2)) + scale(CycloNum(6), X * Y);
  CHECK(f.monic().leading_coeff() == CycloNum(1));
  CHECK(f.monic() == ipow(X, 2) + scale(CycloNum(2), X * Y));
  CHECK_THROWS_AS(Poly(2).monic(), DivisionByZero);
}
