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

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "canonsys/cyclotomic.hpp"
#include "canonsys/linalg.hpp"

namespace canonsys {

/// Exponent multi-index of a monomial; length equals the variable count.
using ExpVec = std::vector<unsigned>;

unsigned total_degree(const ExpVec& exponents);

/// Graded-lexicographic term order, largest term first: higher total degree
/// wins, ties broken lexicographically with x1 > x2 > ... . The first term
/// of a polynomial under this order is its leading term.
struct TermOrder {
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};

/// Sparse multivariate polynomial over the cyclotomic scalars.
///
/// Terms are kept in graded-lex order with no explicit zeros, so equal
/// polynomials have identical term sequences and printing is canonical.
/// The variable count is fixed at construction (n >= 1) and checked on
/// every binary operation.
class Poly {
 public:
  using TermMap = std::map<ExpVec, CycloNum, TermOrder>;

  /// The zero polynomial in n variables.
  explicit Poly(unsigned var_count);

  static Poly constant(unsigned var_count, CycloNum value);
  static Poly variable(unsigned var_count, unsigned index);
  static Poly monomial(unsigned var_count, ExpVec exponents, CycloNum coeff);

  unsigned var_count() const { return var_count_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const;

  /// The common total degree when every term shares one, absent otherwise
  /// (in particular absent for zero).
  std::optional<unsigned> homogeneous_degree() const;

  CycloNum coeff(const ExpVec& exponents) const;

  const ExpVec& leading_exponents() const;
  const CycloNum& leading_coeff() const;

  /// Scales so the graded-lex-first coefficient equals 1.
  Poly monic() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);

  friend bool operator==(const Poly& lhs, const Poly& rhs);
  friend bool operator!=(const Poly& lhs, const Poly& rhs) {
    return !(lhs == rhs);
  }

  /// Human-readable form, e.g. "x1^3*x2 - (4; 1:1)*x2^2"; terms in
  /// graded-lex order.
  std::string to_string() const;

 private:
  void insert_term(ExpVec exponents, CycloNum coeff);

  unsigned var_count_;
  TermMap terms_;

  friend Poly scale(const CycloNum& c, const Poly& f);
  friend Poly partial(const Poly& f, unsigned var);
  friend Poly star_apply(const Poly& f, const Poly& g);
  friend Poly subst_linear(const Poly& f, const CMatrix& m);
};

Poly scale(const CycloNum& c, const Poly& f);

/// Formal partial derivative with respect to variable `var` (0-based).
Poly partial(const Poly& f, unsigned var);

/// The differential operator of f applied to g: coefficients of f are
/// conjugated and each monomial x^a acts as the mixed derivative d^a.
Poly star_apply(const Poly& f, const Poly& g);

/// Hermitian pairing <f,g> = (f star g) evaluated at 0; monomials satisfy
/// <x^a, x^b> = delta_ab * a!. Sesquilinear in the first argument.
CycloNum inner(const Poly& f, const Poly& g);

/// Substitutes x_i -> sum_j m(i,j) x_j; degree preserving.
Poly subst_linear(const Poly& f, const CMatrix& m);

/// det [d f_i / d x_j] for exactly n polynomials in n variables.
Poly jacobian(std::span<const Poly> fs);

CycloNum evaluate(const Poly& f, std::span<const CycloNum> point);

/// All exponent vectors of the given total degree, in TermOrder.
std::vector<ExpVec> monomials_of_degree(unsigned var_count, unsigned degree);

}  // namespace canonsys
