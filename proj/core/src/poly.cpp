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

#include "canonsys/poly.hpp"

#include <algorithm>
#include <sstream>

#include "canonsys/errors.hpp"

namespace canonsys {

unsigned total_degree(const ExpVec& exponents) {
  unsigned d = 0;
  for (unsigned e : exponents) d += e;
  return d;
}

bool TermOrder::operator()(const ExpVec& a, const ExpVec& b) const {
  const unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

void require_same_vars(const Poly& f, const Poly& g) {
  if (f.var_count() != g.var_count())
    throw DimensionMismatch("polynomials live in different variable counts");
}

}  // namespace

Poly::Poly(unsigned var_count) : var_count_(var_count) {
  if (var_count == 0)
    throw std::invalid_argument("polynomials need at least one variable");
}

Poly Poly::constant(unsigned var_count, CycloNum value) {
  Poly f(var_count);
  f.insert_term(ExpVec(var_count, 0), std::move(value));
  return f;
}

Poly Poly::variable(unsigned var_count, unsigned index) {
  if (index >= var_count) throw std::out_of_range("variable index out of range");
  ExpVec e(var_count, 0);
  e[index] = 1;
  return monomial(var_count, std::move(e), CycloNum(1));
}

Poly Poly::monomial(unsigned var_count, ExpVec exponents, CycloNum coeff) {
  if (exponents.size() != var_count)
    throw DimensionMismatch("exponent vector length differs from variable count");
  Poly f(var_count);
  f.insert_term(std::move(exponents), std::move(coeff));
  return f;
}

void Poly::insert_term(ExpVec exponents, CycloNum coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(exponents);
  if (it == terms_.end()) {
    terms_.emplace(std::move(exponents), std::move(coeff));
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  // Terms are graded; the first term carries the top degree.
  return static_cast<int>(total_degree(terms_.begin()->first));
}

std::optional<unsigned> Poly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const unsigned top = total_degree(terms_.begin()->first);
  const unsigned bottom = total_degree(terms_.rbegin()->first);
  if (top != bottom) return std::nullopt;
  return top;
}

CycloNum Poly::coeff(const ExpVec& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? CycloNum(0) : it->second;
}

const ExpVec& Poly::leading_exponents() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const CycloNum& Poly::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return terms_.begin()->second;
}

Poly Poly::monic() const {
  if (terms_.empty()) throw DivisionByZero("cannot normalize the zero polynomial");
  return scale(inv(leading_coeff()), *this);
}

Poly Poly::operator-() const {
  Poly r(var_count_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
  require_same_vars(*this, rhs);
  if (&rhs == this) {
    const Poly copy = rhs;
    return *this += copy;
  }
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) { return *this += -rhs; }

Poly operator*(const Poly& lhs, const Poly& rhs) {
  require_same_vars(lhs, rhs);
  Poly r(lhs.var_count());
  for (const auto& [ea, ca] : lhs.terms()) {
    for (const auto& [eb, cb] : rhs.terms()) {
      ExpVec e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r += Poly::monomial(lhs.var_count(), std::move(e), ca * cb);
    }
  }
  return r;
}

bool operator==(const Poly& lhs, const Poly& rhs) {
  if (lhs.var_count() != rhs.var_count()) return false;
  if (lhs.terms().size() != rhs.terms().size()) return false;
  auto it = lhs.terms().begin();
  auto jt = rhs.terms().begin();
  for (; it != lhs.terms().end(); ++it, ++jt)
    if (it->first != jt->first || it->second != jt->second) return false;
  return true;
}

Poly scale(const CycloNum& c, const Poly& f) {
  Poly r(f.var_count_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : f.terms_) {
    CycloNum cv = c * v;
    if (!cv.is_zero()) r.terms_.emplace(e, std::move(cv));
  }
  return r;
}

Poly partial(const Poly& f, unsigned var) {
  if (var >= f.var_count_) throw std::out_of_range("variable index out of range");
  Poly r(f.var_count_);
  for (const auto& [e, c] : f.terms_) {
    if (e[var] == 0) continue;
    ExpVec d = e;
    d[var] -= 1;
    r.terms_.emplace(std::move(d), c * CycloNum(static_cast<long>(e[var])));
  }
  return r;
}

Poly star_apply(const Poly& f, const Poly& g) {
  require_same_vars(f, g);
  const unsigned n = f.var_count();
  Poly r(n);
  for (const auto& [a, ca] : f.terms_) {
    const CycloNum cc = conj(ca);
    for (const auto& [b, cb] : g.terms_) {
      // d^a annihilates x^b unless b >= a componentwise.
      bool divides = true;
      for (unsigned i = 0; i < n; ++i)
        if (b[i] < a[i]) {
          divides = false;
          break;
        }
      if (!divides) continue;
      Integer factor = 1;
      ExpVec e(n);
      for (unsigned i = 0; i < n; ++i) {
        factor *= falling_factorial(b[i], a[i]);
        e[i] = b[i] - a[i];
      }
      r += Poly::monomial(n, std::move(e), cc * cb * CycloNum(Rational(factor)));
    }
  }
  return r;
}

CycloNum inner(const Poly& f, const Poly& g) {
  require_same_vars(f, g);
  CycloNum acc;
  for (const auto& [e, cf] : f.terms()) {
    auto it = g.terms().find(e);
    if (it == g.terms().end()) continue;
    Integer weight = 1;
    for (unsigned a : e) weight *= factorial(a);
    acc += conj(cf) * it->second * CycloNum(Rational(weight));
  }
  return acc;
}

Poly subst_linear(const Poly& f, const CMatrix& m) {
  const unsigned n = f.var_count_;
  if (m.rows() != n || m.cols() != n)
    throw DimensionMismatch("substitution matrix must be n x n");
  // Images of the variables and lazily extended power tables.
  std::vector<Poly> image;
  image.reserve(n);
  for (unsigned i = 0; i < n; ++i) {
    Poly li(n);
    for (unsigned j = 0; j < n; ++j) {
      if (m.at(i, j).is_zero()) continue;
      li += Poly::monomial(n, [&] { ExpVec e(n, 0); e[j] = 1; return e; }(), m.at(i, j));
    }
    image.push_back(std::move(li));
  }
  std::vector<std::vector<Poly>> powers(n);
  for (unsigned i = 0; i < n; ++i) powers[i].push_back(Poly::constant(n, CycloNum(1)));
  const auto power = [&](unsigned i, unsigned e) -> const Poly& {
    while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * image[i]);
    return powers[i][e];
  };
  Poly r(n);
  for (const auto& [e, c] : f.terms_) {
    Poly term = Poly::constant(n, c);
    for (unsigned i = 0; i < n; ++i)
      if (e[i] > 0) term = term * power(i, e[i]);
    r += term;
  }
  return r;
}

namespace {

Poly poly_det(const std::vector<std::vector<Poly>>& m, std::vector<std::size_t> cols,
              std::size_t row, unsigned n) {
  if (cols.size() == 1) return m[row][cols[0]];
  Poly acc(n);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Poly& head = m[row][cols[k]];
    if (head.is_zero()) continue;
    std::vector<std::size_t> rest;
    rest.reserve(cols.size() - 1);
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (j != k) rest.push_back(cols[j]);
    Poly minor = head * poly_det(m, std::move(rest), row + 1, n);
    if (k % 2 == 0)
      acc += minor;
    else
      acc -= minor;
  }
  return acc;
}

}  // namespace

Poly jacobian(std::span<const Poly> fs) {
  if (fs.empty()) throw DimensionMismatch("jacobian of an empty system");
  const unsigned n = fs[0].var_count();
  if (fs.size() != n)
    throw DimensionMismatch("jacobian needs exactly n polynomials in n variables");
  std::vector<std::vector<Poly>> rows;
  rows.reserve(n);
  for (const Poly& f : fs) {
    if (f.var_count() != n)
      throw DimensionMismatch("jacobian inputs disagree on variable count");
    std::vector<Poly> row;
    row.reserve(n);
    for (unsigned j = 0; j < n; ++j) row.push_back(partial(f, j));
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> cols(n);
  for (unsigned j = 0; j < n; ++j) cols[j] = j;
  return poly_det(rows, std::move(cols), 0, n);
}

CycloNum evaluate(const Poly& f, std::span<const CycloNum> point) {
  if (point.size() != f.var_count())
    throw DimensionMismatch("evaluation point length differs from variable count");
  const unsigned n = f.var_count();
  std::vector<std::vector<CycloNum>> powers(n, std::vector<CycloNum>{CycloNum(1)});
  const auto power = [&](unsigned i, unsigned e) -> const CycloNum& {
    while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * point[i]);
    return powers[i][e];
  };
  CycloNum acc;
  for (const auto& [e, c] : f.terms()) {
    CycloNum term = c;
    for (unsigned i = 0; i < n; ++i)
      if (e[i] > 0) term *= power(i, e[i]);
    acc += term;
  }
  return acc;
}

namespace {

void enumerate_monomials(unsigned remaining_vars, unsigned remaining_degree,
                         ExpVec& prefix, std::vector<ExpVec>& out) {
  if (remaining_vars == 1) {
    prefix.push_back(remaining_degree);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (unsigned e = remaining_degree + 1; e-- > 0;) {
    prefix.push_back(e);
    enumerate_monomials(remaining_vars - 1, remaining_degree - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<ExpVec> monomials_of_degree(unsigned var_count, unsigned degree) {
  if (var_count == 0) throw std::invalid_argument("need at least one variable");
  std::vector<ExpVec> out;
  ExpVec prefix;
  prefix.reserve(var_count);
  enumerate_monomials(var_count, degree, prefix, out);
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string coeff_text;
    bool negative = false;
    if (auto r = c.as_rational()) {
      Rational v = *r;
      if (v < 0) {
        negative = true;
        v = -v;
      }
      coeff_text = v.get_str();
    } else {
      coeff_text = "(" + c.to_literal() + ")";
    }
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    if (mono.empty())
      out << coeff_text;
    else if (coeff_text == "1")
      out << mono;
    else
      out << coeff_text << "*" << mono;
  }
  return out.str();
}

}  // namespace canonsys
