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

#include "canonsys/group.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "canonsys/errors.hpp"

namespace canonsys {

namespace {

unsigned lcm_conductor(unsigned a, unsigned b) {
  const unsigned long long l =
      std::lcm<unsigned long long, unsigned long long>(a, b);
  if (l > conductor_cap())
    throw ConductorCapExceeded("group needs conductor " + std::to_string(l) +
                               " beyond the cap");
  return static_cast<unsigned>(l);
}

CMatrix promoted_matrix(const CMatrix& m, unsigned conductor) {
  CMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r.at(i, j) = m.at(i, j).promoted(conductor);
  return r;
}

// Canonical dedup key; valid only for matrices promoted to one conductor.
std::string matrix_key(const CMatrix& m) {
  std::string key;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      for (const Rational& c : m.at(i, j).coeffs()) {
        key += c.get_str();
        key += ',';
      }
      key += '|';
    }
  return key;
}

std::string row_key(const std::vector<CycloNum>& row, unsigned conductor) {
  std::string key;
  for (const CycloNum& v : row) {
    const CycloNum p = v.promoted(conductor);
    for (const Rational& c : p.coeffs()) {
      key += c.get_str();
      key += ',';
    }
    key += '|';
  }
  return key;
}

// Dense univariate polynomials over the cyclotomic scalars, little-endian.
using UniPoly = std::vector<CycloNum>;

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  UniPoly r(a.size() + b.size() - 1, CycloNum(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

UniPoly uni_det(const std::vector<std::vector<UniPoly>>& m,
                std::vector<std::size_t> cols, std::size_t row) {
  if (cols.size() == 1) return m[row][cols[0]];
  UniPoly acc;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    std::vector<std::size_t> rest;
    rest.reserve(cols.size() - 1);
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (j != k) rest.push_back(cols[j]);
    UniPoly term = uni_mul(m[row][cols[k]], uni_det(m, std::move(rest), row + 1));
    if (term.size() > acc.size()) acc.resize(term.size(), CycloNum(0));
    for (std::size_t i = 0; i < term.size(); ++i) {
      if (k % 2 == 0)
        acc[i] += term[i];
      else
        acc[i] -= term[i];
    }
  }
  return acc;
}

// 1 / p as a power series up to max_degree; p must have constant term 1.
UniPoly series_inverse(const UniPoly& p, unsigned max_degree) {
  UniPoly b(max_degree + 1, CycloNum(0));
  b[0] = CycloNum(1);
  for (unsigned k = 1; k <= max_degree; ++k) {
    CycloNum s;
    const std::size_t top = std::min<std::size_t>(k, p.size() - 1);
    for (std::size_t j = 1; j <= top; ++j) s += p[j] * b[k - j];
    b[k] = -s;
  }
  return b;
}

}  // namespace

UnitaryMatrix::UnitaryMatrix(CMatrix m) : mat_(std::move(m)) {
  if (mat_.rows() != mat_.cols())
    throw NotUnitary("unitary matrices must be square");
  if (!(mat_ * mat_.conj_transpose() == CMatrix::identity(mat_.rows())))
    throw NotUnitary("matrix is not unitary");
}

std::vector<CMatrix> closure(std::span<const CMatrix> generators,
                             std::size_t cap) {
  if (generators.empty()) throw std::invalid_argument("no generators given");
  if (cap < 1) throw std::invalid_argument("closure cap must be positive");
  const std::size_t n = generators.front().rows();
  unsigned ambient = 1;
  for (const CMatrix& g : generators) {
    if (g.rows() != n || g.cols() != n)
      throw DimensionMismatch("generators disagree on size");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        ambient = lcm_conductor(ambient, g.at(i, j).conductor());
  }
  std::vector<CMatrix> gens;
  gens.reserve(generators.size());
  for (const CMatrix& g : generators) {
    CMatrix p = promoted_matrix(g, ambient);
    UnitaryMatrix check(p);  // throws NotUnitary on bad input
    gens.push_back(std::move(p));
  }

  std::vector<CMatrix> elements;
  std::unordered_map<std::string, std::size_t> index;
  elements.push_back(promoted_matrix(CMatrix::identity(n), ambient));
  index.emplace(matrix_key(elements[0]), 0);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const CMatrix& g : gens) {
      CMatrix p = promoted_matrix(elements[head] * g, ambient);
      std::string key = matrix_key(p);
      if (index.contains(key)) continue;
      if (elements.size() >= cap)
        throw ClosureCapExceeded("group closure exceeded the cap of " +
                                 std::to_string(cap) + " elements");
      index.emplace(std::move(key), elements.size());
      elements.push_back(std::move(p));
    }
  }
  return elements;
}

ReflGroup ReflGroup::analyze(std::span<const CMatrix> generators,
                             AnalyzeOptions options) {
  ReflGroup g;
  g.name_ = options.name;
  std::vector<CMatrix> elements = closure(generators, options.closure_cap);
  const std::size_t n = elements.front().rows();
  g.rank_ = static_cast<unsigned>(n);
  // closure() promotes every entry to one shared conductor.
  g.ambient_conductor_ = elements[0].at(0, 0).conductor();

  std::unordered_map<std::string, std::size_t> index;
  g.elements_.reserve(elements.size());
  for (std::size_t w = 0; w < elements.size(); ++w) {
    index.emplace(matrix_key(elements[w]), w);
    g.elements_.emplace_back(std::move(elements[w]));
  }

  for (const CMatrix& gen : generators) {
    auto it = index.find(matrix_key(promoted_matrix(gen, g.ambient_conductor_)));
    if (it == index.end())
      throw InternalInconsistency("generator missing from its own closure");
    g.generator_indices_.push_back(it->second);
  }

  // Reflections fix a hyperplane pointwise: rank(w - I) = 1.
  const CMatrix id = CMatrix::identity(n);
  for (std::size_t w = 1; w < g.elements_.size(); ++w) {
    if (canonsys::rank(g.elements_[w].mat() - id) == 1)
      g.reflections_.push_back(w);
  }

  // Group reflections by their fixed hyperplane. Rank one makes every
  // nonzero row of (w - I) proportional, so the normalized first nonzero
  // row identifies the hyperplane.
  std::unordered_map<std::string, std::size_t> plane_index;
  for (std::size_t r : g.reflections_) {
    const CMatrix diff = g.elements_[r].mat() - id;
    std::vector<CycloNum> row;
    for (std::size_t i = 0; i < n && row.empty(); ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!diff.at(i, j).is_zero()) {
          row.reserve(n);
          for (std::size_t k = 0; k < n; ++k) row.push_back(diff.at(i, k));
          break;
        }
      }
    }
    if (row.empty())
      throw InternalInconsistency("reflection with zero displacement");
    std::size_t first = 0;
    while (row[first].is_zero()) ++first;
    const CycloNum scale = inv(row[first]);
    for (CycloNum& v : row) v *= scale;

    const std::string key = row_key(row, g.ambient_conductor_);
    auto it = plane_index.find(key);
    if (it == plane_index.end()) {
      Poly form(static_cast<unsigned>(n));
      for (std::size_t j = 0; j < n; ++j) {
        if (row[j].is_zero()) continue;
        ExpVec e(n, 0);
        e[j] = 1;
        form += Poly::monomial(static_cast<unsigned>(n), std::move(e), row[j]);
      }
      plane_index.emplace(key, g.hyperplanes_.size());
      g.hyperplanes_.push_back(Hyperplane{std::move(form), 2, {r}});
    } else {
      g.hyperplanes_[it->second].fixing_reflections.push_back(r);
    }
  }
  for (Hyperplane& h : g.hyperplanes_)
    h.order = static_cast<unsigned>(h.fixing_reflections.size()) + 1;

  // The pointwise stabilizer of each hyperplane must close up into a cyclic
  // group of order e_H; verify closure under multiplication.
  for (const Hyperplane& h : g.hyperplanes_) {
    std::vector<std::size_t> members{0};
    members.insert(members.end(), h.fixing_reflections.begin(),
                   h.fixing_reflections.end());
    for (std::size_t a : members) {
      for (std::size_t b : members) {
        const CMatrix prod = promoted_matrix(
            g.elements_[a].mat() * g.elements_[b].mat(), g.ambient_conductor_);
        auto it = index.find(matrix_key(prod));
        if (it == index.end() ||
            std::find(members.begin(), members.end(), it->second) == members.end())
          throw InternalInconsistency("hyperplane stabilizer is not closed");
      }
    }
  }

  // delta = prod over hyperplanes of L^(e-1).
  g.delta_ = Poly::constant(static_cast<unsigned>(n), CycloNum(1));
  for (const Hyperplane& h : g.hyperplanes_)
    for (unsigned k = 0; k + 1 < h.order; ++k) g.delta_ = g.delta_ * h.linear_form;

  // Character norm: (1/|W|) sum |trace|^2, an exact nonnegative integer equal
  // to the sum of squared multiplicities of the irreducible constituents.
  CycloNum norm_sum;
  for (const UnitaryMatrix& w : g.elements_) {
    const CycloNum t = trace(w.mat());
    norm_sum += t * conj(t);
  }
  const auto norm_rat = norm_sum.as_rational();
  if (!norm_rat)
    throw InternalInconsistency("character norm is not rational");
  g.character_norm_ = *norm_rat / Rational(static_cast<long>(g.elements_.size()));
  if (!is_integer(g.character_norm_) || g.character_norm_ < 1)
    throw InternalInconsistency("character norm is not a positive integer");
  if (options.reject_reducible && g.character_norm_ != 1)
    throw ReducibleGroup(
        "the representation is reducible (character norm " +
        g.character_norm_.get_str() +
        "); decompose it externally or drop the strict irreducibility option");

  g.degrees_ = g.extract_degrees();

  // Chevalley bookkeeping: sum (m_i - 1) counts the reflections.
  unsigned degree_sum = 0;
  for (unsigned m : g.degrees_) degree_sum += m - 1;
  if (degree_sum != g.reflections_.size())
    throw NotReflectionGroup(
        "degree bookkeeping failed: sum(m_i - 1) = " + std::to_string(degree_sum) +
        " but there are " + std::to_string(g.reflections_.size()) +
        " reflections; the input does not generate a reflection group");

  return g;
}

bool ReflGroup::is_irreducible() const { return character_norm_ == 1; }

Poly ReflGroup::act(std::size_t w, const Poly& f) const {
  if (w >= elements_.size()) throw std::out_of_range("element index out of range");
  return subst_linear(f, elements_[w].mat().conj_transpose());
}

CycloNum ReflGroup::determinant(std::size_t w) const {
  if (w >= elements_.size()) throw std::out_of_range("element index out of range");
  return det(elements_[w].mat());
}

Poly ReflGroup::reynolds(const Poly& f) const {
  Poly sum(f.var_count());
  for (std::size_t w = 0; w < elements_.size(); ++w) sum += act(w, f);
  return scale(CycloNum(make_rational(1, static_cast<long>(elements_.size()))), sum);
}

std::vector<Integer> ReflGroup::molien_coeffs(unsigned max_degree) const {
  UniPoly sum(max_degree + 1, CycloNum(0));
  for (const UnitaryMatrix& w : elements_) {
    // det(I - t w) as a univariate polynomial, then its series inverse.
    std::vector<std::vector<UniPoly>> m(rank_, std::vector<UniPoly>(rank_));
    for (unsigned i = 0; i < rank_; ++i)
      for (unsigned j = 0; j < rank_; ++j) {
        UniPoly entry{CycloNum(i == j ? 1 : 0), -w.mat().at(i, j)};
        m[i][j] = std::move(entry);
      }
    std::vector<std::size_t> cols(rank_);
    for (unsigned j = 0; j < rank_; ++j) cols[j] = j;
    UniPoly d = uni_det(m, std::move(cols), 0);
    const UniPoly inv_series = series_inverse(d, max_degree);
    for (unsigned k = 0; k <= max_degree; ++k) sum[k] += inv_series[k];
  }
  std::vector<Integer> coeffs(max_degree + 1);
  const Rational order_rat(static_cast<long>(elements_.size()));
  for (unsigned k = 0; k <= max_degree; ++k) {
    const auto r = sum[k].as_rational();
    if (!r)
      throw InternalInconsistency("Molien coefficient " + std::to_string(k) +
                                  " is not rational");
    const Rational value = *r / order_rat;
    if (!is_integer(value) || value < 0)
      throw InternalInconsistency("Molien coefficient " + std::to_string(k) +
                                  " is not a nonnegative integer: " +
                                  value.get_str());
    coeffs[k] = value.get_num();
  }
  return coeffs;
}

// Greedy factor extraction: the smallest positive index with a nonzero
// coefficient is the smallest remaining degree; multiplying by (1 - t^d)
// removes that factor exactly. The truncation depth grows on demand but
// never needs to pass the group order, since no degree can exceed it.
std::vector<unsigned> ReflGroup::extract_degrees() const {
  const unsigned group_order = static_cast<unsigned>(elements_.size());
  unsigned max_degree = std::min(std::max<unsigned>(8, 2 * rank_), group_order);
  while (true) {
    const std::vector<Integer> series = molien_coeffs(max_degree);
    if (series[0] != 1)
      throw NotReflectionGroup("Hilbert series does not start at 1");

    std::vector<unsigned> degs;
    std::vector<Integer> residual = series;
    bool truncated = false;
    for (unsigned picked = 0; picked < rank_ && !truncated; ++picked) {
      unsigned d = 0;
      for (unsigned k = 1; k <= max_degree; ++k) {
        if (residual[k] != 0) {
          if (residual[k] < 0)
            throw NotReflectionGroup(
                "Hilbert series is not a product of 1/(1 - t^m) factors");
          d = k;
          break;
        }
      }
      if (d == 0) {
        truncated = true;  // next degree lies beyond the current depth
        break;
      }
      degs.push_back(d);
      std::vector<Integer> next(residual.size());
      for (std::size_t k = 0; k < residual.size(); ++k) {
        next[k] = residual[k];
        if (k >= d) next[k] -= residual[k - d];
      }
      residual = std::move(next);
    }
    if (!truncated) {
      for (unsigned k = 1; k <= max_degree; ++k)
        if (residual[k] != 0)
          throw NotReflectionGroup(
              "Hilbert series is not a product of rank-many 1/(1 - t^m) factors");
      Integer product = 1;
      for (unsigned m : degs) product *= m;
      if (product != Integer(group_order))
        throw NotReflectionGroup(
            "product of invariant degrees does not match the group order");
      return degs;
    }
    if (max_degree >= group_order)
      throw NotReflectionGroup(
          "could not extract invariant degrees up to the group order");
    max_degree = std::min(2 * max_degree, group_order);
  }
}

}  // namespace canonsys
