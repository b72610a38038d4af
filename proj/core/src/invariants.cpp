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

#include "canonsys/invariants.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "canonsys/errors.hpp"
#include "canonsys/linalg.hpp"
#include "canonsys/prng.hpp"

namespace canonsys {

namespace {

// Incremental exact rank tracker for gradient rows.
class RowBasis {
 public:
  bool try_add(std::vector<CycloNum> row) {
    for (const auto& [pivot, basis_row] : rows_) {
      if (row[pivot].is_zero()) continue;
      const CycloNum f = row[pivot];
      for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * basis_row[j];
    }
    std::size_t pivot = 0;
    while (pivot < row.size() && row[pivot].is_zero()) ++pivot;
    if (pivot == row.size()) return false;
    const CycloNum scale = inv(row[pivot]);
    for (auto& v : row) v *= scale;
    rows_.emplace(pivot, std::move(row));
    return true;
  }

 private:
  std::map<std::size_t, std::vector<CycloNum>> rows_;
};

}  // namespace

std::vector<Poly> invariant_space(const ReflGroup& group, unsigned degree) {
  const unsigned n = group.rank();
  const std::vector<ExpVec> monos = monomials_of_degree(n, degree);
  std::map<ExpVec, std::size_t, TermOrder> column;
  for (std::size_t j = 0; j < monos.size(); ++j) column.emplace(monos[j], j);

  // Average every monomial over the group in one sweep per element, sharing
  // the power tables of the substituted linear forms.
  std::vector<Poly> averaged(monos.size(), Poly(n));
  for (std::size_t w = 0; w < group.order(); ++w) {
    const CMatrix sub = group.elements()[w].mat().conj_transpose();
    std::vector<Poly> image;
    image.reserve(n);
    for (unsigned i = 0; i < n; ++i) {
      Poly li(n);
      for (unsigned j = 0; j < n; ++j) {
        if (sub.at(i, j).is_zero()) continue;
        ExpVec e(n, 0);
        e[j] = 1;
        li += Poly::monomial(n, std::move(e), sub.at(i, j));
      }
      image.push_back(std::move(li));
    }
    std::vector<std::vector<Poly>> powers(n);
    for (unsigned i = 0; i < n; ++i)
      powers[i].push_back(Poly::constant(n, CycloNum(1)));
    const auto power = [&](unsigned i, unsigned e) -> const Poly& {
      while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * image[i]);
      return powers[i][e];
    };
    for (std::size_t k = 0; k < monos.size(); ++k) {
      Poly term = Poly::constant(n, CycloNum(1));
      for (unsigned i = 0; i < n; ++i)
        if (monos[k][i] > 0) term = term * power(i, monos[k][i]);
      averaged[k] += term;
    }
  }
  const CycloNum inv_order(make_rational(1, static_cast<long>(group.order())));

  CMatrix rows(monos.size(), monos.size());
  for (std::size_t k = 0; k < monos.size(); ++k) {
    const Poly avg = scale(inv_order, averaged[k]);
    for (const auto& [e, c] : avg.terms()) rows.at(k, column.at(e)) = c;
  }
  const Rref reduced = rref(std::move(rows));

  std::vector<Poly> basis;
  basis.reserve(reduced.pivots.size());
  for (std::size_t r = 0; r < reduced.pivots.size(); ++r) {
    Poly b(n);
    for (std::size_t j = 0; j < monos.size(); ++j) {
      const CycloNum& c = reduced.mat.at(r, j);
      if (!c.is_zero()) b += Poly::monomial(n, monos[j], c);
    }
    basis.push_back(std::move(b));
  }

  const std::vector<Integer> molien = group.molien_coeffs(degree);
  if (Integer(static_cast<unsigned long>(basis.size())) != molien[degree])
    throw InternalInconsistency(
        "invariant space dimension " + std::to_string(basis.size()) +
        " at degree " + std::to_string(degree) +
        " disagrees with the Molien coefficient " + molien[degree].get_str());
  return basis;
}

namespace {

// Sparse candidates first; ties broken by the graded-lex leading monomial.
void sort_candidates(std::vector<Poly>& space) {
  std::stable_sort(space.begin(), space.end(), [](const Poly& a, const Poly& b) {
    if (a.terms().size() != b.terms().size())
      return a.terms().size() < b.terms().size();
    return TermOrder{}(a.leading_exponents(), b.leading_exponents());
  });
}

std::vector<CycloNum> gradient_at(const Poly& f, std::span<const CycloNum> point) {
  std::vector<CycloNum> grad;
  grad.reserve(f.var_count());
  for (unsigned j = 0; j < f.var_count(); ++j)
    grad.push_back(evaluate(partial(f, j), point));
  return grad;
}

}  // namespace

InvariantSystem basic_invariants(const ReflGroup& group, std::uint64_t seed) {
  const unsigned n = group.rank();
  const std::vector<unsigned>& degrees = group.degrees();

  // One basis per distinct degree, sparsest first.
  std::map<unsigned, std::vector<Poly>> spaces;
  for (unsigned d : degrees) {
    if (spaces.contains(d)) continue;
    std::vector<Poly> space = invariant_space(group, d);
    sort_candidates(space);
    spaces.emplace(d, std::move(space));
  }

  SplitMix64 rng(seed);
  constexpr int kMaxAttempts = 10;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    // Random rational point with coordinates in {1..2^k}; the height grows
    // with each retry so a degenerate point cannot stall the search.
    const std::uint64_t height = 1ull << (4 + attempt);
    std::vector<CycloNum> point;
    point.reserve(n);
    for (unsigned i = 0; i < n; ++i)
      point.emplace_back(
          Rational(static_cast<unsigned long>(1 + rng.below(height))));

    std::vector<Poly> chosen;
    std::map<unsigned, std::vector<bool>> used;
    RowBasis gradients;
    bool stuck = false;
    for (unsigned d : degrees) {
      const std::vector<Poly>& space = spaces.at(d);
      auto& used_flags = used.try_emplace(d, space.size(), false).first->second;
      bool advanced = false;
      for (std::size_t k = 0; k < space.size(); ++k) {
        if (used_flags[k]) continue;
        if (gradients.try_add(gradient_at(space[k], point))) {
          used_flags[k] = true;
          chosen.push_back(space[k]);
          advanced = true;
          break;
        }
      }
      if (!advanced) {
        stuck = true;
        break;
      }
    }
    if (stuck) continue;
    // The random-point certificate is only probabilistic; the symbolic
    // Jacobian settles independence unconditionally.
    if (jacobian(chosen).is_zero()) continue;
    return InvariantSystem{std::move(chosen), degrees};
  }
  throw GenerationFailure(
      "could not select rank-increasing invariants after " +
      std::to_string(kMaxAttempts) + " random points; the degree data and "
      "invariant spaces are inconsistent");
}

Report verify_basic(const ReflGroup& group, const InvariantSystem& system) {
  Report report;
  report.subject = "basic invariants";
  const unsigned n = group.rank();

  bool shape_ok = system.polys.size() == n &&
                  system.degrees.size() == system.polys.size();
  for (const Poly& h : system.polys)
    if (h.var_count() != n) shape_ok = false;
  report.checks.push_back(
      {"shape", shape_ok,
       shape_ok ? std::to_string(n) + " polynomials in " + std::to_string(n) +
                      " variables"
                : "system does not have exactly n polynomials in n variables"});
  if (!shape_ok) return report;

  bool degrees_ok = true;
  std::string degree_detail;
  std::vector<unsigned> found;
  for (std::size_t i = 0; i < system.polys.size(); ++i) {
    const auto d = system.polys[i].homogeneous_degree();
    if (!d || *d != system.degrees[i] || *d == 0) {
      degrees_ok = false;
      degree_detail = "entry " + std::to_string(i + 1) +
                      " is not homogeneous of its recorded positive degree";
      break;
    }
    found.push_back(*d);
  }
  if (degrees_ok) {
    std::vector<unsigned> sorted = found, expected = group.degrees();
    std::sort(sorted.begin(), sorted.end());
    std::sort(expected.begin(), expected.end());
    if (sorted != expected) {
      degrees_ok = false;
      degree_detail = "degree multiset differs from the invariant degrees";
    } else if (!std::is_sorted(found.begin(), found.end())) {
      degrees_ok = false;
      degree_detail = "degrees must be listed in ascending order";
    } else {
      std::ostringstream os;
      for (unsigned d : found) os << ' ' << d;
      degree_detail = "degrees" + os.str();
    }
  }
  report.checks.push_back({"homogeneous-degrees", degrees_ok, degree_detail});

  bool invariant_ok = true;
  std::string invariant_detail = "fixed by every generator";
  for (std::size_t i = 0; i < system.polys.size() && invariant_ok; ++i) {
    for (std::size_t w : group.generator_indices()) {
      if (group.act(w, system.polys[i]) != system.polys[i]) {
        invariant_ok = false;
        invariant_detail =
            "entry " + std::to_string(i + 1) + " moves under a generator";
        break;
      }
    }
  }
  report.checks.push_back({"invariance", invariant_ok, invariant_detail});

  const Poly jac = jacobian(system.polys);
  report.checks.push_back({"jacobian-nonzero", !jac.is_zero(),
                           jac.is_zero() ? "Jacobian determinant vanishes"
                                         : "Jacobian determinant is nonzero"});

  bool ratio_ok = false;
  std::string ratio_detail = "Jacobian is not a constant multiple of delta";
  if (!jac.is_zero()) {
    const Poly& delta = group.delta();
    if (jac.leading_exponents() == delta.leading_exponents()) {
      const CycloNum c = jac.leading_coeff() * inv(delta.leading_coeff());
      if (jac == scale(c, delta)) {
        ratio_ok = true;
        ratio_detail = "J / delta = " + c.to_literal();
      }
    }
  }
  report.checks.push_back({"jacobian-delta-ratio", ratio_ok, ratio_detail});

  return report;
}

}  // namespace canonsys
