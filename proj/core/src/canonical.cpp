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

#include "canonsys/canonical.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "canonsys/errors.hpp"
#include "canonsys/linalg.hpp"

namespace canonsys {

Poly phi(const ReflGroup& group, const Poly& f) {
  return star_apply(star_apply(f, group.delta()), group.delta());
}

bool w_equivariance_check(const ReflGroup& group, std::size_t w, const Poly& f) {
  return group.act(w, phi(group, f)) == phi(group, group.act(w, f));
}

std::vector<Poly> candidates(const ReflGroup& group,
                             const InvariantSystem& system) {
  const unsigned n = group.rank();
  std::vector<Poly> out;
  out.reserve(system.polys.size());
  for (std::size_t i = 0; i < system.polys.size(); ++i) {
    const Poly& h = system.polys[i];
    Poly cand(n);
    for (unsigned j = 0; j < n; ++j)
      cand += Poly::variable(n, j) * phi(group, partial(h, j));
    if (cand.is_zero())
      throw DegenerateCandidate("candidate " + std::to_string(i + 1) +
                                " vanished; the input system does not satisfy "
                                "the preconditions");
    const auto d = cand.homogeneous_degree();
    if (!d || *d != system.degrees[i])
      throw InternalInconsistency("candidate degree drifted from its source");
    out.push_back(std::move(cand));
  }
  if (jacobian(out).is_zero())
    throw DegenerateCandidate(
        "candidate set is algebraically dependent; the input system does not "
        "satisfy the preconditions");
  return out;
}

CanonicalSystem orthogonalize(const ReflGroup& group,
                              std::span<const Poly> cands) {
  CanonicalSystem cs;
  cs.pairs.reserve(cands.size());
  for (const Poly& c : cands) {
    if (c.var_count() != group.rank())
      throw DimensionMismatch("candidate variable count differs from the rank");
    const auto d = c.homogeneous_degree();
    if (!d || *d == 0)
      throw ZeroVectorInBlock("candidates must be nonzero and homogeneous");
    cs.degrees.push_back(*d);
  }
  if (!std::is_sorted(cs.degrees.begin(), cs.degrees.end()))
    throw std::invalid_argument("candidates must arrive in ascending degree");

  // Gram-Schmidt runs inside each equal-degree block, in input order.
  std::size_t block_start = 0;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (i > 0 && cs.degrees[i] != cs.degrees[i - 1]) block_start = i;
    Poly v = cands[i];
    for (std::size_t j = block_start; j < i; ++j) {
      const CycloNum coeff = inner(cs.pairs[j].g, v) * inv(cs.pairs[j].c);
      v -= scale(coeff, cs.pairs[j].g);
    }
    if (v.is_zero())
      throw ZeroVectorInBlock("equal-degree block contains dependent candidates");
    Poly g = v.monic();
    CycloNum c = inner(g, g);
    cs.pairs.push_back(CanonicalPair{std::move(g), std::move(c)});
  }

  // Distinct degrees are orthogonal by theory; verified, never adjusted.
  for (std::size_t i = 0; i < cs.pairs.size(); ++i)
    for (std::size_t j = 0; j < cs.pairs.size(); ++j) {
      if (i == j || cs.degrees[i] == cs.degrees[j]) continue;
      if (!star_apply(cs.pairs[i].g, cs.pairs[j].g).is_zero())
        throw InternalInconsistency(
            "cross-degree star product did not vanish; arithmetic bug");
    }
  return cs;
}

Report verify_canonical(const ReflGroup& group, const CanonicalSystem& system) {
  Report report;
  report.subject = "canonical system";
  const unsigned n = group.rank();

  bool shape_ok = system.pairs.size() == n &&
                  system.degrees.size() == system.pairs.size();
  for (const CanonicalPair& p : system.pairs)
    if (p.g.var_count() != n) shape_ok = false;
  report.checks.push_back(
      {"shape", shape_ok,
       shape_ok ? std::to_string(n) + " pairs in " + std::to_string(n) +
                      " variables"
                : "system does not have exactly n pairs in n variables"});
  if (!shape_ok) return report;

  bool degrees_ok = std::is_sorted(system.degrees.begin(), system.degrees.end());
  {
    std::vector<unsigned> sorted = system.degrees, expected = group.degrees();
    std::sort(sorted.begin(), sorted.end());
    std::sort(expected.begin(), expected.end());
    if (sorted != expected) degrees_ok = false;
    for (std::size_t i = 0; i < system.pairs.size(); ++i) {
      const auto d = system.pairs[i].g.homogeneous_degree();
      if (!d || *d != system.degrees[i]) degrees_ok = false;
    }
  }
  report.checks.push_back(
      {"homogeneous-degrees", degrees_ok,
       degrees_ok ? "degrees match the invariant degrees"
                  : "degrees are not the invariant degrees of the group"});

  bool normalized_ok = true;
  for (const CanonicalPair& p : system.pairs)
    if (p.g.is_zero() || p.g.leading_coeff() != CycloNum(1)) normalized_ok = false;
  report.checks.push_back(
      {"normalization", normalized_ok,
       normalized_ok ? "leading coefficients equal 1"
                     : "some leading coefficient differs from 1"});

  bool pairwise_ok = true;
  std::string pairwise_detail = "all off-diagonal star products vanish";
  for (std::size_t i = 0; i < system.pairs.size() && pairwise_ok; ++i)
    for (std::size_t j = 0; j < system.pairs.size(); ++j) {
      if (i == j) continue;
      if (!star_apply(system.pairs[i].g, system.pairs[j].g).is_zero()) {
        pairwise_ok = false;
        pairwise_detail = "g_" + std::to_string(i + 1) + " star g_" +
                          std::to_string(j + 1) + " = " +
                          star_apply(system.pairs[i].g, system.pairs[j].g)
                              .to_string();
        break;
      }
    }
  report.checks.push_back({"pairwise-star-zero", pairwise_ok, pairwise_detail});

  bool diagonal_ok = true;
  std::string diagonal_detail = "g_i star g_i = c_i, totally real and nonzero";
  for (std::size_t i = 0; i < system.pairs.size(); ++i) {
    const CanonicalPair& p = system.pairs[i];
    const Poly norm_poly = star_apply(p.g, p.g);
    const Poly expected = Poly::constant(n, p.c);
    if (norm_poly != expected || p.c.is_zero() || !p.c.is_real()) {
      diagonal_ok = false;
      diagonal_detail = "pair " + std::to_string(i + 1) +
                        " has g star g = " + norm_poly.to_string() +
                        " but records c = " + p.c.to_literal();
      break;
    }
  }
  report.checks.push_back({"diagonal-norm", diagonal_ok, diagonal_detail});

  bool invariant_ok = true;
  std::string invariant_detail = "fixed by every generator";
  for (std::size_t i = 0; i < system.pairs.size() && invariant_ok; ++i) {
    for (std::size_t w : group.generator_indices()) {
      if (group.act(w, system.pairs[i].g) != system.pairs[i].g) {
        invariant_ok = false;
        invariant_detail =
            "entry " + std::to_string(i + 1) + " moves under a generator";
        break;
      }
    }
  }
  report.checks.push_back({"invariance", invariant_ok, invariant_detail});

  std::vector<Poly> gs;
  gs.reserve(system.pairs.size());
  for (const CanonicalPair& p : system.pairs) gs.push_back(p.g);
  const Poly jac = jacobian(gs);
  bool jac_ok = false;
  std::string jac_detail = "Jacobian is not a nonzero constant multiple of delta";
  if (!jac.is_zero() &&
      jac.leading_exponents() == group.delta().leading_exponents()) {
    const CycloNum c = jac.leading_coeff() * inv(group.delta().leading_coeff());
    if (jac == scale(c, group.delta())) {
      jac_ok = true;
      jac_detail = "J / delta = " + c.to_literal();
    }
  }
  report.checks.push_back({"jacobian-delta", jac_ok, jac_detail});

  // Span characterization: every invariant of lower positive degree
  // annihilates g_i under the star action.
  bool annihilation_ok = true;
  std::string annihilation_detail =
      "every lower-degree invariant annihilates every g_i";
  std::map<unsigned, std::vector<Poly>> spaces;
  for (std::size_t i = 0; i < system.pairs.size() && annihilation_ok; ++i) {
    for (unsigned level = 1; level < system.degrees[i]; ++level) {
      auto it = spaces.find(level);
      if (it == spaces.end())
        it = spaces.emplace(level, invariant_space(group, level)).first;
      for (const Poly& q : it->second) {
        if (!star_apply(q, system.pairs[i].g).is_zero()) {
          annihilation_ok = false;
          annihilation_detail = "an invariant of degree " +
                                std::to_string(level) + " does not annihilate g_" +
                                std::to_string(i + 1);
          break;
        }
      }
      if (!annihilation_ok) break;
    }
  }
  report.checks.push_back(
      {"lower-degree-annihilation", annihilation_ok, annihilation_detail});

  return report;
}

std::pair<Poly, bool> steinberg_membership(const ReflGroup& group, const Poly& f) {
  Poly image = star_apply(f, group.delta());
  const bool in_ideal = image.is_zero();
  return {std::move(image), in_ideal};
}

std::vector<HarmonicWitness> harmonic_dims(const ReflGroup& group,
                                           unsigned max_degree) {
  const unsigned delta_degree =
      static_cast<unsigned>(std::max(group.delta().degree(), 0));
  if (max_degree > delta_degree)
    throw std::invalid_argument("harmonic ranks are only meaningful up to deg delta");
  const std::vector<Integer> expected =
      coinvariant_series(group.degrees(), max_degree);
  const unsigned n = group.rank();

  std::vector<HarmonicWitness> out;
  out.reserve(max_degree + 1);
  for (unsigned d = 0; d <= max_degree; ++d) {
    const std::vector<ExpVec> monos = monomials_of_degree(n, d);
    std::map<ExpVec, std::size_t, TermOrder> column;
    for (std::size_t j = 0; j < monos.size(); ++j) column.emplace(monos[j], j);
    CMatrix m(monos.size(), monos.size());
    for (std::size_t k = 0; k < monos.size(); ++k) {
      const Poly image = phi(group, Poly::monomial(n, monos[k], CycloNum(1)));
      for (const auto& [e, c] : image.terms()) m.at(column.at(e), k) = c;
    }
    HarmonicWitness witness;
    witness.degree = d;
    witness.rank = static_cast<unsigned>(rank(std::move(m)));
    witness.expected = static_cast<unsigned>(expected[d].get_ui());
    out.push_back(witness);
  }
  return out;
}

bool euler_check(const Poly& h) {
  const auto d = h.homogeneous_degree();
  const unsigned n = h.var_count();
  Poly sum(n);
  for (unsigned j = 0; j < n; ++j)
    sum += Poly::variable(n, j) * partial(h, j);
  if (!d) return h.is_zero() ? sum.is_zero() : false;
  return sum == scale(CycloNum(static_cast<long>(*d)), h);
}

std::vector<Integer> coinvariant_series(std::span<const unsigned> degrees,
                                        unsigned max_degree) {
  std::vector<Integer> series(max_degree + 1, Integer(0));
  series[0] = 1;
  for (unsigned m : degrees) {
    std::vector<Integer> next(max_degree + 1, Integer(0));
    for (unsigned k = 0; k <= max_degree; ++k) {
      if (series[k] == 0) continue;
      for (unsigned j = 0; j < m && k + j <= max_degree; ++j)
        next[k + j] += series[k];
    }
    series = std::move(next);
  }
  return series;
}

CanonicalSystem compute_canonical_system(const ReflGroup& group,
                                         std::uint64_t seed) {
  return compute_canonical_system(group, basic_invariants(group, seed));
}

CanonicalSystem compute_canonical_system(const ReflGroup& group,
                                         const InvariantSystem& system) {
  const std::vector<Poly> cands = candidates(group, system);
  return orthogonalize(group, cands);
}

}  // namespace canonsys
