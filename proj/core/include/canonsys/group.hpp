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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "canonsys/linalg.hpp"
#include "canonsys/poly.hpp"

namespace canonsys {

/// Square matrix verified unitary (m * conj_transpose(m) = I) at construction.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(CMatrix m);
  const CMatrix& mat() const { return mat_; }

 private:
  CMatrix mat_;
};

/// A reflecting hyperplane: the kernel of `linear_form`, fixed pointwise by
/// `fixing_reflections`, whose pointwise stabilizer is cyclic of order
/// `order` (so it contributes order-1 reflections).
struct Hyperplane {
  Poly linear_form;  // first nonzero coefficient (lowest variable) equals 1
  unsigned order = 2;
  std::vector<std::size_t> fixing_reflections;
};

/// Breadth-first product closure of unitary generators: identity first, then
/// discovery order, which is deterministic. Throws ClosureCapExceeded when
/// more than `cap` elements appear.
std::vector<CMatrix> closure(std::span<const CMatrix> generators,
                             std::size_t cap = 20000);

struct AnalyzeOptions {
  std::size_t closure_cap = 20000;
  /// When set, analysis rejects groups whose character norm is not 1.
  /// Off by default: reducible reflection groups still satisfy every
  /// identity this library relies on, and some catalog families
  /// (G(2,2,2), for one) are reducible.
  bool reject_reducible = false;
  std::string name;
};

/// A fully analyzed finite unitary reflection group: element list, reflection
/// and hyperplane data, skew invariant, invariant degrees. Immutable after
/// analyze(); safe to share between threads.
class ReflGroup {
 public:
  static ReflGroup analyze(std::span<const CMatrix> generators,
                           AnalyzeOptions options = {});

  unsigned rank() const { return rank_; }
  std::size_t order() const { return elements_.size(); }
  const std::string& name() const { return name_; }

  const std::vector<UnitaryMatrix>& elements() const { return elements_; }
  const std::vector<std::size_t>& generator_indices() const {
    return generator_indices_;
  }
  const std::vector<std::size_t>& reflections() const { return reflections_; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }

  /// Product of L_H^(order_H - 1) over all hyperplanes; skew-invariant, of
  /// degree equal to the number of reflections. Canonical only up to the
  /// documented normalization of the linear forms.
  const Poly& delta() const { return delta_; }

  /// Invariant degrees m_1 <= ... <= m_n; their product is the group order.
  const std::vector<unsigned>& degrees() const { return degrees_; }

  /// (1/|W|) sum over elements of |trace|^2: the sum of squared multiplicities
  /// of the irreducible constituents, so 1 exactly for irreducible groups.
  const Rational& character_norm() const { return character_norm_; }
  bool is_irreducible() const;

  /// Contravariant action of element `w` on polynomials; the substitution
  /// uses the conjugate transpose, which is the inverse by unitarity.
  Poly act(std::size_t w, const Poly& f) const;

  CycloNum determinant(std::size_t w) const;

  /// Group-averaging projection onto invariants.
  Poly reynolds(const Poly& f) const;

  /// Coefficients a_0..a_max_degree of the invariant-ring Hilbert series
  /// (1/|W|) sum_w 1/det(I - t w), via exact power-series expansion.
  /// Every coefficient must come out a nonnegative integer.
  std::vector<Integer> molien_coeffs(unsigned max_degree) const;

 private:
  ReflGroup() = default;

  std::vector<unsigned> extract_degrees() const;

  unsigned rank_ = 0;
  unsigned ambient_conductor_ = 1;
  std::string name_;
  std::vector<UnitaryMatrix> elements_;
  std::vector<std::size_t> generator_indices_;
  std::vector<std::size_t> reflections_;
  std::vector<Hyperplane> hyperplanes_;
  Poly delta_{1};
  std::vector<unsigned> degrees_;
  Rational character_norm_;
};

}  // namespace canonsys
