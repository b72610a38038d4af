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

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "canonsys/rational.hpp"

namespace canonsys {

unsigned euler_phi(unsigned m);

/// Process-wide bound on cyclotomic conductors. Arithmetic that would
/// promote past the cap throws ConductorCapExceeded instead of degrading.
/// Returns the previous cap.
unsigned set_conductor_cap(unsigned cap);
unsigned conductor_cap();

/// An exact element of the cyclotomic field Q(zeta_m).
///
/// The value is stored against the power basis 1, zeta, ..., zeta^(phi(m)-1)
/// of its conductor m, fully reduced modulo the m-th cyclotomic polynomial,
/// so representations are canonical per conductor and equality is decidable.
/// Binary operations first promote both operands to the lcm of their
/// conductors; nothing ever demotes implicitly (see normalized()).
///
/// Values are immutable aside from assignment and safe to share across
/// threads; every operation is a pure function of its operands.
class CycloNum {
 public:
  /// Zero, conductor 1.
  CycloNum();
  CycloNum(long value);  // NOLINT: implicit by design, mirrors field embedding
  explicit CycloNum(Rational value);

  /// zeta_m^k. Exponents are taken modulo m.
  static CycloNum root_of_unity(unsigned conductor, unsigned long exponent = 1);

  /// Parses the literal form "m; k1:r1, k2:r2, ..." meaning sum r_j zeta_m^k_j.
  static CycloNum from_literal(std::string_view text);

  unsigned conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;

  /// Same value re-expressed in Q(zeta_m) for a multiple m of the conductor.
  CycloNum promoted(unsigned conductor) const;

  /// Same value at the smallest conductor dividing the current one that can
  /// represent it. Explicit normalization pass; arithmetic never demotes.
  CycloNum normalized() const;

  std::optional<Rational> as_rational() const;
  bool is_real() const;

  std::string to_literal() const;

  /// Debug printer only; never used in any decision.
  std::complex<double> to_complex_double() const;

  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& rhs);
  CycloNum& operator-=(const CycloNum& rhs);
  CycloNum& operator*=(const CycloNum& rhs);

  friend CycloNum operator+(CycloNum lhs, const CycloNum& rhs) { return lhs += rhs; }
  friend CycloNum operator-(CycloNum lhs, const CycloNum& rhs) { return lhs -= rhs; }
  friend CycloNum operator*(CycloNum lhs, const CycloNum& rhs) { return lhs *= rhs; }

  /// Equality of field values: compares power-basis coordinates after
  /// promoting both sides to the lcm conductor.
  friend bool operator==(const CycloNum& lhs, const CycloNum& rhs);
  friend bool operator!=(const CycloNum& lhs, const CycloNum& rhs) {
    return !(lhs == rhs);
  }

 private:
  CycloNum(unsigned conductor, std::vector<Rational> coeffs);

  unsigned conductor_;
  std::vector<Rational> coeffs_;  // length euler_phi(conductor_)

  friend CycloNum conj(const CycloNum& value);
  friend CycloNum inv(const CycloNum& value);
};

/// Image under the automorphism zeta_m -> zeta_m^(m-1); agrees with complex
/// conjugation in every embedding.
CycloNum conj(const CycloNum& value);

/// Exact multiplicative inverse. Throws DivisionByZero on zero.
CycloNum inv(const CycloNum& value);

}  // namespace canonsys
