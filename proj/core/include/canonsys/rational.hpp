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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace canonsys {

using Integer = mpz_class;

/// Arbitrary-precision rational, kept canonical (reduced, positive
/// denominator) by GMP through all arithmetic.
using Rational = mpq_class;

/// Builds a canonical rational from a numerator/denominator pair.
/// Throws DivisionByZero when the denominator is zero.
Rational make_rational(const Integer& numerator, const Integer& denominator);

/// Parses "p" or "p/q" with an optional leading sign.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string rational_str(const Rational& value);

bool is_integer(const Rational& value);

Integer factorial(unsigned long n);

/// n (n-1) ... (n-k+1); equals 1 for k = 0.
Integer falling_factorial(unsigned long n, unsigned long k);

}  // namespace canonsys
