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

#include "canonsys/catalog.hpp"

#include <mutex>

#include "canonsys/errors.hpp"
#include "canonsys/group.hpp"

namespace canonsys {

namespace {

unsigned long parse_positive(std::string_view text, const char* what) {
  try {
    if (text.empty()) throw ParseError("empty");
    for (char c : text)
      if (c < '0' || c > '9') throw ParseError("not a digit string");
    const unsigned long v = std::stoul(std::string(text));
    if (v == 0) throw ParseError("not positive");
    return v;
  } catch (...) {
    throw ParseError(std::string("bad ") + what + " in catalog reference: '" +
                     std::string(text) + "'");
  }
}

CMatrix transposition(unsigned n, unsigned i) {
  CMatrix m = CMatrix::identity(n);
  m.at(i, i) = CycloNum(0);
  m.at(i + 1, i + 1) = CycloNum(0);
  m.at(i, i + 1) = CycloNum(1);
  m.at(i + 1, i) = CycloNum(1);
  return m;
}

// The imprimitive family G(m,p,n), p | m: monomial matrices whose nonzero
// entries are m-th roots of unity multiplying to an (m/p)-th root.
std::vector<CMatrix> imprimitive_generators(unsigned m, unsigned p, unsigned n) {
  if (p == 0 || m % p != 0)
    throw ParseError("G:m,p,n requires p to divide m");
  std::vector<CMatrix> gens;
  if (n == 1) {
    CMatrix g(1, 1);
    g.at(0, 0) = CycloNum::root_of_unity(m, p % m == 0 ? 0 : p);
    gens.push_back(std::move(g));
    return gens;
  }
  for (unsigned i = 0; i + 1 < n; ++i) gens.push_back(transposition(n, i));
  if (p < m) {
    CMatrix d = CMatrix::identity(n);
    d.at(0, 0) = CycloNum::root_of_unity(m, p);
    gens.push_back(std::move(d));
  }
  if (p > 1 && m > 1) {
    CMatrix e = CMatrix::identity(n);
    e.at(0, 0) = CycloNum::root_of_unity(m, 1);
    e.at(1, 1) = CycloNum::root_of_unity(m, m - 1);
    gens.push_back(std::move(e));
  }
  return gens;
}

// Rank-two group of order 24 generated by two order-3 reflections, realized
// over Q(zeta_12). Built from the binary tetrahedral subgroup of SU(2)
// twisted by the order-3 character, which turns its order-3 elements into
// reflections. Data is self-checked once per process.
std::vector<CMatrix> g4_generators() {
  const CycloNum z4 = CycloNum::root_of_unity(12, 4);   // primitive cube root
  const CycloNum z7 = CycloNum::root_of_unity(12, 7);   // cube root times i
  const CycloNum half(make_rational(1, 2));
  const CycloNum a = (z7 - z4) * half;   // (zeta^7 - zeta^4) / 2
  const CycloNum b = (z4 + z7) * half;   // (zeta^4 + zeta^7) / 2
  CMatrix r1(2, 2), r2(2, 2);
  r1.at(0, 0) = a;
  r1.at(0, 1) = b;
  r1.at(1, 0) = a;
  r1.at(1, 1) = -b;
  r2.at(0, 0) = a;
  r2.at(0, 1) = -b;
  r2.at(1, 0) = -a;
  r2.at(1, 1) = -b;
  return {r1, r2};
}

void g4_self_check() {
  static std::once_flag done;
  std::call_once(done, [] {
    const std::vector<CMatrix> gens = g4_generators();
    AnalyzeOptions options;
    options.name = "G4";
    const ReflGroup g = ReflGroup::analyze(gens, options);
    const bool ok = g.order() == 24 && g.reflections().size() == 8 &&
                    g.hyperplanes().size() == 4 &&
                    g.degrees() == std::vector<unsigned>{4, 6};
    if (!ok)
      throw InternalInconsistency(
          "shipped G4 generator data failed its self check");
    for (const Hyperplane& h : g.hyperplanes())
      if (h.order != 3)
        throw InternalInconsistency(
            "shipped G4 generator data failed its self check");
  });
}

}  // namespace

bool is_catalog_name(std::string_view ref) {
  return ref == "G4" || ref.starts_with("cyclic:") ||
         ref.starts_with("dihedral:") || ref.starts_with("B:") ||
         ref.starts_with("G:");
}

GroupSpec expand_catalog(std::string_view ref) {
  GroupSpec spec;
  spec.name = std::string(ref);
  if (ref == "G4") {
    g4_self_check();
    spec.rank = 2;
    spec.generators = g4_generators();
    return spec;
  }
  if (ref.starts_with("cyclic:")) {
    const unsigned m =
        static_cast<unsigned>(parse_positive(ref.substr(7), "order"));
    spec.rank = 1;
    CMatrix g(1, 1);
    g.at(0, 0) = CycloNum::root_of_unity(m);
    spec.generators.push_back(std::move(g));
    return spec;
  }
  if (ref.starts_with("dihedral:")) {
    const unsigned m =
        static_cast<unsigned>(parse_positive(ref.substr(9), "order"));
    if (m < 2) throw ParseError("dihedral:m requires m >= 2");
    spec.rank = 2;
    spec.generators = imprimitive_generators(m, m, 2);
    return spec;
  }
  if (ref.starts_with("B:")) {
    const unsigned n =
        static_cast<unsigned>(parse_positive(ref.substr(2), "rank"));
    spec.rank = n;
    spec.generators = imprimitive_generators(2, 1, n);
    return spec;
  }
  if (ref.starts_with("G:")) {
    const std::string_view body = ref.substr(2);
    const auto c1 = body.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : body.find(',', c1 + 1);
    if (c1 == std::string_view::npos || c2 == std::string_view::npos)
      throw ParseError("G:m,p,n needs three comma-separated parameters");
    const unsigned m =
        static_cast<unsigned>(parse_positive(body.substr(0, c1), "m"));
    const unsigned p = static_cast<unsigned>(
        parse_positive(body.substr(c1 + 1, c2 - c1 - 1), "p"));
    const unsigned n =
        static_cast<unsigned>(parse_positive(body.substr(c2 + 1), "n"));
    spec.rank = n;
    spec.generators = imprimitive_generators(m, p, n);
    return spec;
  }
  throw ParseError("unknown catalog reference: '" + std::string(ref) + "'");
}

}  // namespace canonsys
