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

#include "canonsys/io.hpp"

#include <json.hpp>

#include "canonsys/errors.hpp"

namespace canonsys {

std::string Report::to_text() const {
  std::string out = subject + ":\n";
  for (const CheckResult& c : checks) {
    out += c.passed ? "  [pass] " : "  [FAIL] ";
    out += c.name;
    if (!c.detail.empty()) out += ": " + c.detail;
    out += "\n";
  }
  out += all_passed() ? "  all checks passed\n" : "  VERIFICATION FAILED\n";
  return out;
}

namespace {

// Insertion-ordered documents keep serialization deterministic and readable.
using Json = nlohmann::ordered_json;

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
}

Json poly_node(const Poly& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) {
    Json term;
    term["exp"] = e;
    term["coeff"] = c.to_literal();
    terms.push_back(std::move(term));
  }
  Json node;
  node["n"] = f.var_count();
  node["terms"] = std::move(terms);
  return node;
}

Poly poly_from_node(const Json& node) {
  if (!node.is_object() || !node.contains("n") || !node.contains("terms"))
    throw ParseError("polynomial node needs 'n' and 'terms'");
  if (!node["n"].is_number_unsigned() || node["n"].get<unsigned>() == 0)
    throw ParseError("polynomial variable count must be a positive integer");
  const unsigned n = node["n"].get<unsigned>();
  Poly f(n);
  if (!node["terms"].is_array()) throw ParseError("'terms' must be an array");
  for (const Json& term : node["terms"]) {
    if (!term.is_object() || !term.contains("exp") || !term.contains("coeff"))
      throw ParseError("polynomial term needs 'exp' and 'coeff'");
    const Json& exp = term["exp"];
    if (!exp.is_array() || exp.size() != n)
      throw ParseError("term exponent vector must have length n");
    ExpVec e;
    e.reserve(n);
    for (const Json& v : exp) {
      if (!v.is_number_unsigned())
        throw ParseError("exponents must be nonnegative integers");
      e.push_back(v.get<unsigned>());
    }
    if (!term["coeff"].is_string())
      throw ParseError("coefficients must be cyclotomic literals");
    f += Poly::monomial(n, std::move(e),
                        CycloNum::from_literal(term["coeff"].get<std::string>()));
  }
  return f;
}

std::vector<unsigned> degrees_from_node(const Json& node) {
  if (!node.is_array()) throw ParseError("'degrees' must be an array");
  std::vector<unsigned> degrees;
  degrees.reserve(node.size());
  for (const Json& v : node) {
    if (!v.is_number_unsigned())
      throw ParseError("degrees must be nonnegative integers");
    degrees.push_back(v.get<unsigned>());
  }
  return degrees;
}

std::string dump(const Json& node) { return node.dump(2) + "\n"; }

}  // namespace

std::string to_json(const Poly& f) { return dump(poly_node(f)); }

Poly poly_from_json(std::string_view text) {
  return poly_from_node(parse_document(text));
}

std::string to_json(const InvariantSystem& system) {
  Json node;
  node["degrees"] = system.degrees;
  Json polys = Json::array();
  for (const Poly& h : system.polys) polys.push_back(poly_node(h));
  node["polys"] = std::move(polys);
  return dump(node);
}

InvariantSystem invariant_system_from_json(std::string_view text) {
  const Json node = parse_document(text);
  if (!node.is_object() || !node.contains("degrees") || !node.contains("polys"))
    throw ParseError("invariant system needs 'degrees' and 'polys'");
  InvariantSystem system;
  system.degrees = degrees_from_node(node["degrees"]);
  if (!node["polys"].is_array()) throw ParseError("'polys' must be an array");
  for (const Json& p : node["polys"]) system.polys.push_back(poly_from_node(p));
  if (system.polys.size() != system.degrees.size())
    throw ParseError("'degrees' and 'polys' must have equal length");
  return system;
}

std::string to_json(const CanonicalSystem& system) {
  Json node;
  node["degrees"] = system.degrees;
  Json pairs = Json::array();
  for (const CanonicalPair& p : system.pairs) {
    Json pair;
    pair["g"] = poly_node(p.g);
    pair["c"] = p.c.to_literal();
    pairs.push_back(std::move(pair));
  }
  node["pairs"] = std::move(pairs);
  return dump(node);
}

CanonicalSystem canonical_system_from_json(std::string_view text) {
  const Json node = parse_document(text);
  if (!node.is_object() || !node.contains("degrees") || !node.contains("pairs"))
    throw ParseError("canonical system needs 'degrees' and 'pairs'");
  CanonicalSystem system;
  system.degrees = degrees_from_node(node["degrees"]);
  if (!node["pairs"].is_array()) throw ParseError("'pairs' must be an array");
  for (const Json& p : node["pairs"]) {
    if (!p.is_object() || !p.contains("g") || !p.contains("c"))
      throw ParseError("canonical pair needs 'g' and 'c'");
    if (!p["c"].is_string())
      throw ParseError("'c' must be a cyclotomic literal");
    system.pairs.push_back(
        CanonicalPair{poly_from_node(p["g"]),
                      CycloNum::from_literal(p["c"].get<std::string>())});
  }
  if (system.pairs.size() != system.degrees.size())
    throw ParseError("'degrees' and 'pairs' must have equal length");
  return system;
}

std::string to_json(const GroupSpec& spec) {
  Json node;
  node["name"] = spec.name;
  node["rank"] = spec.rank;
  Json gens = Json::array();
  for (const CMatrix& g : spec.generators) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < g.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < g.cols(); ++j)
        row.push_back(g.at(i, j).to_literal());
      rows.push_back(std::move(row));
    }
    gens.push_back(std::move(rows));
  }
  node["generators"] = std::move(gens);
  return dump(node);
}

GroupSpec group_spec_from_json(std::string_view text) {
  const Json node = parse_document(text);
  if (!node.is_object() || !node.contains("rank") || !node.contains("generators"))
    throw ParseError("group spec needs 'rank' and 'generators'");
  GroupSpec spec;
  if (node.contains("name")) {
    if (!node["name"].is_string()) throw ParseError("'name' must be a string");
    spec.name = node["name"].get<std::string>();
  }
  if (!node["rank"].is_number_unsigned() || node["rank"].get<unsigned>() == 0)
    throw ParseError("'rank' must be a positive integer");
  spec.rank = node["rank"].get<unsigned>();
  if (!node["generators"].is_array() || node["generators"].empty())
    throw ParseError("'generators' must be a nonempty array");
  for (const Json& gen : node["generators"]) {
    if (!gen.is_array() || gen.size() != spec.rank)
      throw ParseError("each generator must be a rank x rank matrix");
    CMatrix m(spec.rank, spec.rank);
    for (unsigned i = 0; i < spec.rank; ++i) {
      const Json& row = gen[i];
      if (!row.is_array() || row.size() != spec.rank)
        throw ParseError("each generator must be a rank x rank matrix");
      for (unsigned j = 0; j < spec.rank; ++j) {
        if (!row[j].is_string())
          throw ParseError("matrix entries must be cyclotomic literals");
        m.at(i, j) = CycloNum::from_literal(row[j].get<std::string>());
      }
    }
    spec.generators.push_back(std::move(m));
  }
  return spec;
}

std::string to_json(const Report& report) {
  Json node;
  node["subject"] = report.subject;
  node["passed"] = report.all_passed();
  Json checks = Json::array();
  for (const CheckResult& c : report.checks) {
    Json check;
    check["name"] = c.name;
    check["passed"] = c.passed;
    check["detail"] = c.detail;
    checks.push_back(std::move(check));
  }
  node["checks"] = std::move(checks);
  return dump(node);
}

namespace {

std::string latex_coeff(const CycloNum& c) {
  if (const auto r = c.as_rational()) {
    const Integer num = r->get_num(), den = r->get_den();
    if (den == 1) return num.get_str();
    if (num < 0) return "-\\frac{" + Integer(-num).get_str() + "}{" + den.get_str() + "}";
    return "\\frac{" + num.get_str() + "}{" + den.get_str() + "}";
  }
  std::string out = "\\left(";
  bool first = true;
  const unsigned m = c.conductor();
  for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
    const Rational& v = c.coeffs()[k];
    if (v == 0) continue;
    Rational a = v;
    if (!first)
      out += a < 0 ? " - " : " + ";
    else if (a < 0)
      out += "-";
    first = false;
    if (a < 0) a = -a;
    const bool unit = a == 1 && k > 0;
    if (!unit) {
      if (is_integer(a))
        out += a.get_num().get_str();
      else
        out += "\\tfrac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
    }
    if (k > 0) {
      out += "\\zeta_{" + std::to_string(m) + "}";
      if (k > 1) out += "^{" + std::to_string(k) + "}";
    }
  }
  out += "\\right)";
  return out;
}

}  // namespace

std::string to_latex(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    std::string coeff;
    bool negative = false;
    if (const auto r = c.as_rational()) {
      Rational v = *r;
      if (v < 0) {
        negative = true;
        v = -v;
      }
      if (is_integer(v))
        coeff = v.get_num().get_str();
      else
        coeff = "\\tfrac{" + v.get_num().get_str() + "}{" + v.get_den().get_str() + "}";
    } else {
      coeff = latex_coeff(c);
    }
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      mono += "x_{" + std::to_string(i + 1) + "}";
      if (e[i] > 1) mono += "^{" + std::to_string(e[i]) + "}";
    }
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (mono.empty())
      out += coeff;
    else if (coeff == "1")
      out += mono;
    else
      out += coeff + " " + mono;
  }
  return out;
}

std::string to_latex(const CanonicalSystem& system) {
  std::string out = "\\begin{align*}\n";
  for (std::size_t i = 0; i < system.pairs.size(); ++i) {
    const CanonicalPair& p = system.pairs[i];
    out += "f_{" + std::to_string(i + 1) + "} &= ";
    const auto c = p.c.as_rational();
    if (c && *c == 1)
      out += to_latex(p.g);
    else
      out += "\\frac{" + to_latex(p.g) + "}{\\sqrt{" + latex_coeff(p.c) + "}}";
    out += i + 1 < system.pairs.size() ? " \\\\\n" : "\n";
  }
  out += "\\end{align*}\n";
  return out;
}

}  // namespace canonsys
