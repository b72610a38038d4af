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

#include "canonsys/cyclotomic.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "canonsys/errors.hpp"

namespace canonsys {

namespace {

std::atomic<unsigned> g_conductor_cap{120};

// Dense univariate polynomials over Q, little-endian, trailing zeros trimmed.
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// a = q*b + r with deg r < deg b; b must be nonzero.
void qp_divmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
  q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
  const Rational lead = b.back();
  while (a.size() >= b.size()) {
    Rational c = a.back() / lead;
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
    if (a.empty()) break;
  }
  trim(q);
  r = std::move(a);
}

// Extended Euclid: returns (g, u, v) with u*a + v*b = g.
void qp_egcd(QPoly a, QPoly b, QPoly& g, QPoly& u, QPoly& v) {
  QPoly u0{Rational(1)}, v0, u1, v1{Rational(1)};
  while (!b.empty()) {
    QPoly q, r;
    qp_divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
    QPoly qu = qp_mul(q, u1), qv = qp_mul(q, v1);
    QPoly nu = u0, nv = v0;
    nu.resize(std::max(nu.size(), qu.size()), Rational(0));
    for (std::size_t i = 0; i < qu.size(); ++i) nu[i] -= qu[i];
    trim(nu);
    nv.resize(std::max(nv.size(), qv.size()), Rational(0));
    for (std::size_t i = 0; i < qv.size(); ++i) nv[i] -= qv[i];
    trim(nv);
    u0 = std::move(u1);
    v0 = std::move(v1);
    u1 = std::move(nu);
    v1 = std::move(nv);
  }
  g = std::move(a);
  u = std::move(u0);
  v = std::move(v0);
}

std::vector<unsigned> divisors_of(unsigned m) {
  std::vector<unsigned> ds;
  for (unsigned d = 1; d <= m; ++d)
    if (m % d == 0) ds.push_back(d);
  return ds;
}

// stoul tolerates signs and whitespace; literals must not.
unsigned long parse_unsigned(std::string_view text) {
  if (text.empty()) throw ParseError("empty number");
  for (char c : text)
    if (c < '0' || c > '9') throw ParseError("not a nonnegative integer");
  return std::stoul(std::string(text));
}

// Cyclotomic polynomials, memoized. Phi_m = (t^m - 1) / prod_{d|m, d<m} Phi_d.
std::map<unsigned, QPoly> g_cyclo_cache;
std::mutex g_cyclo_mutex;

const QPoly& cyclo_poly_unlocked(unsigned m) {
  auto it = g_cyclo_cache.find(m);
  if (it != g_cyclo_cache.end()) return it->second;
  QPoly num(m + 1, Rational(0));
  num[0] = -1;
  num[m] = 1;
  for (unsigned d : divisors_of(m)) {
    if (d == m) continue;
    const QPoly& phi_d = cyclo_poly_unlocked(d);
    QPoly q, r;
    qp_divmod(num, phi_d, q, r);
    if (!r.empty())
      throw InternalInconsistency("cyclotomic polynomial division left a remainder");
    num = std::move(q);
  }
  return g_cyclo_cache.emplace(m, std::move(num)).first->second;
}

// Safe to hand out references: the cache only ever grows and std::map never
// invalidates references on insert.
const QPoly& cyclo_poly(unsigned m) {
  std::lock_guard<std::mutex> lock(g_cyclo_mutex);
  return cyclo_poly_unlocked(m);
}

// Reduces an arbitrary-degree coefficient vector modulo Phi_m and pads the
// result to exactly phi(m) entries.
std::vector<Rational> reduce_mod_cyclo(QPoly raw, unsigned m) {
  const QPoly& phi = cyclo_poly(m);
  trim(raw);
  if (raw.size() >= phi.size()) {
    QPoly q, r;
    qp_divmod(std::move(raw), phi, q, r);
    raw = std::move(r);
  }
  raw.resize(phi.size() - 1, Rational(0));
  return raw;
}

unsigned lcm_checked(unsigned a, unsigned b) {
  const unsigned long long l =
      std::lcm<unsigned long long, unsigned long long>(a, b);
  if (l > g_conductor_cap.load())
    throw ConductorCapExceeded("conductor " + std::to_string(l) +
                               " exceeds the cap of " +
                               std::to_string(g_conductor_cap.load()));
  return static_cast<unsigned>(l);
}

// Solves A x = b over Q by Gaussian elimination; A given column-major.
std::optional<std::vector<Rational>> solve_rational(
    const std::vector<std::vector<Rational>>& columns, std::vector<Rational> b) {
  const std::size_t n_cols = columns.size();
  const std::size_t n_rows = b.size();
  std::vector<std::vector<Rational>> aug(n_rows,
                                         std::vector<Rational>(n_cols + 1));
  for (std::size_t j = 0; j < n_cols; ++j)
    for (std::size_t i = 0; i < n_rows; ++i) aug[i][j] = columns[j][i];
  for (std::size_t i = 0; i < n_rows; ++i) aug[i][n_cols] = b[i];

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n_cols && row < n_rows; ++col) {
    std::size_t pr = row;
    while (pr < n_rows && aug[pr][col] == 0) ++pr;
    if (pr == n_rows) continue;
    std::swap(aug[pr], aug[row]);
    const Rational inv_p = 1 / aug[row][col];
    for (std::size_t j = col; j <= n_cols; ++j) aug[row][j] *= inv_p;
    for (std::size_t i = 0; i < n_rows; ++i) {
      if (i == row || aug[i][col] == 0) continue;
      const Rational f = aug[i][col];
      for (std::size_t j = col; j <= n_cols; ++j) aug[i][j] -= f * aug[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < n_rows; ++i)
    if (aug[i][n_cols] != 0) return std::nullopt;
  std::vector<Rational> x(n_cols, Rational(0));
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = aug[r][n_cols];
  return x;
}

}  // namespace

unsigned euler_phi(unsigned m) {
  unsigned result = m, n = m;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

unsigned set_conductor_cap(unsigned cap) {
  if (cap == 0) throw std::invalid_argument("conductor cap must be positive");
  return g_conductor_cap.exchange(cap);
}

unsigned conductor_cap() { return g_conductor_cap.load(); }

CycloNum::CycloNum() : conductor_(1), coeffs_{Rational(0)} {}

CycloNum::CycloNum(long value) : conductor_(1), coeffs_{Rational(value)} {}

CycloNum::CycloNum(Rational value) : conductor_(1), coeffs_{std::move(value)} {}

CycloNum::CycloNum(unsigned conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {}

CycloNum CycloNum::root_of_unity(unsigned conductor, unsigned long exponent) {
  if (conductor == 0) throw std::invalid_argument("conductor must be positive");
  if (conductor > conductor_cap())
    throw ConductorCapExceeded("conductor " + std::to_string(conductor) +
                               " exceeds the cap");
  QPoly raw(conductor, Rational(0));
  raw[exponent % conductor] = 1;
  return CycloNum(conductor, reduce_mod_cyclo(std::move(raw), conductor));
}

bool CycloNum::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

CycloNum CycloNum::promoted(unsigned conductor) const {
  if (conductor == conductor_) return *this;
  if (conductor == 0 || conductor % conductor_ != 0)
    throw std::invalid_argument("promotion target must be a multiple of the conductor");
  if (conductor > conductor_cap())
    throw ConductorCapExceeded("conductor " + std::to_string(conductor) +
                               " exceeds the cap");
  const unsigned stride = conductor / conductor_;
  QPoly raw(static_cast<std::size_t>(conductor_ - 1) * stride + 1, Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) raw[k * stride] = coeffs_[k];
  return CycloNum(conductor, reduce_mod_cyclo(std::move(raw), conductor));
}

CycloNum CycloNum::normalized() const {
  for (unsigned d : divisors_of(conductor_)) {
    if (d == conductor_) break;
    // Columns: the power basis of Q(zeta_d) expressed at this conductor.
    std::vector<std::vector<Rational>> cols;
    const unsigned cols_n = euler_phi(d);
    cols.reserve(cols_n);
    for (unsigned j = 0; j < cols_n; ++j) {
      QPoly raw(d, Rational(0));
      raw[j] = 1;
      CycloNum basis(d, reduce_mod_cyclo(std::move(raw), d));
      cols.push_back(basis.promoted(conductor_).coeffs_);
    }
    if (auto x = solve_rational(cols, coeffs_)) return CycloNum(d, std::move(*x));
  }
  return *this;
}

std::optional<Rational> CycloNum::as_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return std::nullopt;
  return coeffs_[0];
}

bool CycloNum::is_real() const { return *this == conj(*this); }

CycloNum CycloNum::operator-() const {
  CycloNum r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycloNum& CycloNum::operator+=(const CycloNum& rhs) {
  if (conductor_ == rhs.conductor_) {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    return *this;
  }
  const unsigned m = lcm_checked(conductor_, rhs.conductor_);
  *this = promoted(m);
  const CycloNum other = rhs.promoted(m);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& rhs) { return *this += -rhs; }

CycloNum& CycloNum::operator*=(const CycloNum& rhs) {
  const unsigned m = lcm_checked(conductor_, rhs.conductor_);
  // Scalar operands (phi = 1, i.e. conductor 1 or 2) avoid the convolution.
  if (rhs.coeffs_.size() == 1) {
    *this = promoted(m);
    for (auto& c : coeffs_) c *= rhs.coeffs_[0];
    return *this;
  }
  if (coeffs_.size() == 1) {
    const Rational s = coeffs_[0];
    *this = rhs.promoted(m);
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  const CycloNum a = promoted(m);
  const CycloNum b = rhs.promoted(m);
  QPoly prod = qp_mul(a.coeffs_, b.coeffs_);
  *this = CycloNum(m, reduce_mod_cyclo(std::move(prod), m));
  return *this;
}

bool operator==(const CycloNum& lhs, const CycloNum& rhs) {
  if (lhs.conductor_ == rhs.conductor_) return lhs.coeffs_ == rhs.coeffs_;
  if (lhs.coeffs_.size() == 1 && rhs.coeffs_.size() == 1)
    return lhs.coeffs_[0] == rhs.coeffs_[0];
  const unsigned m = lcm_checked(lhs.conductor_, rhs.conductor_);
  return lhs.promoted(m).coeffs_ == rhs.promoted(m).coeffs_;
}

CycloNum conj(const CycloNum& value) {
  const unsigned m = value.conductor_;
  QPoly raw(m, Rational(0));
  for (std::size_t k = 0; k < value.coeffs_.size(); ++k) {
    if (value.coeffs_[k] == 0) continue;
    raw[(k * static_cast<std::size_t>(m - 1)) % m] += value.coeffs_[k];
  }
  return CycloNum(m, reduce_mod_cyclo(std::move(raw), m));
}

CycloNum inv(const CycloNum& value) {
  if (value.is_zero()) throw DivisionByZero("inverse of zero");
  const unsigned m = value.conductor_;
  QPoly a = value.coeffs_;
  trim(a);
  QPoly g, u, v;
  qp_egcd(a, cyclo_poly(m), g, u, v);
  if (g.size() != 1 || g[0] == 0)
    throw InternalInconsistency("nonzero element not coprime to the cyclotomic polynomial");
  const Rational scale = 1 / g[0];
  for (auto& c : u) c *= scale;
  return CycloNum(m, reduce_mod_cyclo(std::move(u), m));
}

std::string CycloNum::to_literal() const {
  std::ostringstream out;
  out << conductor_ << ';';
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    out << (first ? " " : ", ") << k << ':' << coeffs_[k].get_str();
    first = false;
  }
  return out.str();
}

CycloNum CycloNum::from_literal(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos)
    throw ParseError("cyclotomic literal lacks ';': '" + std::string(text) + "'");
  const auto strip = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
      s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.remove_suffix(1);
    return s;
  };
  const std::string_view head = strip(text.substr(0, semi));
  unsigned long m = 0;
  try {
    m = parse_unsigned(head);
  } catch (...) {
    throw ParseError("bad conductor in cyclotomic literal: '" +
                     std::string(text) + "'");
  }
  if (m == 0) throw ParseError("conductor must be positive");
  if (m > conductor_cap())
    throw ConductorCapExceeded("conductor " + std::to_string(m) +
                               " exceeds the cap");
  QPoly raw(m, Rational(0));
  std::string_view rest = strip(text.substr(semi + 1));
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view term = strip(comma == std::string_view::npos
                                      ? rest
                                      : rest.substr(0, comma));
    rest = comma == std::string_view::npos ? std::string_view{}
                                           : strip(rest.substr(comma + 1));
    const auto colon = term.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("cyclotomic term lacks ':': '" + std::string(term) + "'");
    unsigned long k = 0;
    try {
      k = parse_unsigned(strip(term.substr(0, colon)));
    } catch (...) {
      throw ParseError("bad exponent in cyclotomic literal");
    }
    raw[k % m] += parse_rational(strip(term.substr(colon + 1)));
  }
  return CycloNum(static_cast<unsigned>(m),
                  reduce_mod_cyclo(std::move(raw), static_cast<unsigned>(m)));
}

std::complex<double> CycloNum::to_complex_double() const {
  std::complex<double> z(0.0, 0.0);
  const double tau = 2.0 * 3.14159265358979323846;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const double c = coeffs_[k].get_d();
    const double ang = tau * static_cast<double>(k) / conductor_;
    z += std::complex<double>(c * std::cos(ang), c * std::sin(ang));
  }
  return z;
}

}  // namespace canonsys
