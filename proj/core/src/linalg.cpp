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

#include "canonsys/linalg.hpp"

#include <algorithm>

#include "canonsys/errors.hpp"

namespace canonsys {

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = CycloNum(1);
  return m;
}

CMatrix CMatrix::conj_transpose() const {
  CMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = conj(at(i, j));
  return r;
}

CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_)
    throw DimensionMismatch("matrix product shape mismatch");
  CMatrix r(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i)
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const CycloNum& a = lhs.at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        if (rhs.at(k, j).is_zero()) continue;
        r.at(i, j) += a * rhs.at(k, j);
      }
    }
  return r;
}

CMatrix operator-(const CMatrix& lhs, const CMatrix& rhs) {
  if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_)
    throw DimensionMismatch("matrix difference shape mismatch");
  CMatrix r(lhs.rows_, lhs.cols_);
  for (std::size_t i = 0; i < lhs.data_.size(); ++i)
    r.data_[i] = lhs.data_[i] - rhs.data_[i];
  return r;
}

bool operator==(const CMatrix& lhs, const CMatrix& rhs) {
  if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) return false;
  for (std::size_t i = 0; i < lhs.data_.size(); ++i)
    if (lhs.data_[i] != rhs.data_[i]) return false;
  return true;
}

CycloNum trace(const CMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("trace of non-square matrix");
  CycloNum t;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m.at(i, i);
  return t;
}

CycloNum det(const CMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
  CMatrix a = m;
  const std::size_t n = a.rows();
  bool negate = false;
  CycloNum result(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return CycloNum(0);
    if (pivot != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
      negate = !negate;
    }
    result *= a.at(col, col);
    const CycloNum inv_p = inv(a.at(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a.at(i, col).is_zero()) continue;
      const CycloNum f = a.at(i, col) * inv_p;
      for (std::size_t j = col; j < n; ++j)
        a.at(i, j) -= f * a.at(col, j);
    }
  }
  return negate ? -result : result;
}

namespace {

// Forward elimination in place; returns pivot columns. When `reduce` is set
// the matrix ends in reduced row echelon form with unit pivots.
std::vector<std::size_t> echelonize(CMatrix& a, bool reduce) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a.at(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < a.cols(); ++j)
        std::swap(a.at(pivot, j), a.at(row, j));
    const CycloNum inv_p = inv(a.at(row, col));
    if (reduce)
      for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) *= inv_p;
    const std::size_t start = reduce ? 0 : row + 1;
    for (std::size_t i = start; i < a.rows(); ++i) {
      if (i == row || a.at(i, col).is_zero()) continue;
      const CycloNum f = reduce ? a.at(i, col) : a.at(i, col) * inv_p;
      for (std::size_t j = col; j < a.cols(); ++j)
        a.at(i, j) -= f * a.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(CMatrix m) { return echelonize(m, false).size(); }

Rref rref(CMatrix m) {
  auto pivots = echelonize(m, true);
  CMatrix compact(pivots.size(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) compact.at(i, j) = m.at(i, j);
  return {std::move(compact), std::move(pivots)};
}

std::optional<std::vector<CycloNum>> solve(const CMatrix& a,
                                           std::span<const CycloNum> b) {
  if (b.size() != a.rows()) throw DimensionMismatch("solve: rhs length mismatch");
  CMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  auto pivots = echelonize(aug, true);
  // A pivot in the augmented column marks inconsistency.
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<CycloNum> x(a.cols(), CycloNum(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols());
  return x;
}

std::vector<std::vector<CycloNum>> nullspace(const CMatrix& a) {
  auto [r, pivots] = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<CycloNum>> basis;
  for (std::size_t free_col = 0; free_col < a.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<CycloNum> v(a.cols(), CycloNum(0));
    v[free_col] = CycloNum(1);
    for (std::size_t row = 0; row < pivots.size(); ++row)
      v[pivots[row]] = -r.at(row, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace canonsys
