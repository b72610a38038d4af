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
#include <optional>
#include <span>
#include <vector>

#include "canonsys/cyclotomic.hpp"

namespace canonsys {

/// Dense matrix over the cyclotomic scalars. All elimination routines are
/// exact; there is no pivoting heuristic beyond "first nonzero".
class CMatrix {
 public:
  CMatrix(std::size_t rows, std::size_t cols);
  static CMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  CycloNum& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const CycloNum& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  CMatrix conj_transpose() const;

  friend CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs);
  friend CMatrix operator-(const CMatrix& lhs, const CMatrix& rhs);
  friend bool operator==(const CMatrix& lhs, const CMatrix& rhs);
  friend bool operator!=(const CMatrix& lhs, const CMatrix& rhs) {
    return !(lhs == rhs);
  }

 private:
  std::size_t rows_, cols_;
  std::vector<CycloNum> data_;
};

CycloNum trace(const CMatrix& m);
CycloNum det(const CMatrix& m);

std::size_t rank(CMatrix m);

struct Rref {
  CMatrix mat;
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

/// Reduced row echelon form; zero rows are dropped from the result.
Rref rref(CMatrix m);

/// Solves a x = b exactly; free variables are set to zero.
/// Returns nothing when the system is inconsistent.
std::optional<std::vector<CycloNum>> solve(const CMatrix& a,
                                           std::span<const CycloNum> b);

/// Basis of the right kernel of a.
std::vector<std::vector<CycloNum>> nullspace(const CMatrix& a);

}  // namespace canonsys
