// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "extalg/scalar.hpp"

namespace extalg {

// Sparse vector: (index, value) pairs sorted by index, values nonzero.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

// dst += a * src.
void axpy(SparseVector& dst, const Scalar& a, const SparseVector& src);
std::vector<Scalar> to_dense(const SparseVector& v, std::size_t dim, Field field);
SparseVector to_sparse(const std::vector<Scalar>& v);

// Exact matrix over a Field, stored as sparse rows. Absent entries are zero.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, Field field = Field::rationals());

  static Matrix identity(std::size_t k, Field field = Field::rationals());
  // Dense integer rows; all rows must have the same length.
  static Matrix from_rows(const std::vector<std::vector<long>>& rows,
                          Field field = Field::rationals());
  static Matrix from_rows(std::size_t cols, const std::vector<std::vector<Scalar>>& rows,
                          Field field);
  // Columns given as sparse vectors of length rows.
  static Matrix from_columns(std::size_t rows, const std::vector<SparseVector>& cols,
                             Field field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& value);
  void add_to(std::size_t r, std::size_t c, const Scalar& value);
  const SparseVector& row(std::size_t r) const { return data_.at(r); }
  void set_row(std::size_t r, SparseVector row);

  bool is_zero() const;
  std::size_t nonzeros() const;
  Matrix transpose() const;
  std::vector<Scalar> apply(const std::vector<Scalar>& x) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  Field field_;
  std::vector<SparseVector> data_;
};

// Row space of a growing set of vectors in k^dim, kept in echelon form with
// unit leading coefficients. The pivot of each stored row is its leading
// column; rows are processed in insertion order, so the basis is
// reproducible run to run.
class EchelonBasis {
 public:
  EchelonBasis(std::size_t dim, Field field);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  Field field() const { return field_; }

  // Adds v; returns true when the rank grew.
  bool insert(SparseVector v);
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  // Remainder of v modulo the span. The remainder vanishes on every pivot
  // column. When coords is given it receives the combination of stored rows
  // that was subtracted: v = sum coords[k] * row(k) + remainder.
  SparseVector reduce(SparseVector v, SparseVector* coords = nullptr) const;

  const SparseVector& row(std::size_t k) const { return rows_[k]; }
  std::size_t pivot(std::size_t k) const { return pivots_[k]; }
  bool is_pivot(std::size_t col) const { return pivot_row_[col] >= 0; }

  // Back-substitutes so every stored row vanishes on all other pivots.
  void make_reduced();

 private:
  std::size_t dim_;
  Field field_;
  std::vector<SparseVector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<long> pivot_row_;
};

std::size_t rank(const Matrix& m);

// Basis of {v : m v = 0}, one vector per non-pivot column of the reduced
// row echelon form; cols() == rank(m) + kernel size.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);
std::vector<SparseVector> kernel_basis_sparse(const Matrix& m);

// Some x with m x = rhs, or nullopt when the system is inconsistent.
// Throws DimensionMismatch when rhs.size() != m.rows().
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& rhs);

}  // namespace extalg
