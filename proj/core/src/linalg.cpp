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

#include "extalg/linalg.hpp"

#include <algorithm>

#include "extalg/errors.hpp"

namespace extalg {

void axpy(SparseVector& dst, const Scalar& a, const SparseVector& src) {
  if (a.is_zero() || src.empty()) return;
  SparseVector out;
  out.reserve(dst.size() + src.size());
  auto i = dst.begin();
  auto j = src.begin();
  while (i != dst.end() || j != src.end()) {
    if (j == src.end() || (i != dst.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == dst.end() || j->first < i->first) {
      out.emplace_back(j->first, a * j->second);
      ++j;
    } else {
      Scalar s = std::move(i->second);
      s += a * j->second;
      if (!s.is_zero()) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  dst = std::move(out);
}

std::vector<Scalar> to_dense(const SparseVector& v, std::size_t dim, Field field) {
  std::vector<Scalar> out(dim, Scalar::zero(field));
  for (const auto& [i, x] : v) out.at(i) = x;
  return out;
}

SparseVector to_sparse(const std::vector<Scalar>& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out.emplace_back(i, v[i]);
  }
  return out;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows) {}

Matrix Matrix::identity(std::size_t k, Field field) {
  Matrix m(k, k, field);
  for (std::size_t i = 0; i < k; ++i) m.data_[i].emplace_back(i, Scalar::one(field));
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<long>>& rows, Field field) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols, field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c] != 0) m.data_[r].emplace_back(c, Scalar(field, rows[r][c]));
    }
  }
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<std::vector<Scalar>>& rows,
                         Field field) {
  Matrix m(rows.size(), cols, field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
  const auto& row = data_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) return it->second;
  return Scalar::zero(field_);
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<SparseVector>& cols,
                           Field field) {
  Matrix m(rows, cols.size(), field);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (const auto& [r, x] : cols[c]) {
      if (r >= rows) throw DimensionMismatch("column entry beyond the row count");
      if (x.field() != field) throw FieldMismatch("matrix entry from another field");
      if (!x.is_zero()) m.data_[r].emplace_back(c, x);
    }
  }
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& value) {
  if (r >= rows_ || c >= cols_) throw DimensionMismatch("matrix index out of range");
  if (value.field() != field_) throw FieldMismatch("matrix entry from another field");
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    if (value.is_zero()) {
      row.erase(it);
    } else {
      it->second = value;
    }
  } else if (!value.is_zero()) {
    row.insert(it, {c, value});
  }
}

void Matrix::add_to(std::size_t r, std::size_t c, const Scalar& value) {
  set(r, c, at(r, c) + value);
}

void Matrix::set_row(std::size_t r, SparseVector row) {
  if (r >= rows_) throw DimensionMismatch("matrix row out of range");
  for (const auto& [c, x] : row) {
    if (c >= cols_) throw DimensionMismatch("matrix column out of range");
    if (x.field() != field_) throw FieldMismatch("matrix entry from another field");
  }
  data_[r] = std::move(row);
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const auto& r) { return r.empty(); });
}

std::size_t Matrix::nonzeros() const {
  std::size_t total = 0;
  for (const auto& r : data_) total += r.size();
  return total;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, x] : data_[r]) t.data_[c].emplace_back(r, x);
  }
  return t;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& x) const {
  if (x.size() != cols_) throw DimensionMismatch("vector length does not match columns");
  std::vector<Scalar> y(rows_, Scalar::zero(field_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, a] : data_[r]) y[r] += a * x[c];
  }
  return y;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  if (a.field_ != b.field_) throw FieldMismatch("matrix product across fields");
  Matrix out(a.rows_, b.cols_, a.field_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    SparseVector acc;
    for (const auto& [k, x] : a.data_[r]) axpy(acc, x, b.data_[k]);
    out.data_[r] = std::move(acc);
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw DimensionMismatch("matrix sum shape mismatch");
  }
  if (a.field_ != b.field_) throw FieldMismatch("matrix sum across fields");
  Matrix out = a;
  for (std::size_t r = 0; r < a.rows_; ++r) {
    axpy(out.data_[r], Scalar::one(a.field_), b.data_[r]);
  }
  return out;
}

EchelonBasis::EchelonBasis(std::size_t dim, Field field)
    : dim_(dim), field_(field), pivot_row_(dim, -1) {}

SparseVector EchelonBasis::reduce(SparseVector v, SparseVector* coords) const {
  if (coords) coords->clear();
  std::size_t pos = 0;
  while (pos < v.size()) {
    const std::size_t col = v[pos].first;
    if (col >= dim_) throw DimensionMismatch("vector index beyond ambient dimension");
    const long k = pivot_row_[col];
    if (k < 0) {
      ++pos;
      continue;
    }
    const Scalar factor = v[pos].second;
    if (coords) coords->emplace_back(static_cast<std::size_t>(k), factor);
    axpy(v, -factor, rows_[k]);
  }
  if (coords) {
    std::sort(coords->begin(), coords->end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // A row can be hit more than once when later rows reintroduce its pivot.
    SparseVector merged;
    for (auto& [k, x] : *coords) {
      if (!merged.empty() && merged.back().first == k) {
        merged.back().second += x;
        if (merged.back().second.is_zero()) merged.pop_back();
      } else {
        merged.emplace_back(k, std::move(x));
      }
    }
    *coords = std::move(merged);
  }
  return v;
}

bool EchelonBasis::insert(SparseVector v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const Scalar lead_inv = v.front().second.inverse();
  for (auto& [c, x] : v) x *= lead_inv;
  pivot_row_[v.front().first] = static_cast<long>(rows_.size());
  pivots_.push_back(v.front().first);
  rows_.push_back(std::move(v));
  return true;
}

void EchelonBasis::make_reduced() {
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivots_[a] > pivots_[b]; });
  for (std::size_t k : order) {
    SparseVector tail(rows_[k].begin() + 1, rows_[k].end());
    SparseVector reduced = reduce(std::move(tail));
    SparseVector row;
    row.reserve(reduced.size() + 1);
    row.push_back(rows_[k].front());
    for (auto& e : reduced) row.push_back(std::move(e));
    rows_[k] = std::move(row);
  }
}

std::size_t rank(const Matrix& m) {
  EchelonBasis basis(m.cols(), m.field());
  for (std::size_t r = 0; r < m.rows(); ++r) basis.insert(m.row(r));
  return basis.rank();
}

std::vector<SparseVector> kernel_basis_sparse(const Matrix& m) {
  EchelonBasis basis(m.cols(), m.field());
  for (std::size_t r = 0; r < m.rows(); ++r) basis.insert(m.row(r));
  basis.make_reduced();
  // For a free column f the kernel vector is e_f - sum_k R[k][f] e_{pivot k}.
  std::vector<SparseVector> by_free_col(m.cols());
  for (std::size_t k = 0; k < basis.rank(); ++k) {
    const auto& row = basis.row(k);
    for (std::size_t e = 1; e < row.size(); ++e) {
      by_free_col[row[e].first].emplace_back(basis.pivot(k), -row[e].second);
    }
  }
  std::vector<SparseVector> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (basis.is_pivot(f)) continue;
    SparseVector v = std::move(by_free_col[f]);
    v.emplace_back(f, Scalar::one(m.field()));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
  std::vector<std::vector<Scalar>> out;
  for (const auto& v : kernel_basis_sparse(m)) out.push_back(to_dense(v, m.cols(), m.field()));
  return out;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& rhs) {
  if (rhs.size() != m.rows()) {
    throw DimensionMismatch("right-hand side has " + std::to_string(rhs.size()) +
                            " entries for " + std::to_string(m.rows()) + " rows");
  }
  const std::size_t aug = m.cols();
  EchelonBasis basis(aug + 1, m.field());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseVector row = m.row(r);
    if (rhs[r].field() != m.field()) throw FieldMismatch("right-hand side from another field");
    if (!rhs[r].is_zero()) row.emplace_back(aug, rhs[r]);
    basis.insert(std::move(row));
  }
  if (basis.is_pivot(aug)) return std::nullopt;
  basis.make_reduced();
  std::vector<Scalar> x(aug, Scalar::zero(m.field()));
  for (std::size_t k = 0; k < basis.rank(); ++k) {
    const auto& row = basis.row(k);
    if (row.back().first == aug) x[basis.pivot(k)] = row.back().second;
  }
  return x;
}

}  // namespace extalg
