// Copyright 2026 The cremona-kit Authors
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

#include "cremona/matrix.hpp"

#include <utility>

#include "cremona/error.hpp"

namespace cremona {

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field),
      rows_(rows),
      cols_(cols),
      data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    fail(ErrorCode::kArityMismatch, "matrix needs at least one entry");
  }
  Matrix m(rows.front().front().field(), rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) {
      fail(ErrorCode::kArityMismatch, "ragged matrix rows");
    }
    for (std::size_t c = 0; c < m.cols_; ++c) {
      if (rows[r][c].field() != m.field_) {
        fail(ErrorCode::kFieldMismatch, "matrix entries over different fields");
      }
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  return scalar(Scalar::one(field), n);
}

Matrix Matrix::scalar(const Scalar& c, std::size_t n) {
  Matrix m(c.field(), n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = c;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_) fail(ErrorCode::kFieldMismatch, "matrix product");
  if (a.cols_ != b.rows_) fail(ErrorCode::kDimMismatch, "matrix product shapes");
  Matrix r(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_) fail(ErrorCode::kFieldMismatch, "matrix sum");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    fail(ErrorCode::kDimMismatch, "matrix sum shapes");
  }
  Matrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
  return r;
}

Matrix operator*(const Scalar& c, const Matrix& m) {
  Matrix r = m;
  for (Scalar& x : r.data_) x = c * x;
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.data_ == b.data_;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  }
  return r;
}

Scalar Matrix::determinant() const {
  if (!is_square()) fail(ErrorCode::kDimMismatch, "determinant of non-square matrix");
  Matrix m = *this;
  Scalar det = Scalar::one(field_);
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t pivot = col;
    while (pivot < rows_ && m(pivot, col).is_zero()) ++pivot;
    if (pivot == rows_) return Scalar::zero(field_);
    if (pivot != col) {
      for (std::size_t c = 0; c < cols_; ++c) std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    const Scalar inv = m(col, col).inverse();
    for (std::size_t r = col + 1; r < rows_; ++r) {
      if (m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col) * inv;
      for (std::size_t c = col; c < cols_; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

std::size_t Matrix::rank() const {
  Matrix m = *this;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && m(pivot, col).is_zero()) ++pivot;
    if (pivot == rows_) continue;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(m(pivot, c), m(rank, c));
    const Scalar inv = m(rank, col).inverse();
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col) * inv;
      for (std::size_t c = col; c < cols_; ++c) m(r, c) -= factor * m(rank, c);
    }
    ++rank;
  }
  return rank;
}

Matrix Matrix::inverse() const {
  if (!is_square()) fail(ErrorCode::kSingular, "non-square matrix");
  const std::size_t n = rows_;
  Matrix m = *this;
  Matrix inv = identity(field_, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) fail(ErrorCode::kSingular, "matrix is not invertible");
    for (std::size_t c = 0; c < n; ++c) {
      std::swap(m(pivot, c), m(col, c));
      std::swap(inv(pivot, c), inv(col, c));
    }
    const Scalar scale = m(col, col).inverse();
    for (std::size_t c = 0; c < n; ++c) {
      m(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        m(r, c) -= factor * m(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

bool Matrix::is_identity() const {
  return is_square() && *this == identity(field_, rows_);
}

Matrix Matrix::map_entries(const std::function<Scalar(const Scalar&)>& f) const {
  Matrix r = *this;
  for (Scalar& x : r.data_) x = f(x);
  return r;
}

std::string Matrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i != 0) out += ",";
    out += "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j != 0) out += ",";
      out += (*this)(i, j).to_string();
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace cremona
