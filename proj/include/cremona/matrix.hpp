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

#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "cremona/scalar.hpp"

namespace cremona {

// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);
  // Throws ARITY_MISMATCH on ragged or empty rows.
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
  static Matrix identity(FieldSpec field, std::size_t n);
  static Matrix scalar(const Scalar& c, std::size_t n);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& c, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);

  Matrix transpose() const;
  Scalar determinant() const;
  std::size_t rank() const;
  bool is_invertible() const { return is_square() && !determinant().is_zero(); }
  // Throws SINGULAR when not invertible.
  Matrix inverse() const;
  bool is_identity() const;

  Matrix map_entries(const std::function<Scalar(const Scalar&)>& f) const;

  // [[a,b],[c,d]]
  std::string to_string() const;

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

}  // namespace cremona
