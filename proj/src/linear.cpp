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

#include "cremona/linear.hpp"

#include "cremona/error.hpp"
#include "cremona/text.hpp"

namespace cremona {

namespace {

void require_same_group(const ProjLinear& a, const ProjLinear& b) {
  if (a.field() != b.field()) fail(ErrorCode::kFieldMismatch, "PGL fields differ");
  if (a.dim() != b.dim()) fail(ErrorCode::kDimMismatch, "PGL dimensions differ");
}

// Row operation row_i += c * row_j, recorded as the transvection E_ij(c).
void add_row(Matrix& m, std::size_t i, std::size_t j, const Scalar& c,
             std::vector<Transvection>& ops) {
  if (c.is_zero()) return;
  for (std::size_t col = 0; col < m.cols(); ++col) m(i, col) += c * m(j, col);
  ops.push_back({i, j, c});
}

}  // namespace

ProjLinear ProjLinear::make(Matrix m) {
  if (!m.is_square() || m.rows() < 2) {
    fail(ErrorCode::kDimMismatch, "PGL element needs a square matrix of size >= 2");
  }
  if (!m.is_invertible()) fail(ErrorCode::kSingular, "matrix is singular");
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c).is_zero()) continue;
      if (!m(r, c).is_one()) m = m(r, c).inverse() * m;
      return ProjLinear(std::move(m));
    }
  }
  return ProjLinear(std::move(m));
}

ProjLinear ProjLinear::identity(FieldSpec field, std::size_t dim) {
  return ProjLinear(Matrix::identity(field, dim + 1));
}

ProjLinear ProjLinear::from_map(const CremonaMap& f) {
  if (f.degree() != 1) {
    fail(ErrorCode::kDegreeMismatch, "map of degree " + std::to_string(f.degree()) +
                                         " is not projective linear");
  }
  const std::size_t n = f.dim() + 1;
  Matrix m(f.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [e, c] : f.component(i).terms()) {
      for (std::size_t j = 0; j < n; ++j) {
        if (e[j] == 1) m(i, j) = c;
      }
    }
  }
  return make(std::move(m));
}

CremonaMap ProjLinear::to_map() const {
  const std::size_t n = matrix_.rows();
  std::vector<Polynomial> components;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial row(field(), n);
    for (std::size_t j = 0; j < n; ++j) {
      Exponents e(n, 0);
      e[j] = 1;
      row.add_term(e, matrix_(i, j));
    }
    components.push_back(std::move(row));
  }
  return CremonaMap::make(std::move(components));
}

ProjPoint ProjLinear::apply(const ProjPoint& p) const {
  if (p.dim() != dim()) fail(ErrorCode::kDimMismatch, "point dimension");
  if (p.field() != field()) fail(ErrorCode::kFieldMismatch, "point field");
  std::vector<Scalar> image(dim() + 1, Scalar::zero(field()));
  for (std::size_t i = 0; i <= dim(); ++i) {
    for (std::size_t j = 0; j <= dim(); ++j) image[i] += matrix_(i, j) * p.coords()[j];
  }
  return ProjPoint(std::move(image));
}

ProjLinear proj_mul(const ProjLinear& a, const ProjLinear& b) {
  require_same_group(a, b);
  return ProjLinear::make(a.matrix() * b.matrix());
}

ProjLinear proj_inv(const ProjLinear& a) {
  return ProjLinear::make(a.matrix().inverse());
}

ProjLinear transpose_inverse(const ProjLinear& a) {
  return ProjLinear::make(a.matrix().inverse().transpose());
}

Matrix twist(const Matrix& a, const FieldAutomorphism& alpha) {
  if (alpha.field() != a.field()) fail(ErrorCode::kFieldMismatch, "twist field");
  return a.map_entries([&](const Scalar& x) { return alpha(x); });
}

ProjLinear twist(const ProjLinear& a, const FieldAutomorphism& alpha) {
  return ProjLinear::make(twist(a.matrix(), alpha));
}

ProjLinear apply_dieudonne(const DieudonneAutomorphism& phi, const ProjLinear& g) {
  require_same_group(phi.h, g);
  ProjLinear inner = twist(g, phi.alpha);
  if (phi.dual) inner = transpose_inverse(inner);
  return proj_mul(proj_mul(phi.h, inner), proj_inv(phi.h));
}

Matrix Transvection::matrix(std::size_t n) const {
  Matrix m = Matrix::identity(c.field(), n);
  m(i, j) += c;
  return m;
}

std::string Transvection::to_string() const {
  return "E" + std::to_string(i) + std::to_string(j) + "(" + c.to_string() + ")";
}

std::size_t decomposition_bound(std::size_t d) {
  const std::size_t n = d + 1;
  return n * n + 2 * n;
}

std::vector<Transvection> gauss_decompose(const Matrix& a) {
  if (!a.is_square()) fail(ErrorCode::kNotUnimodular, "matrix is not square");
  if (!a.determinant().is_one()) {
    fail(ErrorCode::kNotUnimodular, "determinant is " + a.determinant().to_string());
  }
  const FieldSpec field = a.field();
  const std::size_t n = a.rows();
  const Scalar one = Scalar::one(field);
  Matrix m = a;
  std::vector<Transvection> ops;  // ops.back() ... ops.front() * a == 1

  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Make the pivot exactly 1 using transvections only (no swaps or scaling).
    if (!m(k, k).is_one()) {
      std::size_t r = k + 1;
      while (r < n && m(r, k).is_zero()) ++r;
      if (r == n) {
        // Column below the pivot is clear, so m(k, k) != 0; copy it down.
        r = k + 1;
        add_row(m, r, k, one, ops);
      }
      add_row(m, k, r, (one - m(k, k)) / m(r, k), ops);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r != k) add_row(m, r, k, -m(r, k), ops);
    }
  }
  // The last pivot is det == 1 now; clear the column above it.
  for (std::size_t r = 0; r + 1 < n; ++r) add_row(m, r, n - 1, -m(r, n - 1), ops);

  std::vector<Transvection> factors;
  factors.reserve(ops.size());
  for (const Transvection& op : ops) factors.push_back({op.i, op.j, -op.c});
  return factors;
}

Matrix product(std::span<const Transvection> factors, FieldSpec field,
               std::size_t n) {
  Matrix m = Matrix::identity(field, n);
  for (const Transvection& t : factors) m = m * t.matrix(n);
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m{n, std::vector<mpz_class>(n * n, 0)};
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

IntMatrix IntMatrix::from_matrix(const Matrix& m) {
  if (!m.is_square() || m.field() != FieldSpec::rational()) {
    fail(ErrorCode::kInvalidArgument, "integer matrix must be square over Q");
  }
  IntMatrix r{m.rows(), {}};
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).real().get_den() != 1) {
        fail(ErrorCode::kInvalidArgument, "entry " + m(i, j).to_string() +
                                              " is not an integer");
      }
      r.entries.push_back(m(i, j).real().get_num());
    }
  }
  return r;
}

Matrix IntMatrix::to_matrix() const {
  Matrix m(FieldSpec::rational(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = Scalar(FieldSpec::rational(), mpq_class((*this)(i, j)));
    }
  }
  return m;
}

mpz_class IntMatrix::determinant() const {
  return to_matrix().determinant().real().get_num();
}

IntMatrix IntMatrix::inverse() const {
  return from_matrix(to_matrix().inverse());
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n != b.n) fail(ErrorCode::kDimMismatch, "integer matrix product");
  IntMatrix r{a.n, std::vector<mpz_class>(a.n * a.n, 0)};
  for (std::size_t i = 0; i < a.n; ++i) {
    for (std::size_t k = 0; k < a.n; ++k) {
      for (std::size_t j = 0; j < a.n; ++j) r(i, j) += a(i, k) * b(k, j);
    }
  }
  return r;
}

IntMatrix parse_int_matrix(std::string_view text) {
  return IntMatrix::from_matrix(parse_matrix(text, FieldSpec::rational()));
}

bool in_congruence_subgroup(const IntMatrix& a, std::uint64_t p) {
  if (p % 2 == 0 || !is_prime(p)) {
    fail(ErrorCode::kBadModulus, std::to_string(p) + " is not an odd prime");
  }
  if (a.determinant() != 1) fail(ErrorCode::kNotUnimodular, "determinant is not 1");
  const mpz_class modulus(std::to_string(p));
  for (std::size_t i = 0; i < a.n; ++i) {
    for (std::size_t j = 0; j < a.n; ++j) {
      const mpz_class diff = a(i, j) - (i == j ? 1 : 0);
      if (diff % modulus != 0) return false;
    }
  }
  return true;
}

ProjLinear two_fixed_point_automorphism(const ProjPoint& p, const ProjPoint& q,
                                        const Scalar& lambda) {
  if (p.dim() != q.dim()) fail(ErrorCode::kDimMismatch, "points of different P^d");
  if (p.field() != q.field() || lambda.field() != p.field()) {
    fail(ErrorCode::kFieldMismatch, "points and eigenvalue over different fields");
  }
  if (p == q) fail(ErrorCode::kDegeneratePair, "p and q coincide");
  if (lambda.is_zero() || lambda.is_one()) {
    fail(ErrorCode::kBadEigenvalue, "eigenvalue must avoid 0 and 1");
  }
  const FieldSpec field = p.field();
  const std::size_t d = p.dim();
  const std::size_t n = d + 1;

  // Columns: p, then standard vectors completing {p, q} to a basis, then q.
  std::vector<std::vector<Scalar>> columns{p.coords()};
  std::vector<std::vector<Scalar>> fillers;
  auto rank_of = [&](const std::vector<std::vector<Scalar>>& cols) {
    Matrix m(field, cols.size(), n);
    for (std::size_t r = 0; r < cols.size(); ++r) {
      for (std::size_t c = 0; c < n; ++c) m(r, c) = cols[r][c];
    }
    return m.rank();
  };
  for (std::size_t k = 0; k < n && fillers.size() + 2 < n; ++k) {
    std::vector<Scalar> e(n, Scalar::zero(field));
    e[k] = Scalar::one(field);
    auto trial = columns;
    trial.push_back(q.coords());
    trial.insert(trial.end(), fillers.begin(), fillers.end());
    trial.push_back(e);
    if (rank_of(trial) == trial.size()) fillers.push_back(std::move(e));
  }
  columns.insert(columns.end(), fillers.begin(), fillers.end());
  columns.push_back(q.coords());

  Matrix basis(field, n, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) basis(r, c) = columns[c][r];
  }
  Matrix jordan(field, n, n);
  for (std::size_t k = 0; k < d; ++k) {
    jordan(k, k) = Scalar::one(field);
    if (k + 1 < d) jordan(k, k + 1) = Scalar::one(field);
  }
  jordan(d, d) = lambda;
  return ProjLinear::make(basis * jordan * basis.inverse());
}

}  // namespace cremona
