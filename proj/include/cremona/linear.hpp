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
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cremona/cremona_map.hpp"
#include "cremona/matrix.hpp"

namespace cremona {

// An element of PGL_{d+1}(k) = Aut(P^d): an invertible matrix up to scalars,
// scaled so its first nonzero entry (row-major) is 1.
class ProjLinear {
 public:
  // Throws SINGULAR.
  static ProjLinear make(Matrix m);
  static ProjLinear identity(FieldSpec field, std::size_t dim);
  // The degree-1 Cremona map with these coordinates; DEGREE_MISMATCH otherwise.
  static ProjLinear from_map(const CremonaMap& f);

  const Matrix& matrix() const { return matrix_; }
  const FieldSpec& field() const { return matrix_.field(); }
  std::size_t dim() const { return matrix_.rows() - 1; }

  CremonaMap to_map() const;
  ProjPoint apply(const ProjPoint& p) const;

  friend bool operator==(const ProjLinear&, const ProjLinear&) = default;

  std::string to_string() const { return matrix_.to_string(); }

 private:
  explicit ProjLinear(Matrix m) : matrix_(std::move(m)) {}

  Matrix matrix_;
};

ProjLinear proj_mul(const ProjLinear& a, const ProjLinear& b);
ProjLinear proj_inv(const ProjLinear& a);
// g^∨ = (g^{-1})^T
ProjLinear transpose_inverse(const ProjLinear& a);
// Applies alpha to every entry.
ProjLinear twist(const ProjLinear& a, const FieldAutomorphism& alpha);
Matrix twist(const Matrix& a, const FieldAutomorphism& alpha);

// An automorphism of PGL_{d+1}(k) in one of Dieudonné's two shapes:
//   g -> h (ᵅg) h^{-1}   or   g -> h (ᵅg)^∨ h^{-1}.
struct DieudonneAutomorphism {
  ProjLinear h;
  FieldAutomorphism alpha;
  bool dual = false;
};

ProjLinear apply_dieudonne(const DieudonneAutomorphism& phi, const ProjLinear& g);

// E_ij(c): x_i -> x_i + c x_j, i.e. the identity plus c at (i, j).
struct Transvection {
  std::size_t i = 0;
  std::size_t j = 0;
  Scalar c;

  Matrix matrix(std::size_t n) const;
  std::string to_string() const;

  friend bool operator==(const Transvection&, const Transvection&) = default;
};

// Bound on the number of factors gauss_decompose returns for (d+1)x(d+1)
// input: (d+1)^2 + 2(d+1). The elimination below never needs more than
// (d+1)^2 + (d+1) - 2 of them.
std::size_t decomposition_bound(std::size_t d);

// Transvections whose ordered product equals a. Throws NOT_UNIMODULAR unless
// det(a) == 1.
std::vector<Transvection> gauss_decompose(const Matrix& a);

Matrix product(std::span<const Transvection> factors, FieldSpec field,
               std::size_t n);

// Integer matrices for congruence-subgroup membership.
struct IntMatrix {
  std::size_t n = 0;
  std::vector<mpz_class> entries;  // row-major n x n

  mpz_class& operator()(std::size_t r, std::size_t c) { return entries[r * n + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const {
    return entries[r * n + c];
  }

  static IntMatrix identity(std::size_t n);
  // Every entry must be an integer; throws INVALID_ARGUMENT otherwise.
  static IntMatrix from_matrix(const Matrix& m);
  Matrix to_matrix() const;
  mpz_class determinant() const;
  // Inverse of a determinant-one matrix (still integral).
  IntMatrix inverse() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix parse_int_matrix(std::string_view text);

// Whether a ∈ SL_{d+1}(Z) reduces to the identity mod p. Throws
// NOT_UNIMODULAR unless det(a) == 1 and BAD_MODULUS unless p is an odd prime.
bool in_congruence_subgroup(const IntMatrix& a, std::uint64_t p);

// A projective linear map whose only k-rational fixed points are p and q.
// In a basis (p, e_{k1}, ..., q) adapted to the pair it acts as a single
// unipotent Jordan block of size d anchored at p together with the
// eigenvalue lambda on q. Throws DEGENERATE_PAIR if p == q and
// BAD_EIGENVALUE if lambda is 0 or 1.
ProjLinear two_fixed_point_automorphism(const ProjPoint& p, const ProjPoint& q,
                                        const Scalar& lambda);

}  // namespace cremona
