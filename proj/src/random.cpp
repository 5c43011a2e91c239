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

#include "cremona/random.hpp"

namespace cremona {

std::uint64_t Rng::mix(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t draw;
  do {
    draw = next();
  } while (draw >= limit);
  return lo + static_cast<std::int64_t>(draw % span);
}

namespace {

mpq_class small_rational(Rng& rng, int height) {
  mpq_class q(static_cast<long>(rng.uniform(-height, height)),
              static_cast<unsigned long>(rng.uniform(1, height)));
  q.canonicalize();
  return q;
}

Exponents random_exponents(std::size_t nvars, unsigned degree, Rng& rng) {
  Exponents e(nvars, 0);
  for (unsigned k = 0; k < degree; ++k) ++e[rng.index(nvars)];
  return e;
}

}  // namespace

Scalar random_scalar(FieldSpec field, Rng& rng, int height) {
  switch (field.kind) {
    case FieldKind::kRational:
      return Scalar(field, small_rational(rng, height));
    case FieldKind::kGaussianRational:
      return Scalar::gaussian(small_rational(rng, height), small_rational(rng, height));
    case FieldKind::kPrimeField: {
      const auto r = static_cast<long>(
          rng.uniform(0, static_cast<std::int64_t>(field.modulus) - 1));
      return Scalar(field, r);
    }
  }
  return Scalar::zero(field);
}

Scalar random_nonzero_scalar(FieldSpec field, Rng& rng, int height) {
  while (true) {
    Scalar s = random_scalar(field, rng, height);
    if (!s.is_zero()) return s;
  }
}

Polynomial random_polynomial(FieldSpec field, std::size_t nvars,
                             unsigned max_degree, std::size_t max_terms,
                             Rng& rng, int height) {
  Polynomial p(field, nvars);
  const std::size_t terms = 1 + rng.index(max_terms);
  for (std::size_t k = 0; k < terms; ++k) {
    const auto degree = static_cast<unsigned>(rng.uniform(0, max_degree));
    p.add_term(random_exponents(nvars, degree, rng),
               random_nonzero_scalar(field, rng, height));
  }
  return p;
}

Polynomial random_homogeneous(FieldSpec field, std::size_t nvars,
                              unsigned degree, std::size_t max_terms, Rng& rng,
                              int height) {
  while (true) {
    Polynomial p(field, nvars);
    const std::size_t terms = 1 + rng.index(max_terms);
    for (std::size_t k = 0; k < terms; ++k) {
      p.add_term(random_exponents(nvars, degree, rng),
                 random_nonzero_scalar(field, rng, height));
    }
    if (!p.is_zero()) return p;
  }
}

Matrix random_matrix(FieldSpec field, std::size_t rows, std::size_t cols,
                     Rng& rng, int height) {
  Matrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_scalar(field, rng, height);
  }
  return m;
}

Matrix random_invertible_matrix(FieldSpec field, std::size_t n, Rng& rng,
                                int height) {
  while (true) {
    Matrix m = random_matrix(field, n, n, rng, height);
    if (m.is_invertible()) return m;
  }
}

}  // namespace cremona
