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

#include "cremona/cocycle.hpp"

#include "cremona/error.hpp"
#include "cremona/random.hpp"

namespace cremona {

namespace {

void require_gaussian(const Matrix& m) {
  if (!m.field().is_gaussian()) {
    fail(ErrorCode::kFieldMismatch, "cocycles live in GL_d(Qi), got " + m.field().name());
  }
  if (!m.is_square()) fail(ErrorCode::kDimMismatch, "cocycle values must be square");
}

}  // namespace

Cocycle Cocycle::from_sigma(Matrix value) {
  require_gaussian(value);
  Matrix one = Matrix::identity(value.field(), value.rows());
  return {std::move(one), std::move(value)};
}

Matrix conjugate(const Matrix& m) {
  return m.map_entries([](const Scalar& x) { return x.conjugate(); });
}

bool validate_cocycle(const Cocycle& nu) {
  require_gaussian(nu.at_identity);
  require_gaussian(nu.at_sigma);
  if (nu.at_identity.rows() != nu.at_sigma.rows()) return false;
  if (!nu.at_identity.is_invertible() || !nu.at_sigma.is_invertible()) return false;
  // G = {e, s}: element 0 is e, 1 is s; s*s = e.
  const Matrix* value[2] = {&nu.at_identity, &nu.at_sigma};
  auto act = [](int g, const Matrix& m) { return g == 0 ? m : conjugate(m); };
  for (int s = 0; s < 2; ++s) {
    for (int t = 0; t < 2; ++t) {
      const int st = s ^ t;
      if (*value[st] != *value[s] * act(s, *value[t])) return false;
    }
  }
  return true;
}

Cocycle coboundary(const Matrix& a) {
  require_gaussian(a);
  if (!a.is_invertible()) fail(ErrorCode::kSingular, "coboundary of a singular matrix");
  return Cocycle::from_sigma(a * conjugate(a).inverse());
}

bool trivializes(const Matrix& a, const Cocycle& nu) {
  if (!a.is_invertible()) return false;
  return (a.inverse() * nu.at_sigma * conjugate(a)).is_identity();
}

Matrix trivialize(const Cocycle& nu, std::uint64_t seed) {
  if (!validate_cocycle(nu)) fail(ErrorCode::kNotACocycle, "cocycle condition fails");
  const FieldSpec field = nu.at_sigma.field();
  const std::size_t d = nu.dim();
  if (nu.at_sigma.is_identity()) return Matrix::identity(field, d);

  Rng rng(seed);
  Matrix c = Matrix::identity(field, d);
  for (std::size_t attempt = 0; attempt < kTrivializeRetryBound; ++attempt) {
    // sigma(a) = sigma(c) + sigma(nu) c, so nu sigma(a) = nu sigma(c) + c = a.
    const Matrix a = c + nu.at_sigma * conjugate(c);
    if (a.is_invertible()) return a;
    c = Matrix(field, d, d);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t k = 0; k < d; ++k) {
        c(r, k) = Scalar::gaussian(rng.uniform(-3, 3), rng.uniform(-3, 3));
      }
    }
  }
  fail(ErrorCode::kPreconditionViolated, "no invertible average within the retry bound");
}

Cocycle descent_cocycle(const Matrix& f) {
  require_gaussian(f);
  const Matrix g = conjugate(f) * f.inverse();
  return Cocycle::from_sigma(g.inverse());
}

}  // namespace cremona
