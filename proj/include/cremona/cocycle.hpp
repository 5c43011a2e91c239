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

#include "cremona/matrix.hpp"

namespace cremona {

// A 1-cocycle of G = Gal(Q(i)/Q) = {e, sigma} with values in GL_d(Q(i)),
// sigma acting by complex conjugation on entries.
struct Cocycle {
  Matrix at_identity;
  Matrix at_sigma;

  // nu(e) = 1, nu(sigma) = value.
  static Cocycle from_sigma(Matrix value);
  std::size_t dim() const { return at_sigma.rows(); }
};

// Entrywise complex conjugation.
Matrix conjugate(const Matrix& m);

// nu(st) == nu(s) * s(nu(t)) for all four pairs in G x G.
bool validate_cocycle(const Cocycle& nu);

// nu(sigma) = a * sigma(a)^{-1}. Throws SINGULAR unless a is invertible and
// FIELD_MISMATCH outside Q(i).
Cocycle coboundary(const Matrix& a);

constexpr std::size_t kTrivializeRetryBound = 64;

// An invertible a with a^{-1} nu(sigma) sigma(a) = 1, found by averaging
// a = c + nu(sigma) sigma(c); c = 1 first, then small random Gaussian
// integer matrices from `seed`. The trivial cocycle returns 1. Throws
// NOT_A_COCYCLE, or PRECONDITION_VIOLATED if kTrivializeRetryBound draws all
// give singular averages.
Matrix trivialize(const Cocycle& nu, std::uint64_t seed = 0);

// a^{-1} nu(sigma) sigma(a) == 1.
bool trivializes(const Matrix& a, const Cocycle& nu);

// For f in GL_d(Q(i)) with sigma(f) = g f, the cocycle mu(sigma) = g^{-1}.
Cocycle descent_cocycle(const Matrix& f);

}  // namespace cremona
