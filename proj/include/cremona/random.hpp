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
#include <random>

#include "cremona/matrix.hpp"
#include "cremona/polynomial.hpp"

namespace cremona {

// Deterministic generator for the randomized checks. Bounded draws are done
// here rather than through <random> distributions, whose output is not fixed
// by the standard, so a seed reproduces the same cases everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Seed for trial `index` of a run seeded with `seed` (splitmix64).
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next() { return engine_(); }
  // Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1));
  }
  bool chance(unsigned numerator, unsigned denominator) {
    return uniform(1, denominator) <= numerator;
  }

 private:
  std::mt19937_64 engine_;
};

// Small-height elements: numerators in [-height, height], denominators in
// [1, height] (Q, and both parts of Q(i)); uniform residues over F_p.
Scalar random_scalar(FieldSpec field, Rng& rng, int height = 4);
Scalar random_nonzero_scalar(FieldSpec field, Rng& rng, int height = 4);

// Up to `max_terms` random terms of total degree <= max_degree.
Polynomial random_polynomial(FieldSpec field, std::size_t nvars,
                             unsigned max_degree, std::size_t max_terms,
                             Rng& rng, int height = 4);
// Nonzero, homogeneous of the given degree.
Polynomial random_homogeneous(FieldSpec field, std::size_t nvars,
                              unsigned degree, std::size_t max_terms, Rng& rng,
                              int height = 4);

Matrix random_matrix(FieldSpec field, std::size_t rows, std::size_t cols,
                     Rng& rng, int height = 4);
Matrix random_invertible_matrix(FieldSpec field, std::size_t n, Rng& rng,
                                int height = 4);

}  // namespace cremona
