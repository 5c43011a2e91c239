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
#include "cremona/polynomial.hpp"

namespace cremona {

// A polynomial automorphism of A^d together with its inverse. Both
// compositions are checked to be the identity when the value is built.
// Variables are x_1..x_d in text and 0..d-1 internally.
class PolyAuto {
 public:
  // Throws INVERSE_CHECK_FAILED if forward and inverse do not compose to the
  // identity in both orders.
  static PolyAuto make(std::vector<Polynomial> forward, std::vector<Polynomial> inverse);
  static PolyAuto identity(FieldSpec field, std::size_t dim);

  const FieldSpec& field() const { return forward_.front().field(); }
  std::size_t dim() const { return forward_.size(); }
  const std::vector<Polynomial>& forward() const { return forward_; }
  const std::vector<Polynomial>& inverse() const { return inverse_; }

  PolyAuto inverted() const { return PolyAuto(inverse_, forward_); }
  bool is_identity() const;

  // Equality on forward components; the inverse is determined by them.
  friend bool operator==(const PolyAuto& a, const PolyAuto& b) {
    return a.forward_ == b.forward_;
  }

 private:
  PolyAuto(std::vector<Polynomial> forward, std::vector<Polynomial> inverse)
      : forward_(std::move(forward)), inverse_(std::move(inverse)) {}

  std::vector<Polynomial> forward_;
  std::vector<Polynomial> inverse_;
};

// f ∘ g with inverse g^{-1} ∘ f^{-1}.
PolyAuto compose_auto(const PolyAuto& f, const PolyAuto& g);
// Substitution of polynomial maps: (outer ∘ inner)_k = outer_k(inner).
std::vector<Polynomial> compose_polys(std::span<const Polynomial> outer,
                                      std::span<const Polynomial> inner);

// diag(a_1..a_d); entries must be nonzero (SINGULAR_LINEAR_PART).
PolyAuto torus(std::span<const Scalar> diagonal);
// Sends e_k to e_{sigma[k]}: the image has coordinate sigma[k] equal to x_k.
PolyAuto permutation(FieldSpec field, std::span<const std::size_t> sigma);
// x -> M x; throws SINGULAR_LINEAR_PART.
PolyAuto linear(const Matrix& m);
// x -> M x + b.
PolyAuto affine(const Matrix& m, std::span<const Scalar> b);
// x -> x + a e_index (index 0-based).
PolyAuto translation(std::size_t dim, std::size_t index, const Scalar& a);
// Elementary map x_index -> x_index + p with p free of x_index (0-based
// index); the inverse subtracts p. Throws INVALID_ARGUMENT otherwise.
PolyAuto triangular(std::size_t dim, std::size_t index, const Polynomial& p);

// (sigma . a)_j = a_{sigma^{-1}(j)}, so that
// permutation(sigma) ∘ torus(a) ∘ permutation(sigma)^{-1} = torus(sigma . a).
std::vector<Scalar> permute_diagonal(std::span<const std::size_t> sigma,
                                     std::span<const Scalar> a);

// Maximal total degree of the forward components.
unsigned degree_auto(const PolyAuto& f);

// Each forward component is c x_j for distinct j: an element of T_d ⋊ S_d.
bool is_monomial(const PolyAuto& g);
// x -> c x_k for every k, with each c nonzero.
bool is_diagonal_linear(std::span<const Polynomial> components);

// Monomial maps return true at once. Otherwise g t g^{-1} must be diagonal
// linear for `trials` random torus elements t with pairwise distinct
// entries drawn from a generator seeded with `seed`.
bool normalizes_torus(const PolyAuto& g, std::size_t trials, std::uint64_t seed = 1);

// g ∘ s == s ∘ g for every s.
bool centralizes(const PolyAuto& g, std::span<const PolyAuto> family);

struct IdentityCheck {
  std::string name;
  std::size_t checked = 0;
  std::size_t passed = 0;

  bool ok() const { return passed == checked; }
};

struct AffineLemmaReport {
  FieldSpec field;
  std::size_t dim = 0;
  std::vector<IdentityCheck> checks;

  bool all_passed() const;
};

// For translations f = x + a e_1 with a in `params` (zero entries skipped):
//   "conjugation_squares": t f t^{-1} = f^2 with t = diag(2,1,...,1), char != 2
//   "commutes_with_shear": f h = h f with h = (x_1 + x_2, x_2, ..., x_d)
//   "commutes_with_gl":    f commutes with (x_1, g(x_2..x_d)) for sample g
//   "char2_involution":    f^2 = id, char 2 only
// Requires dim >= 2.
AffineLemmaReport affine_lemma_suite(FieldSpec field, std::size_t dim,
                                     std::span<const Scalar> params);

// The embedding Aut(A^d) ⊂ Cr_d.
CremonaMap to_cremona(const PolyAuto& f);

// "A^d: (p_1; ...; p_d) inv (q_1; ...; q_d)"
PolyAuto parse_auto(std::string_view text, FieldSpec field);
std::string format_auto(const PolyAuto& f);

}  // namespace cremona
