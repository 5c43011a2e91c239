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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cremona/cremona_map.hpp"
#include "cremona/linear.hpp"

namespace cremona {

// Polynomials in x_1..x_d indexed by their power of t; negative keys are
// Laurent terms.
using TGraded = std::map<int, Polynomial>;

// The family rho_t = beta_t^{-1} f beta_t on the chart x_0 != 0, where
// beta_t = [x_0 : t x_1 : ... : t x_d]. With F_i = sum_j P_ij / sum_j Q_ij the
// homogeneous decomposition of f's chart form,
//   F_i^t = (t^{-1} P_i0 + P_i1 + t P_i2 + ...) / (Q_i0 + t Q_i1 + ...).
struct DeformationFamily {
  CremonaMap source;
  std::size_t dim = 0;
  unsigned degree = 0;
  std::vector<TGraded> numerators;    // t-exponents in [-1, e-1]
  std::vector<TGraded> denominators;  // t-exponents in [0, e]

  // rho_{t0} in chart form; t0 must be nonzero (ZERO_PARAMETER).
  std::vector<RationalFunction> specialize(const Scalar& t0) const;
};

// Why a family does or does not extend over t = 0 with an automorphism of
// P^d as its value there.
struct ExtendabilityVerdict {
  bool extendable = false;
  std::vector<bool> p_i0_nonzero;  // per component: t^{-1} term survives
  std::vector<bool> q_i0_zero;     // per component: denominator dies at t = 0
  bool jacobian_singular = false;  // limit exists but is not invertible
  std::optional<ProjLinear> limit;
};

// [x_0 : t x_1 : ... : t x_d]; throws ZERO_PARAMETER for t = 0.
CremonaMap scaling_map(std::size_t dim, const Scalar& t);

// Throws CHART_DEGENERATE when f has no chart form on x_0 != 0.
DeformationFamily build_family(const CremonaMap& f);

// extendable iff every P_i0 = 0, every Q_i0 != 0, and the matrix
// (coefficients of P_i1) / Q_i0 is invertible; the limit is then
// x_i -> P_i1(x) / Q_i0, extended by x_0 -> x_0.
ExtendabilityVerdict extendability(const DeformationFamily& family);

// Compares the t -> 0 limit with the Jacobian of f's chart form at the
// origin. Throws PRECONDITION_VIOLATED unless f fixes [1:0:...:0] and is a
// local isomorphism there.
bool limit_vs_jacobian(const CremonaMap& f);

// The projective linear map diag(1, J) for a d x d matrix J.
ProjLinear linear_part_map(const Matrix& jacobian_block);

// A projective linear A with A(p) = [1:0:...:0]: the transposition bringing
// p's first nonzero coordinate to the front, followed by x_k -> x_k - p_k x_0.
ProjLinear move_point_to_origin(const ProjPoint& p);

// alpha^{-1} f^{-1} alpha f.
CremonaMap commutator(const CremonaMap& f, const CremonaMap& f_inverse,
                      const ProjLinear& alpha);

// Resolves an inverse for f: the supplied one after checking it, the matrix
// inverse for degree-1 maps, or f itself for involutions. Throws
// MISSING_INVERSE otherwise.
CremonaMap resolve_inverse(const CremonaMap& f,
                           const std::optional<CremonaMap>& f_inverse);

// The family of A c A^{-1} for the commutator c = alpha^{-1} f^{-1} alpha f
// and A = move_point_to_origin(p). Throws PRECONDITION_VIOLATED unless c
// fixes p and is a local isomorphism there.
DeformationFamily commutator_family(const CremonaMap& f,
                                    const std::optional<CremonaMap>& f_inverse,
                                    const ProjLinear& alpha, const ProjPoint& p);

// Printable forms used by the CLI.
std::string format_family(const DeformationFamily& family);

}  // namespace cremona
