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

#include <string_view>

#include "cremona/cremona_map.hpp"
#include "cremona/matrix.hpp"
#include "cremona/polynomial.hpp"
#include "cremona/text.hpp"

namespace cremona::testing {

inline const FieldSpec kQ = FieldSpec::rational();
inline const FieldSpec kQi = FieldSpec::gaussian();

// Homogeneous coordinates x0..x{n-1}.
inline Polynomial hpoly(std::string_view text, std::size_t nvars, FieldSpec field = kQ) {
  return parse_polynomial(text, field, nvars, 0);
}

// Affine coordinates x1..x{n}.
inline Polynomial apoly(std::string_view text, std::size_t nvars, FieldSpec field = kQ) {
  return parse_polynomial(text, field, nvars, 1);
}

inline Scalar q(long v, FieldSpec field = kQ) { return Scalar(field, v); }

inline Matrix mat(std::string_view text, FieldSpec field = kQ) {
  return parse_matrix(text, field);
}

inline CremonaMap cmap(std::string_view text, FieldSpec field = kQ) {
  return parse_map(text, field);
}

inline ProjPoint point(std::string_view text, FieldSpec field = kQ) {
  return parse_point(text, field);
}

inline CremonaMap sigma2() { return cmap("P^2: [x1*x2 : x0*x2 : x0*x1]"); }

}  // namespace cremona::testing
