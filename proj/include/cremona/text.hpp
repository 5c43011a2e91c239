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
#include <string>
#include <string_view>
#include <vector>

#include "cremona/matrix.hpp"
#include "cremona/polynomial.hpp"

namespace cremona {

// Text forms shared by the CLI and the file formats.
//
// Polynomials: variables x<k>, integer and a/b literals, `i` in Q(i), `^`
// with a non-negative integer exponent, `*` explicit or implicit, `/` only by
// a nonzero constant, parentheses. Printing lists terms in grevlex order and
// re-parses to the same value.

// "Q", "Qi", "Fp:<prime>". Throws PARSE_ERROR or BAD_MODULUS.
FieldSpec parse_field(std::string_view text);

Scalar parse_scalar(std::string_view text, FieldSpec field);

// Variables are numbered from `first_var`, so affine maps can use x1..xd
// while homogeneous maps use x0..xd.
Polynomial parse_polynomial(std::string_view text, FieldSpec field,
                            std::size_t nvars, std::size_t first_var = 0);
std::string format_polynomial(const Polynomial& p, std::size_t first_var = 0);

// [[a,b],[c,d]]
Matrix parse_matrix(std::string_view text, FieldSpec field);

// [a:b:c], brackets optional.
std::vector<Scalar> parse_coordinates(std::string_view text, FieldSpec field);

// Splits on `sep` outside any bracket or parenthesis; pieces are trimmed.
std::vector<std::string> split_top_level(std::string_view text, char sep);
std::string_view trim(std::string_view text);
// Removes one matching pair of enclosing brackets; throws PARSE_ERROR if the
// text is not wrapped in open...close.
std::string_view strip_enclosing(std::string_view text, char open, char close);

}  // namespace cremona
