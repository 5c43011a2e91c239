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
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cremona/scalar.hpp"

namespace cremona {

using Exponents = std::vector<std::uint32_t>;

unsigned total_degree(const Exponents& e);

// Strict "comes before" relation for graded reverse lexicographic order:
// higher total degree first, ties broken by the smaller exponent in the
// last variable where the two differ.
struct GrevlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial with exact coefficients. Terms are kept in
// descending grevlex order; zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Scalar, GrevlexGreater>;

  Polynomial() = default;
  Polynomial(FieldSpec field, std::size_t nvars);

  static Polynomial constant(const Scalar& c, std::size_t nvars);
  static Polynomial variable(FieldSpec field, std::size_t nvars,
                             std::size_t index);
  static Polynomial monomial(const Scalar& c, Exponents exponents);
  static Polynomial one(FieldSpec field, std::size_t nvars) {
    return constant(Scalar::one(field), nvars);
  }

  const FieldSpec& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  // nullopt is the zero polynomial's degree (minus infinity).
  std::optional<unsigned> total_degree() const;
  unsigned degree_in(std::size_t var) const;
  bool involves(std::size_t var) const { return degree_in(var) != 0; }
  // The zero polynomial counts as homogeneous.
  bool is_homogeneous() const;

  // Leading term in grevlex order; the polynomial must be nonzero.
  const Exponents& leading_exponents() const;
  const Scalar& leading_coefficient() const;
  Scalar constant_term() const;
  Scalar coefficient(const Exponents& e) const;

  // Scaled so the leading coefficient is 1; zero stays zero.
  Polynomial monic() const;

  void add_term(const Exponents& e, const Scalar& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Scalar& rhs);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& b) { return a *= b; }
  friend Polynomial operator*(const Scalar& b, Polynomial a) { return a *= b; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned exponent) const;

  // Throws ARITY_MISMATCH if point.size() != nvars().
  Scalar evaluate(std::span<const Scalar> point) const;

  // Replaces variable k by images[k]; the result lives in the images' ring.
  Polynomial substitute(std::span<const Polynomial> images) const;

  // Degree j -> homogeneous part of degree j (absent parts are omitted).
  std::map<unsigned, Polynomial> homogeneous_components() const;

  Polynomial derivative(std::size_t var) const;

  // Powers of `var` -> coefficient polynomials (which do not involve var).
  std::map<unsigned, Polynomial> coefficients_in(std::size_t var) const;

  // Content as a monomial: the componentwise minimum of all exponents.
  Exponents monomial_content() const;
  // Exact division by a monomial that divides every term.
  Polynomial divide_monomial(const Exponents& m) const;
  Polynomial multiply_monomial(const Exponents& m) const;

  Polynomial map_coefficients(
      const std::function<Scalar(const Scalar&)>& f) const;

  // Re-embeds into a ring with `nvars` variables, variable k -> k + offset.
  Polynomial shift_variables(std::size_t nvars, std::size_t offset) const;

 private:
  void require_compatible(const Polynomial& other) const;

  FieldSpec field_;
  std::size_t nvars_ = 0;
  TermMap terms_;
};

// Quotient a / b when b divides a exactly, nullopt otherwise. b != 0.
std::optional<Polynomial> exact_quotient(const Polynomial& a,
                                         const Polynomial& b);
// Like exact_quotient but throws PRECONDITION_VIOLATED on a nonzero remainder.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

// Monic greatest common divisor. Uses a recursive primitive PRS in the
// highest-indexed variable after pulling out the monomial content.
// gcd(0, 0) is 0.
Polynomial multivariate_gcd(const Polynomial& a, const Polynomial& b);
Polynomial multivariate_gcd(std::span<const Polynomial> polys);

// Pseudo-remainder of a by b viewed as polynomials in `var`.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b,
                            std::size_t var);

}  // namespace cremona
