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

#include <algorithm>

#include "cremona/error.hpp"
#include "cremona/polynomial.hpp"
#include "modular_gcd.hpp"

namespace cremona {

namespace {

bool divides(const Exponents& small, const Exponents& big) {
  for (std::size_t k = 0; k < small.size(); ++k) {
    if (small[k] > big[k]) return false;
  }
  return true;
}

Polynomial x_power(FieldSpec field, std::size_t nvars, std::size_t var,
                   unsigned e) {
  Exponents m(nvars, 0);
  m[var] = e;
  return Polynomial::monomial(Scalar::one(field), m);
}

// Highest-indexed variable occurring in a or b, or nvars if both are constant.
std::size_t main_variable(const Polynomial& a, const Polynomial& b) {
  for (std::size_t v = a.nvars(); v-- > 0;) {
    if (a.involves(v) || b.involves(v)) return v;
  }
  return a.nvars();
}

Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial g(p.field(), p.nvars());
  for (const auto& [deg, coeff] : p.coefficients_in(var)) {
    g = multivariate_gcd(g, coeff);
    if (g.is_one()) break;
  }
  return g;
}

Polynomial primitive_part_in(const Polynomial& p, std::size_t var) {
  return exact_divide(p, content_in(p, var));
}

// gcd of nonzero a, b that carry no monomial content.
Polynomial gcd_recursive(const Polynomial& a, const Polynomial& b) {
  const FieldSpec field = a.field();
  const std::size_t n = a.nvars();
  if (a.is_constant() || b.is_constant()) return Polynomial::one(field, n);
  const std::size_t v = main_variable(a, b);
  if (!a.involves(v)) return multivariate_gcd(a, content_in(b, v));
  if (!b.involves(v)) return multivariate_gcd(content_in(a, v), b);

  const Polynomial cont_a = content_in(a, v);
  const Polynomial cont_b = content_in(b, v);
  const Polynomial cont = multivariate_gcd(cont_a, cont_b);

  Polynomial r0 = exact_divide(a, cont_a);
  Polynomial r1 = exact_divide(b, cont_b);
  if (r0.degree_in(v) < r1.degree_in(v)) std::swap(r0, r1);
  while (true) {
    Polynomial rem = pseudo_remainder(r0, r1, v);
    if (rem.is_zero()) break;
    if (!rem.involves(v)) {
      r1 = Polynomial::one(field, n);
      break;
    }
    r0 = std::move(r1);
    r1 = primitive_part_in(rem, v);
  }
  return (cont * primitive_part_in(r1, v)).monic();
}

}  // namespace

std::optional<Polynomial> exact_quotient(const Polynomial& a,
                                         const Polynomial& b) {
  if (b.is_zero()) fail(ErrorCode::kDivisionByZero, "division by zero polynomial");
  if (a.field() != b.field() || a.nvars() != b.nvars()) {
    fail(ErrorCode::kArityMismatch, "incompatible polynomials in division");
  }
  const Exponents& lead_b = b.leading_exponents();
  const Scalar lead_b_inv = b.leading_coefficient().inverse();
  Polynomial q(a.field(), a.nvars());
  Polynomial r = a;
  Exponents m(a.nvars());
  while (!r.is_zero()) {
    const Exponents& lead_r = r.leading_exponents();
    if (!divides(lead_b, lead_r)) return std::nullopt;
    for (std::size_t k = 0; k < m.size(); ++k) m[k] = lead_r[k] - lead_b[k];
    const Scalar c = r.leading_coefficient() * lead_b_inv;
    q.add_term(m, c);
    r -= b.multiply_monomial(m) * c;
  }
  return q;
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  auto q = exact_quotient(a, b);
  if (!q) fail(ErrorCode::kPreconditionViolated, "division leaves a remainder");
  return *std::move(q);
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b,
                            std::size_t var) {
  if (b.is_zero()) fail(ErrorCode::kDivisionByZero, "pseudo-division by zero");
  const unsigned db = b.degree_in(var);
  const Polynomial lead_b = b.coefficients_in(var).rbegin()->second;
  Polynomial r = a;
  while (!r.is_zero()) {
    const unsigned dr = r.degree_in(var);
    if (dr < db) break;
    const Polynomial lead_r = r.coefficients_in(var).rbegin()->second;
    r = lead_b * r -
        lead_r * x_power(a.field(), a.nvars(), var, dr - db) * b;
  }
  return r;
}

Polynomial multivariate_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.field() != b.field()) fail(ErrorCode::kFieldMismatch, "gcd fields differ");
  if (a.nvars() != b.nvars()) fail(ErrorCode::kArityMismatch, "gcd arities differ");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  const Exponents ma = a.monomial_content();
  const Exponents mb = b.monomial_content();
  Exponents m(ma.size());
  for (std::size_t k = 0; k < m.size(); ++k) m[k] = std::min(ma[k], mb[k]);
  const Polynomial a1 = a.divide_monomial(ma);
  const Polynomial b1 = b.divide_monomial(mb);
  std::optional<Polynomial> fast;
  if (!a1.is_constant() && !b1.is_constant()) fast = detail::modular_gcd(a1, b1);
  const Polynomial g = fast ? *std::move(fast) : gcd_recursive(a1, b1);
  return g.multiply_monomial(m);
}

Polynomial multivariate_gcd(std::span<const Polynomial> polys) {
  if (polys.empty()) fail(ErrorCode::kInvalidArgument, "gcd of nothing");
  Polynomial g(polys.front().field(), polys.front().nvars());
  for (const Polynomial& p : polys) {
    g = multivariate_gcd(g, p);
    if (g.is_one()) break;
  }
  return g;
}

}  // namespace cremona
