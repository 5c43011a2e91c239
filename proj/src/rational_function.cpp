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

#include "cremona/rational_function.hpp"

#include "cremona/error.hpp"

namespace cremona {

RationalFunction RationalFunction::make(Polynomial numerator,
                                        Polynomial denominator) {
  if (denominator.is_zero()) {
    fail(ErrorCode::kDivisionByZero, "rational function with zero denominator");
  }
  if (numerator.field() != denominator.field()) {
    fail(ErrorCode::kFieldMismatch, "rational function fields differ");
  }
  if (numerator.nvars() != denominator.nvars()) {
    fail(ErrorCode::kArityMismatch, "rational function arities differ");
  }
  if (numerator.is_zero()) {
    return {std::move(numerator),
            Polynomial::one(denominator.field(), denominator.nvars())};
  }
  const Polynomial g = multivariate_gcd(numerator, denominator);
  if (!g.is_one()) {
    numerator = exact_divide(numerator, g);
    denominator = exact_divide(denominator, g);
  }
  const Scalar scale = denominator.leading_coefficient().inverse();
  return {numerator * scale, denominator * scale};
}

RationalFunction RationalFunction::polynomial(Polynomial p) {
  Polynomial one = Polynomial::one(p.field(), p.nvars());
  return {std::move(p), std::move(one)};
}

Scalar RationalFunction::evaluate(std::span<const Scalar> point) const {
  const Scalar den = denominator_.evaluate(point);
  if (den.is_zero()) fail(ErrorCode::kPoleAtPoint, "denominator vanishes");
  return numerator_.evaluate(point) / den;
}

Scalar RationalFunction::partial_at(std::size_t var,
                                    std::span<const Scalar> point) const {
  const Scalar den = denominator_.evaluate(point);
  if (den.is_zero()) fail(ErrorCode::kPoleAtPoint, "denominator vanishes");
  const Scalar num = numerator_.evaluate(point);
  const Scalar dnum = numerator_.derivative(var).evaluate(point);
  const Scalar dden = denominator_.derivative(var).evaluate(point);
  return (dnum * den - num * dden) / (den * den);
}

Matrix jacobian(std::span<const RationalFunction> fs,
                std::span<const Scalar> at) {
  if (fs.empty()) fail(ErrorCode::kArityMismatch, "jacobian of no functions");
  const std::size_t n = fs.front().nvars();
  if (at.size() != n) fail(ErrorCode::kArityMismatch, "jacobian point arity");
  Matrix j(fs.front().field(), fs.size(), n);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t k = 0; k < n; ++k) j(i, k) = fs[i].partial_at(k, at);
  }
  return j;
}

Matrix jacobian(std::span<const Polynomial> fs, std::span<const Scalar> at) {
  std::vector<RationalFunction> rs;
  rs.reserve(fs.size());
  for (const Polynomial& p : fs) rs.push_back(RationalFunction::polynomial(p));
  return jacobian(rs, at);
}

}  // namespace cremona
