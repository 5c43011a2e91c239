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

#include <gtest/gtest.h>

#include "cremona/error.hpp"
#include "cremona/random.hpp"
#include "cremona/rational_function.hpp"
#include "helpers.hpp"

namespace cremona {
namespace {

using testing::apoly;
using testing::hpoly;
using testing::kQ;
using testing::q;

TEST(Polynomial, GrevlexOrder) {
  // x0^2 > x0x1 > x1^2 > x0x2 > x1x2 > x2^2 in grevlex.
  const Polynomial p = hpoly("x2^2 + x1*x2 + x0*x2 + x1^2 + x0*x1 + x0^2", 3);
  std::vector<Exponents> order;
  for (const auto& [e, c] : p.terms()) order.push_back(e);
  const std::vector<Exponents> expected = {{2, 0, 0}, {1, 1, 0}, {0, 2, 0},
                                           {1, 0, 1}, {0, 1, 1}, {0, 0, 2}};
  EXPECT_EQ(order, expected);
  EXPECT_EQ(format_polynomial(p), "x0^2 + x0*x1 + x1^2 + x0*x2 + x1*x2 + x2^2");
}

TEST(Polynomial, Arithmetic) {
  const Polynomial a = hpoly("x0 + x1", 2);
  const Polynomial b = hpoly("x0 - x1", 2);
  EXPECT_EQ(a * b, hpoly("x0^2 - x1^2", 2));
  EXPECT_EQ(a.pow(3), hpoly("x0^3 + 3*x0^2*x1 + 3*x0*x1^2 + x1^3", 2));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_FALSE((a - a).total_degree().has_value());
  EXPECT_EQ(*(a * b).total_degree(), 2u);
}

TEST(Polynomial, EvaluateAndSubstitute) {
  const Polynomial p = apoly("x1^2*x2 - 3*x2 + 1", 2);
  const std::vector<Scalar> at = {q(2), q(5)};
  EXPECT_EQ(p.evaluate(at), q(6));
  const std::vector<Polynomial> images = {apoly("x2", 2), apoly("x1 + x2^2", 2)};
  EXPECT_EQ(p.substitute(images), apoly("x2^2*x1 + x2^4 - 3*x1 - 3*x2^2 + 1", 2));
  const std::vector<Scalar> bad = {q(1)};
  EXPECT_THROW(p.evaluate(bad), Error);
}

TEST(Polynomial, HomogeneousComponents) {
  const Polynomial p = apoly("1 + x1 - x2 + x1*x2 + x2^3", 2);
  const auto parts = p.homogeneous_components();
  ASSERT_EQ(parts.size(), 4u);
  EXPECT_EQ(parts.at(0), apoly("1", 2));
  EXPECT_EQ(parts.at(1), apoly("x1 - x2", 2));
  EXPECT_EQ(parts.at(2), apoly("x1*x2", 2));
  EXPECT_EQ(parts.at(3), apoly("x2^3", 2));
  EXPECT_TRUE(parts.at(2).is_homogeneous());
  EXPECT_FALSE(p.is_homogeneous());
}

TEST(Polynomial, ExactDivision) {
  const Polynomial a = hpoly("x0^2 - x1^2", 2);
  EXPECT_EQ(*exact_quotient(a, hpoly("x0 - x1", 2)), hpoly("x0 + x1", 2));
  EXPECT_FALSE(exact_quotient(a, hpoly("x0 + 2*x1", 2)).has_value());
  EXPECT_THROW(exact_divide(a, hpoly("x0 + 2*x1", 2)), Error);
}

TEST(Gcd, HandExamples) {
  EXPECT_EQ(multivariate_gcd(hpoly("x0^2*x1*x2", 3), hpoly("x0*x1^2*x2", 3)),
            hpoly("x0*x1*x2", 3));
  EXPECT_EQ(multivariate_gcd(hpoly("x0^2 - x1^2", 2), hpoly("2*x0^2 + 2*x0*x1", 2)),
            hpoly("x0 + x1", 2));
  EXPECT_TRUE(multivariate_gcd(hpoly("x0 + x1", 2), hpoly("x0 - x1", 2)).is_one());
  EXPECT_EQ(multivariate_gcd(Polynomial(kQ, 2), hpoly("3*x0", 2)), hpoly("x0", 2));
}

class GcdRandom : public ::testing::TestWithParam<const char*> {};

TEST_P(GcdRandom, CommonFactorIsRecovered) {
  const FieldSpec field = parse_field(GetParam());
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng.index(3);
    const Polynomial g = random_polynomial(field, n, 3, 4, rng);
    const Polynomial a = random_polynomial(field, n, 3, 4, rng);
    const Polynomial b = random_polynomial(field, n, 3, 4, rng);
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    const Polynomial ga = g * a;
    const Polynomial gb = g * b;
    const Polynomial d = multivariate_gcd(ga, gb);
    EXPECT_EQ(d, d.monic());
    EXPECT_TRUE(exact_quotient(d, g).has_value())
        << format_polynomial(ga) << " | " << format_polynomial(gb);
    const Polynomial ca = exact_divide(ga, d);
    const Polynomial cb = exact_divide(gb, d);
    EXPECT_TRUE(multivariate_gcd(ca, cb).is_one());
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, GcdRandom,
                         ::testing::Values("Q", "Qi", "Fp:1000003", "Fp:7", "Fp:2", "Fp:2003"));

TEST(Gcd, DenseHomogeneous) {
  // Degree-8 composites of the kind composition produces.
  Rng rng(19);
  for (int trial = 0; trial < 5; ++trial) {
    const Polynomial g = random_homogeneous(kQ, 3, 3, 6, rng, 50);
    const Polynomial a = random_homogeneous(kQ, 3, 5, 12, rng, 50);
    const Polynomial b = random_homogeneous(kQ, 3, 5, 12, rng, 50);
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    const Polynomial d = multivariate_gcd(g * a, g * b);
    EXPECT_TRUE(exact_quotient(d, g).has_value());
    EXPECT_TRUE(multivariate_gcd(exact_divide(g * a, d), exact_divide(g * b, d)).is_one());
  }
}

TEST(Gcd, PrimeField) {
  const FieldSpec f3 = FieldSpec::prime(3);
  const Polynomial a = hpoly("x0^3 - x1^3", 2, f3);  // = (x0 - x1)^3 mod 3
  const Polynomial b = hpoly("x0^2 + x0*x1 + x1^2", 2, f3);  // = (x0 - x1)^2
  EXPECT_EQ(multivariate_gcd(a, b), hpoly("x0^2 + x0*x1 + x1^2", 2, f3));
}

TEST(Gcd, Gaussian) {
  const FieldSpec qi = FieldSpec::gaussian();
  const Polynomial a = hpoly("x0^2 + x1^2", 2, qi);
  const Polynomial b = hpoly("x0^2 + 2*i*x0*x1 - x1^2", 2, qi);  // (x0 + i x1)^2
  EXPECT_EQ(multivariate_gcd(a, b), hpoly("x0 + i*x1", 2, qi));
}

TEST(RationalFunction, ReducesAndNormalizes) {
  const auto f = RationalFunction::make(apoly("2*x1^2 - 2*x2^2", 2), apoly("3*x1 + 3*x2", 2));
  EXPECT_EQ(f.numerator(), apoly("2/3*x1 - 2/3*x2", 2));
  EXPECT_EQ(f.denominator(), apoly("1", 2));
  EXPECT_TRUE(f.is_polynomial());
  EXPECT_THROW(RationalFunction::make(apoly("1", 2), Polynomial(kQ, 2)), Error);
}

TEST(RationalFunction, PoleAtPoint) {
  const auto f = RationalFunction::make(apoly("1", 2), apoly("x1", 2));
  const std::vector<Scalar> origin = {q(0), q(0)};
  try {
    f.evaluate(origin);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPoleAtPoint);
  }
}

TEST(Jacobian, ChainRule) {
  // J(f o g)(x) = J(f)(g(x)) J(g)(x) on random polynomial maps.
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Polynomial> f, g;
    for (int k = 0; k < 2; ++k) {
      f.push_back(random_polynomial(kQ, 2, 3, 4, rng));
      g.push_back(random_polynomial(kQ, 2, 3, 4, rng));
    }
    const std::vector<Scalar> x = {random_scalar(kQ, rng), random_scalar(kQ, rng)};
    std::vector<Scalar> gx;
    for (const auto& gi : g) gx.push_back(gi.evaluate(x));
    std::vector<Polynomial> fg;
    for (const auto& fi : f) fg.push_back(fi.substitute(g));
    EXPECT_EQ(jacobian(std::span<const Polynomial>(fg), x),
              jacobian(std::span<const Polynomial>(f), gx) *
                  jacobian(std::span<const Polynomial>(g), x));
  }
}

TEST(Jacobian, QuotientRule) {
  // d/dx (x / (1 + y)) at (1, 1) = 1/2, d/dy = -1/4.
  const std::vector<RationalFunction> fs = {
      RationalFunction::make(apoly("x1", 2), apoly("1 + x2", 2))};
  const std::vector<Scalar> at = {q(1), q(1)};
  const Matrix j = jacobian(fs, at);
  EXPECT_EQ(j(0, 0), Scalar(kQ, mpq_class(1, 2)));
  EXPECT_EQ(j(0, 1), Scalar(kQ, mpq_class(-1, 4)));
}

}  // namespace
}  // namespace cremona
