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

#include "cremona/corpus.hpp"
#include "cremona/deformation.hpp"
#include "cremona/error.hpp"
#include "helpers.hpp"

namespace cremona {
namespace {

using testing::apoly;
using testing::cmap;
using testing::kQ;
using testing::mat;
using testing::point;
using testing::q;
using testing::sigma2;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvalidArgument;
}

CremonaMap affine_map(std::initializer_list<const char*> comps, std::size_t dim = 2) {
  std::vector<Polynomial> ps;
  for (const char* c : comps) ps.push_back(apoly(c, dim));
  return from_affine(std::span<const Polynomial>(ps));
}

TEST(Scaling, Basics) {
  EXPECT_TRUE(scaling_map(2, q(1)).is_identity());
  EXPECT_EQ(scaling_map(2, q(2)), cmap("P^2: [x0 : 2*x1 : 2*x2]"));
  EXPECT_EQ(compose(scaling_map(2, q(3)), scaling_map(2, q(5))), scaling_map(2, q(15)));
  EXPECT_EQ(code_of([] { scaling_map(2, q(0)); }), ErrorCode::kZeroParameter);
}

TEST(Family, SwapSquare) {
  const DeformationFamily fam = build_family(affine_map({"x2", "x1 + x2^2"}));
  // (y, x + t y^2), denominators 1.
  ASSERT_EQ(fam.numerators.size(), 2u);
  const TGraded n0 = {{0, apoly("x2", 2)}};
  const TGraded n1 = {{0, apoly("x1", 2)}, {1, apoly("x2^2", 2)}};
  const TGraded one = {{0, apoly("1", 2)}};
  EXPECT_EQ(fam.numerators[0], n0);
  EXPECT_EQ(fam.numerators[1], n1);
  EXPECT_EQ(fam.denominators[0], one);
  EXPECT_EQ(fam.denominators[1], one);

  const ExtendabilityVerdict v = extendability(fam);
  EXPECT_TRUE(v.extendable);
  ASSERT_TRUE(v.limit.has_value());
  EXPECT_EQ(v.limit->matrix(), mat("[[1,0,0],[0,0,1],[0,1,0]]"));
  EXPECT_TRUE(limit_vs_jacobian(affine_map({"x2", "x1 + x2^2"})));
}

TEST(Family, Involution) {
  const DeformationFamily fam = build_family(sigma2());
  // (1/x, 1/y) -> (t^-1 * 1 / (t x)) ... numerator t^-1 * 1, denominator t * x.
  const TGraded num = {{-1, apoly("1", 2)}};
  EXPECT_EQ(fam.numerators[0], num);
  EXPECT_EQ(fam.denominators[0], (TGraded{{1, apoly("x1", 2)}}));
  EXPECT_EQ(fam.denominators[1], (TGraded{{1, apoly("x2", 2)}}));
  const ExtendabilityVerdict v = extendability(fam);
  EXPECT_FALSE(v.extendable);
  EXPECT_EQ(v.p_i0_nonzero, (std::vector<bool>{true, true}));
  EXPECT_FALSE(v.limit.has_value());
  // Specialized at t: rho_t = (t^-2 / x, t^-2 / y).
  const auto at_two = fam.specialize(q(2));
  EXPECT_EQ(at_two[0], RationalFunction::make(apoly("1", 2), apoly("4*x1", 2)));
}

TEST(Family, TriangularHasIdentityLimit) {
  const ExtendabilityVerdict v = extendability(build_family(affine_map({"x1", "x2 + x1^2"})));
  EXPECT_TRUE(v.extendable);
  EXPECT_EQ(*v.limit, ProjLinear::identity(kQ, 2));
  EXPECT_TRUE(limit_vs_jacobian(affine_map({"x1 + x2^2", "x2"})));
}

TEST(Family, DiagonalIsConstant) {
  const CremonaMap d = ProjLinear::make(mat("[[1,0,0],[0,2,0],[0,0,3]]")).to_map();
  const DeformationFamily fam = build_family(d);
  EXPECT_EQ(fam.specialize(q(7)), fam.specialize(q(1)));
  EXPECT_EQ(fam.numerators[0], (TGraded{{0, apoly("2*x1", 2)}}));
}

TEST(Family, ContractionIsSingular) {
  const std::vector<RationalFunction> c = {RationalFunction::polynomial(apoly("x1", 2)),
                                           RationalFunction::polynomial(apoly("x1*x2", 2))};
  const ExtendabilityVerdict v = extendability(build_family(from_affine(c)));
  EXPECT_FALSE(v.extendable);
  EXPECT_TRUE(v.jacobian_singular);
  EXPECT_EQ(v.p_i0_nonzero, (std::vector<bool>{false, false}));
  EXPECT_EQ(v.q_i0_zero, (std::vector<bool>{false, false}));
}

TEST(Family, QFlag) {
  // (x / y, y): denominator of the first component vanishes at the origin.
  const std::vector<RationalFunction> fs = {
      RationalFunction::make(apoly("x1", 2), apoly("x2", 2)),
      RationalFunction::polynomial(apoly("x2", 2))};
  const ExtendabilityVerdict v = extendability(build_family(from_affine(fs)));
  EXPECT_FALSE(v.extendable);
  EXPECT_EQ(v.q_i0_zero, (std::vector<bool>{true, false}));
}

TEST(Family, LimitVsJacobianPrecondition) {
  EXPECT_EQ(code_of([] { limit_vs_jacobian(sigma2()); }), ErrorCode::kPreconditionViolated);
}

TEST(Family, SpecializationIdentity) {
  Rng rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t dim = 2 + rng.index(2);
    const CremonaMap f = random_birational_map(kQ, dim, rng);
    if (f.component(0).is_zero()) continue;
    const Scalar t0 = random_nonzero_scalar(kQ, rng);
    const CremonaMap beta = scaling_map(dim, t0);
    const CremonaMap beta_inv = scaling_map(dim, t0.inverse());
    EXPECT_EQ(build_family(f).specialize(t0),
              chart_functions(compose(compose(beta_inv, f), beta)));
  }
}

TEST(MovePoint, Examples) {
  EXPECT_EQ(move_point_to_origin(point("[1:0:0]")), ProjLinear::identity(kQ, 2));
  EXPECT_EQ(move_point_to_origin(point("[0:1:0]")).matrix(), mat("[[0,1,0],[1,0,0],[0,0,1]]"));
  const ProjPoint ones = point("[1:1:1]");
  EXPECT_EQ(move_point_to_origin(ones).apply(ones), ProjPoint::origin(kQ, 2));
}

TEST(Commutator, LinearPair) {
  const CremonaMap f = ProjLinear::make(mat("[[1,1,0],[0,1,0],[0,0,3]]")).to_map();
  const ProjLinear alpha = ProjLinear::make(mat("[[1,0,0],[0,2,0],[0,0,1]]"));
  const auto fam = commutator_family(f, std::nullopt, alpha, ProjPoint::origin(kQ, 2));
  const auto v = extendability(fam);
  EXPECT_TRUE(v.extendable);
  EXPECT_EQ(extendability(build_family(commutator(f, resolve_inverse(f, std::nullopt), alpha)))
                .extendable,
            v.extendable);
  const std::vector<Scalar> zero(2, q(0));
  EXPECT_EQ(*v.limit, linear_part_map(jacobian(
                          chart_functions(commutator(f, resolve_inverse(f, std::nullopt), alpha)),
                          zero)));
}

TEST(Commutator, TriangularAgainstDiagonal) {
  const CremonaMap f = affine_map({"x1", "x2 + x1^2"});
  const CremonaMap finv = affine_map({"x1", "x2 - x1^2"});
  const ProjLinear alpha = ProjLinear::make(mat("[[1,0,0],[0,1,0],[0,0,2]]"));
  const ProjPoint o = ProjPoint::origin(kQ, 2);
  const auto v = extendability(commutator_family(f, finv, alpha, o));
  EXPECT_TRUE(v.extendable);
  const CremonaMap c = commutator(f, finv, alpha);
  const std::vector<Scalar> zero(2, q(0));
  EXPECT_EQ(*v.limit, linear_part_map(jacobian(chart_functions(c), zero)));
  EXPECT_EQ(code_of([&] { commutator_family(f, sigma2(), alpha, o); }),
            ErrorCode::kMissingInverse);
  EXPECT_EQ(code_of([&] { commutator_family(f, std::nullopt, alpha, o); }),
            ErrorCode::kMissingInverse);
}

TEST(Commutator, InvolutionAtOnes) {
  const ProjPoint ones = point("[1:1:1]");
  const ProjLinear alpha = two_fixed_point_automorphism(ones, point("[1:0:0]"), q(2));
  const auto v = extendability(commutator_family(sigma2(), std::nullopt, alpha, ones));
  EXPECT_TRUE(v.extendable);
}

TEST(Format, Family) {
  const std::string text = format_family(build_family(affine_map({"x2", "x1 + x2^2"})));
  EXPECT_NE(text.find("rho_t[1]"), std::string::npos);
  EXPECT_NE(text.find("x2^2"), std::string::npos);
}

}  // namespace
}  // namespace cremona
