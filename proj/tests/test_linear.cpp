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
#include "cremona/error.hpp"
#include "cremona/linear.hpp"
#include "helpers.hpp"

namespace cremona {
namespace {

using testing::kQ;
using testing::kQi;
using testing::mat;
using testing::point;
using testing::q;

const FieldSpec kF5 = FieldSpec::prime(5);

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvalidArgument;
}

std::vector<ProjPoint> all_points(FieldSpec field, std::size_t dim, std::uint64_t p) {
  std::vector<ProjPoint> out;
  std::vector<long> c(dim + 1, 0);
  while (true) {
    bool nonzero = false;
    for (long v : c) nonzero |= v != 0;
    if (nonzero) {
      // Keep only representatives whose first nonzero coordinate is 1.
      std::size_t k = 0;
      while (c[k] == 0) ++k;
      if (c[k] == 1) {
        std::vector<Scalar> s;
        for (long v : c) s.push_back(Scalar(field, v));
        out.emplace_back(std::move(s));
      }
    }
    std::size_t k = 0;
    while (k <= dim && ++c[k] == static_cast<long>(p)) c[k++] = 0;
    if (k > dim) break;
  }
  return out;
}

TEST(ProjLinear, CanonicalScaling) {
  const ProjLinear a = ProjLinear::make(mat("[[0,2],[4,6]]"));
  EXPECT_EQ(a.matrix(), mat("[[0,1],[2,3]]"));
  EXPECT_EQ(code_of([] { ProjLinear::make(mat("[[1,2],[2,4]]")); }), ErrorCode::kSingular);
}

TEST(ProjLinear, GroupLaw) {
  const ProjLinear e1 = ProjLinear::make(mat("[[1,1],[0,1]]"));
  const ProjLinear e2 = ProjLinear::make(mat("[[1,2],[0,1]]"));
  EXPECT_EQ(proj_mul(e1, e2), ProjLinear::make(mat("[[1,3],[0,1]]")));
  EXPECT_EQ(proj_mul(e1, ProjLinear::make(mat("[[1,0],[1,1]]"))),
            ProjLinear::make(mat("[[2,1],[1,1]]")));
  EXPECT_EQ(proj_mul(e1, proj_inv(e1)), ProjLinear::identity(kQ, 1));
}

TEST(ProjLinear, TransposeInverse) {
  const ProjLinear g = ProjLinear::make(mat("[[1,2],[0,1]]", kF5));
  EXPECT_EQ(transpose_inverse(g).matrix(), mat("[[1,0],[3,1]]", kF5));
  EXPECT_EQ(transpose_inverse(transpose_inverse(g)), g);
  EXPECT_EQ(transpose_inverse(ProjLinear::identity(kQ, 2)), ProjLinear::identity(kQ, 2));
}

TEST(ProjLinear, Twist) {
  const auto conj = FieldAutomorphism::conjugation(kQi);
  const ProjLinear a = ProjLinear::make(mat("[[1,i],[0,1]]", kQi));
  EXPECT_EQ(twist(a, conj).matrix(), mat("[[1,-i],[0,1]]", kQi));
  EXPECT_EQ(twist(twist(a, conj), conj), a);
  EXPECT_EQ(twist(a, FieldAutomorphism::identity(kQi)), a);
  EXPECT_EQ(code_of([&] { twist(ProjLinear::identity(kQ, 1), conj); }),
            ErrorCode::kFieldMismatch);
}

TEST(Dieudonne, Forms) {
  const ProjLinear g = ProjLinear::make(mat("[[1,2],[0,1]]", kF5));
  const ProjLinear id = ProjLinear::identity(kF5, 1);
  const auto alpha = FieldAutomorphism::identity(kF5);
  EXPECT_EQ(apply_dieudonne({id, alpha, false}, g), g);
  EXPECT_EQ(apply_dieudonne({id, alpha, true}, g).matrix(), mat("[[1,0],[3,1]]", kF5));
}

TEST(Dieudonne, HomomorphismOverGaussian) {
  Rng rng(3);
  for (const bool dual : {false, true}) {
    for (const auto& alpha : {FieldAutomorphism::identity(kQi),
                              FieldAutomorphism::conjugation(kQi)}) {
      for (int trial = 0; trial < 10; ++trial) {
        const DieudonneAutomorphism phi{random_proj_linear(kQi, 2, rng), alpha, dual};
        const ProjLinear g = random_proj_linear(kQi, 2, rng);
        const ProjLinear h = random_proj_linear(kQi, 2, rng);
        EXPECT_EQ(apply_dieudonne(phi, proj_mul(g, h)),
                  proj_mul(apply_dieudonne(phi, g), apply_dieudonne(phi, h)));
      }
    }
  }
}

TEST(Gauss, HandExamples) {
  const auto f = gauss_decompose(mat("[[2,1],[1,1]]"));
  const std::vector<Transvection> expected = {{0, 1, q(1)}, {1, 0, q(1)}};
  EXPECT_EQ(f, expected);
  EXPECT_TRUE(gauss_decompose(Matrix::identity(kQ, 3)).empty());
  const auto e02 = gauss_decompose(mat("[[1,0,5],[0,1,0],[0,0,1]]"));
  const std::vector<Transvection> single = {{0, 2, q(5)}};
  EXPECT_EQ(e02, single);
  EXPECT_EQ(single[0].to_string(), "E02(5)");
  EXPECT_EQ(code_of([] { gauss_decompose(mat("[[2,0],[0,1]]")); }),
            ErrorCode::kNotUnimodular);
}

TEST(Gauss, RandomProducts) {
  Rng rng(8);
  EXPECT_EQ(decomposition_bound(2), 15u);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Transvection> word;
    const std::size_t len = 1 + rng.index(20);
    for (std::size_t k = 0; k < len; ++k) {
      const std::size_t i = rng.index(3);
      std::size_t j = rng.index(2);
      if (j >= i) ++j;
      word.push_back({i, j, random_nonzero_scalar(kQ, rng)});
    }
    const Matrix a = product(word, kQ, 3);
    const auto f = gauss_decompose(a);
    EXPECT_EQ(product(f, kQ, 3), a);
    EXPECT_LE(f.size(), decomposition_bound(2));
  }
}

TEST(Congruence, Examples) {
  EXPECT_TRUE(in_congruence_subgroup(parse_int_matrix("[[1,3],[0,1]]"), 3));
  EXPECT_FALSE(in_congruence_subgroup(parse_int_matrix("[[1,1],[0,1]]"), 3));
  EXPECT_TRUE(in_congruence_subgroup(IntMatrix::identity(3), 7));
  EXPECT_EQ(code_of([] { in_congruence_subgroup(IntMatrix::identity(2), 4); }),
            ErrorCode::kBadModulus);
  EXPECT_EQ(code_of([] { in_congruence_subgroup(IntMatrix::identity(2), 2); }),
            ErrorCode::kBadModulus);
  EXPECT_EQ(code_of([] { in_congruence_subgroup(parse_int_matrix("[[2,0],[0,1]]"), 3); }),
            ErrorCode::kNotUnimodular);
  const IntMatrix a = parse_int_matrix("[[1,3],[3,10]]");
  EXPECT_EQ(a.inverse() * a, IntMatrix::identity(2));
}

TEST(TwoFixedPoints, JordanExample) {
  const ProjLinear a = two_fixed_point_automorphism(point("[1:0:0]"), point("[0:0:1]"), q(2));
  EXPECT_EQ(a.matrix(), mat("[[1,1,0],[0,1,0],[0,0,2]]"));
  EXPECT_EQ(a.apply(point("[1:0:0]")), point("[1:0:0]"));
  EXPECT_EQ(a.apply(point("[0:0:1]")), point("[0:0:1]"));
}

TEST(TwoFixedPoints, ExhaustiveScanF5) {
  const auto pts = all_points(kF5, 2, 5);
  ASSERT_EQ(pts.size(), 31u);
  const ProjPoint p = point("[1:0:0]", kF5), qq = point("[0:0:1]", kF5);
  const ProjLinear a = two_fixed_point_automorphism(p, qq, Scalar(kF5, 2));
  std::vector<ProjPoint> fixed;
  for (const auto& x : pts) {
    if (a.apply(x) == x) fixed.push_back(x);
  }
  const std::vector<ProjPoint> expected = {p, qq};
  EXPECT_EQ(fixed, expected);
}

TEST(TwoFixedPoints, RandomPairsF5) {
  const auto pts = all_points(kF5, 2, 5);
  Rng rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const ProjPoint& p = pts[rng.index(pts.size())];
    const ProjPoint& qq = pts[rng.index(pts.size())];
    if (p == qq) continue;
    const ProjLinear a = two_fixed_point_automorphism(p, qq, Scalar(kF5, static_cast<long>(2 + rng.index(3))));
    std::size_t count = 0;
    for (const auto& x : pts) count += a.apply(x) == x;
    EXPECT_EQ(count, 2u);
    EXPECT_EQ(a.apply(p), p);
    EXPECT_EQ(a.apply(qq), qq);
  }
}

TEST(TwoFixedPoints, Errors) {
  EXPECT_EQ(code_of([] { two_fixed_point_automorphism(point("[1:0:0]"), point("[1:0:0]"), q(2)); }),
            ErrorCode::kDegeneratePair);
  EXPECT_EQ(code_of([] { two_fixed_point_automorphism(point("[1:0:0]"), point("[0:1:0]"), q(1)); }),
            ErrorCode::kBadEigenvalue);
  EXPECT_EQ(code_of([] { two_fixed_point_automorphism(point("[1:0:0]"), point("[0:1:0]"), q(0)); }),
            ErrorCode::kBadEigenvalue);
}

}  // namespace
}  // namespace cremona
