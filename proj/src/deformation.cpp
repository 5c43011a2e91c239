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

#include "cremona/deformation.hpp"

#include "cremona/error.hpp"
#include "cremona/text.hpp"

namespace cremona {

namespace {

Polynomial specialize_graded(const TGraded& graded, const Scalar& t0,
                             FieldSpec field, std::size_t nvars) {
  Polynomial sum(field, nvars);
  for (const auto& [k, p] : graded) sum += p * t0.pow(k);
  return sum;
}

std::string format_graded(const TGraded& graded) {
  if (graded.empty()) return "0";
  std::string out;
  for (const auto& [k, p] : graded) {
    if (!out.empty()) out += " + ";
    std::string factor = k == 0 ? "" : k == 1 ? "t*" : "t^" + std::to_string(k) + "*";
    out += factor + "(" + format_polynomial(p, 1) + ")";
  }
  return out;
}

}  // namespace

std::vector<RationalFunction> DeformationFamily::specialize(const Scalar& t0) const {
  if (t0.is_zero()) fail(ErrorCode::kZeroParameter, "family specialized at t = 0");
  std::vector<RationalFunction> fs;
  for (std::size_t i = 0; i < dim; ++i) {
    fs.push_back(RationalFunction::make(
        specialize_graded(numerators[i], t0, source.field(), dim),
        specialize_graded(denominators[i], t0, source.field(), dim)));
  }
  return fs;
}

CremonaMap scaling_map(std::size_t dim, const Scalar& t) {
  if (t.is_zero()) fail(ErrorCode::kZeroParameter, "beta_t needs t != 0");
  Matrix m = Matrix::scalar(t, dim + 1);
  m(0, 0) = Scalar::one(t.field());
  return ProjLinear::make(std::move(m)).to_map();
}

DeformationFamily build_family(const CremonaMap& f) {
  const ChartDecomposition dec = to_chart(f);
  DeformationFamily family{f, f.dim(), f.degree(), {}, {}};
  for (std::size_t i = 0; i < dec.dim; ++i) {
    TGraded num;
    TGraded den;
    // beta_t^{-1} F_i(t x) = (sum_j t^j P_ij) / (t sum_j t^j Q_ij).
    for (const auto& [j, p] : dec.numerators[i]) num.emplace(static_cast<int>(j) - 1, p);
    for (const auto& [j, q] : dec.denominators[i]) den.emplace(static_cast<int>(j), q);
    family.numerators.push_back(std::move(num));
    family.denominators.push_back(std::move(den));
  }
  return family;
}

ExtendabilityVerdict extendability(const DeformationFamily& family) {
  const std::size_t d = family.dim;
  const FieldSpec field = family.source.field();
  ExtendabilityVerdict verdict;
  verdict.p_i0_nonzero.assign(d, false);
  verdict.q_i0_zero.assign(d, false);
  bool defined = true;
  for (std::size_t i = 0; i < d; ++i) {
    verdict.p_i0_nonzero[i] = family.numerators[i].contains(-1);
    verdict.q_i0_zero[i] = !family.denominators[i].contains(0);
    defined = defined && !verdict.p_i0_nonzero[i] && !verdict.q_i0_zero[i];
  }
  if (!defined) return verdict;

  Matrix block(field, d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const Scalar q0 = family.denominators[i].at(0).constant_term();
    auto linear = family.numerators[i].find(0);
    if (linear == family.numerators[i].end()) continue;
    for (std::size_t k = 0; k < d; ++k) {
      Exponents e(d, 0);
      e[k] = 1;
      block(i, k) = linear->second.coefficient(e) / q0;
    }
  }
  if (!block.is_invertible()) {
    verdict.jacobian_singular = true;
    return verdict;
  }
  verdict.extendable = true;
  verdict.limit = linear_part_map(block);
  return verdict;
}

ProjLinear linear_part_map(const Matrix& jacobian_block) {
  const std::size_t d = jacobian_block.rows();
  Matrix m(jacobian_block.field(), d + 1, d + 1);
  m(0, 0) = Scalar::one(jacobian_block.field());
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) m(i + 1, k + 1) = jacobian_block(i, k);
  }
  return ProjLinear::make(std::move(m));
}

bool limit_vs_jacobian(const CremonaMap& f) {
  const ProjPoint origin = ProjPoint::origin(f.field(), f.dim());
  if (!is_fixed_point(f, origin)) {
    fail(ErrorCode::kPreconditionViolated, "map does not fix [1:0:...:0]");
  }
  if (!is_local_isomorphism(f, origin)) {
    fail(ErrorCode::kPreconditionViolated, "map is not a local isomorphism at [1:0:...:0]");
  }
  const ExtendabilityVerdict verdict = extendability(build_family(f));
  if (!verdict.limit) return false;
  const std::vector<Scalar> zero(f.dim(), Scalar::zero(f.field()));
  const Matrix j = jacobian(chart_functions(f), zero);
  return *verdict.limit == linear_part_map(j);
}

ProjLinear move_point_to_origin(const ProjPoint& p) {
  const FieldSpec field = p.field();
  const std::size_t n = p.dim() + 1;
  const std::size_t k = p.pivot();
  Matrix swap = Matrix::identity(field, n);
  if (k != 0) {
    swap(0, 0) = swap(k, k) = Scalar::zero(field);
    swap(0, k) = swap(k, 0) = Scalar::one(field);
  }
  std::vector<Scalar> moved = p.coords();
  std::swap(moved[0], moved[k]);
  Matrix shear = Matrix::identity(field, n);
  for (std::size_t r = 1; r < n; ++r) shear(r, 0) = -moved[r];
  return ProjLinear::make(shear * swap);
}

CremonaMap commutator(const CremonaMap& f, const CremonaMap& f_inverse,
                      const ProjLinear& alpha) {
  const CremonaMap a = alpha.to_map();
  const CremonaMap a_inv = proj_inv(alpha).to_map();
  return compose(a_inv, compose(f_inverse, compose(a, f)));
}

CremonaMap resolve_inverse(const CremonaMap& f,
                           const std::optional<CremonaMap>& f_inverse) {
  if (f_inverse) {
    if (!compose(*f_inverse, f).is_identity() || !compose(f, *f_inverse).is_identity()) {
      fail(ErrorCode::kMissingInverse, "supplied inverse does not invert the map");
    }
    return *f_inverse;
  }
  if (f.degree() == 1) return proj_inv(ProjLinear::from_map(f)).to_map();
  if (compose(f, f).is_identity()) return f;
  fail(ErrorCode::kMissingInverse, "no inverse supplied for a map of degree " +
                                       std::to_string(f.degree()));
}

DeformationFamily commutator_family(const CremonaMap& f,
                                    const std::optional<CremonaMap>& f_inverse,
                                    const ProjLinear& alpha, const ProjPoint& p) {
  const CremonaMap c = commutator(f, resolve_inverse(f, f_inverse), alpha);
  if (!is_fixed_point(c, p) || !is_local_isomorphism(c, p)) {
    fail(ErrorCode::kPreconditionViolated,
         "commutator must fix " + p.to_string() + " and be a local isomorphism there");
  }
  const ProjLinear move = move_point_to_origin(p);
  return build_family(
      compose(move.to_map(), compose(c, proj_inv(move).to_map())));
}

std::string format_family(const DeformationFamily& family) {
  std::string out;
  for (std::size_t i = 0; i < family.dim; ++i) {
    out += "rho_t[" + std::to_string(i + 1) + "] = (" +
           format_graded(family.numerators[i]) + ") / (" +
           format_graded(family.denominators[i]) + ")\n";
  }
  return out;
}

}  // namespace cremona
