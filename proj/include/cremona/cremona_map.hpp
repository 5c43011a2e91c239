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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cremona/polynomial.hpp"
#include "cremona/rational_function.hpp"

namespace cremona {

// A k-rational point of P^d, scaled so its first nonzero coordinate is 1.
class ProjPoint {
 public:
  // Throws ZERO_POINT if every coordinate vanishes.
  explicit ProjPoint(std::vector<Scalar> coords);
  // [1:0:...:0]
  static ProjPoint origin(FieldSpec field, std::size_t dim);

  const std::vector<Scalar>& coords() const { return coords_; }
  std::size_t dim() const { return coords_.size() - 1; }
  const FieldSpec& field() const { return coords_.front().field(); }
  // Index of the first nonzero coordinate (whose value is 1).
  std::size_t pivot() const;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

  std::string to_string() const;

 private:
  std::vector<Scalar> coords_;
};

ProjPoint parse_point(std::string_view text, FieldSpec field);

// A Cremona transformation [f_0 : ... : f_d] of P^d: homogeneous components
// of one degree with no common factor, scaled so the leading coefficient of
// the first nonzero component is 1. Equality of maps is plain equality of
// this reduced tuple.
class CremonaMap {
 public:
  // Divides out the gcd and normalizes the scalar. Throws NOT_HOMOGENEOUS,
  // DEGREE_MISMATCH, or ZERO_MAP (also for tuples that reduce to constants).
  static CremonaMap make(std::vector<Polynomial> components);
  static CremonaMap identity(FieldSpec field, std::size_t dim);

  const FieldSpec& field() const { return components_.front().field(); }
  std::size_t dim() const { return components_.size() - 1; }
  unsigned degree() const { return degree_; }
  const std::vector<Polynomial>& components() const { return components_; }
  const Polynomial& component(std::size_t i) const { return components_[i]; }

  bool is_identity() const;

  friend bool operator==(const CremonaMap& a, const CremonaMap& b) {
    return a.components_ == b.components_;
  }

 private:
  CremonaMap(std::vector<Polynomial> components, unsigned degree)
      : components_(std::move(components)), degree_(degree) {}

  std::vector<Polynomial> components_;
  unsigned degree_ = 1;
};

// f ∘ g: substitutes g's components into f, then reduces.
CremonaMap compose(const CremonaMap& f, const CremonaMap& g);

// True when every component vanishes at p.
bool is_indeterminate(const CremonaMap& f, const ProjPoint& p);
// Throws INDETERMINATE_AT_POINT at base points.
ProjPoint apply(const CremonaMap& f, const ProjPoint& p);
bool is_fixed_point(const CremonaMap& f, const ProjPoint& p);

// Defined at p and the Jacobian of the affine representation (source chart
// at p's first nonzero coordinate, target chart at f(p)'s) is invertible.
bool is_local_isomorphism(const CremonaMap& f, const ProjPoint& p);

// The affine representation of f on the chart x_{source} != 0 into the chart
// x_{target} != 0, as the d reduced fractions f_k / f_target (k != target)
// in the coordinates x_j (j != source), ordered by index.
std::vector<RationalFunction> affine_representation(const CremonaMap& f,
                                                    std::size_t source,
                                                    std::size_t target);

// Throws EMPTY_FAMILY.
unsigned max_degree(std::span<const CremonaMap> family);

// Homogeneous pieces of the chart form on x_0 != 0:
//   F_i = (sum_j P_ij) / (sum_j Q_ij),  i = 1..d (stored 0-based),
// with each F_i in lowest terms and a monic denominator.
struct ChartDecomposition {
  FieldSpec field;
  std::size_t dim = 0;
  std::vector<std::map<unsigned, Polynomial>> numerators;
  std::vector<std::map<unsigned, Polynomial>> denominators;

  std::vector<RationalFunction> functions() const;

  friend bool operator==(const ChartDecomposition&,
                         const ChartDecomposition&) = default;
};

// Reduced chart functions F_1..F_d. Throws CHART_DEGENERATE when f_0 is zero.
std::vector<RationalFunction> chart_functions(const CremonaMap& f);
ChartDecomposition to_chart(const CremonaMap& f);
CremonaMap from_chart(const ChartDecomposition& dec);

// Homogenizes the affine map x -> (F_1(x), ..., F_d(x)) on the chart
// x_0 != 0 into a Cremona map of P^d.
CremonaMap from_affine(std::span<const RationalFunction> fs);
CremonaMap from_affine(std::span<const Polynomial> fs);

// x0^e * p(x1/x0, ..., xd/x0) with e = deg p when degree is omitted.
Polynomial homogenize(const Polynomial& p, unsigned degree);
// p(1, x1, ..., xd) in d variables.
Polynomial dehomogenize(const Polynomial& p);

// Text form "P^d: [f_0 : ... : f_d]".
CremonaMap parse_map(std::string_view text, FieldSpec field);
std::string format_map(const CremonaMap& f);

}  // namespace cremona
