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

#include <span>
#include <vector>

#include "cremona/matrix.hpp"
#include "cremona/polynomial.hpp"

namespace cremona {

// numerator / denominator in lowest terms with a monic denominator.
class RationalFunction {
 public:
  // Throws DIVISION_BY_ZERO for a zero denominator.
  static RationalFunction make(Polynomial numerator, Polynomial denominator);
  static RationalFunction polynomial(Polynomial p);

  const Polynomial& numerator() const { return numerator_; }
  const Polynomial& denominator() const { return denominator_; }
  const FieldSpec& field() const { return numerator_.field(); }
  std::size_t nvars() const { return numerator_.nvars(); }

  bool is_polynomial() const { return denominator_.is_one(); }

  // Throws POLE_AT_POINT where the denominator vanishes.
  Scalar evaluate(std::span<const Scalar> point) const;
  // d/dx_var by the quotient rule, evaluated at the point.
  Scalar partial_at(std::size_t var, std::span<const Scalar> point) const;

  friend bool operator==(const RationalFunction&,
                         const RationalFunction&) = default;

 private:
  RationalFunction(Polynomial n, Polynomial d)
      : numerator_(std::move(n)), denominator_(std::move(d)) {}

  Polynomial numerator_;
  Polynomial denominator_;
};

// Matrix of partials d f_i / d x_j at the point.
Matrix jacobian(std::span<const RationalFunction> fs,
                std::span<const Scalar> at);
Matrix jacobian(std::span<const Polynomial> fs, std::span<const Scalar> at);

}  // namespace cremona
