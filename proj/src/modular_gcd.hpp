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

#include <optional>

#include "cremona/polynomial.hpp"

namespace cremona::detail {

// Monic gcd of two nonzero polynomials by dense modular interpolation.
// nullopt means the field is unsupported (small F_p) and the caller should
// fall back to the subresultant-free PRS.
std::optional<Polynomial> modular_gcd(const Polynomial& a, const Polynomial& b);

}  // namespace cremona::detail
