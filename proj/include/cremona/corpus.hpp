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
#include <string>
#include <vector>

#include "cremona/cremona_map.hpp"
#include "cremona/linear.hpp"
#include "cremona/random.hpp"

namespace cremona {

// Birational building blocks and randomized map corpora for the property
// suites. Everything here is built from maps known to be birational.

// [prod_{j != 0} x_j : ... : prod_{j != d} x_j]; degree d, an involution.
CremonaMap standard_involution(FieldSpec field, std::size_t dim);

ProjLinear random_proj_linear(FieldSpec field, std::size_t dim, Rng& rng);
// First column a multiple of e_0, so [1:0:...:0] is fixed.
ProjLinear random_linear_fixing_origin(FieldSpec field, std::size_t dim, Rng& rng);

// Homogenized elementary automorphism x_i -> x_i + p(other coordinates) on
// the chart x_0 != 0, deg p <= 2. With fix_origin, p(0) = 0.
CremonaMap random_elementary_map(FieldSpec field, std::size_t dim, Rng& rng,
                                 bool fix_origin);

// A^{-1} sigma A for a random A sending [1:0:...:0] to [1:1:...:1]: fixes
// the origin and is a local isomorphism there.
CremonaMap involution_fixing_origin(FieldSpec field, std::size_t dim, Rng& rng);

// x_i -> x_i x_j on the chart for random i != j: birational, fixes the
// origin, singular derivative there.
CremonaMap contraction_at_origin(FieldSpec field, std::size_t dim, Rng& rng);

enum class CorpusKind {
  kRegularFixed,  // product of local isomorphisms fixing the origin
  kBasePoint,     // regular ∘ sigma ∘ regular
  kMovesPoint,    // linear map moving the origin ∘ regular
  kContracting,   // regular ∘ contraction ∘ regular
};

std::string corpus_kind_name(CorpusKind kind);

struct CorpusEntry {
  CremonaMap map;
  CorpusKind kind;
  std::string recipe;
};

// One random entry of the given kind with degree <= max_degree.
CorpusEntry random_corpus_entry(FieldSpec field, std::size_t dim, CorpusKind kind,
                                Rng& rng, unsigned max_degree = 6);

// `count` entries cycling through the kinds, entry k drawn from
// Rng(Rng::mix(seed, k)).
std::vector<CorpusEntry> deformation_corpus(FieldSpec field, std::size_t dim,
                                            std::size_t count, std::uint64_t seed,
                                            unsigned max_degree = 6);

// A random birational map of degree <= max_degree (linear maps, elementary
// maps and the standard involution, composed).
CremonaMap random_birational_map(FieldSpec field, std::size_t dim, Rng& rng,
                                 unsigned max_degree = 3);

}  // namespace cremona
