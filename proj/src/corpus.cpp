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

#include "cremona/corpus.hpp"

#include "cremona/deformation.hpp"
#include "cremona/error.hpp"

namespace cremona {

namespace {

CremonaMap random_regular_factor(FieldSpec field, std::size_t dim, Rng& rng) {
  switch (rng.index(3)) {
    case 0: return random_linear_fixing_origin(field, dim, rng).to_map();
    case 1: return random_elementary_map(field, dim, rng, true);
    default: return involution_fixing_origin(field, dim, rng);
  }
}

// Factors whose composite would exceed `cap` before reduction are dropped;
// huge substitutions are slow and almost never reduce below the final bound.
CremonaMap random_regular(FieldSpec field, std::size_t dim, Rng& rng,
                          std::size_t max_factors, unsigned cap, std::string& recipe) {
  const std::size_t factors = 1 + rng.index(max_factors);
  CremonaMap f = random_regular_factor(field, dim, rng);
  std::size_t used = 1;
  for (std::size_t k = 1; k < factors; ++k) {
    CremonaMap g = random_regular_factor(field, dim, rng);
    if (f.degree() * g.degree() > cap) continue;
    f = compose(f, g);
    ++used;
  }
  recipe += "regular^" + std::to_string(used);
  return f;
}

}  // namespace

CremonaMap standard_involution(FieldSpec field, std::size_t dim) {
  std::vector<Polynomial> components;
  for (std::size_t i = 0; i <= dim; ++i) {
    Exponents e(dim + 1, 1);
    e[i] = 0;
    components.push_back(Polynomial::monomial(Scalar::one(field), e));
  }
  return CremonaMap::make(std::move(components));
}

ProjLinear random_proj_linear(FieldSpec field, std::size_t dim, Rng& rng) {
  return ProjLinear::make(random_invertible_matrix(field, dim + 1, rng, 3));
}

ProjLinear random_linear_fixing_origin(FieldSpec field, std::size_t dim, Rng& rng) {
  while (true) {
    Matrix m = random_matrix(field, dim + 1, dim + 1, rng, 3);
    for (std::size_t r = 1; r <= dim; ++r) m(r, 0) = Scalar::zero(field);
    if (m.is_invertible()) return ProjLinear::make(std::move(m));
  }
}

CremonaMap random_elementary_map(FieldSpec field, std::size_t dim, Rng& rng,
                                 bool fix_origin) {
  const std::size_t target = rng.index(dim);
  Polynomial p(field, dim);
  while (p.is_zero() || p.involves(target)) {
    p = random_polynomial(field, dim, 2, 3, rng, 3);
    if (fix_origin) p -= Polynomial::constant(p.constant_term(), dim);
    // Drop terms in the target variable.
    Polynomial kept(field, dim);
    for (const auto& [e, c] : p.terms()) {
      if (e[target] == 0) kept.add_term(e, c);
    }
    p = kept;
  }
  std::vector<Polynomial> affine;
  for (std::size_t k = 0; k < dim; ++k) {
    Polynomial x = Polynomial::variable(field, dim, k);
    if (k == target) x += p;
    affine.push_back(std::move(x));
  }
  return from_affine(std::span<const Polynomial>(affine));
}

CremonaMap involution_fixing_origin(FieldSpec field, std::size_t dim, Rng& rng) {
  const ProjPoint ones(std::vector<Scalar>(dim + 1, Scalar::one(field)));
  // a(origin) = ones.
  const ProjLinear a = proj_mul(proj_inv(move_point_to_origin(ones)),
                                random_linear_fixing_origin(field, dim, rng));
  return compose(proj_inv(a).to_map(),
                 compose(standard_involution(field, dim), a.to_map()));
}

CremonaMap contraction_at_origin(FieldSpec field, std::size_t dim, Rng& rng) {
  const std::size_t i = rng.index(dim);
  std::size_t j = rng.index(dim - 1);
  if (j >= i) ++j;
  std::vector<RationalFunction> affine;
  for (std::size_t k = 0; k < dim; ++k) {
    Polynomial x = Polynomial::variable(field, dim, k);
    if (k == i) x *= Polynomial::variable(field, dim, j);
    affine.push_back(RationalFunction::polynomial(std::move(x)));
  }
  return from_affine(affine);
}

std::string corpus_kind_name(CorpusKind kind) {
  switch (kind) {
    case CorpusKind::kRegularFixed: return "regular_fixed";
    case CorpusKind::kBasePoint: return "base_point";
    case CorpusKind::kMovesPoint: return "moves_point";
    case CorpusKind::kContracting: return "contracting";
  }
  return "?";
}

CorpusEntry random_corpus_entry(FieldSpec field, std::size_t dim, CorpusKind kind,
                                Rng& rng, unsigned max_degree) {
  const unsigned cap = 2 * max_degree;
  const auto too_big = [&](const CremonaMap& a, unsigned middle, const CremonaMap& b) {
    return a.degree() * middle * b.degree() > cap;
  };
  while (true) {
    std::string recipe;
    CremonaMap f = CremonaMap::identity(field, dim);
    switch (kind) {
      case CorpusKind::kRegularFixed:
        f = random_regular(field, dim, rng, 3, cap, recipe);
        break;
      case CorpusKind::kBasePoint: {
        const CremonaMap outer = random_regular(field, dim, rng, 1, cap, recipe);
        recipe += " . sigma . ";
        const CremonaMap inner = random_regular(field, dim, rng, 1, cap, recipe);
        if (too_big(outer, static_cast<unsigned>(dim), inner)) continue;
        f = compose(outer, compose(standard_involution(field, dim), inner));
        break;
      }
      case CorpusKind::kMovesPoint: {
        recipe += "linear . ";
        const ProjLinear move = random_proj_linear(field, dim, rng);
        f = compose(move.to_map(), random_regular(field, dim, rng, 2, cap, recipe));
        break;
      }
      case CorpusKind::kContracting: {
        const CremonaMap outer = random_regular(field, dim, rng, 1, cap, recipe);
        recipe += " . contraction . ";
        const CremonaMap inner = random_regular(field, dim, rng, 1, cap, recipe);
        if (too_big(outer, 2, inner)) continue;
        f = compose(outer, compose(contraction_at_origin(field, dim, rng), inner));
        break;
      }
    }
    if (f.degree() <= max_degree) return {std::move(f), kind, std::move(recipe)};
  }
}

std::vector<CorpusEntry> deformation_corpus(FieldSpec field, std::size_t dim,
                                            std::size_t count, std::uint64_t seed,
                                            unsigned max_degree) {
  static constexpr CorpusKind kKinds[] = {
      CorpusKind::kRegularFixed, CorpusKind::kBasePoint, CorpusKind::kMovesPoint,
      CorpusKind::kContracting};
  std::vector<CorpusEntry> corpus;
  corpus.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    Rng rng(Rng::mix(seed, k));
    corpus.push_back(random_corpus_entry(field, dim, kKinds[k % 4], rng, max_degree));
  }
  return corpus;
}

CremonaMap random_birational_map(FieldSpec field, std::size_t dim, Rng& rng,
                                 unsigned max_degree) {
  while (true) {
    CremonaMap f = random_proj_linear(field, dim, rng).to_map();
    const std::size_t factors = 1 + rng.index(2);
    for (std::size_t k = 0; k < factors; ++k) {
      switch (rng.index(3)) {
        case 0:
          f = compose(f, random_elementary_map(field, dim, rng, false));
          break;
        case 1:
          f = compose(f, standard_involution(field, dim));
          break;
        default:
          f = compose(f, random_proj_linear(field, dim, rng).to_map());
          break;
      }
    }
    if (f.degree() <= max_degree) return f;
  }
}

}  // namespace cremona
