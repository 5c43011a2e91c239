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

#include "cremona/cremona_map.hpp"

#include <algorithm>

#include "cremona/error.hpp"
#include "cremona/text.hpp"

namespace cremona {

ProjPoint::ProjPoint(std::vector<Scalar> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) {
    fail(ErrorCode::kArityMismatch, "a projective point needs two coordinates");
  }
  for (const Scalar& c : coords_) {
    if (c.field() != coords_.front().field()) {
      fail(ErrorCode::kFieldMismatch, "point coordinates over different fields");
    }
  }
  auto first = std::find_if(coords_.begin(), coords_.end(),
                            [](const Scalar& c) { return !c.is_zero(); });
  if (first == coords_.end()) fail(ErrorCode::kZeroPoint, "all coordinates are zero");
  const Scalar scale = first->inverse();
  for (Scalar& c : coords_) c *= scale;
}

ProjPoint ProjPoint::origin(FieldSpec field, std::size_t dim) {
  std::vector<Scalar> coords(dim + 1, Scalar::zero(field));
  coords[0] = Scalar::one(field);
  return ProjPoint(std::move(coords));
}

std::size_t ProjPoint::pivot() const {
  std::size_t k = 0;
  while (coords_[k].is_zero()) ++k;
  return k;
}

std::string ProjPoint::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (k != 0) out += ":";
    out += coords_[k].to_string();
  }
  return out + "]";
}

ProjPoint parse_point(std::string_view text, FieldSpec field) {
  return ProjPoint(parse_coordinates(text, field));
}

CremonaMap CremonaMap::make(std::vector<Polynomial> components) {
  if (components.size() < 2) {
    fail(ErrorCode::kDimMismatch, "a map of P^d needs d+1 >= 2 components");
  }
  const FieldSpec field = components.front().field();
  const std::size_t nvars = components.size();
  std::optional<unsigned> degree;
  for (const Polynomial& c : components) {
    if (c.field() != field) fail(ErrorCode::kFieldMismatch, "component fields differ");
    if (c.nvars() != nvars) {
      fail(ErrorCode::kArityMismatch, "components must use x0..x" +
                                          std::to_string(nvars - 1));
    }
    if (!c.is_homogeneous()) fail(ErrorCode::kNotHomogeneous, "component not homogeneous");
    if (c.is_zero()) continue;
    if (degree && *degree != *c.total_degree()) {
      fail(ErrorCode::kDegreeMismatch, "components of degrees " +
                                           std::to_string(*degree) + " and " +
                                           std::to_string(*c.total_degree()));
    }
    degree = c.total_degree();
  }
  if (!degree) fail(ErrorCode::kZeroMap, "all components are zero");

  const Polynomial g = multivariate_gcd(components);
  if (!g.is_one()) {
    for (Polynomial& c : components) {
      if (!c.is_zero()) c = exact_divide(c, g);
    }
  }
  const unsigned reduced = *degree - *g.total_degree();
  if (reduced == 0) fail(ErrorCode::kZeroMap, "components reduce to constants");

  auto first = std::find_if(components.begin(), components.end(),
                            [](const Polynomial& c) { return !c.is_zero(); });
  const Scalar scale = first->leading_coefficient().inverse();
  if (!scale.is_one()) {
    for (Polynomial& c : components) c *= scale;
  }
  return CremonaMap(std::move(components), reduced);
}

CremonaMap CremonaMap::identity(FieldSpec field, std::size_t dim) {
  std::vector<Polynomial> components;
  for (std::size_t k = 0; k <= dim; ++k) {
    components.push_back(Polynomial::variable(field, dim + 1, k));
  }
  return CremonaMap(std::move(components), 1);
}

bool CremonaMap::is_identity() const {
  return *this == identity(field(), dim());
}

CremonaMap compose(const CremonaMap& f, const CremonaMap& g) {
  if (f.field() != g.field()) fail(ErrorCode::kFieldMismatch, "compose fields differ");
  if (f.dim() != g.dim()) fail(ErrorCode::kDimMismatch, "compose dimensions differ");
  std::vector<Polynomial> components;
  components.reserve(f.dim() + 1);
  for (const Polynomial& fi : f.components()) {
    components.push_back(fi.substitute(g.components()));
  }
  return CremonaMap::make(std::move(components));
}

bool is_indeterminate(const CremonaMap& f, const ProjPoint& p) {
  if (p.dim() != f.dim()) fail(ErrorCode::kDimMismatch, "point dimension");
  return std::all_of(f.components().begin(), f.components().end(),
                     [&](const Polynomial& c) { return c.evaluate(p.coords()).is_zero(); });
}

ProjPoint apply(const CremonaMap& f, const ProjPoint& p) {
  if (p.dim() != f.dim()) fail(ErrorCode::kDimMismatch, "point dimension");
  std::vector<Scalar> values;
  values.reserve(f.dim() + 1);
  bool all_zero = true;
  for (const Polynomial& c : f.components()) {
    values.push_back(c.evaluate(p.coords()));
    all_zero = all_zero && values.back().is_zero();
  }
  if (all_zero) {
    fail(ErrorCode::kIndeterminateAtPoint, "map is undefined at " + p.to_string());
  }
  return ProjPoint(std::move(values));
}

bool is_fixed_point(const CremonaMap& f, const ProjPoint& p) {
  if (is_indeterminate(f, p)) return false;
  return apply(f, p) == p;
}

std::vector<RationalFunction> affine_representation(const CremonaMap& f,
                                                    std::size_t source,
                                                    std::size_t target) {
  const std::size_t d = f.dim();
  if (source > d || target > d) fail(ErrorCode::kDimMismatch, "chart index");
  std::vector<Polynomial> images;
  images.reserve(d + 1);
  std::size_t local = 0;
  for (std::size_t k = 0; k <= d; ++k) {
    if (k == source) {
      images.push_back(Polynomial::one(f.field(), d));
    } else {
      images.push_back(Polynomial::variable(f.field(), d, local++));
    }
  }
  const Polynomial den = f.component(target).substitute(images);
  if (den.is_zero()) {
    fail(ErrorCode::kChartDegenerate,
         "component x" + std::to_string(target) + " vanishes on the chart");
  }
  std::vector<RationalFunction> fs;
  fs.reserve(d);
  for (std::size_t k = 0; k <= d; ++k) {
    if (k == target) continue;
    fs.push_back(RationalFunction::make(f.component(k).substitute(images), den));
  }
  return fs;
}

bool is_local_isomorphism(const CremonaMap& f, const ProjPoint& p) {
  if (is_indeterminate(f, p)) return false;
  const ProjPoint q = apply(f, p);
  const std::size_t source = p.pivot();
  const std::vector<RationalFunction> fs =
      affine_representation(f, source, q.pivot());
  std::vector<Scalar> local;
  for (std::size_t k = 0; k < p.coords().size(); ++k) {
    if (k != source) local.push_back(p.coords()[k]);
  }
  return jacobian(fs, local).is_invertible();
}

unsigned max_degree(std::span<const CremonaMap> family) {
  if (family.empty()) fail(ErrorCode::kEmptyFamily, "max_degree of an empty family");
  unsigned d = 0;
  for (const CremonaMap& f : family) d = std::max(d, f.degree());
  return d;
}

std::vector<RationalFunction> ChartDecomposition::functions() const {
  std::vector<RationalFunction> fs;
  for (std::size_t i = 0; i < dim; ++i) {
    Polynomial num(field, dim);
    Polynomial den(field, dim);
    for (const auto& [j, p] : numerators[i]) num += p;
    for (const auto& [j, q] : denominators[i]) den += q;
    fs.push_back(RationalFunction::make(std::move(num), std::move(den)));
  }
  return fs;
}

std::vector<RationalFunction> chart_functions(const CremonaMap& f) {
  return affine_representation(f, 0, 0);
}

ChartDecomposition to_chart(const CremonaMap& f) {
  ChartDecomposition dec{f.field(), f.dim(), {}, {}};
  for (const RationalFunction& F : chart_functions(f)) {
    dec.numerators.push_back(F.numerator().homogeneous_components());
    dec.denominators.push_back(F.denominator().homogeneous_components());
  }
  return dec;
}

CremonaMap from_chart(const ChartDecomposition& dec) {
  if (dec.numerators.size() != dec.dim || dec.denominators.size() != dec.dim) {
    fail(ErrorCode::kDimMismatch, "chart decomposition needs d fractions");
  }
  for (std::size_t i = 0; i < dec.dim; ++i) {
    for (const auto* pieces : {&dec.numerators[i], &dec.denominators[i]}) {
      for (const auto& [j, p] : *pieces) {
        if (!p.is_zero() && (!p.is_homogeneous() || *p.total_degree() != j)) {
          fail(ErrorCode::kNotHomogeneous,
               "chart piece stored under degree " + std::to_string(j));
        }
      }
    }
  }
  return from_affine(dec.functions());
}

Polynomial homogenize(const Polynomial& p, unsigned degree) {
  const std::size_t d = p.nvars();
  Polynomial h(p.field(), d + 1);
  for (const auto& [e, c] : p.terms()) {
    const unsigned k = total_degree(e);
    if (k > degree) fail(ErrorCode::kDegreeMismatch, "homogenizing below the degree");
    Exponents he(d + 1);
    he[0] = degree - k;
    std::copy(e.begin(), e.end(), he.begin() + 1);
    h.add_term(he, c);
  }
  return h;
}

Polynomial dehomogenize(const Polynomial& p) {
  const std::size_t d = p.nvars() - 1;
  Polynomial a(p.field(), d);
  for (const auto& [e, c] : p.terms()) {
    a.add_term(Exponents(e.begin() + 1, e.end()), c);
  }
  return a;
}

CremonaMap from_affine(std::span<const RationalFunction> fs) {
  if (fs.empty()) fail(ErrorCode::kDimMismatch, "affine map needs components");
  const std::size_t d = fs.size();
  Polynomial common = Polynomial::one(fs.front().field(), d);
  for (const RationalFunction& F : fs) {
    if (F.nvars() != d) fail(ErrorCode::kArityMismatch, "affine map arity");
    const Polynomial g = multivariate_gcd(common, F.denominator());
    common = common * exact_divide(F.denominator(), g);
  }
  std::vector<Polynomial> affine{common};
  for (const RationalFunction& F : fs) {
    affine.push_back(F.numerator() * exact_divide(common, F.denominator()));
  }
  unsigned e = 0;
  for (const Polynomial& p : affine) e = std::max(e, p.total_degree().value_or(0));
  std::vector<Polynomial> components;
  for (const Polynomial& p : affine) components.push_back(homogenize(p, e));
  return CremonaMap::make(std::move(components));
}

CremonaMap from_affine(std::span<const Polynomial> fs) {
  std::vector<RationalFunction> rs;
  for (const Polynomial& p : fs) rs.push_back(RationalFunction::polynomial(p));
  return from_affine(rs);
}

CremonaMap parse_map(std::string_view text, FieldSpec field) {
  text = trim(text);
  if (!text.starts_with("P^")) fail(ErrorCode::kParseError, "map must start with 'P^d:'");
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) fail(ErrorCode::kParseError, "missing ':'");
  const std::string dim_text(trim(text.substr(2, colon - 2)));
  if (dim_text.empty() || dim_text.find_first_not_of("0123456789") != std::string::npos ||
      dim_text.size() > 2) {
    fail(ErrorCode::kParseError, "bad dimension '" + dim_text + "'");
  }
  const std::size_t dim = std::stoul(dim_text);
  const std::vector<std::string> pieces =
      split_top_level(strip_enclosing(text.substr(colon + 1), '[', ']'), ':');
  if (pieces.size() != dim + 1) {
    fail(ErrorCode::kDimMismatch, "P^" + dim_text + " needs " +
                                      std::to_string(dim + 1) + " components");
  }
  std::vector<Polynomial> components;
  for (const std::string& piece : pieces) {
    components.push_back(parse_polynomial(piece, field, dim + 1, 0));
  }
  return CremonaMap::make(std::move(components));
}

std::string format_map(const CremonaMap& f) {
  std::string out = "P^" + std::to_string(f.dim()) + ": [";
  for (std::size_t k = 0; k <= f.dim(); ++k) {
    if (k != 0) out += " : ";
    out += format_polynomial(f.component(k));
  }
  return out + "]";
}

}  // namespace cremona
