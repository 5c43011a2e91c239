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

#include "cremona/affine_auto.hpp"

#include <algorithm>
#include <set>

#include "cremona/error.hpp"
#include "cremona/random.hpp"
#include "cremona/text.hpp"

namespace cremona {

namespace {

std::vector<Polynomial> variables(FieldSpec field, std::size_t dim) {
  std::vector<Polynomial> xs;
  for (std::size_t k = 0; k < dim; ++k) xs.push_back(Polynomial::variable(field, dim, k));
  return xs;
}

std::vector<Polynomial> linear_components(const Matrix& m,
                                          std::span<const Scalar> shift) {
  const std::size_t d = m.rows();
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < d; ++i) {
    Polynomial row(m.field(), d);
    for (std::size_t j = 0; j < d; ++j) {
      Exponents e(d, 0);
      e[j] = 1;
      row.add_term(e, m(i, j));
    }
    if (!shift.empty()) row.add_term(Exponents(d, 0), shift[i]);
    out.push_back(std::move(row));
  }
  return out;
}

// Parenthesized group starting at text[0]; returns its inside and advances.
std::string_view take_group(std::string_view& text) {
  text = trim(text);
  if (text.empty() || text.front() != '(') {
    fail(ErrorCode::kParseError, "expected '(' in affine map");
  }
  int depth = 0;
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text[k] == '(') ++depth;
    if (text[k] == ')' && --depth == 0) {
      std::string_view inside = text.substr(1, k - 1);
      text.remove_prefix(k + 1);
      return inside;
    }
  }
  fail(ErrorCode::kParseError, "unbalanced parentheses in affine map");
}

std::vector<Polynomial> parse_components(std::string_view group, FieldSpec field,
                                         std::size_t dim) {
  const std::vector<std::string> pieces = split_top_level(group, ';');
  if (pieces.size() != dim) {
    fail(ErrorCode::kDimMismatch, "A^" + std::to_string(dim) + " needs " +
                                      std::to_string(dim) + " components");
  }
  std::vector<Polynomial> out;
  for (const std::string& piece : pieces) {
    out.push_back(parse_polynomial(piece, field, dim, 1));
  }
  return out;
}

std::string format_components(std::span<const Polynomial> ps) {
  std::string out = "(";
  for (std::size_t k = 0; k < ps.size(); ++k) {
    if (k != 0) out += "; ";
    out += format_polynomial(ps[k], 1);
  }
  return out + ")";
}

}  // namespace

std::vector<Polynomial> compose_polys(std::span<const Polynomial> outer,
                                      std::span<const Polynomial> inner) {
  std::vector<Polynomial> out;
  out.reserve(outer.size());
  for (const Polynomial& p : outer) out.push_back(p.substitute(inner));
  return out;
}

PolyAuto PolyAuto::make(std::vector<Polynomial> forward,
                        std::vector<Polynomial> inverse) {
  if (forward.empty() || forward.size() != inverse.size()) {
    fail(ErrorCode::kDimMismatch, "forward and inverse need d components each");
  }
  const FieldSpec field = forward.front().field();
  const std::size_t d = forward.size();
  for (const auto* side : {&forward, &inverse}) {
    for (const Polynomial& p : *side) {
      if (p.field() != field) fail(ErrorCode::kFieldMismatch, "component fields differ");
      if (p.nvars() != d) fail(ErrorCode::kArityMismatch, "components must use x1..xd");
    }
  }
  const std::vector<Polynomial> xs = variables(field, d);
  if (compose_polys(forward, inverse) != xs || compose_polys(inverse, forward) != xs) {
    fail(ErrorCode::kInverseCheckFailed, "inverse does not compose to the identity");
  }
  return PolyAuto(std::move(forward), std::move(inverse));
}

PolyAuto PolyAuto::identity(FieldSpec field, std::size_t dim) {
  return PolyAuto(variables(field, dim), variables(field, dim));
}

bool PolyAuto::is_identity() const {
  return forward_ == variables(field(), dim());
}

PolyAuto compose_auto(const PolyAuto& f, const PolyAuto& g) {
  if (f.field() != g.field()) fail(ErrorCode::kFieldMismatch, "compose fields differ");
  if (f.dim() != g.dim()) fail(ErrorCode::kDimMismatch, "compose dimensions differ");
  return PolyAuto::make(compose_polys(f.forward(), g.forward()),
                        compose_polys(g.inverse(), f.inverse()));
}

PolyAuto torus(std::span<const Scalar> diagonal) {
  if (diagonal.empty()) fail(ErrorCode::kDimMismatch, "empty torus element");
  Matrix m(diagonal.front().field(), diagonal.size(), diagonal.size());
  for (std::size_t k = 0; k < diagonal.size(); ++k) m(k, k) = diagonal[k];
  return linear(m);
}

PolyAuto permutation(FieldSpec field, std::span<const std::size_t> sigma) {
  const std::size_t d = sigma.size();
  std::set<std::size_t> seen(sigma.begin(), sigma.end());
  if (d == 0 || seen.size() != d || *seen.rbegin() >= d) {
    fail(ErrorCode::kInvalidArgument, "not a permutation");
  }
  Matrix m(field, d, d);
  for (std::size_t k = 0; k < d; ++k) m(sigma[k], k) = Scalar::one(field);
  return linear(m);
}

PolyAuto linear(const Matrix& m) {
  return affine(m, {});
}

PolyAuto affine(const Matrix& m, std::span<const Scalar> b) {
  if (!m.is_square()) fail(ErrorCode::kDimMismatch, "linear part must be square");
  if (!b.empty() && b.size() != m.rows()) {
    fail(ErrorCode::kDimMismatch, "translation vector length");
  }
  if (!m.is_invertible()) fail(ErrorCode::kSingularLinearPart, "linear part is singular");
  const Matrix inv = m.inverse();
  std::vector<Scalar> back;
  for (std::size_t i = 0; i < b.size(); ++i) {
    Scalar s = Scalar::zero(m.field());
    for (std::size_t j = 0; j < b.size(); ++j) s -= inv(i, j) * b[j];
    back.push_back(s);
  }
  return PolyAuto::make(linear_components(m, b), linear_components(inv, back));
}

PolyAuto translation(std::size_t dim, std::size_t index, const Scalar& a) {
  if (index >= dim) fail(ErrorCode::kDimMismatch, "translation index");
  std::vector<Scalar> b(dim, Scalar::zero(a.field()));
  b[index] = a;
  return affine(Matrix::identity(a.field(), dim), b);
}

PolyAuto triangular(std::size_t dim, std::size_t index, const Polynomial& p) {
  if (p.nvars() != dim || index >= dim) {
    fail(ErrorCode::kDimMismatch, "elementary map shape");
  }
  if (p.involves(index)) {
    fail(ErrorCode::kInvalidArgument, "elementary map term must not involve x" +
                                          std::to_string(index + 1));
  }
  std::vector<Polynomial> forward = variables(p.field(), dim);
  std::vector<Polynomial> inverse = forward;
  forward[index] += p;
  inverse[index] -= p;
  return PolyAuto::make(std::move(forward), std::move(inverse));
}

std::vector<Scalar> permute_diagonal(std::span<const std::size_t> sigma,
                                     std::span<const Scalar> a) {
  std::vector<Scalar> out(a.begin(), a.end());
  for (std::size_t k = 0; k < sigma.size(); ++k) out[sigma[k]] = a[k];
  return out;
}

unsigned degree_auto(const PolyAuto& f) {
  unsigned d = 0;
  for (const Polynomial& p : f.forward()) d = std::max(d, p.total_degree().value_or(0));
  return d;
}

bool is_monomial(const PolyAuto& g) {
  std::set<std::size_t> targets;
  for (const Polynomial& p : g.forward()) {
    if (p.term_count() != 1) return false;
    const Exponents& e = p.leading_exponents();
    if (total_degree(e) != 1) return false;
    targets.insert(static_cast<std::size_t>(
        std::find(e.begin(), e.end(), 1u) - e.begin()));
  }
  return targets.size() == g.dim();
}

bool is_diagonal_linear(std::span<const Polynomial> components) {
  for (std::size_t k = 0; k < components.size(); ++k) {
    const Polynomial& p = components[k];
    if (p.term_count() != 1) return false;
    Exponents e(p.nvars(), 0);
    e[k] = 1;
    if (p.leading_exponents() != e) return false;
  }
  return true;
}

bool normalizes_torus(const PolyAuto& g, std::size_t trials, std::uint64_t seed) {
  if (is_monomial(g)) return true;
  const FieldSpec field = g.field();
  const std::size_t d = g.dim();
  Rng rng(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<Scalar> diag;
    for (int attempt = 0; diag.size() < d; ++attempt) {
      Scalar s = random_nonzero_scalar(field, rng, 9);
      // Tiny fields cannot supply d distinct units; accept repeats then.
      const bool fresh = std::find(diag.begin(), diag.end(), s) == diag.end();
      if (fresh || attempt > 64) diag.push_back(std::move(s));
    }
    const PolyAuto t = torus(diag);
    const std::vector<Polynomial> conj =
        compose_polys(g.forward(), compose_polys(t.forward(), g.inverse()));
    if (!is_diagonal_linear(conj)) return false;
  }
  return true;
}

bool centralizes(const PolyAuto& g, std::span<const PolyAuto> family) {
  return std::all_of(family.begin(), family.end(), [&](const PolyAuto& s) {
    return compose_polys(g.forward(), s.forward()) ==
           compose_polys(s.forward(), g.forward());
  });
}

bool AffineLemmaReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return c.ok(); });
}

AffineLemmaReport affine_lemma_suite(FieldSpec field, std::size_t dim,
                                     std::span<const Scalar> params) {
  if (dim < 2) fail(ErrorCode::kDimMismatch, "the affine identities need d >= 2");
  const bool char2 = field.characteristic() == 2;
  AffineLemmaReport report{field, dim, {}};
  IdentityCheck squares{"conjugation_squares"};
  IdentityCheck shear{"commutes_with_shear"};
  IdentityCheck gl{"commutes_with_gl"};
  IdentityCheck involution{"char2_involution"};

  Matrix h_matrix = Matrix::identity(field, dim);
  h_matrix(0, 1) = Scalar::one(field);
  const PolyAuto h = linear(h_matrix);

  std::vector<Scalar> t_diag(dim, Scalar::one(field));
  t_diag[0] = Scalar(field, 2L);

  // Sample elements of GL_{d-1} acting on x_2..x_d.
  std::vector<PolyAuto> gl_sample;
  for (long c : {2L, 3L, 5L, -1L}) {
    const Scalar s(field, c);
    if (s.is_zero()) continue;
    std::vector<Scalar> diag(dim, s);
    diag[0] = Scalar::one(field);
    gl_sample.push_back(torus(diag));
  }
  if (dim >= 3) {
    Matrix m = Matrix::identity(field, dim);
    m(1, 2) = Scalar::one(field);
    gl_sample.push_back(linear(m));
    std::vector<std::size_t> swap(dim);
    for (std::size_t k = 0; k < dim; ++k) swap[k] = k;
    std::swap(swap[1], swap[2]);
    gl_sample.push_back(permutation(field, swap));
  }

  for (const Scalar& a : params) {
    if (a.is_zero()) continue;
    const PolyAuto f = translation(dim, 0, a);
    const PolyAuto f2 = compose_auto(f, f);
    if (!char2) {
      const PolyAuto t = torus(t_diag);
      ++squares.checked;
      if (compose_auto(t, compose_auto(f, t.inverted())) == f2) ++squares.passed;
    } else {
      ++involution.checked;
      if (f2.is_identity()) ++involution.passed;
    }
    ++shear.checked;
    if (compose_auto(f, h) == compose_auto(h, f)) ++shear.passed;
    ++gl.checked;
    if (centralizes(f, gl_sample)) ++gl.passed;
  }
  report.checks = char2 ? std::vector<IdentityCheck>{shear, gl, involution}
                        : std::vector<IdentityCheck>{squares, shear, gl};
  return report;
}

CremonaMap to_cremona(const PolyAuto& f) {
  return from_affine(std::span<const Polynomial>(f.forward()));
}

PolyAuto parse_auto(std::string_view text, FieldSpec field) {
  text = trim(text);
  if (!text.starts_with("A^")) fail(ErrorCode::kParseError, "map must start with 'A^d:'");
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) fail(ErrorCode::kParseError, "missing ':'");
  const std::string dim_text(trim(text.substr(2, colon - 2)));
  if (dim_text.empty() || dim_text.find_first_not_of("0123456789") != std::string::npos ||
      dim_text.size() > 2) {
    fail(ErrorCode::kParseError, "bad dimension '" + dim_text + "'");
  }
  const std::size_t dim = std::stoul(dim_text);
  std::string_view rest = text.substr(colon + 1);
  const std::string_view forward = take_group(rest);
  rest = trim(rest);
  if (!rest.starts_with("inv")) fail(ErrorCode::kParseError, "expected 'inv (...)'");
  rest.remove_prefix(3);
  const std::string_view inverse = take_group(rest);
  if (!trim(rest).empty()) fail(ErrorCode::kParseError, "trailing input after inverse");
  return PolyAuto::make(parse_components(forward, field, dim),
                        parse_components(inverse, field, dim));
}

std::string format_auto(const PolyAuto& f) {
  return "A^" + std::to_string(f.dim()) + ": " + format_components(f.forward()) +
         " inv " + format_components(f.inverse());
}

}  // namespace cremona
