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

#include "cremona/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "cremona/error.hpp"

namespace cremona {

unsigned total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

bool GrevlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = cremona::total_degree(a);
  const unsigned db = cremona::total_degree(b);
  if (da != db) return da > db;
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k] != b[k]) return a[k] < b[k];
  }
  return false;
}

Polynomial::Polynomial(FieldSpec field, std::size_t nvars)
    : field_(field), nvars_(nvars) {}

Polynomial Polynomial::constant(const Scalar& c, std::size_t nvars) {
  Polynomial p(c.field(), nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(FieldSpec field, std::size_t nvars,
                                std::size_t index) {
  if (index >= nvars) {
    fail(ErrorCode::kArityMismatch, "variable index out of range");
  }
  Exponents e(nvars, 0);
  e[index] = 1;
  Polynomial p(field, nvars);
  p.add_term(e, Scalar::one(field));
  return p;
}

Polynomial Polynomial::monomial(const Scalar& c, Exponents exponents) {
  Polynomial p(c.field(), exponents.size());
  p.add_term(exponents, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && cremona::total_degree(terms_.begin()->first) == 0);
}

bool Polynomial::is_one() const {
  return is_constant() && !terms_.empty() && terms_.begin()->second.is_one();
}

std::optional<unsigned> Polynomial::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  return cremona::total_degree(terms_.begin()->first);
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = cremona::total_degree(terms_.begin()->first);
  return cremona::total_degree(terms_.rbegin()->first) == d;
}

const Exponents& Polynomial::leading_exponents() const {
  if (terms_.empty()) fail(ErrorCode::kInvalidArgument, "zero polynomial");
  return terms_.begin()->first;
}

const Scalar& Polynomial::leading_coefficient() const {
  if (terms_.empty()) fail(ErrorCode::kInvalidArgument, "zero polynomial");
  return terms_.begin()->second;
}

Scalar Polynomial::constant_term() const {
  return coefficient(Exponents(nvars_, 0));
}

Scalar Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || leading_coefficient().is_one()) return *this;
  return *this * leading_coefficient().inverse();
}

void Polynomial::add_term(const Exponents& e, const Scalar& c) {
  if (e.size() != nvars_) {
    fail(ErrorCode::kArityMismatch, "exponent vector has wrong length");
  }
  if (c.field() != field_) {
    fail(ErrorCode::kFieldMismatch, "coefficient field differs");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::require_compatible(const Polynomial& other) const {
  if (field_ != other.field_) {
    fail(ErrorCode::kFieldMismatch,
         "polynomials over " + field_.name() + " and " + other.field_.name());
  }
  if (nvars_ != other.nvars_) {
    fail(ErrorCode::kArityMismatch, "polynomials in " + std::to_string(nvars_) +
                                        " and " + std::to_string(other.nvars_) +
                                        " variables");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  require_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_compatible(b);
  Polynomial r(a.field_, a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      auto [it, inserted] = r.terms_.try_emplace(e, ca);
      if (inserted) {
        it->second *= cb;
      } else {
        it->second += ca * cb;
      }
    }
  }
  std::erase_if(r.terms_, [](const auto& t) { return t.second.is_zero(); });
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& rhs) {
  if (rhs.field() != field_) {
    fail(ErrorCode::kFieldMismatch, "scalar field differs");
  }
  if (rhs.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= rhs;
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = one(field_, nvars_);
  Polynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  if (point.size() != nvars_) {
    fail(ErrorCode::kArityMismatch, "point has " + std::to_string(point.size()) +
                                        " coordinates, expected " +
                                        std::to_string(nvars_));
  }
  for (const Scalar& s : point) {
    if (s.field() != field_) fail(ErrorCode::kFieldMismatch, "point field differs");
  }
  Scalar sum = Scalar::zero(field_);
  for (const auto& [e, c] : terms_) {
    Scalar term = c;
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (e[k] != 0) term *= point[k].pow(e[k]);
    }
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != nvars_) {
    fail(ErrorCode::kArityMismatch, "substitution needs one image per variable");
  }
  if (images.empty()) return *this;
  const std::size_t m = images.front().nvars();
  for (const Polynomial& img : images) {
    if (img.nvars() != m || img.field() != field_) {
      fail(ErrorCode::kArityMismatch, "substitution images disagree");
    }
  }
  // powers[k][j] = images[k]^j, filled on demand.
  std::vector<std::vector<Polynomial>> powers(nvars_);
  auto power = [&](std::size_t k, unsigned j) -> const Polynomial& {
    auto& row = powers[k];
    if (row.empty()) row.push_back(one(field_, m));
    while (row.size() <= j) row.push_back(row.back() * images[k]);
    return row[j];
  };
  Polynomial result(field_, m);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(c, m);
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (e[k] != 0) term *= power(k, e[k]);
    }
    result += term;
  }
  return result;
}

std::map<unsigned, Polynomial> Polynomial::homogeneous_components() const {
  std::map<unsigned, Polynomial> parts;
  for (const auto& [e, c] : terms_) {
    auto [it, inserted] =
        parts.try_emplace(cremona::total_degree(e), field_, nvars_);
    it->second.terms_.emplace(e, c);
  }
  return parts;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= nvars_) fail(ErrorCode::kArityMismatch, "derivative variable");
  Polynomial r(field_, nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    r.add_term(d, c * Scalar(field_, static_cast<long>(e[var])));
  }
  return r;
}

std::map<unsigned, Polynomial> Polynomial::coefficients_in(
    std::size_t var) const {
  std::map<unsigned, Polynomial> coeffs;
  for (const auto& [e, c] : terms_) {
    auto [it, inserted] = coeffs.try_emplace(e[var], field_, nvars_);
    Exponents rest = e;
    rest[var] = 0;
    it->second.terms_.emplace(std::move(rest), c);
  }
  return coeffs;
}

Exponents Polynomial::monomial_content() const {
  if (terms_.empty()) return Exponents(nvars_, 0);
  Exponents m = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    for (std::size_t k = 0; k < nvars_; ++k) m[k] = std::min(m[k], e[k]);
  }
  return m;
}

Polynomial Polynomial::divide_monomial(const Exponents& m) const {
  Polynomial r(field_, nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents q = e;
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (q[k] < m[k]) {
        fail(ErrorCode::kPreconditionViolated, "monomial does not divide");
      }
      q[k] -= m[k];
    }
    r.terms_.emplace(std::move(q), c);
  }
  return r;
}

Polynomial Polynomial::multiply_monomial(const Exponents& m) const {
  Polynomial r(field_, nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents q = e;
    for (std::size_t k = 0; k < nvars_; ++k) q[k] += m[k];
    r.terms_.emplace(std::move(q), c);
  }
  return r;
}

Polynomial Polynomial::map_coefficients(
    const std::function<Scalar(const Scalar&)>& f) const {
  Polynomial r(field_, nvars_);
  for (const auto& [e, c] : terms_) r.add_term(e, f(c));
  return r;
}

Polynomial Polynomial::shift_variables(std::size_t nvars,
                                       std::size_t offset) const {
  Polynomial r(field_, nvars);
  for (const auto& [e, c] : terms_) {
    Exponents q(nvars, 0);
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (e[k] == 0) continue;
      if (k + offset >= nvars) {
        fail(ErrorCode::kArityMismatch, "variable does not fit target ring");
      }
      q[k + offset] = e[k];
    }
    r.add_term(q, c);
  }
  return r;
}

}  // namespace cremona
