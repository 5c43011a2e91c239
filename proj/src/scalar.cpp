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

#include "cremona/scalar.hpp"

#include "cremona/error.hpp"

namespace cremona {

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  while (e != 0) {
    if (e & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return result;
}

std::uint64_t reduce_mpz(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  mpz_class v;
  mpz_set_ui(v.get_mpz_t(), n);
  // BPSW inside GMP is exact below 2^64.
  return mpz_probab_prime_p(v.get_mpz_t(), 50) != 0;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= kMaxModulus || !is_prime(p)) {
    fail(ErrorCode::kBadModulus, std::to_string(p) + " is not a supported prime");
  }
  return {FieldKind::kPrimeField, p};
}

std::string FieldSpec::name() const {
  switch (kind) {
    case FieldKind::kRational: return "Q";
    case FieldKind::kGaussianRational: return "Qi";
    case FieldKind::kPrimeField: return "Fp:" + std::to_string(modulus);
  }
  return "?";
}

Scalar::Scalar(FieldSpec field, long value) : field_(field) {
  if (field_.is_prime_field()) {
    residue_ = reduce_mpz(mpz_class(value), field_.modulus);
  } else {
    re_ = value;
  }
}

Scalar::Scalar(FieldSpec field, const mpq_class& value) : field_(field) {
  if (field_.is_prime_field()) {
    const std::uint64_t p = field_.modulus;
    const std::uint64_t den = reduce_mpz(value.get_den(), p);
    if (den == 0) {
      fail(ErrorCode::kDivisionByZero,
           "denominator vanishes in " + field_.name());
    }
    residue_ = mul_mod(reduce_mpz(value.get_num(), p), pow_mod(den, p - 2, p), p);
  } else {
    re_ = value;
  }
}

Scalar Scalar::gaussian(const mpq_class& re, const mpq_class& im) {
  Scalar s;
  s.field_ = FieldSpec::gaussian();
  s.re_ = re;
  s.im_ = im;
  return s;
}

Scalar Scalar::imaginary_unit(FieldSpec field) {
  if (!field.is_gaussian()) {
    fail(ErrorCode::kFieldMismatch, "i is not an element of " + field.name());
  }
  return gaussian(0, 1);
}

bool Scalar::is_zero() const {
  if (field_.is_prime_field()) return residue_ == 0;
  return sgn(re_) == 0 && sgn(im_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_prime_field()) return residue_ == 1 % field_.modulus;
  return re_ == 1 && sgn(im_) == 0;
}

void Scalar::require_same_field(const Scalar& other) const {
  if (field_ != other.field_) {
    fail(ErrorCode::kFieldMismatch,
         "cannot combine " + field_.name() + " and " + other.field_.name());
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_prime_field()) {
    r.residue_ = residue_ == 0 ? 0 : field_.modulus - residue_;
  } else {
    r.re_ = -re_;
    r.im_ = -im_;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_prime_field()) {
    residue_ += rhs.residue_;
    if (residue_ >= field_.modulus) residue_ -= field_.modulus;
  } else {
    re_ += rhs.re_;
    if (field_.is_gaussian()) im_ += rhs.im_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  switch (field_.kind) {
    case FieldKind::kPrimeField:
      residue_ = mul_mod(residue_, rhs.residue_, field_.modulus);
      break;
    case FieldKind::kRational:
      re_ *= rhs.re_;
      break;
    case FieldKind::kGaussianRational: {
      mpq_class re = re_ * rhs.re_ - im_ * rhs.im_;
      mpq_class im = re_ * rhs.im_ + im_ * rhs.re_;
      re_ = std::move(re);
      im_ = std::move(im);
      break;
    }
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  if (a.field_.is_prime_field()) return a.residue_ == b.residue_;
  return a.re_ == b.re_ && a.im_ == b.im_;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorCode::kDivisionByZero, "inverse of zero");
  Scalar r = *this;
  switch (field_.kind) {
    case FieldKind::kPrimeField:
      r.residue_ = pow_mod(residue_, field_.modulus - 2, field_.modulus);
      break;
    case FieldKind::kRational:
      r.re_ = 1 / re_;
      break;
    case FieldKind::kGaussianRational: {
      const mpq_class norm = re_ * re_ + im_ * im_;
      r.re_ = re_ / norm;
      r.im_ = -im_ / norm;
      break;
    }
  }
  return r;
}

Scalar Scalar::pow(long exponent) const {
  Scalar base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? -static_cast<unsigned long>(exponent)
                                 : static_cast<unsigned long>(exponent);
  Scalar result = one(field_);
  while (e != 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

Scalar Scalar::conjugate() const {
  Scalar r = *this;
  if (field_.is_gaussian()) r.im_ = -im_;
  return r;
}

bool Scalar::is_in_prime_subfield() const {
  return !field_.is_gaussian() || sgn(im_) == 0;
}

std::string Scalar::to_string() const {
  if (field_.is_prime_field()) return std::to_string(residue_);
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.get_str() + "*i";
  }
  if (sgn(re_) == 0) return imag;
  return re_.get_str() + (imag.front() == '-' ? "" : "+") + imag;
}

FieldAutomorphism FieldAutomorphism::identity(FieldSpec field) {
  return {field, Kind::kIdentity, 0};
}

FieldAutomorphism FieldAutomorphism::conjugation(FieldSpec field) {
  if (!field.is_gaussian()) {
    fail(ErrorCode::kFieldMismatch, "conjugation needs Qi, got " + field.name());
  }
  return {field, Kind::kConjugation, 1};
}

FieldAutomorphism FieldAutomorphism::frobenius_power(FieldSpec field,
                                                     unsigned exponent) {
  if (!field.is_prime_field()) {
    fail(ErrorCode::kFieldMismatch, "Frobenius needs Fp, got " + field.name());
  }
  return {field, Kind::kFrobeniusPower, exponent};
}

Scalar FieldAutomorphism::operator()(const Scalar& a) const {
  if (a.field() != field_) {
    fail(ErrorCode::kFieldMismatch, "automorphism of " + field_.name() +
                                        " applied to " + a.field().name());
  }
  // x -> x^p is the identity on the prime field itself.
  return kind_ == Kind::kConjugation ? a.conjugate() : a;
}

FieldAutomorphism FieldAutomorphism::then_after(
    const FieldAutomorphism& other) const {
  if (other.field_ != field_) {
    fail(ErrorCode::kFieldMismatch, "composing automorphisms of different fields");
  }
  switch (kind_) {
    case Kind::kIdentity:
      return other;
    case Kind::kConjugation:
      return other.kind_ == Kind::kConjugation ? identity(field_) : *this;
    case Kind::kFrobeniusPower:
      return frobenius_power(field_, exponent_ + other.exponent_);
  }
  return *this;
}

bool FieldAutomorphism::is_identity() const {
  return kind_ != Kind::kConjugation;
}

std::string FieldAutomorphism::name() const {
  switch (kind_) {
    case Kind::kIdentity: return "id";
    case Kind::kConjugation: return "conj";
    case Kind::kFrobeniusPower: return "frob^" + std::to_string(exponent_);
  }
  return "?";
}

}  // namespace cremona
