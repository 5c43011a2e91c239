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

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace cremona {

enum class FieldKind { kRational, kGaussianRational, kPrimeField };

// The coefficient field: Q, Q(i), or F_p.
struct FieldSpec {
  FieldKind kind = FieldKind::kRational;
  std::uint64_t modulus = 0;  // nonzero iff kind == kPrimeField

  static FieldSpec rational() { return {}; }
  static FieldSpec gaussian() { return {FieldKind::kGaussianRational, 0}; }
  // Throws BAD_MODULUS unless p is a prime below 2^62.
  static FieldSpec prime(std::uint64_t p);

  std::uint64_t characteristic() const { return modulus; }
  bool is_prime_field() const { return kind == FieldKind::kPrimeField; }
  bool is_gaussian() const { return kind == FieldKind::kGaussianRational; }

  // "Q", "Qi" or "Fp:<p>"; the same spelling the CLI accepts.
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

// An exact field element. Rationals are kept in lowest terms by GMP, Gaussian
// rationals as a (re, im) pair, and F_p elements as canonical residues.
class Scalar {
 public:
  Scalar() = default;  // rational zero
  Scalar(FieldSpec field, long value);
  Scalar(FieldSpec field, const mpq_class& value);
  static Scalar gaussian(const mpq_class& re, const mpq_class& im);
  static Scalar zero(FieldSpec field) { return Scalar(field, 0L); }
  static Scalar one(FieldSpec field) { return Scalar(field, 1L); }
  // Throws FIELD_MISMATCH outside Q(i).
  static Scalar imaginary_unit(FieldSpec field);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  // Real and imaginary parts; imag() is zero for Q. Not meaningful over F_p.
  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }
  std::uint64_t residue() const { return residue_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  // Throws DIVISION_BY_ZERO for zero.
  Scalar inverse() const;
  Scalar pow(long exponent) const;

  // Complex conjugate in Q(i); identity on the other fields.
  Scalar conjugate() const;

  // True when the value lies in the prime subfield (Q or F_p).
  bool is_in_prime_subfield() const;

  std::string to_string() const;

 private:
  void require_same_field(const Scalar& other) const;

  FieldSpec field_;
  mpq_class re_;
  mpq_class im_;
  std::uint64_t residue_ = 0;
};

// A field automorphism acting coefficient-wise. Frobenius powers on F_p are
// the identity; they exist so callers can treat all fields uniformly.
class FieldAutomorphism {
 public:
  enum class Kind { kIdentity, kConjugation, kFrobeniusPower };

  static FieldAutomorphism identity(FieldSpec field);
  // Throws FIELD_MISMATCH unless the field is Q(i).
  static FieldAutomorphism conjugation(FieldSpec field);
  // Throws FIELD_MISMATCH unless the field is F_p.
  static FieldAutomorphism frobenius_power(FieldSpec field, unsigned exponent);

  const FieldSpec& field() const { return field_; }
  Kind kind() const { return kind_; }
  unsigned exponent() const { return exponent_; }

  // Throws FIELD_MISMATCH when a lives in another field.
  Scalar operator()(const Scalar& a) const;
  // this ∘ other.
  FieldAutomorphism then_after(const FieldAutomorphism& other) const;
  bool is_identity() const;

  std::string name() const;

  friend bool operator==(const FieldAutomorphism&,
                         const FieldAutomorphism&) = default;

 private:
  FieldAutomorphism(FieldSpec field, Kind kind, unsigned exponent)
      : field_(field), kind_(kind), exponent_(exponent) {}

  FieldSpec field_;
  Kind kind_;
  unsigned exponent_;
};

}  // namespace cremona
