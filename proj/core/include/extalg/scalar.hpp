// Copyright 2026 The Authors.
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
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace extalg {

// Coefficient field: the rationals, or GF(p) for a prime p < 2^31.
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field{}; }
  // Throws InvalidArgument unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);

  constexpr bool is_rational() const { return prime_ == 0; }
  // 0 for the rationals.
  constexpr std::uint32_t characteristic() const { return prime_; }

  // "rational" or "fp:<p>", the same spelling the CLI accepts.
  std::string name() const;
  // Parses the output of name().
  static Field parse(std::string_view text);

  friend constexpr bool operator==(Field a, Field b) = default;

 private:
  friend class Scalar;
  constexpr explicit Field(std::uint32_t p) : prime_(p) {}
  std::uint32_t prime_ = 0;
};

// An exact element of a Field. Rationals are kept canonical (reduced,
// positive denominator); residues are kept in [0, p).
class Scalar {
 public:
  // Rational zero.
  Scalar() = default;
  Scalar(Field field, long value);
  Scalar(Field field, const mpq_class& value);

  static Scalar zero(Field field) { return Scalar(field, 0L); }
  static Scalar one(Field field) { return Scalar(field, 1L); }
  // Accepts "a", "-a", "a/b".
  static Scalar parse(Field field, std::string_view text);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  // Only valid over the rationals.
  const mpq_class& rational() const;
  // Only valid over GF(p).
  std::uint32_t residue() const;

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  // Values from different fields compare unequal.
  friend bool operator==(const Scalar& a, const Scalar& b);

  // "a/b", or a bare integer when the denominator is 1.
  std::string to_string() const;

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t prime;
  };

  void require_same_field(const Scalar& other) const;

  std::variant<mpq_class, Residue> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace extalg
