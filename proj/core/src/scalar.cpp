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

#include "extalg/scalar.hpp"

#include <charconv>
#include <ostream>

#include "extalg/errors.hpp"

namespace extalg {
namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t reduce_mod(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1U << 31) || !is_prime(p)) {
    throw InvalidArgument("field characteristic must be a prime below 2^31, got " +
                          std::to_string(p));
  }
  return Field(p);
}

std::string Field::name() const {
  return is_rational() ? std::string("rational") : "fp:" + std::to_string(prime_);
}

Field Field::parse(std::string_view text) {
  if (text == "rational" || text == "QQ") return rationals();
  if (text.substr(0, 3) == "fp:") {
    auto digits = text.substr(3);
    std::uint32_t p = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && end == digits.data() + digits.size()) return prime(p);
  }
  throw InvalidArgument("unknown field '" + std::string(text) +
                        "' (expected rational or fp:<prime>)");
}

Scalar::Scalar(Field field, long value) {
  if (field.is_rational()) {
    value_ = mpq_class(value);
  } else {
    value_ = Residue{reduce_mod(mpz_class(value), field.characteristic()),
                     field.characteristic()};
  }
}

Scalar::Scalar(Field field, const mpq_class& value) {
  if (field.is_rational()) {
    mpq_class q = value;
    q.canonicalize();
    value_ = std::move(q);
    return;
  }
  const std::uint32_t p = field.characteristic();
  const std::uint32_t den = reduce_mod(value.get_den(), p);
  if (den == 0) {
    throw InvalidArgument("denominator of " + value.get_str() + " vanishes in GF(" +
                          std::to_string(p) + ")");
  }
  const std::uint64_t num = reduce_mod(value.get_num(), p);
  value_ = Residue{static_cast<std::uint32_t>(num * pow_mod(den, p - 2, p) % p), p};
}

Scalar Scalar::parse(Field field, std::string_view text) {
  mpq_class q;
  std::string s(text);
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw InvalidArgument("malformed rational '" + s + "'");
  }
  return Scalar(field, q);
}

Field Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return Field(r->prime);
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw FieldMismatch("scalar is not rational");
}

std::uint32_t Scalar::residue() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
  throw FieldMismatch("scalar is not a residue");
}

void Scalar::require_same_field(const Scalar& other) const {
  if (value_.index() != other.value_.index()) {
    throw FieldMismatch("cannot combine scalars from different fields");
  }
  if (const auto* r = std::get_if<Residue>(&value_)) {
    if (r->prime != std::get<Residue>(other.value_).prime) {
      throw FieldMismatch("cannot combine residues modulo different primes");
    }
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InvalidArgument("division by zero");
  Scalar out = *this;
  if (auto* r = std::get_if<Residue>(&out.value_)) {
    r->value = pow_mod(r->value, r->prime - 2, r->prime);
  } else {
    auto& q = std::get<mpq_class>(out.value_);
    q = 1 / q;
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  require_same_field(other);
  if (auto* r = std::get_if<Residue>(&value_)) {
    const std::uint64_t s =
        std::uint64_t{r->value} + std::get<Residue>(other.value_).value;
    r->value = static_cast<std::uint32_t>(s >= r->prime ? s - r->prime : s);
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  require_same_field(other);
  if (auto* r = std::get_if<Residue>(&value_)) {
    const std::uint32_t o = std::get<Residue>(other.value_).value;
    r->value = r->value >= o ? r->value - o : r->value + (r->prime - o);
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  require_same_field(other);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = static_cast<std::uint32_t>(std::uint64_t{r->value} *
                                          std::get<Residue>(other.value_).value %
                                          r->prime);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  require_same_field(other);
  return *this *= other.inverse();
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (auto* r = std::get_if<Residue>(&out.value_)) {
    if (r->value != 0) r->value = r->prime - r->value;
  } else {
    auto& q = std::get<mpq_class>(out.value_);
    q = -q;
  }
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) return false;
  if (const auto* r = std::get_if<Scalar::Residue>(&a.value_)) {
    const auto& s = std::get<Scalar::Residue>(b.value_);
    return r->prime == s.prime && r->value == s.value;
  }
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace extalg
