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

#include "extalg/multivector.hpp"

#include "extalg/errors.hpp"

namespace extalg {
namespace {

void require_same_algebra(const MultiVector& a, const MultiVector& b) {
  if (a.n() != b.n()) {
    throw DimensionMismatch("exterior algebras E(" + std::to_string(a.n()) + ") and E(" +
                            std::to_string(b.n()) + ") differ");
  }
  if (a.field() != b.field()) {
    throw FieldMismatch("multivectors over " + a.field().name() + " and " +
                        b.field().name());
  }
}

}  // namespace

MultiVector::MultiVector(std::size_t n, Field field) : n_(n), field_(field) {
  if (n > kMaxGenerators) {
    throw InvalidArgument("E(n) supports at most 64 generators, got n = " + std::to_string(n));
  }
}

MultiVector MultiVector::scalar(std::size_t n, const Scalar& value) {
  return monomial(n, Monomial(), value);
}

MultiVector MultiVector::monomial(std::size_t n, Monomial m, const Scalar& coeff) {
  MultiVector out(n, coeff.field());
  out.add_term(m, coeff);
  return out;
}

MultiVector MultiVector::generator(std::size_t n, int i, Field field) {
  if (i < 1 || i > static_cast<int>(n)) {
    throw InvalidArgument("generator e" + std::to_string(i) + " not in E(" +
                          std::to_string(n) + ")");
  }
  return monomial(n, Monomial::generator(i), field);
}

Scalar MultiVector::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

bool MultiVector::is_homogeneous(int grade) const {
  for (const auto& [m, c] : terms_) {
    if (m.grade() != grade) return false;
  }
  return true;
}

int MultiVector::max_grade() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first.grade();
}

void MultiVector::add_term(Monomial m, const Scalar& coeff) {
  if (m.max_index() > static_cast<int>(n_)) {
    throw DimensionMismatch("monomial " + m.to_string() + " not in E(" + std::to_string(n_) +
                            ")");
  }
  if (coeff.field() != field_) {
    throw FieldMismatch("coefficient over " + coeff.field().name() + " added to element over " +
                        field_.name());
  }
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiVector& MultiVector::operator+=(const MultiVector& other) {
  require_same_algebra(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MultiVector& MultiVector::operator-=(const MultiVector& other) {
  require_same_algebra(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MultiVector& MultiVector::operator*=(const Scalar& s) {
  if (s.field() != field_) {
    throw FieldMismatch("scaling an element over " + field_.name() + " by a scalar over " +
                        s.field().name());
  }
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

MultiVector MultiVector::operator-() const {
  MultiVector out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

std::string MultiVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string coeff = c.to_string();
    bool negative = !coeff.empty() && coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (m.empty()) {
      out += coeff;
    } else {
      if (coeff != "1") out += coeff + "*";
      out += m.to_string();
    }
  }
  return out;
}

DualVector::DualVector(std::size_t n, Field field)
    : field_(field), coeffs_(n, Scalar::zero(field)) {
  if (n > kMaxGenerators) throw InvalidArgument("dual vector dimension exceeds 64");
}

DualVector::DualVector(std::size_t n, std::vector<Scalar> coeffs)
    : field_(coeffs.empty() ? Field::rationals() : coeffs.front().field()),
      coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != n) {
    throw DimensionMismatch("dual vector needs " + std::to_string(n) + " coefficients");
  }
  for (const auto& c : coeffs_) {
    if (c.field() != field_) throw FieldMismatch("mixed fields in dual vector");
  }
}

DualVector DualVector::sum_of_duals(std::size_t n, Field field) {
  return DualVector(n, std::vector<Scalar>(n, Scalar::one(field)));
}

DualVector DualVector::basis(std::size_t n, int i, Field field) {
  DualVector out(n, field);
  out.coeffs_.at(i - 1) = Scalar::one(field);
  return out;
}

MultiVector wedge(const MultiVector& a, const MultiVector& b) {
  require_same_algebra(a, b);
  MultiVector out(a.n(), a.field());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (!ma.disjoint(mb)) continue;
      Scalar c = ca * cb;
      if (wedge_sign(ma, mb) < 0) c = -c;
      out.add_term(ma | mb, c);
    }
  }
  return out;
}

MultiVector contract(const DualVector& u, const MultiVector& a) {
  if (u.n() != a.n()) {
    throw DimensionMismatch("dual vector of length " + std::to_string(u.n()) +
                            " contracted with an element of E(" + std::to_string(a.n()) + ")");
  }
  if (u.field() != a.field()) throw FieldMismatch("contraction across fields");
  MultiVector out(a.n(), a.field());
  for (const auto& [m, c] : a.terms()) {
    int position = 0;  // number of indices of m below the current one
    for (int i : m.indices()) {
      const Scalar& ui = u.coeff(i);
      if (!ui.is_zero()) {
        Scalar term = ui * c;
        if (position & 1) term = -term;
        out.add_term(m.without(Monomial::generator(i)), term);
      }
      ++position;
    }
  }
  return out;
}

MultiVector grade_part(const MultiVector& a, int r) {
  MultiVector out(a.n(), a.field());
  for (const auto& [m, c] : a.terms()) {
    if (m.grade() == r) out.add_term(m, c);
  }
  return out;
}

MultiVector hodge_dual(const MultiVector& a) {
  const Monomial top = Monomial::top(a.n());
  MultiVector out(a.n(), a.field());
  for (const auto& [m, c] : a.terms()) {
    const Monomial comp = top.without(m);
    out.add_term(comp, wedge_sign(m, comp) < 0 ? -c : c);
  }
  return out;
}

MultiVector meet(const MultiVector& a, const MultiVector& b) {
  require_same_algebra(a, b);
  return hodge_dual(wedge(hodge_dual(a), hodge_dual(b)));
}

}  // namespace extalg
