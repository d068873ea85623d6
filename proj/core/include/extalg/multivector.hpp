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

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "extalg/monomial.hpp"
#include "extalg/scalar.hpp"

namespace extalg {

// Sparse element of the exterior algebra E(n) over a field. Terms are kept in
// graded-lex order and never hold a zero coefficient.
class MultiVector {
 public:
  using Terms = std::map<Monomial, Scalar, GradedLexLess>;

  // The zero element of E(n). Throws InvalidArgument if n > 64.
  explicit MultiVector(std::size_t n, Field field = Field::rationals());

  static MultiVector scalar(std::size_t n, const Scalar& value);
  static MultiVector monomial(std::size_t n, Monomial m, const Scalar& coeff);
  static MultiVector monomial(std::size_t n, Monomial m, Field field = Field::rationals()) {
    return monomial(n, m, Scalar::one(field));
  }
  // e_i, 1-based.
  static MultiVector generator(std::size_t n, int i, Field field = Field::rationals());

  std::size_t n() const { return n_; }
  Field field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(Monomial m) const;

  // True when every term has the given grade; the zero element is
  // homogeneous of every grade.
  bool is_homogeneous(int grade) const;
  // Highest grade present, -1 for zero.
  int max_grade() const;

  // Adds coeff * m in place.
  void add_term(Monomial m, const Scalar& coeff);

  MultiVector& operator+=(const MultiVector& other);
  MultiVector& operator-=(const MultiVector& other);
  MultiVector& operator*=(const Scalar& s);
  friend MultiVector operator+(MultiVector a, const MultiVector& b) { return a += b; }
  friend MultiVector operator-(MultiVector a, const MultiVector& b) { return a -= b; }
  friend MultiVector operator*(MultiVector a, const Scalar& s) { return a *= s; }
  friend MultiVector operator*(const Scalar& s, MultiVector a) { return a *= s; }
  MultiVector operator-() const;

  friend bool operator==(const MultiVector& a, const MultiVector& b) {
    return a.n_ == b.n_ && a.field_ == b.field_ && a.terms_ == b.terms_;
  }

  // Human-readable form, e.g. "e1^e3 - 2*e2 + 1/2".
  std::string to_string() const;

 private:
  std::size_t n_;
  Field field_;
  Terms terms_;
};

// A linear combination of the dual basis e_1*, ..., e_n*.
class DualVector {
 public:
  DualVector(std::size_t n, Field field = Field::rationals());
  DualVector(std::size_t n, std::vector<Scalar> coeffs);
  // e_1* + ... + e_n*.
  static DualVector sum_of_duals(std::size_t n, Field field = Field::rationals());
  // e_i*, 1-based.
  static DualVector basis(std::size_t n, int i, Field field = Field::rationals());

  std::size_t n() const { return coeffs_.size(); }
  Field field() const { return field_; }
  const Scalar& coeff(int i) const { return coeffs_[i - 1]; }

 private:
  Field field_;
  std::vector<Scalar> coeffs_;
};

// Exterior product. Throws DimensionMismatch when a.n() != b.n().
MultiVector wedge(const MultiVector& a, const MultiVector& b);

// Contraction by a dual vector: the degree -1 graded derivation with
// e_i* -| e_{i1}^...^e_{ir} = (-1)^(j-1) e_{i1}^..^(omit i_j)^..^e_{ir}
// when i = i_j, and 0 otherwise.
MultiVector contract(const DualVector& u, const MultiVector& a);

// Sum of the grade-r terms; zero when r is out of range.
MultiVector grade_part(const MultiVector& a, int r);

// Complement duality e_S -> sign(S, S^c) e_{S^c}.
MultiVector hodge_dual(const MultiVector& a);

// Regressive product dual(dual(a) ^ dual(b)).
MultiVector meet(const MultiVector& a, const MultiVector& b);

}  // namespace extalg
