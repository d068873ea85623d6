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
#include <utility>
#include <vector>

#include "extalg/linalg.hpp"
#include "extalg/multivector.hpp"
#include "extalg/scalar.hpp"

namespace extalg {

// Structure constants [x_i, x_j] = sum_k c(i, j, k) x_k on a Lie algebra
// with basis x_1..x_n. Only pairs i < j are stored, so antisymmetry holds
// by construction.
class Bracket {
 public:
  explicit Bracket(std::size_t dim, Field field = Field::rationals());

  std::size_t dim() const { return dim_; }
  Field field() const { return field_; }

  // Sets c(i, j, k). For i > j this stores -value at (j, i, k); i == j
  // requires value == 0.
  void set(int i, int j, int k, const Scalar& value);
  Scalar coefficient(int i, int j, int k) const;
  // [x_i, x_j] as a coefficient vector (index k-1 holds x_k).
  std::vector<Scalar> bracket(int i, int j) const;
  // Bilinear extension to arbitrary coefficient vectors.
  std::vector<Scalar> bracket(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;

 private:
  std::size_t dim_;
  Field field_;
  std::map<std::pair<int, int>, std::vector<Scalar>> c_;
};

// Degree-one map V -> wedge^2 V given on generators.
class Derivation {
 public:
  // Throws InvalidArgument unless every image is homogeneous of grade 2
  // in E(images.size()) over the given field.
  explicit Derivation(std::vector<MultiVector> images, Field field = Field::rationals());

  std::size_t n() const { return images_.size(); }
  Field field() const { return field_; }
  // d(e_i), 1-based.
  const MultiVector& image(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }

 private:
  Field field_;
  std::vector<MultiVector> images_;
};

// d(e_k) = sum_{i<j} c(i, j, k) e_i ^ e_j.
Derivation derivation_from_bracket(const Bracket& b);

// Unique degree-one derivation of E(n) extending d.
MultiVector extend_derivation(const Derivation& d, const MultiVector& a);

// d(d(e_k)) == 0 for all k, which forces d^2 == 0 on E(n).
bool is_differential(const Derivation& d);

// [x,[y,z]] + [y,[z,x]] + [z,[x,y]] == 0 on all basis triples, expanded
// from the structure constants without touching E(n).
bool satisfies_jacobi(const Bracket& b);

// Matrix of the extended derivation from grade r to grade r+1 in the
// graded-lex monomial bases.
Matrix derivation_matrix(const Derivation& d, int r);

// dim H^r(E(V), d) for r = 0..n. Throws DomainError if Jacobi fails.
std::vector<std::size_t> lie_cohomology(const Bracket& b);

}  // namespace extalg
