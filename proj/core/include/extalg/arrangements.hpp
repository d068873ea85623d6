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
#include <optional>
#include <utility>
#include <vector>

#include "extalg/monomial.hpp"
#include "extalg/scalar.hpp"
#include "extalg/simplicial.hpp"

namespace extalg {

// Linear forms v_1..v_n on k^m; each defines the hyperplane v_i = 0.
class VectorConfiguration {
 public:
  // Throws InvalidArgument on a zero vector, a length other than m or an
  // entry from another field.
  VectorConfiguration(std::size_t m, std::vector<std::vector<Scalar>> vectors,
                      Field field = Field::rationals());

  std::size_t m() const { return m_; }
  std::size_t n() const { return vectors_.size(); }
  Field field() const { return field_; }
  const std::vector<std::vector<Scalar>>& vectors() const { return vectors_; }

 private:
  std::size_t m_;
  Field field_;
  std::vector<std::vector<Scalar>> vectors_;
};

// A matroid given by its family of independent sets. The family is only
// required to be downward closed; check_exchange decides the rest.
class Matroid {
 public:
  explicit Matroid(SimplicialComplex independents) : independents_(std::move(independents)) {}

  std::size_t n() const { return independents_.n(); }
  const SimplicialComplex& independents() const { return independents_; }
  bool is_independent(Monomial s) const { return independents_.contains(s); }
  // Size of the largest independent set.
  int rank() const { return independents_.dimension() + 1; }

 private:
  SimplicialComplex independents_;
};

Matroid matroid_from_vectors(const VectorConfiguration& cfg);

// Independent X, Y with |Y| = |X| + 1 such that no y in Y \ X extends X.
// Any violation of the exchange axiom yields one of this shape by
// shrinking Y.
std::optional<std::pair<Monomial, Monomial>> exchange_violation(const Matroid& m);
inline bool check_exchange(const Matroid& m) { return !exchange_violation(m).has_value(); }

struct OSAlgebra {
  // dims[r] = dim A(M)_r for r = 0..rank.
  std::vector<std::size_t> dims;
  // Greedy graded-lex smallest monomials spanning each quotient degree.
  std::vector<std::vector<Monomial>> bases;
};

// A(M) = E(n) / (I_M + boundary(I_M)), where I_M is spanned by the
// monomials on dependent sets and the boundary is contraction by
// e_1* + ... + e_n*. Throws DomainError when the exchange axiom fails.
OSAlgebra orlik_solomon(const Matroid& m, Field field = Field::rationals());

// Betti numbers of the complement of the complex arrangement. Requires a
// rational configuration; throws DomainError otherwise.
std::vector<std::size_t> complement_betti(const VectorConfiguration& cfg);

}  // namespace extalg
