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
#include <string>
#include <vector>

#include "extalg/monomial.hpp"
#include "extalg/multivector.hpp"
#include "extalg/scalar.hpp"

namespace extalg {

// Symmetric bilinear form b(e_i, e_j) = g[i][j] on V = k^n.
class SymmetricForm {
 public:
  // Throws InvalidArgument if g is not square and symmetric, and
  // DomainError in characteristic 2, where the presentation through
  // symmetric tensors breaks down.
  SymmetricForm(std::vector<std::vector<Scalar>> g, Field field = Field::rationals());
  static SymmetricForm zero(std::size_t n, Field field = Field::rationals());

  std::size_t n() const { return g_.size(); }
  Field field() const { return field_; }
  // 1-based.
  const Scalar& at(int i, int j) const {
    return g_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  }

 private:
  Field field_;
  std::vector<std::vector<Scalar>> g_;
};

// p entries +1 followed by q entries -1.
SymmetricForm signature_form(int p, int q, Field field = Field::rationals());

// Elements of Cl_b share the monomial basis of E(n): the monomial on S
// stands for the ordered product of the e_i, i in S.
using CliffordElement = MultiVector;

// Product in Cl_b, using e_i e_j + e_j e_i = 2 g[i][j] and e_i e_i = g[i][i].
CliffordElement geometric_product(const SymmetricForm& b, const CliffordElement& x,
                                  const CliffordElement& y);

struct CliffordTable {
  // Grade-major, then lexicographic.
  std::vector<Monomial> basis;
  // products[r][c] = basis[r] * basis[c].
  std::vector<std::vector<CliffordElement>> products;
};

inline constexpr std::size_t kMaxTableGenerators = 8;

// Throws InvalidArgument when n > kMaxTableGenerators.
CliffordTable multiplication_table(const SymmetricForm& b);

struct DimensionReport {
  int p = 0;
  int q = 0;
  unsigned long long dim = 0;             // dim Cl_{p,q}
  unsigned long long dim_shift_11 = 0;    // dim Cl_{p+1,q+1}
  unsigned long long dim_shift_80 = 0;    // dim Cl_{p+8,q}
  bool consistent = false;                // both ratios are 4 and 256
  std::string real_type;                  // e.g. "M2(H)", keyed by (p-q) mod 8
};

// Requires p, q >= 0 and p + q <= 8; throws InvalidArgument otherwise.
DimensionReport dimension_checks(int p, int q);

}  // namespace extalg
