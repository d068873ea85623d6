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

#include "extalg/clifford.hpp"

#include <map>

#include "extalg/errors.hpp"

namespace extalg {

SymmetricForm::SymmetricForm(std::vector<std::vector<Scalar>> g, Field field)
    : field_(field), g_(std::move(g)) {
  if (g_.size() > kMaxGenerators) {
    throw InvalidArgument("form on " + std::to_string(g_.size()) + " generators exceeds " +
                          std::to_string(kMaxGenerators));
  }
  if (field_.characteristic() == 2) {
    throw DomainError("Clifford algebras are not supported in characteristic 2");
  }
  for (std::size_t i = 0; i < g_.size(); ++i) {
    if (g_[i].size() != g_.size()) throw InvalidArgument("form matrix is not square");
    for (std::size_t j = 0; j < g_.size(); ++j) {
      if (g_[i][j].field() != field_) throw FieldMismatch("form entry over " + g_[i][j].field().name());
    }
  }
  for (std::size_t i = 0; i < g_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!(g_[i][j] == g_[j][i])) throw InvalidArgument("form matrix is not symmetric");
    }
  }
}

SymmetricForm SymmetricForm::zero(std::size_t n, Field field) {
  return SymmetricForm(std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, Scalar::zero(field))),
                       field);
}

SymmetricForm signature_form(int p, int q, Field field) {
  if (p < 0 || q < 0) throw InvalidArgument("signature entries must be nonnegative");
  const auto n = static_cast<std::size_t>(p + q);
  std::vector<std::vector<Scalar>> g(n, std::vector<Scalar>(n, Scalar::zero(field)));
  for (std::size_t i = 0; i < n; ++i) {
    g[i][i] = static_cast<int>(i) < p ? Scalar::one(field) : -Scalar::one(field);
  }
  return SymmetricForm(std::move(g), field);
}

namespace {

using Terms = std::map<Monomial, Scalar, GradedLexLess>;

void add(Terms& out, Monomial m, const Scalar& c) {
  auto [it, fresh] = out.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

// Blade S times the generator e_j.
Terms times_generator(const SymmetricForm& b, Monomial s, int j) {
  Terms out;
  const int top = s.max_index();
  if (top < j) {
    out.emplace(s | Monomial::generator(j), Scalar::one(b.field()));
  } else if (top == j) {
    const Scalar& g = b.at(j, j);
    if (!g.is_zero()) out.emplace(s.without(Monomial::generator(j)), g);
  } else {
    // e_S' e_top e_j = -(e_S' e_j) e_top + 2 g[top][j] e_S'.
    const Monomial rest = s.without(Monomial::generator(top));
    for (const auto& [m, c] : times_generator(b, rest, j)) {
      // Every index of m is below top, so appending e_top is exact.
      add(out, m | Monomial::generator(top), -c);
    }
    const Scalar& g = b.at(top, j);
    if (!g.is_zero()) add(out, rest, g + g);
  }
  return out;
}

Terms blade_product(const SymmetricForm& b, Monomial s, Monomial t) {
  Terms acc{{s, Scalar::one(b.field())}};
  for (int j : t.indices()) {
    Terms next;
    for (const auto& [m, c] : acc) {
      for (const auto& [m2, c2] : times_generator(b, m, j)) add(next, m2, c * c2);
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

CliffordElement geometric_product(const SymmetricForm& b, const CliffordElement& x,
                                  const CliffordElement& y) {
  if (x.n() != b.n() || y.n() != b.n()) {
    throw DimensionMismatch("Clifford product on " + std::to_string(b.n()) +
                            " generators given E(" + std::to_string(x.n()) + ") and E(" +
                            std::to_string(y.n()) + ")");
  }
  if (x.field() != b.field() || y.field() != b.field()) {
    throw FieldMismatch("Clifford factors and form over different fields");
  }
  CliffordElement out(b.n(), b.field());
  for (const auto& [s, cs] : x.terms()) {
    for (const auto& [t, ct] : y.terms()) {
      const Scalar c = cs * ct;
      for (const auto& [m, cm] : blade_product(b, s, t)) out.add_term(m, c * cm);
    }
  }
  return out;
}

CliffordTable multiplication_table(const SymmetricForm& b) {
  if (b.n() > kMaxTableGenerators) {
    throw InvalidArgument("multiplication table on " + std::to_string(b.n()) +
                          " generators exceeds " + std::to_string(kMaxTableGenerators));
  }
  CliffordTable t;
  for (int r = 0; r <= static_cast<int>(b.n()); ++r) {
    for (Monomial m : monomials_of_grade(b.n(), r)) t.basis.push_back(m);
  }
  for (Monomial s : t.basis) {
    std::vector<CliffordElement> row;
    row.reserve(t.basis.size());
    for (Monomial u : t.basis) {
      CliffordElement e(b.n(), b.field());
      for (const auto& [m, c] : blade_product(b, s, u)) e.add_term(m, c);
      row.push_back(std::move(e));
    }
    t.products.push_back(std::move(row));
  }
  return t;
}

namespace {

// Real type of Cl_{p,q} with p generators squaring to +1.
std::string real_type(int p, int q) {
  const int n = p + q;
  const int k = ((p - q) % 8 + 8) % 8;
  // Division algebra, its real dimension and whether the algebra splits.
  const char* algebra = "R";
  int dim = 1;
  bool split = false;
  switch (k) {
    case 0: case 2: break;
    case 1: split = true; break;
    case 3: case 7: algebra = "C"; dim = 2; break;
    case 4: case 6: algebra = "H"; dim = 4; break;
    case 5: algebra = "H"; dim = 4; split = true; break;
  }
  long long size2 = (1LL << n) / dim / (split ? 2 : 1);
  long long size = 1;
  while (size * size < size2) ++size;
  const std::string one = size == 1 ? std::string(algebra)
                                    : "M" + std::to_string(size) + "(" + algebra + ")";
  return split ? one + "+" + one : one;
}

}  // namespace

DimensionReport dimension_checks(int p, int q) {
  if (p < 0 || q < 0 || p + q > 8) throw InvalidArgument("dimension checks need p, q >= 0, p+q <= 8");
  DimensionReport r;
  r.p = p;
  r.q = q;
  r.dim = 1ULL << (p + q);
  r.dim_shift_11 = 1ULL << (p + q + 2);
  r.dim_shift_80 = 1ULL << (p + q + 8);
  r.consistent = r.dim_shift_11 == 4 * r.dim && r.dim_shift_80 == 256 * r.dim;
  r.real_type = real_type(p, q);
  return r;
}

}  // namespace extalg
