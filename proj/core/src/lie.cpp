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

#include "extalg/lie.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "extalg/errors.hpp"

namespace extalg {

Bracket::Bracket(std::size_t dim, Field field) : dim_(dim), field_(field) {
  if (dim > kMaxGenerators) {
    throw InvalidArgument("Lie algebra dimension " + std::to_string(dim) + " exceeds " +
                          std::to_string(kMaxGenerators));
  }
}

namespace {

void check_index(int i, std::size_t dim) {
  if (i < 1 || static_cast<std::size_t>(i) > dim) {
    throw InvalidArgument("bracket index " + std::to_string(i) + " outside 1.." +
                          std::to_string(dim));
  }
}

}  // namespace

void Bracket::set(int i, int j, int k, const Scalar& value) {
  check_index(i, dim_);
  check_index(j, dim_);
  check_index(k, dim_);
  if (value.field() != field_) throw FieldMismatch("bracket coefficient over " + value.field().name());
  if (i == j) {
    if (!value.is_zero()) throw InvalidArgument("[x_i, x_i] must vanish");
    return;
  }
  const Scalar v = i < j ? value : -value;
  auto [it, fresh] = c_.try_emplace({std::min(i, j), std::max(i, j)},
                                    std::vector<Scalar>(dim_, Scalar::zero(field_)));
  it->second[static_cast<std::size_t>(k - 1)] = v;
}

Scalar Bracket::coefficient(int i, int j, int k) const {
  check_index(i, dim_);
  check_index(j, dim_);
  check_index(k, dim_);
  if (i == j) return Scalar::zero(field_);
  auto it = c_.find({std::min(i, j), std::max(i, j)});
  if (it == c_.end()) return Scalar::zero(field_);
  const Scalar& v = it->second[static_cast<std::size_t>(k - 1)];
  return i < j ? v : -v;
}

std::vector<Scalar> Bracket::bracket(int i, int j) const {
  std::vector<Scalar> out(dim_, Scalar::zero(field_));
  for (std::size_t k = 1; k <= dim_; ++k) out[k - 1] = coefficient(i, j, static_cast<int>(k));
  return out;
}

std::vector<Scalar> Bracket::bracket(const std::vector<Scalar>& x,
                                     const std::vector<Scalar>& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("bracket argument length");
  std::vector<Scalar> out(dim_, Scalar::zero(field_));
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero() || i == j) continue;
      const Scalar xy = x[i] * y[j];
      const auto b = bracket(static_cast<int>(i + 1), static_cast<int>(j + 1));
      for (std::size_t k = 0; k < dim_; ++k) out[k] += xy * b[k];
    }
  }
  return out;
}

Derivation::Derivation(std::vector<MultiVector> images, Field field)
    : field_(field), images_(std::move(images)) {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const auto& img = images_[i];
    if (img.n() != images_.size()) throw DimensionMismatch("derivation image in the wrong E(n)");
    if (img.field() != field_) throw FieldMismatch("derivation image over " + img.field().name());
    if (!img.is_homogeneous(2)) {
      throw InvalidArgument("d(e" + std::to_string(i + 1) + ") is not of grade 2");
    }
  }
}

Derivation derivation_from_bracket(const Bracket& b) {
  const std::size_t n = b.dim();
  std::vector<MultiVector> images(n, MultiVector(n, b.field()));
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      const Monomial m = Monomial::from_indices({static_cast<int>(i), static_cast<int>(j)});
      const auto c = b.bracket(static_cast<int>(i), static_cast<int>(j));
      for (std::size_t k = 0; k < n; ++k) {
        if (!c[k].is_zero()) images[k].add_term(m, c[k]);
      }
    }
  }
  return Derivation(std::move(images), b.field());
}

MultiVector extend_derivation(const Derivation& d, const MultiVector& a) {
  if (a.n() != d.n()) throw DimensionMismatch("derivation on E(" + std::to_string(d.n()) +
                                              ") applied to E(" + std::to_string(a.n()) + ")");
  if (a.field() != d.field()) throw FieldMismatch("derivation and element over different fields");
  MultiVector out(a.n(), a.field());
  for (const auto& [s, coeff] : a.terms()) {
    int j = 0;
    for (int i : s.indices()) {
      // e_P ^ d(e_i) ^ e_Q with P, Q the indices before and after i.
      const Monomial gen = Monomial::generator(i);
      const Monomial p(s.bits() & (gen.bits() - 1));
      const Monomial q = s.without(p | gen);
      for (const auto& [t, c] : d.image(i).terms()) {
        if (!t.disjoint(p) || !t.disjoint(q)) continue;
        const int sign = wedge_sign(p, t) * wedge_sign(p | t, q) * ((j % 2) ? -1 : 1);
        Scalar term = coeff * c;
        if (sign < 0) term = -term;
        out.add_term(p | t | q, term);
      }
      ++j;
    }
  }
  return out;
}

bool is_differential(const Derivation& d) {
  for (std::size_t k = 1; k <= d.n(); ++k) {
    if (!extend_derivation(d, d.image(static_cast<int>(k))).is_zero()) return false;
  }
  return true;
}

bool satisfies_jacobi(const Bracket& b) {
  const std::size_t n = b.dim();
  auto unit = [&](std::size_t i) {
    std::vector<Scalar> v(n, Scalar::zero(b.field()));
    v[i] = Scalar::one(b.field());
    return v;
  };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const auto ex = unit(x);
        const auto ey = unit(y);
        const auto ez = unit(z);
        auto sum = b.bracket(ex, b.bracket(ey, ez));
        const auto t2 = b.bracket(ey, b.bracket(ez, ex));
        const auto t3 = b.bracket(ez, b.bracket(ex, ey));
        for (std::size_t k = 0; k < n; ++k) {
          sum[k] += t2[k] + t3[k];
          if (!sum[k].is_zero()) return false;
        }
      }
    }
  }
  return true;
}

Matrix derivation_matrix(const Derivation& d, int r) {
  const auto source = monomials_of_grade(d.n(), r);
  const auto target = monomials_of_grade(d.n(), r + 1);
  std::unordered_map<std::uint64_t, std::size_t> row;
  for (std::size_t i = 0; i < target.size(); ++i) row.emplace(target[i].bits(), i);
  Matrix m(target.size(), source.size(), d.field());
  for (std::size_t c = 0; c < source.size(); ++c) {
    const auto image = extend_derivation(d, MultiVector::monomial(d.n(), source[c], d.field()));
    for (const auto& [mono, coeff] : image.terms()) m.set(row.at(mono.bits()), c, coeff);
  }
  return m;
}

std::vector<std::size_t> lie_cohomology(const Bracket& b) {
  if (!satisfies_jacobi(b)) throw DomainError("not a Lie algebra: the Jacobi identity fails");
  const Derivation d = derivation_from_bracket(b);
  const int n = static_cast<int>(b.dim());
  std::vector<std::size_t> ranks(static_cast<std::size_t>(n + 2), 0);
  for (int r = 0; r < n; ++r) ranks[static_cast<std::size_t>(r + 1)] = rank(derivation_matrix(d, r));
  std::vector<std::size_t> out;
  for (int r = 0; r <= n; ++r) {
    const std::size_t dim = monomials_of_grade(b.dim(), r).size();
    out.push_back(dim - ranks[static_cast<std::size_t>(r + 1)] - ranks[static_cast<std::size_t>(r)]);
  }
  return out;
}

}  // namespace extalg
