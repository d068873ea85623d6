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

#include "extalg/resolution.hpp"

#include <algorithm>

#include "extalg/errors.hpp"

namespace extalg {

std::vector<std::size_t> FreeComplex::ranks() const {
  std::vector<std::size_t> out;
  for (const auto& t : terms) out.push_back(t.size());
  return out;
}

namespace {

// Entry column of a generator given as a vector in F_d.
std::vector<MultiVector> as_column(const FreeBasis& f, int d, const SparseVector& v,
                                   std::size_t n, Field field) {
  std::vector<MultiVector> col(f.twists().size(), MultiVector(n, field));
  const auto off = f.offsets(d);
  std::size_t j = 0;
  for (const auto& [idx, x] : v) {
    while (off[j + 1] <= idx) ++j;
    col[j].add_term(f.monomials(d + f.twists()[j])[idx - off[j]], x);
  }
  return col;
}

FreeSubmodule kernel_of(const ExteriorMatrix& a, const FreeBasis& source, const FreeBasis& target) {
  FreeSubmodule k;
  k.twists = source.twists();
  if (source.empty()) return k;
  for (int d = source.min_degree(); d <= source.max_degree(); ++d) {
    const std::size_t dim = source.dim(d);
    if (dim == 0) continue;
    std::vector<SparseVector> basis;
    if (target.dim(d) == 0) {
      for (std::size_t c = 0; c < dim; ++c) basis.push_back({{c, Scalar::one(a.field())}});
    } else {
      basis = kernel_basis_sparse(expand(a, source, target, d));
    }
    if (!basis.empty()) k.basis.emplace(d, std::move(basis));
  }
  return k;
}

}  // namespace

SyzygyStep syzygy_step(const FreeSubmodule& k, std::size_t n, Field field) {
  const FreeBasis f(n, k.twists);
  std::vector<int> twists;
  std::vector<std::vector<MultiVector>> columns;
  for (const auto& [d, vectors] : k.basis) {
    // Generators in degree d complete e_1 K_{d-1} + ... + e_n K_{d-1}.
    EchelonBasis decomposable(f.dim(d), field);
    auto below = k.basis.find(d - 1);
    if (below != k.basis.end()) {
      for (const auto& w : below->second) {
        for (std::size_t i = 1; i <= n; ++i) {
          decomposable.insert(multiply_generator(f, d - 1, static_cast<int>(i), w, field));
        }
      }
    }
    for (const auto& v : vectors) {
      if (decomposable.rank() == f.dim(d)) break;
      if (decomposable.insert(v)) {
        twists.push_back(-d);
        columns.push_back(as_column(f, d, v, n, field));
      }
    }
  }
  ExteriorMatrix cover(n, field, k.twists, twists);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::size_t r = 0; r < k.twists.size(); ++r) cover.set(r, c, std::move(columns[c][r]));
  }
  const FreeBasis g(n, twists);
  return {cover, kernel_of(cover, g, f)};
}

FreeSubmodule kernel_submodule(const ExteriorMatrix& a) {
  return kernel_of(a, FreeBasis(a.n(), a.col_degrees()), FreeBasis(a.n(), a.row_degrees()));
}

FreeSubmodule module_syzygies(const GradedEModule& m, std::vector<int>* cover_twists) {
  const std::size_t n = m.n();
  const Field field = m.field();
  // Minimal generators: unit vectors completing the span of the actions.
  std::vector<std::pair<int, std::vector<Scalar>>> gens;
  std::vector<int> twists;
  for (const auto& [d, dim] : m.components()) {
    EchelonBasis decomposable(dim, field);
    for (std::size_t i = 1; i <= n; ++i) {
      const Matrix a = m.action(static_cast<int>(i), d - 1).transpose();
      for (std::size_t c = 0; c < a.rows(); ++c) decomposable.insert(a.row(c));
    }
    for (std::size_t c = 0; c < dim && decomposable.rank() < dim; ++c) {
      if (decomposable.insert({{c, Scalar::one(field)}})) {
        std::vector<Scalar> v(dim, Scalar::zero(field));
        v[c] = Scalar::one(field);
        gens.emplace_back(d, std::move(v));
        twists.push_back(-d);
      }
    }
  }
  if (cover_twists) *cover_twists = twists;
  FreeSubmodule k;
  k.twists = twists;
  if (twists.empty()) return k;
  const FreeBasis f(n, twists);
  for (int d = f.min_degree(); d <= f.max_degree(); ++d) {
    std::vector<SparseVector> cols;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const int dj = gens[j].first;
      for (Monomial mono : f.monomials(d - dj)) cols.push_back(to_sparse(m.act(mono, dj, gens[j].second)));
    }
    if (cols.empty()) continue;
    auto basis = kernel_basis_sparse(Matrix::from_columns(m.dim(d), cols, field));
    if (!basis.empty()) k.basis.emplace(d, std::move(basis));
  }
  return k;
}

FreeComplex minimal_projective_resolution(const GradedEModule& m, int steps) {
  if (steps < 0) throw InvalidArgument("resolution steps must be nonnegative");
  FreeComplex c;
  c.n = m.n();
  c.field = m.field();
  std::vector<int> p0;
  FreeSubmodule k = module_syzygies(m, &p0);
  std::vector<std::vector<int>> terms{p0};
  std::vector<ExteriorMatrix> maps;
  for (int s = 0; s < steps && !k.is_zero(); ++s) {
    SyzygyStep step = syzygy_step(k, m.n(), m.field());
    terms.push_back(step.cover.col_degrees());
    maps.push_back(std::move(step.cover));
    k = std::move(step.kernel);
  }
  // Stored left to right: P_s, ..., P_0.
  c.lo = -static_cast<int>(terms.size()) + 1;
  c.terms.assign(terms.rbegin(), terms.rend());
  c.maps.assign(maps.rbegin(), maps.rend());
  return c;
}

FreeComplex minimal_injective_resolution(const GradedEModule& m, int steps) {
  const FreeComplex p = minimal_projective_resolution(m.dual(), steps);
  FreeComplex c;
  c.n = m.n();
  c.field = m.field();
  c.lo = 0;
  const int n = static_cast<int>(m.n());
  for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
    std::vector<int> t;
    for (int q : *it) t.push_back(n - q);
    c.terms.push_back(std::move(t));
  }
  for (auto it = p.maps.rbegin(); it != p.maps.rend(); ++it) c.maps.push_back(dual(*it));
  return c;
}

}  // namespace extalg
