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

#include "extalg/arrangements.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "extalg/errors.hpp"
#include "extalg/linalg.hpp"

namespace extalg {

VectorConfiguration::VectorConfiguration(std::size_t m, std::vector<std::vector<Scalar>> vectors,
                                         Field field)
    : m_(m), field_(field), vectors_(std::move(vectors)) {
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    const auto& v = vectors_[i];
    if (v.size() != m_) {
      throw InvalidArgument("form " + std::to_string(i + 1) + " has " + std::to_string(v.size()) +
                            " coefficients, expected " + std::to_string(m_));
    }
    bool zero = true;
    for (const auto& x : v) {
      if (x.field() != field_) throw FieldMismatch("form coefficient over " + x.field().name());
      zero = zero && x.is_zero();
    }
    if (zero) throw InvalidArgument("form " + std::to_string(i + 1) + " is zero");
  }
}

Matroid matroid_from_vectors(const VectorConfiguration& cfg) {
  const std::size_t n = cfg.n();
  if (n > SimplicialComplex::kMaxVertices) {
    throw InvalidArgument("configuration with " + std::to_string(n) + " forms exceeds " +
                          std::to_string(SimplicialComplex::kMaxVertices));
  }
  auto independent = [&](Monomial s) {
    EchelonBasis basis(cfg.m(), cfg.field());
    for (int i : s.indices()) {
      if (!basis.insert(to_sparse(cfg.vectors()[static_cast<std::size_t>(i - 1)]))) return false;
    }
    return true;
  };
  // Grow level by level; a set is a candidate only if all its facets were
  // independent.
  std::vector<Monomial> faces{Monomial()};
  std::vector<Monomial> level{Monomial()};
  while (!level.empty()) {
    std::unordered_set<std::uint64_t> known(faces.size());
    for (Monomial f : faces) known.insert(f.bits());
    std::set<Monomial, GradedLexLess> next;
    for (Monomial f : level) {
      for (std::size_t v = static_cast<std::size_t>(f.max_index()) + 1; v <= n; ++v) {
        const Monomial s = f | Monomial::generator(static_cast<int>(v));
        bool candidate = true;
        for (int i : s.indices()) {
          if (!known.count(s.without(Monomial::generator(i)).bits())) {
            candidate = false;
            break;
          }
        }
        if (candidate && independent(s)) next.insert(s);
      }
    }
    level.assign(next.begin(), next.end());
    faces.insert(faces.end(), level.begin(), level.end());
  }
  return Matroid(SimplicialComplex::from_faces(n, faces));
}

std::optional<std::pair<Monomial, Monomial>> exchange_violation(const Matroid& m) {
  const auto& faces = m.independents().faces();
  const std::uint64_t all = Monomial::top(m.n()).bits();
  // Faces are graded, so the sets one size up form a contiguous block.
  std::vector<std::size_t> start(static_cast<std::size_t>(m.rank() + 2), faces.size());
  for (std::size_t i = faces.size(); i-- > 0;) start[static_cast<std::size_t>(faces[i].grade())] = i;
  for (Monomial x : faces) {
    const int k = x.grade();
    if (k + 1 > m.rank()) continue;
    std::uint64_t extends = 0;
    for (std::uint64_t rest = all & ~x.bits(); rest != 0; rest &= rest - 1) {
      const std::uint64_t y = rest & (~rest + 1);
      if (m.is_independent(Monomial(x.bits() | y))) extends |= y;
    }
    for (std::size_t j = start[static_cast<std::size_t>(k + 1)];
         j < start[static_cast<std::size_t>(k + 2)]; ++j) {
      const Monomial y = faces[j];
      if ((y.bits() & ~x.bits() & extends) == 0) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

OSAlgebra orlik_solomon(const Matroid& m, Field field) {
  if (auto bad = exchange_violation(m)) {
    throw DomainError("not a matroid: exchange fails for X = " + bad->first.to_string() +
                      ", Y = " + bad->second.to_string());
  }
  // Dependent monomials are zero in the quotient, so A(M)_r is the span of
  // independent r-sets modulo the boundaries of dependent (r+1)-sets with
  // their dependent terms dropped. Only D = I + {v} with I independent of
  // size r contributes a nonzero projection.
  const SimplicialComplex& ind = m.independents();
  OSAlgebra out;
  for (int r = 0; r <= m.rank(); ++r) {
    const auto basis = ind.faces_of_size(r);
    std::unordered_map<std::uint64_t, std::size_t> col;
    for (std::size_t i = 0; i < basis.size(); ++i) col.emplace(basis[i].bits(), i);

    std::set<Monomial, GradedLexLess> dependent;
    for (Monomial s : basis) {
      for (std::size_t v = 1; v <= m.n(); ++v) {
        const Monomial g = Monomial::generator(static_cast<int>(v));
        if (s.disjoint(g) && !m.is_independent(s | g)) dependent.insert(s | g);
      }
    }
    EchelonBasis relations(basis.size(), field);
    for (Monomial d : dependent) {
      SparseVector v;
      int j = 0;
      for (int i : d.indices()) {
        auto it = col.find(d.without(Monomial::generator(i)).bits());
        if (it != col.end()) {
          v.emplace_back(it->second, (j % 2 == 0) ? Scalar::one(field) : -Scalar::one(field));
        }
        ++j;
      }
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      relations.insert(std::move(v));
    }
    std::vector<Monomial> chosen;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (relations.rank() == basis.size()) break;
      if (relations.insert(SparseVector{{i, Scalar::one(field)}})) chosen.push_back(basis[i]);
    }
    out.dims.push_back(chosen.size());
    out.bases.push_back(std::move(chosen));
  }
  return out;
}

std::vector<std::size_t> complement_betti(const VectorConfiguration& cfg) {
  if (!cfg.field().is_rational()) {
    throw DomainError("complement Betti numbers need a rational configuration, got " +
                      cfg.field().name());
  }
  return orlik_solomon(matroid_from_vectors(cfg)).dims;
}

}  // namespace extalg
