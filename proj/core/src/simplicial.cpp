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

#include "extalg/simplicial.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "extalg/errors.hpp"
#include "extalg/multivector.hpp"

namespace extalg {

namespace {

void check_vertex_count(std::size_t n) {
  if (n > SimplicialComplex::kMaxVertices) {
    throw InvalidArgument("simplicial complex on " + std::to_string(n) +
                          " vertices exceeds the limit of " +
                          std::to_string(SimplicialComplex::kMaxVertices));
  }
}

std::unordered_map<std::uint64_t, std::size_t> index_of(const std::vector<Monomial>& basis) {
  std::unordered_map<std::uint64_t, std::size_t> out;
  out.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) out.emplace(basis[i].bits(), i);
  return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::size_t n, std::vector<Monomial> faces)
    : n_(n), faces_(std::move(faces)) {
  std::sort(faces_.begin(), faces_.end(), GradedLexLess{});
  lookup_.reserve(faces_.size());
  for (Monomial f : faces_) lookup_.insert(f.bits());
}

SimplicialComplex SimplicialComplex::from_facets(std::size_t n,
                                                 const std::vector<std::vector<int>>& facets) {
  check_vertex_count(n);
  std::unordered_set<std::uint64_t> seen{0};
  for (const auto& facet : facets) {
    for (int i : facet) {
      if (i < 1 || static_cast<std::size_t>(i) > n) {
        throw InvalidArgument("vertex " + std::to_string(i) + " outside 1.." + std::to_string(n));
      }
    }
    const std::uint64_t top = Monomial::from_indices(facet).bits();
    if (seen.count(top)) continue;
    // All submasks of the facet.
    for (std::uint64_t sub = top;; sub = (sub - 1) & top) {
      seen.insert(sub);
      if (sub == 0) break;
    }
  }
  std::vector<Monomial> faces;
  faces.reserve(seen.size());
  for (std::uint64_t b : seen) faces.emplace_back(b);
  return SimplicialComplex(n, std::move(faces));
}

SimplicialComplex SimplicialComplex::from_faces(std::size_t n, const std::vector<Monomial>& faces) {
  check_vertex_count(n);
  std::unordered_set<std::uint64_t> seen{0};
  for (Monomial f : faces) {
    if (!f.subset_of(Monomial::top(n))) {
      throw InvalidArgument("face " + f.to_string() + " has a vertex outside 1.." + std::to_string(n));
    }
    seen.insert(f.bits());
  }
  for (std::uint64_t b : seen) {
    for (std::uint64_t rest = b; rest != 0; rest &= rest - 1) {
      if (!seen.count(b & ~(rest & (~rest + 1)))) {
        throw InvalidArgument("face family is not downward closed at " + Monomial(b).to_string());
      }
    }
  }
  std::vector<Monomial> out;
  out.reserve(seen.size());
  for (std::uint64_t b : seen) out.emplace_back(b);
  return SimplicialComplex(n, std::move(out));
}

std::vector<Monomial> SimplicialComplex::faces_of_size(int k) const {
  std::vector<Monomial> out;
  for (Monomial f : faces_) {
    if (f.grade() == k) out.push_back(f);
  }
  return out;
}

std::vector<Monomial> SimplicialComplex::facets() const {
  std::vector<Monomial> out;
  for (Monomial f : faces_) {
    bool maximal = true;
    for (std::size_t v = 1; v <= n_ && maximal; ++v) {
      const Monomial g = Monomial::generator(static_cast<int>(v));
      if (f.disjoint(g) && contains(f | g)) maximal = false;
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

int SimplicialComplex::dimension() const { return faces_.back().grade() - 1; }

std::vector<std::size_t> f_vector(const SimplicialComplex& complex) {
  std::vector<std::size_t> f(static_cast<std::size_t>(complex.dimension() + 2), 0);
  for (Monomial m : complex.faces()) ++f[static_cast<std::size_t>(m.grade())];
  return f;
}

std::vector<Monomial> face_ideal_generators(const SimplicialComplex& complex) {
  // A minimal non-face is a face plus one vertex, so scanning those
  // candidates is exhaustive.
  std::set<Monomial, GradedLexLess> out;
  for (Monomial f : complex.faces()) {
    for (std::size_t v = 1; v <= complex.n(); ++v) {
      const Monomial g = Monomial::generator(static_cast<int>(v));
      if (!f.disjoint(g)) continue;
      const Monomial s = f | g;
      if (complex.contains(s)) continue;
      bool minimal = true;
      for (int i : s.indices()) {
        if (!complex.contains(s.without(Monomial::generator(i)))) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.insert(s);
    }
  }
  return {out.begin(), out.end()};
}

Matrix boundary_matrix(const SimplicialComplex& complex, int k, Field field) {
  const auto source = complex.faces_of_size(k);
  const auto target = complex.faces_of_size(k - 1);
  Matrix m(target.size(), source.size(), field);
  if (source.empty() || target.empty()) return m;
  const auto row = index_of(target);
  const DualVector u = DualVector::sum_of_duals(complex.n(), field);
  for (std::size_t c = 0; c < source.size(); ++c) {
    const MultiVector image = contract(u, MultiVector::monomial(complex.n(), source[c], field));
    for (const auto& [mono, coeff] : image.terms()) m.set(row.at(mono.bits()), c, coeff);
  }
  return m;
}

Matrix coboundary_matrix(const SimplicialComplex& complex, int k, Field field) {
  const auto source = complex.faces_of_size(k);
  const auto target = complex.faces_of_size(k + 1);
  Matrix m(target.size(), source.size(), field);
  if (source.empty() || target.empty()) return m;
  const auto row = index_of(target);
  MultiVector u(complex.n(), field);
  for (std::size_t i = 1; i <= complex.n(); ++i) {
    u += MultiVector::generator(complex.n(), static_cast<int>(i), field);
  }
  for (std::size_t c = 0; c < source.size(); ++c) {
    const MultiVector image = wedge(u, MultiVector::monomial(complex.n(), source[c], field));
    for (const auto& [mono, coeff] : image.terms()) {
      // Terms outside the complex lie in I_Delta and vanish in E(Delta).
      auto it = row.find(mono.bits());
      if (it != row.end()) m.set(it->second, c, coeff);
    }
  }
  return m;
}

namespace {

// dims[i] for topological i = internal degree - 1, given per-degree space
// dimensions and the rank of the map leaving (into) each degree.
HomologyProfile profile(const std::vector<std::size_t>& f, const std::vector<std::size_t>& out_rank,
                        const std::vector<std::size_t>& in_rank) {
  HomologyProfile p;
  for (std::size_t k = 0; k < f.size(); ++k) {
    const std::size_t h = f[k] - out_rank[k] - in_rank[k];
    if (h != 0) p.dims[static_cast<int>(k) - 1] = h;
  }
  return p;
}

}  // namespace

HomologyProfile reduced_homology(const SimplicialComplex& complex, Field field) {
  const auto f = f_vector(complex);
  // r[k] = rank of the boundary leaving degree k.
  std::vector<std::size_t> r(f.size() + 1, 0);
  for (std::size_t k = 1; k < f.size(); ++k) {
    r[k] = rank(boundary_matrix(complex, static_cast<int>(k), field));
  }
  std::vector<std::size_t> in(f.size(), 0);
  for (std::size_t k = 0; k < f.size(); ++k) in[k] = r[k + 1];
  r.resize(f.size());
  return profile(f, r, in);
}

HomologyProfile reduced_cohomology(const SimplicialComplex& complex, Field field) {
  const auto f = f_vector(complex);
  std::vector<std::size_t> out(f.size(), 0);
  std::vector<std::size_t> in(f.size(), 0);
  for (std::size_t k = 0; k + 1 < f.size(); ++k) {
    out[k] = rank(coboundary_matrix(complex, static_cast<int>(k), field));
    in[k + 1] = out[k];
  }
  return profile(f, out, in);
}

HilbertSeries hilbert_series_face_ring(const SimplicialComplex& complex) {
  HilbertSeries h;
  h.f = f_vector(complex);
  const int d = static_cast<int>(h.f.size()) - 1;
  h.denominator_exponent = d;
  h.numerator.assign(static_cast<std::size_t>(d + 1), 0);
  // f[i] t^i (1-t)^(d-i), expanded with binomial coefficients.
  for (int i = 0; i <= d; ++i) {
    long long binom = 1;
    for (int j = 0; j <= d - i; ++j) {
      const long long term = static_cast<long long>(h.f[i]) * binom;
      h.numerator[static_cast<std::size_t>(i + j)] += (j % 2 == 0) ? term : -term;
      binom = binom * (d - i - j) / (j + 1);
    }
  }
  while (h.numerator.size() > 1 && h.numerator.back() == 0) h.numerator.pop_back();
  return h;
}

}  // namespace extalg
