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
#include <unordered_set>
#include <vector>

#include "extalg/linalg.hpp"
#include "extalg/monomial.hpp"
#include "extalg/scalar.hpp"

namespace extalg {

// Downward-closed family of subsets of {1..n}, stored face by face. The
// empty face is always present, so chain complexes built from it compute
// reduced (co)homology directly.
class SimplicialComplex {
 public:
  // Explicit face storage is exponential in the facet size.
  static constexpr std::size_t kMaxVertices = 20;

  // Downward closure of the given sets plus the empty face. Throws
  // InvalidArgument for indices outside 1..n or n > kMaxVertices.
  static SimplicialComplex from_facets(std::size_t n, const std::vector<std::vector<int>>& facets);
  // Faces given explicitly; throws InvalidArgument unless the family is
  // downward closed.
  static SimplicialComplex from_faces(std::size_t n, const std::vector<Monomial>& faces);

  std::size_t n() const { return n_; }
  // Graded-lex order.
  const std::vector<Monomial>& faces() const { return faces_; }
  bool contains(Monomial face) const { return lookup_.count(face.bits()) != 0; }
  // Faces of cardinality k, graded-lex order.
  std::vector<Monomial> faces_of_size(int k) const;
  // Inclusion-maximal faces.
  std::vector<Monomial> facets() const;
  // Largest face cardinality minus one; -1 for the complex {{}}.
  int dimension() const;

 private:
  SimplicialComplex(std::size_t n, std::vector<Monomial> faces);

  std::size_t n_;
  std::vector<Monomial> faces_;
  std::unordered_set<std::uint64_t> lookup_;
};

// f[i] = number of faces with i elements; f[0] = 1 counts the empty face.
std::vector<std::size_t> f_vector(const SimplicialComplex& complex);

// Minimal non-faces. Their monomials generate the face ideal I_Delta, so
// E(Delta) = E(n) / I_Delta has the faces as a monomial basis.
std::vector<Monomial> face_ideal_generators(const SimplicialComplex& complex);

// dims[i] = dim of reduced (co)homology in topological degree i >= -1;
// only nonzero entries are stored.
struct HomologyProfile {
  std::map<int, std::size_t> dims;

  std::size_t at(int i) const {
    auto it = dims.find(i);
    return it == dims.end() ? 0 : it->second;
  }
  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

// Contraction by u* = e_1* + ... + e_n* on the dual face ring E(Delta)*,
// from the span of k-element faces to the span of (k-1)-element faces.
// Columns and rows follow faces_of_size order.
Matrix boundary_matrix(const SimplicialComplex& complex, int k, Field field = Field::rationals());

// Multiplication by u = e_1 + ... + e_n on E(Delta), from faces of size k
// to faces of size k+1, dropping monomials in I_Delta.
Matrix coboundary_matrix(const SimplicialComplex& complex, int k,
                         Field field = Field::rationals());

// Reduced simplicial homology from the contraction complex. Internal
// degree i+1 of E(Delta)* carries topological degree i.
HomologyProfile reduced_homology(const SimplicialComplex& complex,
                                 Field field = Field::rationals());

// Reduced simplicial cohomology from the complex (E(Delta), u ^ -), with
// the same degree shift.
HomologyProfile reduced_cohomology(const SimplicialComplex& complex,
                                   Field field = Field::rationals());

// Hilbert series of the Stanley-Reisner ring k[Delta],
//   sum_i f[i] t^i / (1-t)^i  =  numerator(t) / (1-t)^denominator_exponent
// with denominator_exponent = dim + 1.
struct HilbertSeries {
  std::vector<std::size_t> f;
  std::vector<long long> numerator;
  int denominator_exponent = 0;
};

HilbertSeries hilbert_series_face_ring(const SimplicialComplex& complex);

}  // namespace extalg
