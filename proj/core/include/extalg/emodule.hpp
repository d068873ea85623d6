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
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "extalg/linalg.hpp"
#include "extalg/monomial.hpp"
#include "extalg/multivector.hpp"
#include "extalg/scalar.hpp"

namespace extalg {

// Free modules over E(n) are expanded into k-bases of size 2^n per
// generator, which caps the usable n well below the algebra limit.
inline constexpr std::size_t kMaxModuleGenerators = 16;

// Finite-dimensional graded module over E(n). A_i(d) : M_d -> M_{d+1}
// is multiplication by e_i; missing action matrices are zero.
//
// The anchor records where the module sits in a Tate resolution: the
// module is the image of the differential leaving term `anchor`, so its
// free cover is that term.
class GradedEModule {
 public:
  using Actions = std::vector<std::map<int, Matrix>>;

  // actions[i-1][d] = A_i(d). Throws InvalidArgument when a matrix has the
  // wrong shape or the relations e_i e_i = 0, e_i e_j = -e_j e_i fail.
  GradedEModule(std::size_t n, std::map<int, std::size_t> components, Actions actions,
                Field field = Field::rationals(), int anchor = 0);

  static GradedEModule zero(std::size_t n, Field field = Field::rationals());
  // k concentrated in the given degree.
  static GradedEModule residue_field(std::size_t n, Field field = Field::rationals(),
                                     int degree = 0);
  // E(n) as a module over itself, generated in degree 0.
  static GradedEModule free_module(std::size_t n, Field field = Field::rationals());

  std::size_t n() const { return n_; }
  Field field() const { return field_; }
  int anchor() const { return anchor_; }
  GradedEModule with_anchor(int anchor) const;

  // Nonzero components only.
  const std::map<int, std::size_t>& components() const { return components_; }
  std::size_t dim(int d) const;
  std::size_t total_dim() const;
  bool is_zero() const { return components_.empty(); }
  // Lowest and highest nonzero degree; only meaningful when !is_zero().
  int min_degree() const { return components_.begin()->first; }
  int max_degree() const { return components_.rbegin()->first; }

  // A_i(d), a dim(d+1) x dim(d) matrix, 1-based i.
  Matrix action(int i, int d) const;
  // Image of v in M_d under the monomial m, i.e. e_{i1} (e_{i2} (... v)).
  std::vector<Scalar> act(Monomial m, int d, const std::vector<Scalar>& v) const;

  // (M^v)_d = (M_{-d})^* with transposed actions.
  GradedEModule dual() const;

 private:
  std::size_t n_;
  Field field_;
  int anchor_;
  std::map<int, std::size_t> components_;
  Actions actions_;
};

// Homogeneous matrix over E(n) describing a map of free modules
//   (+)_c E(-col_degrees[c])  ->  (+)_r E(-row_degrees[r]).
// Degrees are twists: a generator of twist q sits in internal degree -q.
// Column c is the image of source generator c, coefficients acting on the
// left, and entry (r, c) is homogeneous of degree row_degrees[r] -
// col_degrees[c].
class ExteriorMatrix {
 public:
  ExteriorMatrix(std::size_t n, Field field, std::vector<int> row_degrees,
                 std::vector<int> col_degrees);

  std::size_t n() const { return n_; }
  Field field() const { return field_; }
  std::size_t rows() const { return row_degrees_.size(); }
  std::size_t cols() const { return col_degrees_.size(); }
  const std::vector<int>& row_degrees() const { return row_degrees_; }
  const std::vector<int>& col_degrees() const { return col_degrees_; }

  const MultiVector& at(std::size_t r, std::size_t c) const { return entries_[r * cols() + c]; }
  // Throws InvalidArgument if value is not homogeneous of the required
  // degree, DimensionMismatch / FieldMismatch on the wrong algebra.
  void set(std::size_t r, std::size_t c, MultiVector value);

  bool is_zero() const;
  // True when some entry has a nonzero scalar part (a non-minimal map).
  bool has_unit_entries() const;

  // Drops the given rows or columns.
  ExteriorMatrix without_row(std::size_t r) const;
  ExteriorMatrix without_col(std::size_t c) const;

  friend bool operator==(const ExteriorMatrix&, const ExteriorMatrix&) = default;

 private:
  std::size_t n_;
  Field field_;
  std::vector<int> row_degrees_;
  std::vector<int> col_degrees_;
  std::vector<MultiVector> entries_;
};

// The map "first a, then b". Throws DimensionMismatch when a's target is
// not b's source.
ExteriorMatrix compose(const ExteriorMatrix& a, const ExteriorMatrix& b);

// Graded dual of a map of free modules, G^v -> F^v. A twist q becomes
// n - q; entries are transposed and a degree-b part picks up the sign
// (-1)^(b(b-1)/2), which makes the dual contravariant and involutive.
ExteriorMatrix dual(const ExteriorMatrix& a);

// k-basis of a free module degree by degree: pairs (generator, monomial)
// ordered by generator, then graded-lex.
class FreeBasis {
 public:
  FreeBasis(std::size_t n, std::vector<int> twists);

  std::size_t n() const { return n_; }
  const std::vector<int>& twists() const { return twists_; }
  bool empty() const { return twists_.empty(); }
  // Internal degrees carrying a nonzero component; empty() has none.
  int min_degree() const;
  int max_degree() const;

  std::size_t dim(int d) const;
  // offsets(d)[g] is the position of generator g's block inside degree d;
  // the final entry is dim(d).
  std::vector<std::size_t> offsets(int d) const;
  // Monomials of a grade in graded-lex order, and the position of one.
  const std::vector<Monomial>& monomials(int grade) const;
  std::size_t rank_in_grade(Monomial m) const { return rank_[m.grade()].at(m.bits()); }
  std::pair<std::size_t, Monomial> element(int d, std::size_t index) const;
  // Index of m * generator g inside degree d, or nullopt if that product
  // does not sit in degree d.
  std::optional<std::size_t> index(int d, std::size_t g, Monomial m) const;

 private:
  std::size_t n_;
  std::vector<int> twists_;
  // Per grade: monomials in graded-lex order and their positions.
  std::vector<std::vector<Monomial>> by_grade_;
  std::vector<std::unordered_map<std::uint64_t, std::size_t>> rank_;
};

// The k-linear map a induces from source degree d to target degree d,
// as a dim(target) x dim(source) matrix, or column by column.
std::vector<SparseVector> expand_columns(const ExteriorMatrix& a, const FreeBasis& source,
                                         const FreeBasis& target, int d);
Matrix expand(const ExteriorMatrix& a, const FreeBasis& source, const FreeBasis& target, int d);

// e_i times a vector of F_d, landing in F_{d+1}.
SparseVector multiply_generator(const FreeBasis& f, int d, int i, const SparseVector& v,
                                Field field);

enum class ModuleMode { kCokernel, kImage };

// Cokernel or image of a as a finite graded module. The matrix is read as
// the differential leaving Tate term `term`; the module's anchor is
// term + 1 for the cokernel and term for the image.
GradedEModule module_from_matrix(const ExteriorMatrix& a, ModuleMode mode, int term = 0);

// Linear complex S (x) M_p -> S (x) M_{p+1} over S = k[x_1..x_n]; the map
// leaving degree p is sum_i x_i A_i(p), stored as its n coefficient
// matrices.
struct LinearComplex {
  std::size_t n = 0;
  Field field = Field::rationals();
  std::map<int, std::size_t> ranks;
  // maps[p][i-1] = coefficient of x_i in d^p.
  std::map<int, std::vector<Matrix>> maps;
};

LinearComplex bgg_linear_complex(const GradedEModule& m);

// Expands d^{p+1} d^p symbolically: the x_i x_j coefficient for i < j is
// A_i(p+1) A_j(p) + A_j(p+1) A_i(p), the x_i^2 coefficient A_i(p+1) A_i(p).
// Returns a description of the first nonvanishing coefficient, if any.
std::optional<std::string> linear_square_defect(const LinearComplex& c);

// Entry (r, c) of d^p written as a linear form, e.g. "x1 - 2*x3".
std::string linear_form(const LinearComplex& c, int p, std::size_t r, std::size_t col);

}  // namespace extalg
