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
#include <optional>
#include <utility>
#include <vector>

#include "extalg/emodule.hpp"
#include "extalg/resolution.hpp"

namespace extalg {

// Slice [lo, hi] of a Tate resolution. Terms outside the slice are not
// represented at all.
using TateWindow = FreeComplex;

// Tate resolution through a module: its minimal projective resolution
// ends at term anchor(), the injective resolution starts at anchor() + 1.
// Throws InvalidArgument unless lo < hi.
TateWindow tate_window(const GradedEModule& m, int lo, int hi);

// Tate resolution through a differential d leaving term `term`. Scalar
// entries of d are cancelled, so d need not be minimal.
TateWindow tate_window_from_differential(const ExteriorMatrix& d, int term, int lo, int hi);

// First t whose two consecutive differentials do not compose to zero.
std::optional<int> composition_defect(const FreeComplex& c);
bool is_minimal(const FreeComplex& c);
// (term, internal degree) pairs of interior terms with nonzero homology.
std::vector<std::pair<int, int>> exactness_defects(const FreeComplex& c);

// H^p(F(q)) = multiplicity of twist q in term p + q.
class CohomTable {
 public:
  CohomTable(std::size_t n, int lo, int hi, std::map<std::pair<int, int>, std::size_t> entries)
      : n_(n), lo_(lo), hi_(hi), entries_(std::move(entries)) {}

  std::size_t n() const { return n_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  // Nonzero entries keyed by (p, q).
  const std::map<std::pair<int, int>, std::size_t>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  // nullopt when term p + q lies outside the window.
  std::optional<std::size_t> at(int p, int q) const;
  // Every p in 0..n-1 is known for twist q.
  bool column_complete(int q) const;
  // sum_p (-1)^p H^p(F(q)); nullopt unless the column is complete.
  std::optional<long long> euler_characteristic(int q) const;

 private:
  std::size_t n_;
  int lo_;
  int hi_;
  std::map<std::pair<int, int>, std::size_t> entries_;
};

CohomTable cohomology_table(const TateWindow& w);

}  // namespace extalg
