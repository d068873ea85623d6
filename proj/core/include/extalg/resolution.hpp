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
#include <vector>

#include "extalg/emodule.hpp"
#include "extalg/linalg.hpp"
#include "extalg/scalar.hpp"

namespace extalg {

// Bounded complex of free E(n)-modules. Term lo + k has generator twists
// terms[k]; maps[k] goes from term lo + k to term lo + k + 1.
struct FreeComplex {
  std::size_t n = 0;
  Field field = Field::rationals();
  int lo = 0;
  std::vector<std::vector<int>> terms;
  std::vector<ExteriorMatrix> maps;

  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
  const std::vector<int>& term(int t) const { return terms.at(static_cast<std::size_t>(t - lo)); }
  // Differential leaving term t.
  const ExteriorMatrix& differential(int t) const {
    return maps.at(static_cast<std::size_t>(t - lo));
  }
  std::vector<std::size_t> ranks() const;
};

// A graded subspace of a free module, given by a basis of each nonzero
// degree in the module's k-basis coordinates.
struct FreeSubmodule {
  std::vector<int> twists;
  std::map<int, std::vector<SparseVector>> basis;

  bool is_zero() const { return basis.empty(); }
};

// One resolution step: a minimal free cover G -> F of the submodule and
// the kernel of that cover inside G.
struct SyzygyStep {
  ExteriorMatrix cover;
  FreeSubmodule kernel;
};

SyzygyStep syzygy_step(const FreeSubmodule& k, std::size_t n, Field field);

// Kernel of the map a as a submodule of its source.
FreeSubmodule kernel_submodule(const ExteriorMatrix& a);

// Minimal free cover F_0 -> M of an explicit module, returned as the
// generator twists of F_0 and the kernel of the cover.
FreeSubmodule module_syzygies(const GradedEModule& m, std::vector<int>* cover_twists);

// P_steps -> ... -> P_1 -> P_0 with P_s at index -s. Stops early once a
// kernel vanishes, so a free module gives the single term P_0 and the zero
// module a single empty term.
FreeComplex minimal_projective_resolution(const GradedEModule& m, int steps);

// I^0 -> I^1 -> ... -> I^steps, obtained by dualizing the minimal
// projective resolution of the graded dual module.
FreeComplex minimal_injective_resolution(const GradedEModule& m, int steps);

}  // namespace extalg
