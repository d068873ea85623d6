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

#include "extalg/tate.hpp"

#include <algorithm>
#include <string>

#include "extalg/errors.hpp"

namespace extalg {

namespace {

void check_window(int lo, int hi) {
  if (lo >= hi) {
    throw InvalidArgument("window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                          "] needs lo < hi");
  }
}

// Splits off every scalar entry of the differential leaving term t by
// Gaussian elimination. For a unit u at (r, c) the remaining block
// becomes delta - beta ^ gamma / u, and the neighbouring differentials
// lose the matching row and column.
void cancel_units(FreeComplex& c, int t) {
  const std::size_t k = static_cast<std::size_t>(t - c.lo);
  while (true) {
    const ExteriorMatrix& a = c.maps[k];
    std::size_t ur = a.rows();
    std::size_t uc = a.cols();
    for (std::size_t r = 0; r < a.rows() && ur == a.rows(); ++r) {
      for (std::size_t col = 0; col < a.cols(); ++col) {
        if (!a.at(r, col).coefficient(Monomial()).is_zero()) {
          ur = r;
          uc = col;
          break;
        }
      }
    }
    if (ur == a.rows()) return;
    const Scalar inv = a.at(ur, uc).coefficient(Monomial()).inverse();
    ExteriorMatrix reduced = a.without_row(ur).without_col(uc);
    for (std::size_t r = 0, rr = 0; r < a.rows(); ++r) {
      if (r == ur) continue;
      const MultiVector& gamma = a.at(r, uc);
      if (!gamma.is_zero()) {
        for (std::size_t col = 0, cc = 0; col < a.cols(); ++col) {
          if (col == uc) continue;
          const MultiVector& beta = a.at(ur, col);
          if (!beta.is_zero()) reduced.set(rr, cc, a.at(r, col) - wedge(beta, gamma) * inv);
          ++cc;
        }
      }
      ++rr;
    }
    if (k > 0) c.maps[k - 1] = c.maps[k - 1].without_row(uc);
    if (k + 1 < c.maps.size()) c.maps[k + 1] = c.maps[k + 1].without_col(ur);
    c.terms[k].erase(c.terms[k].begin() + static_cast<long>(uc));
    c.terms[k + 1].erase(c.terms[k + 1].begin() + static_cast<long>(ur));
    c.maps[k] = std::move(reduced);
  }
}

FreeComplex truncate(const FreeComplex& c, int lo, int hi) {
  FreeComplex out;
  out.n = c.n;
  out.field = c.field;
  out.lo = lo;
  for (int t = lo; t <= hi; ++t) out.terms.push_back(c.term(t));
  for (int t = lo; t < hi; ++t) out.maps.push_back(c.differential(t));
  return out;
}

}  // namespace

TateWindow tate_window_from_differential(const ExteriorMatrix& d, int term, int lo, int hi) {
  check_window(lo, hi);
  const std::size_t n = d.n();
  const Field field = d.field();
  const int from = std::min(lo, term);
  const int to = std::max(hi, term + 1);

  // Left of the differential: a minimal resolution of its kernel.
  std::vector<std::vector<int>> left_terms;
  std::vector<ExteriorMatrix> left_maps;
  FreeSubmodule k = kernel_submodule(d);
  std::vector<int> prev = d.col_degrees();
  for (int t = term - 1; t >= from; --t) {
    if (k.is_zero()) {
      left_maps.emplace_back(n, field, prev, std::vector<int>{});
      left_terms.emplace_back();
      prev.clear();
      continue;
    }
    SyzygyStep step = syzygy_step(k, n, field);
    prev = step.cover.col_degrees();
    left_terms.push_back(prev);
    left_maps.push_back(std::move(step.cover));
    k = std::move(step.kernel);
  }

  // Right of it: the dual of a minimal resolution of ker(d^v).
  std::vector<std::vector<int>> right_terms;
  std::vector<ExteriorMatrix> right_maps;
  k = kernel_submodule(dual(d));
  prev = d.row_degrees();
  for (int t = term + 2; t <= to; ++t) {
    if (k.is_zero()) {
      right_maps.emplace_back(n, field, std::vector<int>{}, prev);
      right_terms.emplace_back();
      prev.clear();
      continue;
    }
    SyzygyStep step = syzygy_step(k, n, field);
    ExteriorMatrix m = dual(step.cover);
    prev = m.row_degrees();
    right_terms.push_back(prev);
    right_maps.push_back(std::move(m));
    k = std::move(step.kernel);
  }

  FreeComplex c;
  c.n = n;
  c.field = field;
  c.lo = from;
  c.terms.assign(left_terms.rbegin(), left_terms.rend());
  c.maps.assign(left_maps.rbegin(), left_maps.rend());
  c.terms.push_back(d.col_degrees());
  c.terms.push_back(d.row_degrees());
  c.maps.push_back(d);
  c.terms.insert(c.terms.end(), right_terms.begin(), right_terms.end());
  c.maps.insert(c.maps.end(), right_maps.begin(), right_maps.end());
  // Free summands of the module surface as units next to the seed.
  for (int t = c.lo; t < c.hi(); ++t) cancel_units(c, t);
  return truncate(c, lo, hi);
}

TateWindow tate_window(const GradedEModule& m, int lo, int hi) {
  check_window(lo, hi);
  std::vector<int> p0;
  const FreeSubmodule k = module_syzygies(m, &p0);
  if (k.is_zero()) {
    // M is free (or zero): present it by the empty map into its cover.
    return tate_window_from_differential(
        ExteriorMatrix(m.n(), m.field(), p0, std::vector<int>{}), m.anchor() - 1, lo, hi);
  }
  return tate_window_from_differential(syzygy_step(k, m.n(), m.field()).cover, m.anchor() - 1,
                                       lo, hi);
}

std::optional<int> composition_defect(const FreeComplex& c) {
  for (std::size_t k = 0; k + 1 < c.maps.size(); ++k) {
    if (!compose(c.maps[k], c.maps[k + 1]).is_zero()) return c.lo + static_cast<int>(k);
  }
  return std::nullopt;
}

bool is_minimal(const FreeComplex& c) {
  return std::none_of(c.maps.begin(), c.maps.end(),
                      [](const auto& m) { return m.has_unit_entries(); });
}

std::vector<std::pair<int, int>> exactness_defects(const FreeComplex& c) {
  std::vector<std::pair<int, int>> out;
  for (int t = c.lo + 1; t < c.hi(); ++t) {
    const FreeBasis prev(c.n, c.term(t - 1));
    const FreeBasis here(c.n, c.term(t));
    const FreeBasis next(c.n, c.term(t + 1));
    if (here.empty()) continue;
    for (int d = here.min_degree(); d <= here.max_degree(); ++d) {
      const std::size_t dim = here.dim(d);
      if (dim == 0) continue;
      const std::size_t out_rank = rank(expand(c.differential(t), here, next, d));
      const std::size_t in_rank = rank(expand(c.differential(t - 1), prev, here, d));
      if (dim - out_rank != in_rank) out.emplace_back(t, d);
    }
  }
  return out;
}

std::optional<std::size_t> CohomTable::at(int p, int q) const {
  if (p + q < lo_ || p + q > hi_) return std::nullopt;
  auto it = entries_.find({p, q});
  return it == entries_.end() ? 0 : it->second;
}

bool CohomTable::column_complete(int q) const {
  return n_ > 0 && q >= lo_ && q + static_cast<int>(n_) - 1 <= hi_;
}

std::optional<long long> CohomTable::euler_characteristic(int q) const {
  if (!column_complete(q)) return std::nullopt;
  long long chi = 0;
  for (auto it = entries_.begin(); it != entries_.end(); ++it) {
    const auto [p, qq] = it->first;
    if (qq != q) continue;
    chi += (p % 2 == 0 ? 1 : -1) * static_cast<long long>(it->second);
  }
  return chi;
}

CohomTable cohomology_table(const TateWindow& w) {
  std::map<std::pair<int, int>, std::size_t> entries;
  for (int t = w.lo; t <= w.hi(); ++t) {
    for (int q : w.term(t)) ++entries[{t - q, q}];
  }
  return CohomTable(w.n, w.lo, w.hi(), std::move(entries));
}

}  // namespace extalg
