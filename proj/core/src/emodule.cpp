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

#include "extalg/emodule.hpp"

#include <algorithm>
#include <string>

#include "extalg/errors.hpp"

namespace extalg {

namespace {

void check_module_rank(std::size_t n) {
  if (n > kMaxModuleGenerators) {
    throw InvalidArgument("modules over E(" + std::to_string(n) + ") exceed the limit of " +
                          std::to_string(kMaxModuleGenerators) + " generators");
  }
}

void sort_sparse(SparseVector& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

}  // namespace

GradedEModule::GradedEModule(std::size_t n, std::map<int, std::size_t> components,
                             Actions actions, Field field, int anchor)
    : n_(n), field_(field), anchor_(anchor), actions_(std::move(actions)) {
  check_module_rank(n);
  for (const auto& [d, m] : components) {
    if (m != 0) components_.emplace(d, m);
  }
  if (actions_.size() > n_) throw InvalidArgument("more action families than generators");
  actions_.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (auto it = actions_[i].begin(); it != actions_[i].end();) {
      const int d = it->first;
      const Matrix& a = it->second;
      if (a.rows() != dim(d + 1) || a.cols() != dim(d)) {
        throw InvalidArgument("action of e" + std::to_string(i + 1) + " in degree " +
                              std::to_string(d) + " is " + std::to_string(a.rows()) + "x" +
                              std::to_string(a.cols()) + ", expected " +
                              std::to_string(dim(d + 1)) + "x" + std::to_string(dim(d)));
      }
      if (a.field() != field_) throw FieldMismatch("action matrix over " + a.field().name());
      it = a.is_zero() ? actions_[i].erase(it) : std::next(it);
    }
  }
  for (const auto& [d, m] : components_) {
    for (std::size_t i = 1; i <= n_; ++i) {
      for (std::size_t j = i; j <= n_; ++j) {
        const int ii = static_cast<int>(i);
        const int jj = static_cast<int>(j);
        Matrix s = action(ii, d + 1) * action(jj, d);
        if (i != j) s = s + action(jj, d + 1) * action(ii, d);
        if (!s.is_zero()) {
          throw InvalidArgument(i == j ? "e" + std::to_string(i) + " does not square to zero "
                                             "on degree " + std::to_string(d)
                                       : "e" + std::to_string(i) + " and e" + std::to_string(j) +
                                             " do not anticommute on degree " + std::to_string(d));
        }
      }
    }
  }
}

GradedEModule GradedEModule::zero(std::size_t n, Field field) {
  return GradedEModule(n, {}, Actions(n), field);
}

GradedEModule GradedEModule::residue_field(std::size_t n, Field field, int degree) {
  return GradedEModule(n, {{degree, 1}}, Actions(n), field);
}

GradedEModule GradedEModule::free_module(std::size_t n, Field field) {
  check_module_rank(n);
  FreeBasis basis(n, {0});
  std::map<int, std::size_t> comps;
  Actions actions(n);
  for (int d = 0; d <= static_cast<int>(n); ++d) {
    comps[d] = basis.dim(d);
    if (d == static_cast<int>(n)) break;
    for (std::size_t i = 1; i <= n; ++i) {
      Matrix a(basis.dim(d + 1), basis.dim(d), field);
      for (std::size_t c = 0; c < basis.dim(d); ++c) {
        const auto v =
            multiply_generator(basis, d, static_cast<int>(i), {{c, Scalar::one(field)}}, field);
        for (const auto& [r, x] : v) a.set(r, c, x);
      }
      actions[i - 1].emplace(d, std::move(a));
    }
  }
  return GradedEModule(n, std::move(comps), std::move(actions), field);
}

GradedEModule GradedEModule::with_anchor(int anchor) const {
  GradedEModule out = *this;
  out.anchor_ = anchor;
  return out;
}

std::size_t GradedEModule::dim(int d) const {
  auto it = components_.find(d);
  return it == components_.end() ? 0 : it->second;
}

std::size_t GradedEModule::total_dim() const {
  std::size_t total = 0;
  for (const auto& [d, m] : components_) total += m;
  return total;
}

Matrix GradedEModule::action(int i, int d) const {
  if (i < 1 || static_cast<std::size_t>(i) > n_) {
    throw InvalidArgument("generator e" + std::to_string(i) + " outside 1.." + std::to_string(n_));
  }
  const auto& family = actions_[static_cast<std::size_t>(i - 1)];
  auto it = family.find(d);
  if (it != family.end()) return it->second;
  return Matrix(dim(d + 1), dim(d), field_);
}

std::vector<Scalar> GradedEModule::act(Monomial m, int d, const std::vector<Scalar>& v) const {
  std::vector<Scalar> cur = v;
  const auto idx = m.indices();
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
    cur = action(*it, d).apply(cur);
    ++d;
  }
  return cur;
}

GradedEModule GradedEModule::dual() const {
  std::map<int, std::size_t> comps;
  for (const auto& [d, m] : components_) comps[-d] = m;
  Actions acts(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (const auto& [d, a] : actions_[i]) acts[i].emplace(-d - 1, a.transpose());
  }
  return GradedEModule(n_, std::move(comps), std::move(acts), field_);
}

ExteriorMatrix::ExteriorMatrix(std::size_t n, Field field, std::vector<int> row_degrees,
                               std::vector<int> col_degrees)
    : n_(n),
      field_(field),
      row_degrees_(std::move(row_degrees)),
      col_degrees_(std::move(col_degrees)),
      entries_(row_degrees_.size() * col_degrees_.size(), MultiVector(n, field)) {
  check_module_rank(n);
}

void ExteriorMatrix::set(std::size_t r, std::size_t c, MultiVector value) {
  if (r >= rows() || c >= cols()) throw DimensionMismatch("exterior matrix index out of range");
  if (value.n() != n_) {
    throw DimensionMismatch("entry from E(" + std::to_string(value.n()) + ") in a matrix over E(" +
                            std::to_string(n_) + ")");
  }
  if (value.field() != field_) throw FieldMismatch("entry over " + value.field().name());
  const int degree = row_degrees_[r] - col_degrees_[c];
  if (!value.is_zero() && !value.is_homogeneous(degree)) {
    throw InvalidArgument("entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                          ") = " + value.to_string() + " is not homogeneous of degree " +
                          std::to_string(degree));
  }
  entries_[r * cols() + c] = std::move(value);
}

bool ExteriorMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.is_zero(); });
}

bool ExteriorMatrix::has_unit_entries() const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [](const auto& e) { return !e.coefficient(Monomial()).is_zero(); });
}

ExteriorMatrix ExteriorMatrix::without_row(std::size_t r) const {
  std::vector<int> rows = row_degrees_;
  rows.erase(rows.begin() + static_cast<long>(r));
  ExteriorMatrix out(n_, field_, std::move(rows), col_degrees_);
  for (std::size_t i = 0, k = 0; i < this->rows(); ++i) {
    if (i == r) continue;
    for (std::size_t c = 0; c < cols(); ++c) out.entries_[k * cols() + c] = at(i, c);
    ++k;
  }
  return out;
}

ExteriorMatrix ExteriorMatrix::without_col(std::size_t c) const {
  std::vector<int> cs = col_degrees_;
  cs.erase(cs.begin() + static_cast<long>(c));
  ExteriorMatrix out(n_, field_, row_degrees_, std::move(cs));
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0, k = 0; j < cols(); ++j) {
      if (j == c) continue;
      out.entries_[i * out.cols() + k] = at(i, j);
      ++k;
    }
  }
  return out;
}

ExteriorMatrix compose(const ExteriorMatrix& a, const ExteriorMatrix& b) {
  if (a.row_degrees() != b.col_degrees() || a.n() != b.n()) {
    throw DimensionMismatch("composition of maps between different free modules");
  }
  if (a.field() != b.field()) throw FieldMismatch("composition across fields");
  ExteriorMatrix out(a.n(), a.field(), b.row_degrees(), a.col_degrees());
  for (std::size_t k = 0; k < b.rows(); ++k) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      MultiVector sum(a.n(), a.field());
      for (std::size_t i = 0; i < a.rows(); ++i) {
        if (a.at(i, j).is_zero() || b.at(k, i).is_zero()) continue;
        sum += wedge(a.at(i, j), b.at(k, i));
      }
      out.set(k, j, std::move(sum));
    }
  }
  return out;
}

ExteriorMatrix dual(const ExteriorMatrix& a) {
  const int n = static_cast<int>(a.n());
  std::vector<int> rows;
  std::vector<int> cols;
  for (int q : a.col_degrees()) rows.push_back(n - q);
  for (int q : a.row_degrees()) cols.push_back(n - q);
  ExteriorMatrix out(a.n(), a.field(), std::move(rows), std::move(cols));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const MultiVector& e = a.at(i, j);
      if (e.is_zero()) continue;
      MultiVector v(a.n(), a.field());
      for (const auto& [m, c] : e.terms()) {
        const int b = m.grade();
        v.add_term(m, (b * (b - 1) / 2) % 2 ? -c : c);
      }
      out.set(j, i, std::move(v));
    }
  }
  return out;
}

FreeBasis::FreeBasis(std::size_t n, std::vector<int> twists) : n_(n), twists_(std::move(twists)) {
  check_module_rank(n);
  by_grade_.resize(n + 1);
  rank_.resize(n + 1);
  for (std::size_t g = 0; g <= n; ++g) {
    by_grade_[g] = monomials_of_grade(n, static_cast<int>(g));
    for (std::size_t k = 0; k < by_grade_[g].size(); ++k) rank_[g].emplace(by_grade_[g][k].bits(), k);
  }
}

int FreeBasis::min_degree() const {
  int lo = 0;
  for (std::size_t j = 0; j < twists_.size(); ++j) lo = j == 0 ? -twists_[j] : std::min(lo, -twists_[j]);
  return lo;
}

int FreeBasis::max_degree() const {
  int hi = 0;
  for (std::size_t j = 0; j < twists_.size(); ++j) hi = j == 0 ? -twists_[j] : std::max(hi, -twists_[j]);
  return hi + static_cast<int>(n_);
}

const std::vector<Monomial>& FreeBasis::monomials(int grade) const {
  static const std::vector<Monomial> kNone;
  if (grade < 0 || grade > static_cast<int>(n_)) return kNone;
  return by_grade_[static_cast<std::size_t>(grade)];
}

std::size_t FreeBasis::dim(int d) const {
  std::size_t total = 0;
  for (int q : twists_) total += monomials(d + q).size();
  return total;
}

std::vector<std::size_t> FreeBasis::offsets(int d) const {
  std::vector<std::size_t> out(twists_.size() + 1, 0);
  for (std::size_t j = 0; j < twists_.size(); ++j) out[j + 1] = out[j] + monomials(d + twists_[j]).size();
  return out;
}

std::pair<std::size_t, Monomial> FreeBasis::element(int d, std::size_t index) const {
  for (std::size_t j = 0; j < twists_.size(); ++j) {
    const auto& mons = monomials(d + twists_[j]);
    if (index < mons.size()) return {j, mons[index]};
    index -= mons.size();
  }
  throw DimensionMismatch("free-module basis index out of range");
}

std::optional<std::size_t> FreeBasis::index(int d, std::size_t g, Monomial m) const {
  if (g >= twists_.size() || m.grade() != d + twists_[g]) return std::nullopt;
  return offsets(d)[g] + rank_in_grade(m);
}

std::vector<SparseVector> expand_columns(const ExteriorMatrix& a, const FreeBasis& source,
                                         const FreeBasis& target, int d) {
  if (source.twists() != a.col_degrees() || target.twists() != a.row_degrees()) {
    throw DimensionMismatch("free bases do not match the matrix degrees");
  }
  const auto toff = target.offsets(d);
  std::vector<SparseVector> cols;
  cols.reserve(source.dim(d));
  for (std::size_t k = 0; k < a.cols(); ++k) {
    for (Monomial m : source.monomials(d + a.col_degrees()[k])) {
      SparseVector col;
      for (std::size_t i = 0; i < a.rows(); ++i) {
        for (const auto& [t, c] : a.at(i, k).terms()) {
          if (!m.disjoint(t)) continue;
          const std::size_t r = toff[i] + target.rank_in_grade(m | t);
          col.emplace_back(r, wedge_sign(m, t) < 0 ? -c : c);
        }
      }
      sort_sparse(col);
      cols.push_back(std::move(col));
    }
  }
  return cols;
}

Matrix expand(const ExteriorMatrix& a, const FreeBasis& source, const FreeBasis& target, int d) {
  return Matrix::from_columns(target.dim(d), expand_columns(a, source, target, d), a.field());
}

SparseVector multiply_generator(const FreeBasis& f, int d, int i, const SparseVector& v,
                                Field field) {
  (void)field;
  const Monomial g = Monomial::generator(i);
  const auto from = f.offsets(d);
  const auto to = f.offsets(d + 1);
  SparseVector out;
  std::size_t j = 0;
  for (const auto& [idx, x] : v) {
    while (from[j + 1] <= idx) ++j;
    const Monomial m = f.monomials(d + f.twists()[j])[idx - from[j]];
    if (!m.disjoint(g)) continue;
    const std::size_t r = to[j] + f.rank_in_grade(m | g);
    out.emplace_back(r, wedge_sign(g, m) < 0 ? -x : x);
  }
  sort_sparse(out);
  return out;
}

GradedEModule module_from_matrix(const ExteriorMatrix& a, ModuleMode mode, int term) {
  const Field field = a.field();
  const std::size_t n = a.n();
  const FreeBasis source(n, a.col_degrees());
  const FreeBasis target(n, a.row_degrees());
  const int anchor = mode == ModuleMode::kCokernel ? term + 1 : term;
  if (target.empty()) return GradedEModule::zero(n, field).with_anchor(anchor);

  const int lo = target.min_degree();
  const int hi = target.max_degree();
  std::map<int, EchelonBasis> image;
  for (int d = lo; d <= hi + 1; ++d) {
    EchelonBasis e(target.dim(d), field);
    if (!source.empty()) {
      for (auto& col : expand_columns(a, source, target, d)) e.insert(std::move(col));
    }
    image.emplace(d, std::move(e));
  }

  std::map<int, std::size_t> comps;
  GradedEModule::Actions actions(n);
  if (mode == ModuleMode::kCokernel) {
    // Quotient basis: the non-pivot coordinates of each degree.
    std::map<int, std::vector<std::size_t>> free_cols;
    std::map<int, std::vector<long>> position;
    for (int d = lo; d <= hi + 1; ++d) {
      const auto& e = image.at(d);
      auto& cols = free_cols[d];
      auto& pos = position[d];
      pos.assign(target.dim(d), -1);
      for (std::size_t c = 0; c < target.dim(d); ++c) {
        if (!e.is_pivot(c)) {
          pos[c] = static_cast<long>(cols.size());
          cols.push_back(c);
        }
      }
      if (!cols.empty()) comps[d] = cols.size();
    }
    for (int d = lo; d <= hi; ++d) {
      const auto& src = free_cols.at(d);
      const auto& dst = free_cols.at(d + 1);
      if (src.empty() || dst.empty()) continue;
      for (std::size_t i = 1; i <= n; ++i) {
        Matrix m(dst.size(), src.size(), field);
        for (std::size_t k = 0; k < src.size(); ++k) {
          const auto w = multiply_generator(target, d, static_cast<int>(i),
                                            {{src[k], Scalar::one(field)}}, field);
          for (const auto& [c, x] : image.at(d + 1).reduce(w)) {
            m.set(static_cast<std::size_t>(position.at(d + 1)[c]), k, x);
          }
        }
        actions[i - 1].emplace(d, std::move(m));
      }
    }
  } else {
    for (int d = lo; d <= hi + 1; ++d) {
      if (image.at(d).rank() != 0) comps[d] = image.at(d).rank();
    }
    for (int d = lo; d <= hi; ++d) {
      const auto& src = image.at(d);
      const auto& dst = image.at(d + 1);
      if (src.rank() == 0 || dst.rank() == 0) continue;
      for (std::size_t i = 1; i <= n; ++i) {
        Matrix m(dst.rank(), src.rank(), field);
        for (std::size_t k = 0; k < src.rank(); ++k) {
          const auto w = multiply_generator(target, d, static_cast<int>(i), src.row(k), field);
          SparseVector coords;
          if (!dst.reduce(w, &coords).empty()) {
            throw Error("image is not closed under multiplication");
          }
          for (const auto& [r, x] : coords) m.set(r, k, x);
        }
        actions[i - 1].emplace(d, std::move(m));
      }
    }
  }
  return GradedEModule(n, std::move(comps), std::move(actions), field, anchor);
}

LinearComplex bgg_linear_complex(const GradedEModule& m) {
  LinearComplex c;
  c.n = m.n();
  c.field = m.field();
  c.ranks = m.components();
  if (m.is_zero()) return c;
  for (int p = m.min_degree(); p < m.max_degree(); ++p) {
    std::vector<Matrix> coeffs;
    for (std::size_t i = 1; i <= m.n(); ++i) coeffs.push_back(m.action(static_cast<int>(i), p));
    c.maps.emplace(p, std::move(coeffs));
  }
  return c;
}

std::optional<std::string> linear_square_defect(const LinearComplex& c) {
  for (const auto& [p, first] : c.maps) {
    auto next = c.maps.find(p + 1);
    if (next == c.maps.end()) continue;
    const auto& second = next->second;
    for (std::size_t i = 0; i < c.n; ++i) {
      for (std::size_t j = i; j < c.n; ++j) {
        Matrix s = second[i] * first[j];
        if (i != j) s = s + second[j] * first[i];
        if (!s.is_zero()) {
          const std::string mono = i == j ? "x" + std::to_string(i + 1) + "^2"
                                          : "x" + std::to_string(i + 1) + "*x" +
                                                std::to_string(j + 1);
          return "coefficient of " + mono + " in d^" + std::to_string(p + 1) + " d^" +
                 std::to_string(p) + " is nonzero";
        }
      }
    }
  }
  return std::nullopt;
}

std::string linear_form(const LinearComplex& c, int p, std::size_t r, std::size_t col) {
  const auto& coeffs = c.maps.at(p);
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Scalar x = coeffs[i].at(r, col);
    if (x.is_zero()) continue;
    std::string s = x.to_string();
    const bool negative = s.front() == '-';
    if (negative) s.erase(0, 1);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (s != "1") out += s + "*";
    out += "x" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

}  // namespace extalg
