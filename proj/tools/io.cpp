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

#include "io.hpp"

#include <climits>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include "extalg/errors.hpp"

namespace extalg::cli {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

long read_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw ParseError(what + " must be an integer");
  return j.get<long>();
}

int read_small_int(const Json& j, const std::string& what) {
  const long v = read_int(j, what);
  if (v < INT_MIN || v > INT_MAX) throw ParseError(what + " is out of range");
  return static_cast<int>(v);
}

std::size_t read_count(const Json& j, const std::string& what) {
  const long v = read_int(j, what);
  if (v < 0) throw ParseError(what + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

// Integer-keyed JSON objects use decimal strings as keys.
int read_key(const std::string& key, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != key.size()) throw ParseError(what + " key '" + key + "' is not an integer");
  return v;
}

const Json& array(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be an array");
  return j;
}

std::vector<int> read_int_list(const Json& j, const std::string& what) {
  std::vector<int> out;
  for (const auto& x : array(j, what)) out.push_back(read_small_int(x, what + " entry"));
  return out;
}

Matrix read_matrix(const Json& j, std::size_t rows, std::size_t cols, Field field,
                   const std::string& what) {
  if (array(j, what).size() != rows) {
    throw ParseError(what + " needs " + std::to_string(rows) + " rows");
  }
  Matrix m(rows, cols, field);
  for (std::size_t r = 0; r < rows; ++r) {
    if (array(j[r], what).size() != cols) {
      throw ParseError(what + " needs " + std::to_string(cols) + " columns");
    }
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, read_scalar(j[r][c], field));
  }
  return m;
}

MultiVector read_term_list(const Json& j, std::size_t n, Field field) {
  MultiVector v(n, field);
  for (const auto& term : array(j, "term list")) {
    const std::vector<int> idx = read_int_list(member(term, "indices"), "indices");
    for (int i : idx) {
      if (i < 1 || i > static_cast<int>(n)) throw ParseError("index " + std::to_string(i) + " out of range");
    }
    std::vector<int> sorted = idx;
    int sign = 1;
    for (std::size_t a = 0; a < sorted.size(); ++a) {
      for (std::size_t b = 0; b + 1 < sorted.size() - a; ++b) {
        if (sorted[b] == sorted[b + 1]) sign = 0;
        if (sorted[b] > sorted[b + 1]) {
          std::swap(sorted[b], sorted[b + 1]);
          sign = -sign;
        }
      }
    }
    if (sign == 0) continue;
    Scalar c = read_scalar(member(term, "coeff"), field);
    v.add_term(Monomial::from_indices(sorted), sign > 0 ? c : -c);
  }
  return v;
}

GradedEModule read_explicit_module(const Json& j, std::size_t n, Field field) {
  std::map<int, std::size_t> components;
  const Json& comp = member(j, "components");
  if (!comp.is_object()) throw ParseError("components must be an object");
  for (const auto& [key, value] : comp.items()) {
    const std::size_t dim = read_count(value, "component dimension");
    if (dim > 0) components[read_key(key, "components")] = dim;
  }
  auto dim_of = [&](int d) {
    auto it = components.find(d);
    return it == components.end() ? std::size_t{0} : it->second;
  };
  GradedEModule::Actions actions(n);
  if (j.contains("actions")) {
    const Json& acts = j["actions"];
    if (!acts.is_object()) throw ParseError("actions must be an object");
    for (const auto& [ikey, per_degree] : acts.items()) {
      const int i = read_key(ikey, "actions");
      if (i < 1 || i > static_cast<int>(n)) throw ParseError("action index " + ikey + " out of range");
      if (!per_degree.is_object()) throw ParseError("actions." + ikey + " must be an object");
      for (const auto& [dkey, m] : per_degree.items()) {
        const int d = read_key(dkey, "actions." + ikey);
        actions[static_cast<std::size_t>(i - 1)].emplace(
            d, read_matrix(m, dim_of(d + 1), dim_of(d), field, "actions." + ikey + "." + dkey));
      }
    }
  }
  const int anchor = j.contains("anchor") ? read_small_int(j["anchor"], "anchor") : 0;
  return GradedEModule(n, std::move(components), std::move(actions), field, anchor);
}

GradedEModule read_matrix_module(const Json& j, std::size_t n, Field field) {
  const std::vector<int> rows = read_int_list(member(j, "row_degrees"), "row_degrees");
  const std::vector<int> cols = read_int_list(member(j, "col_degrees"), "col_degrees");
  ExteriorMatrix a(n, field, rows, cols);
  const Json& entries = member(j, "matrix");
  if (array(entries, "matrix").size() != rows.size()) {
    throw ParseError("matrix needs " + std::to_string(rows.size()) + " rows");
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (array(entries[r], "matrix row").size() != cols.size()) {
      throw ParseError("matrix row needs " + std::to_string(cols.size()) + " entries");
    }
    for (std::size_t c = 0; c < cols.size(); ++c) a.set(r, c, read_term_list(entries[r][c], n, field));
  }
  ModuleMode mode = ModuleMode::kCokernel;
  if (j.contains("mode")) {
    const Json& m = j["mode"];
    if (m == "cokernel") {
      mode = ModuleMode::kCokernel;
    } else if (m == "image") {
      mode = ModuleMode::kImage;
    } else {
      throw ParseError("mode must be \"cokernel\" or \"image\"");
    }
  }
  const int term = j.contains("term") ? read_small_int(j["term"], "term") : 0;
  return module_from_matrix(a, mode, term);
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path + "'");
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Scalar read_scalar(const Json& j, Field field) {
  if (j.is_number_integer()) return Scalar(field, j.get<long>());
  if (j.is_string()) {
    try {
      return Scalar::parse(field, j.get<std::string>());
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("a coefficient must be an integer or an \"a/b\" string");
}

SimplicialComplex read_complex(const Json& j) {
  const std::size_t n = read_count(member(j, "n"), "n");
  std::vector<std::vector<int>> facets;
  for (const auto& f : array(member(j, "facets"), "facets")) facets.push_back(read_int_list(f, "facet"));
  return SimplicialComplex::from_facets(n, facets);
}

VectorConfiguration read_arrangement(const Json& j, Field field) {
  const std::size_t m = read_count(member(j, "m"), "m");
  std::vector<std::vector<Scalar>> forms;
  for (const auto& f : array(member(j, "forms"), "forms")) {
    std::vector<Scalar> row;
    for (const auto& x : array(f, "form")) row.push_back(read_scalar(x, field));
    forms.push_back(std::move(row));
  }
  return VectorConfiguration(m, std::move(forms), field);
}

Matroid read_matroid(const Json& j, Field field) {
  if (j.is_object() && j.contains("forms")) return matroid_from_vectors(read_arrangement(j, field));
  const std::size_t n = read_count(member(j, "n"), "n");
  std::vector<Monomial> faces;
  for (const auto& s : array(member(j, "independent_sets"), "independent_sets")) {
    const std::vector<int> idx = read_int_list(s, "independent set");
    for (int i : idx) {
      if (i < 1 || i > static_cast<int>(n)) throw ParseError("element " + std::to_string(i) + " out of range");
    }
    faces.push_back(Monomial::from_indices(idx));
  }
  return Matroid(SimplicialComplex::from_faces(n, faces));
}

Bracket read_bracket(const Json& j, Field field) {
  const std::size_t dim = read_count(member(j, "dim"), "dim");
  Bracket b(dim, field);
  const int top = static_cast<int>(dim);
  for (const auto& entry : array(member(j, "brackets"), "brackets")) {
    const int i = read_small_int(member(entry, "i"), "i");
    const int jj = read_small_int(member(entry, "j"), "j");
    if (i < 1 || i > top || jj < 1 || jj > top) throw ParseError("bracket index out of range");
    const Json& coeffs = member(entry, "coeffs");
    if (!coeffs.is_object()) throw ParseError("coeffs must be an object");
    for (const auto& [key, value] : coeffs.items()) {
      const int k = read_key(key, "coeffs");
      if (k < 1 || k > top) throw ParseError("bracket index out of range");
      b.set(i, jj, k, read_scalar(value, field));
    }
  }
  return b;
}

SymmetricForm read_form(const Json& j, Field field) {
  if (j.is_object() && j.contains("signature")) {
    const std::vector<int> pq = read_int_list(j["signature"], "signature");
    if (pq.size() != 2) throw ParseError("signature must be [p, q]");
    return signature_form(pq[0], pq[1], field);
  }
  const Json& g = member(j, "form");
  const std::size_t n = array(g, "form").size();
  std::vector<std::vector<Scalar>> rows;
  for (const auto& row : g) {
    if (array(row, "form row").size() != n) throw ParseError("form must be square");
    std::vector<Scalar> r;
    for (const auto& x : row) r.push_back(read_scalar(x, field));
    rows.push_back(std::move(r));
  }
  return SymmetricForm(std::move(rows), field);
}

GradedEModule read_module(const Json& j, Field field) {
  const std::size_t n = read_count(member(j, "n"), "n");
  if (j.contains("matrix")) return read_matrix_module(j, n, field);
  return read_explicit_module(j, n, field);
}

Json scalar_json(const Scalar& s) {
  if (!s.field().is_rational()) return s.residue();
  const mpq_class& q = s.rational();
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return s.to_string();
}

Json monomial_json(Monomial m) { return m.indices(); }

Json multivector_json(const MultiVector& v) {
  Json out = Json::array();
  for (const auto& [m, c] : v.terms()) out.push_back(Json{{"coeff", scalar_json(c)}, {"indices", m.indices()}});
  return out;
}

}  // namespace extalg::cli
