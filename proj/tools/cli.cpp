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

#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "extalg/arrangements.hpp"
#include "extalg/bgg_tate.hpp"
#include "extalg/clifford.hpp"
#include "extalg/errors.hpp"
#include "extalg/lie.hpp"
#include "extalg/simplicial.hpp"
#include "io.hpp"

namespace extalg::cli {

namespace {

const std::vector<std::string> kVerbs{"homology",       "cohomology",     "hilbert",
                                      "matroid",        "orlik-solomon",  "lie-cohomology",
                                      "clifford-table", "tate",           "bgg-check"};

struct Options {
  std::string verb;
  std::string input;
  std::string field = "rational";
  std::string format = "json";
  std::optional<int> lo;
  std::optional<int> hi;
  int steps = 3;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A report carries its JSON form and the aligned-text rendering.
struct Report {
  Json json;
  std::string text;
  int status = kOk;
};

std::string join(const std::vector<std::size_t>& v, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

std::string set_string(Monomial m) {
  std::string out = "{";
  const auto idx = m.indices();
  for (std::size_t i = 0; i < idx.size(); ++i) out += (i ? "," : "") + std::to_string(idx[i]);
  return out + "}";
}

Json profile_json(const HomologyProfile& h) {
  Json dims = Json::object();
  for (const auto& [i, d] : h.dims) {
    if (d != 0) dims[std::to_string(i)] = d;
  }
  return dims;
}

std::string profile_text(const char* name, const HomologyProfile& h) {
  std::ostringstream os;
  if (h.dims.empty()) os << name << ": all zero\n";
  for (const auto& [i, d] : h.dims) {
    if (d != 0) os << name << i << " = " << d << "\n";
  }
  return os.str();
}

Report homology(const Json& in, Field field, bool co) {
  const SimplicialComplex c = read_complex(in);
  const HomologyProfile h = co ? reduced_cohomology(c, field) : reduced_homology(c, field);
  Report r;
  r.json[co ? "reduced_cohomology" : "reduced_h"] = profile_json(h);
  r.text = profile_text(co ? "reduced H^" : "reduced H_", h);
  return r;
}

Report hilbert(const Json& in) {
  const HilbertSeries s = hilbert_series_face_ring(read_complex(in));
  Report r;
  r.json["f_vector"] = s.f;
  r.json["numerator"] = s.numerator;
  r.json["denominator_exponent"] = s.denominator_exponent;
  std::ostringstream os;
  os << "f-vector: " << join(s.f) << "\nH(t) = (";
  bool first = true;
  for (std::size_t i = 0; i < s.numerator.size(); ++i) {
    const long long c = s.numerator[i];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const long long a = c < 0 ? -c : c;
    if (a != 1 || i == 0) os << a;
    if (i > 0) os << "t" << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  if (first) os << "0";
  os << ") / (1 - t)^" << s.denominator_exponent << "\n";
  r.text = os.str();
  return r;
}

Report matroid(const Json& in, Field field) {
  const Matroid m = read_matroid(in, field);
  if (const auto v = exchange_violation(m)) {
    throw DomainError("exchange axiom fails for X = " + set_string(v->first) +
                      ", Y = " + set_string(v->second));
  }
  Report r;
  r.json["n"] = m.n();
  r.json["rank"] = m.rank();
  r.json["exchange"] = true;
  Json sets = Json::array();
  std::ostringstream os;
  os << "matroid on " << m.n() << " elements, rank " << m.rank() << "\nindependent sets:";
  for (Monomial s : m.independents().faces()) {
    sets.push_back(monomial_json(s));
    os << " " << set_string(s);
  }
  os << "\n";
  r.json["independent_sets"] = sets;
  r.text = os.str();
  return r;
}

Report orlik_solomon_report(const Json& in, Field field) {
  const OSAlgebra a = orlik_solomon(read_matroid(in, field), field);
  Report r;
  r.json["dims"] = a.dims;
  Json bases = Json::array();
  std::ostringstream os;
  os << "dims: " << join(a.dims) << "\n";
  for (std::size_t d = 0; d < a.bases.size(); ++d) {
    Json level = Json::array();
    os << "degree " << d << ":";
    for (Monomial m : a.bases[d]) {
      level.push_back(monomial_json(m));
      os << " " << (m.grade() == 0 ? std::string("1") : m.to_string());
    }
    os << "\n";
    bases.push_back(level);
  }
  r.json["bases"] = bases;
  r.text = os.str();
  return r;
}

Report lie(const Json& in, Field field) {
  const std::vector<std::size_t> dims = lie_cohomology(read_bracket(in, field));
  Report r;
  r.json["dims"] = dims;
  r.text = "cohomology dims: " + join(dims) + "\n";
  return r;
}

std::string element_text(const MultiVector& v) { return v.is_zero() ? "0" : v.to_string(); }

Report clifford(const Json& in, Field field) {
  const SymmetricForm b = read_form(in, field);
  const CliffordTable t = multiplication_table(b);
  Report r;
  r.json["n"] = b.n();
  Json basis = Json::array();
  for (Monomial m : t.basis) basis.push_back(monomial_json(m));
  r.json["basis"] = basis;
  Json table = Json::array();
  std::vector<std::vector<std::string>> cells(t.basis.size() + 1);
  cells[0].push_back("");
  for (Monomial m : t.basis) cells[0].push_back(m.grade() == 0 ? "1" : m.to_string());
  for (std::size_t i = 0; i < t.basis.size(); ++i) {
    Json row = Json::array();
    cells[i + 1].push_back(cells[0][i + 1]);
    for (const auto& p : t.products[i]) {
      row.push_back(multivector_json(p));
      cells[i + 1].push_back(element_text(p));
    }
    table.push_back(row);
  }
  r.json["table"] = table;
  std::ostringstream os;
  if (in.contains("signature")) {
    const DimensionReport d = dimension_checks(static_cast<int>(in["signature"][0]),
                                               static_cast<int>(in["signature"][1]));
    r.json["signature"] = {d.p, d.q};
    r.json["dim"] = d.dim;
    r.json["dim_shift_11"] = d.dim_shift_11;
    r.json["dim_shift_80"] = d.dim_shift_80;
    r.json["consistent"] = d.consistent;
    r.json["real_type"] = d.real_type;
    os << "Cl(" << d.p << "," << d.q << "): dim " << d.dim << ", " << d.real_type << "\n";
  }
  std::vector<std::size_t> width(cells[0].size(), 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << (c == 0 ? "" : c == 1 ? " | " : "  ") << std::setw(static_cast<int>(width[c])) << row[c];
    }
    os << "\n";
  }
  r.text = os.str();
  return r;
}

Json ranks_json(const FreeComplex& c) {
  Json out = Json::array();
  for (int t = c.lo; t <= c.hi(); ++t) out.push_back(c.term(t).size());
  return out;
}

Json window_terms_json(const TateWindow& w) {
  Json terms = Json::object();
  for (int t = w.lo; t <= w.hi(); ++t) {
    std::map<int, std::size_t> mult;
    for (int q : w.term(t)) ++mult[q];
    Json row = Json::object();
    for (const auto& [q, k] : mult) row[std::to_string(q)] = k;
    terms[std::to_string(t)] = row;
  }
  return terms;
}

Json table_json(const CohomTable& tab) {
  std::map<int, std::map<int, std::size_t>> rows;
  for (const auto& [pq, k] : tab.entries()) rows[pq.first][pq.second] = k;
  Json out = Json::object();
  for (const auto& [p, row] : rows) {
    Json r = Json::object();
    for (const auto& [q, k] : row) r[std::to_string(q)] = k;
    out[std::to_string(p)] = r;
  }
  return out;
}

// Rows p descending, columns q ascending; "." is zero, "?" lies outside
// the window.
std::string table_text(const CohomTable& tab) {
  int pmin = 0;
  int pmax = static_cast<int>(tab.n()) - 1;
  for (const auto& [pq, k] : tab.entries()) {
    pmin = std::min(pmin, pq.first);
    pmax = std::max(pmax, pq.first);
  }
  // Twists q with some term p + q, 0 <= p < n, inside the window.
  int qmin = tab.lo() - pmax;
  for (const auto& [pq, k] : tab.entries()) qmin = std::min(qmin, pq.second);
  std::vector<std::string> header{"p\\q"};
  for (int q = qmin; q <= tab.hi(); ++q) header.push_back(std::to_string(q));
  std::vector<std::vector<std::string>> cells{header};
  for (int p = pmax; p >= pmin; --p) {
    std::vector<std::string> row{std::to_string(p)};
    for (int q = qmin; q <= tab.hi(); ++q) {
      const auto v = tab.at(p, q);
      row.push_back(!v ? "?" : *v == 0 ? "." : std::to_string(*v));
    }
    cells.push_back(row);
  }
  std::size_t width = 0;
  for (const auto& row : cells) {
    for (const auto& c : row) width = std::max(width, c.size());
  }
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << (c == 0 ? "" : c == 1 ? " |" : "") << std::setw(static_cast<int>(width + (c ? 1 : 0)))
         << row[c];
    }
    os << "\n";
  }
  return os.str();
}

Report tate(const Json& in, Field field, int lo, int hi) {
  const TateWindow w = tate_window(read_module(in, field), lo, hi);
  const CohomTable tab = cohomology_table(w);
  Report r;
  r.json["lo"] = lo;
  r.json["hi"] = hi;
  r.json["ranks"] = ranks_json(w);
  r.json["terms"] = window_terms_json(w);
  r.json["table"] = table_json(tab);
  std::vector<std::size_t> ranks;
  for (int t = w.lo; t <= w.hi(); ++t) ranks.push_back(w.term(t).size());
  r.text = "window [" + std::to_string(lo) + ", " + std::to_string(hi) + "]\nterm ranks: " + join(ranks) +
           "\n" + table_text(tab);
  return r;
}

Report bgg_check(const Json& in, Field field, int lo, int hi, int steps) {
  const GradedEModule m = read_module(in, field);
  Report r;
  std::ostringstream os;
  Json comps = Json::object();
  for (const auto& [d, k] : m.components()) comps[std::to_string(d)] = k;
  r.json["components"] = comps;
  r.json["anchor"] = m.anchor();

  const LinearComplex lc = bgg_linear_complex(m);
  const auto defect = linear_square_defect(lc);
  Json lranks = Json::object();
  for (const auto& [p, k] : lc.ranks) lranks[std::to_string(p)] = k;
  r.json["linear_complex"] = {{"ranks", lranks}, {"square_zero", !defect.has_value()}};

  const FreeComplex proj = minimal_projective_resolution(m, steps);
  const FreeComplex inj = minimal_injective_resolution(m, steps);
  std::vector<std::size_t> pr, ir;
  for (int t = proj.hi(); t >= proj.lo; --t) pr.push_back(proj.term(t).size());
  for (int t = inj.lo; t <= inj.hi(); ++t) ir.push_back(inj.term(t).size());
  r.json["projective_ranks"] = pr;
  r.json["injective_ranks"] = ir;

  const TateWindow w = tate_window(m, lo, hi);
  const bool comp = !composition_defect(w).has_value() && !composition_defect(proj).has_value() &&
                    !composition_defect(inj).has_value();
  const bool minimal = is_minimal(w) && is_minimal(proj) && is_minimal(inj);
  const bool exact = exactness_defects(w).empty() && exactness_defects(proj).empty() &&
                     exactness_defects(inj).empty();
  r.json["window"] = {{"lo", lo}, {"hi", hi}, {"ranks", ranks_json(w)}};
  r.json["checks"] = {{"square_zero", !defect.has_value()},
                      {"composition_zero", comp},
                      {"minimal", minimal},
                      {"exact", exact}};

  os << "components:";
  for (const auto& [d, k] : m.components()) os << " " << d << ":" << k;
  os << "\nprojective ranks: " << join(pr) << "\ninjective ranks: " << join(ir) << "\n";
  os << "linear complex d^2 = 0: " << (defect ? "no (" + *defect + ")" : std::string("yes")) << "\n";
  os << "composition zero: " << (comp ? "yes" : "no") << "\nminimal: " << (minimal ? "yes" : "no")
     << "\nexact: " << (exact ? "yes" : "no") << "\n";
  r.text = os.str();
  if (defect || !comp || !minimal || !exact) r.status = kDomainError;
  return r;
}

Report dispatch(const Options& o) {
  const Field field = Field::parse(o.field);
  const Json in = read_json_file(o.input);
  if (o.verb == "homology") return homology(in, field, false);
  if (o.verb == "cohomology") return homology(in, field, true);
  if (o.verb == "hilbert") return hilbert(in);
  if (o.verb == "matroid") return matroid(in, field);
  if (o.verb == "orlik-solomon") return orlik_solomon_report(in, field);
  if (o.verb == "lie-cohomology") return lie(in, field);
  if (o.verb == "clifford-table") return clifford(in, field);
  if (o.verb == "tate") {
    if (!o.lo || !o.hi) throw UsageError("tate needs --lo and --hi");
    return tate(in, field, *o.lo, *o.hi);
  }
  return bgg_check(in, field, o.lo.value_or(-3), o.hi.value_or(3), o.steps);
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exterior algebra computations: face rings, arrangements, Lie and Clifford "
               "algebras, Tate resolutions."};
  app.name("extalg");
  app.add_option("verb", o.verb, "Computation to run")->required()->check(CLI::IsMember(kVerbs));
  app.add_option("input", o.input, "JSON input file")->required();
  app.add_option("--field", o.field, "rational or fp:<prime>")->capture_default_str();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--lo", o.lo, "Lowest term of a Tate window");
  app.add_option("--hi", o.hi, "Highest term of a Tate window");
  app.add_option("--steps", o.steps, "Resolution length for bgg-check")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << one_line(e.what()) << "\n";
    return kUsageError;
  }

  try {
    const Report r = dispatch(o);
    if (o.format == "json") {
      out << r.json.dump(2) << "\n";
    } else {
      out << r.text;
    }
    if (r.status != kOk) err << "error: domain: a consistency check failed\n";
    return r.status;
  } catch (const UsageError& e) {
    err << "error: usage: " << e.what() << "\n";
    return kUsageError;
  } catch (const IoError& e) {
    err << "error: io: " << one_line(e.what()) << "\n";
    return kUsageError;
  } catch (const ParseError& e) {
    err << "error: parse: " << one_line(e.what()) << "\n";
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: domain: " << one_line(e.what()) << "\n";
    return kDomainError;
  } catch (const Error& e) {
    // Structurally valid JSON describing an invalid object.
    err << "error: parse: " << one_line(e.what()) << "\n";
    return kUsageError;
  } catch (const Json::exception& e) {
    err << "error: parse: " << one_line(e.what()) << "\n";
    return kUsageError;
  }
}

}  // namespace extalg::cli
