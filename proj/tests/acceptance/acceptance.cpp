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

// Acceptance gate: one PASS/FAIL line per criterion. Exits nonzero if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "extalg/arrangements.hpp"
#include "extalg/bgg_tate.hpp"
#include "extalg/clifford.hpp"
#include "extalg/lie.hpp"
#include "extalg/linalg.hpp"
#include "extalg/multivector.hpp"
#include "extalg/simplicial.hpp"
#include "test_support.hpp"

namespace extalg {
namespace {

using testing::Rng;

const Field Q = Field::rationals();

// Time limits in seconds.
constexpr double kFaceRingLimit = 1.0;
constexpr double kOracleLimit = 30.0;
constexpr double kOrlikSolomonLimit = 1.0;  // per arrangement
constexpr double kOrlikSolomonTotalLimit = 2.0;
constexpr double kJacobiLimit = 60.0;
constexpr double kCliffordLimit = 30.0;
constexpr double kProjectiveLineLimit = 10.0;
constexpr double kDeterminacyLimit = 10.0;
constexpr double kHorrocksMumfordLimit = 300.0;
constexpr double kCorePropertiesLimit = 60.0;

// Instance counts.
constexpr int kOracleComplexes = 200;
constexpr std::size_t kOracleMaxVertices = 7;
constexpr int kRandomBrackets = 500;
constexpr std::size_t kMaxBracketDim = 5;
constexpr int kAssociativityTriples = 1000;
constexpr std::size_t kMaxCliffordGenerators = 4;
constexpr int kPropertyInstances = 1000;

// Interpolation residual allowed for the Euler characteristic fit.
const mpq_class kResidualTolerance = 0;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int run_criterion(const char* name, double limit, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.ok && secs >= limit) o.fail("took longer than the limit");
  std::printf("%s %-26s %9.3fs (limit %gs)%s%s\n", o.ok ? "PASS" : "FAIL", name, secs, limit,
              o.detail.empty() ? "" : "  ", o.detail.c_str());
  std::fflush(stdout);
  return o.ok ? 0 : 1;
}

MultiVector mv(std::size_t n, std::vector<int> idx, Field f = Q) {
  return MultiVector::monomial(n, Monomial::from_indices(idx), f);
}

// ---------------------------------------------------------------------------

void face_ring_homology(Outcome& o) {
  const auto c = SimplicialComplex::from_facets(6, {{1, 2}, {3, 4}, {3, 5}, {4, 5, 6}});
  const std::map<int, std::size_t> expected{{0, 1}, {1, 1}};
  for (Field f : {Q, Field::prime(32003)}) {
    const HomologyProfile h = reduced_homology(c, f);
    for (int i = -1; i <= 3; ++i) {
      const std::size_t want = expected.count(i) ? expected.at(i) : 0;
      if (h.at(i) != want) o.fail("H_" + std::to_string(i) + " over " + f.name());
    }
  }
}

void oracle_equivalence(Outcome& o) {
  Rng rng(2024);
  for (int trial = 0; trial < kOracleComplexes; ++trial) {
    const std::size_t n = 1 + rng() % kOracleMaxVertices;
    const auto facets = testing::random_facets(rng, n, 1 + static_cast<int>(rng() % 6));
    const auto c = SimplicialComplex::from_facets(n, facets);
    const auto got = reduced_homology(c, Q);
    const auto want = testing::naive_reduced_homology(n, facets, Q);
    std::map<int, std::size_t> nonzero;
    for (const auto& [i, d] : got.dims) {
      if (d != 0) nonzero[i] = d;
    }
    if (nonzero != want) o.fail("mismatch on trial " + std::to_string(trial));
  }
}

void orlik_solomon_dims(Outcome& o) {
  auto config = [](std::size_t m, std::vector<std::vector<long>> rows) {
    std::vector<std::vector<Scalar>> v;
    for (const auto& r : rows) {
      std::vector<Scalar> s;
      for (long x : r) s.emplace_back(Q, x);
      v.push_back(s);
    }
    return VectorConfiguration(m, v, Q);
  };
  for (const auto& [cfg, want] :
       std::vector<std::pair<VectorConfiguration, std::vector<std::size_t>>>{
           {config(3, {{1, -1, 0}, {0, 1, -1}, {-1, 0, 1}}), {1, 3, 2}},
           {config(2, {{1, 0}, {0, 1}}), {1, 2, 1}}}) {
    const auto start = std::chrono::steady_clock::now();
    if (complement_betti(cfg) != want) o.fail("wrong dimensions");
    if (std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() >= kOrlikSolomonLimit) {
      o.fail("single arrangement over the limit");
    }
  }
}

Bracket random_sparse_bracket(Rng& rng, std::size_t n) {
  Bracket b(n, Q);
  const int nonzeros = 1 + static_cast<int>(rng() % (n * n));
  for (int t = 0; t < nonzeros; ++t) {
    const int i = 1 + static_cast<int>(rng() % n);
    const int j = 1 + static_cast<int>(rng() % n);
    const int k = 1 + static_cast<int>(rng() % n);
    if (i != j) b.set(i, j, k, testing::random_scalar(rng, Q, 2));
  }
  return b;
}

// Jacobi straight from the definition on basis triples.
bool jacobi_oracle(const Bracket& b) {
  const int n = static_cast<int>(b.dim());
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      for (int z = 1; z <= n; ++z) {
        std::vector<Scalar> sum(b.dim(), Scalar::zero(Q));
        const std::vector<std::tuple<int, int, int>> cyc{{x, y, z}, {y, z, x}, {z, x, y}};
        for (const auto& [a, c, d] : cyc) {
          const auto inner = b.bracket(c, d);
          std::vector<Scalar> ea(b.dim(), Scalar::zero(Q));
          ea[static_cast<std::size_t>(a - 1)] = Scalar::one(Q);
          const auto outer = b.bracket(ea, inner);
          for (std::size_t k = 0; k < b.dim(); ++k) sum[k] += outer[k];
        }
        for (const auto& s : sum) {
          if (!s.is_zero()) return false;
        }
      }
    }
  }
  return true;
}

void jacobi_iff_square_zero(Outcome& o) {
  Rng rng(7);
  int holds = 0;
  for (int trial = 0; trial < kRandomBrackets; ++trial) {
    const std::size_t n = 1 + rng() % kMaxBracketDim;
    const Bracket b = random_sparse_bracket(rng, n);
    const bool jac = satisfies_jacobi(b);
    if (jac != jacobi_oracle(b)) o.fail("brute-force Jacobi disagrees on trial " + std::to_string(trial));
    if (jac != is_differential(derivation_from_bracket(b))) {
      o.fail("Jacobi and d^2 = 0 disagree on trial " + std::to_string(trial));
    }
    holds += jac ? 1 : 0;
  }
  if (holds == 0 || holds == kRandomBrackets) o.fail("random brackets never split both ways");
  Bracket sl2(3, Q);
  sl2.set(1, 2, 2, Scalar(Q, 2));
  sl2.set(1, 3, 3, Scalar(Q, -2));
  sl2.set(2, 3, 1, Scalar(Q, 1));
  if (lie_cohomology(sl2) != std::vector<std::size_t>{1, 0, 0, 1}) o.fail("sl2 cohomology");
  for (std::size_t n = 0; n <= 6; ++n) {
    std::vector<std::size_t> row{1};
    for (std::size_t k = 1; k <= n; ++k) row.push_back(row.back() * (n - k + 1) / k);
    if (lie_cohomology(Bracket(n, Q)) != row) o.fail("abelian dim " + std::to_string(n));
  }
}

void clifford_small_cases(Outcome& o) {
  // Complex numbers: basis 1, i with i^2 = -1.
  {
    const auto t = multiplication_table(signature_form(0, 1));
    const long table[2][2][2] = {{{1, 0}, {0, 1}}, {{0, 1}, {-1, 0}}};
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        for (int k = 0; k < 2; ++k) {
          if (t.products[r][c].coefficient(t.basis[k]) != Scalar(Q, table[r][c][k])) o.fail("complex table");
        }
      }
    }
  }
  // Quaternions: basis 1, i, j, k = ij; entries as (sign, unit index).
  {
    const auto t = multiplication_table(signature_form(0, 2));
    const int table[4][4][2] = {{{1, 0}, {1, 1}, {1, 2}, {1, 3}},
                                {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
                                {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
                                {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}};
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        const MultiVector want = MultiVector::monomial(2, t.basis[table[r][c][1]], Scalar(Q, table[r][c][0]));
        if (!(t.products[r][c] == want)) o.fail("quaternion table");
      }
    }
  }
  // Zero form: every basis pair against wedge, n <= 4.
  for (std::size_t n = 1; n <= kMaxCliffordGenerators; ++n) {
    const SymmetricForm zero = SymmetricForm::zero(n);
    for (std::uint64_t s = 0; s < (1ULL << n); ++s) {
      for (std::uint64_t t = 0; t < (1ULL << n); ++t) {
        const auto x = MultiVector::monomial(n, Monomial(s), Q);
        const auto y = MultiVector::monomial(n, Monomial(t), Q);
        if (!(geometric_product(zero, x, y) == wedge(x, y))) o.fail("zero form differs from wedge");
      }
    }
  }
  Rng rng(11);
  for (int trial = 0; trial < kAssociativityTriples; ++trial) {
    const std::size_t n = 1 + rng() % kMaxCliffordGenerators;
    std::vector<std::vector<Scalar>> g(n, std::vector<Scalar>(n, Scalar::zero(Q)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) g[i][j] = g[j][i] = testing::random_scalar(rng, Q, 3);
    }
    const SymmetricForm b(g, Q);
    const auto x = testing::random_element(rng, n, 3);
    const auto y = testing::random_element(rng, n, 3);
    const auto z = testing::random_element(rng, n, 3);
    if (!(geometric_product(b, geometric_product(b, x, y), z) ==
          geometric_product(b, x, geometric_product(b, y, z)))) {
      o.fail("associativity fails on trial " + std::to_string(trial));
    }
  }
}

ExteriorMatrix column_e2_e1() {
  ExteriorMatrix a(2, Q, {1, 1}, {0});
  a.set(0, 0, mv(2, {2}));
  a.set(1, 0, mv(2, {1}));
  return a;
}

void check_window_health(const FreeComplex& w, Outcome& o) {
  if (composition_defect(w)) o.fail("consecutive maps do not compose to zero");
  if (!is_minimal(w)) o.fail("a differential has a scalar entry");
  if (!exactness_defects(w).empty()) o.fail("an interior term is not exact");
}

void tate_projective_line(Outcome& o) {
  const TateWindow w = tate_window(module_from_matrix(column_e2_e1(), ModuleMode::kCokernel), -6, 6);
  const std::vector<std::size_t> want{6, 5, 4, 3, 2, 1, 1, 2, 3, 4, 5, 6, 7};
  std::vector<std::size_t> got;
  for (int t = -6; t <= 6; ++t) got.push_back(w.term(t).size());
  if (got != want) o.fail("term ranks");
  check_window_health(w, o);
  const CohomTable tab = cohomology_table(w);
  for (int d = 0; d <= 5; ++d) {
    if (tab.at(0, d) != std::optional<std::size_t>(d + 1)) o.fail("H^0(O(" + std::to_string(d) + "))");
  }
  for (int d = 2; d <= 6; ++d) {
    if (tab.at(1, -d) != std::optional<std::size_t>(d - 1)) o.fail("H^1(O(-" + std::to_string(d) + "))");
  }
}

void determinacy(Outcome& o) {
  const TateWindow from_d0 = tate_window(module_from_matrix(column_e2_e1(), ModuleMode::kCokernel), -6, 6);
  ExteriorMatrix d1(2, Q, {2, 2, 2}, {1, 1});
  d1.set(0, 0, mv(2, {2}));
  d1.set(1, 0, mv(2, {1}));
  d1.set(1, 1, mv(2, {2}));
  d1.set(2, 1, mv(2, {1}));
  const TateWindow from_d1 = tate_window_from_differential(d1, 1, -6, 6);
  if (from_d0.lo != from_d1.lo || from_d0.terms != from_d1.terms) o.fail("term data differ");
  check_window_health(from_d1, o);
}

void horrocks_mumford(Outcome& o) {
  ExteriorMatrix h(5, Q, {-1, -1}, {-3, -3, -3, -3, -3});
  const int top[5][2] = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}};
  const int bot[5][2] = {{3, 5}, {4, 1}, {5, 2}, {1, 3}, {2, 4}};
  for (std::size_t c = 0; c < 5; ++c) {
    h.set(0, c, wedge(MultiVector::generator(5, top[c][0]), MultiVector::generator(5, top[c][1])));
    h.set(1, c, wedge(MultiVector::generator(5, bot[c][0]), MultiVector::generator(5, bot[c][1])));
  }
  const TateWindow w = tate_window(module_from_matrix(h, ModuleMode::kImage), -5, 5);
  check_window_health(w, o);
  const CohomTable tab = cohomology_table(w);
  std::vector<std::pair<mpq_class, mpq_class>> points;
  for (int q = -5; q <= 5; ++q) {
    if (tab.column_complete(q)) points.emplace_back(q, static_cast<long>(*tab.euler_characteristic(q)));
  }
  if (points.size() < 6) {
    o.fail("fewer than six complete columns");
    return;
  }
  // Lagrange interpolation through the first five points, checked on all.
  auto interpolate = [&](const mpq_class& x) {
    mpq_class sum = 0;
    for (std::size_t i = 0; i < 5; ++i) {
      mpq_class term = points[i].second;
      for (std::size_t j = 0; j < 5; ++j) {
        if (j != i) term *= (x - points[j].first) / (points[i].first - points[j].first);
      }
      sum += term;
    }
    return sum;
  };
  for (const auto& [q, chi] : points) {
    mpq_class residual = interpolate(q) - chi;
    if (abs(residual) > kResidualTolerance) o.fail("Euler characteristic is not a quartic in q");
  }
}

void core_properties(Outcome& o) {
  Rng rng(13);
  auto random_vec = [&](std::size_t n) { return testing::random_homogeneous(rng, n, 1, 3); };
  auto random_dual = [&](std::size_t n) {
    std::vector<Scalar> c;
    for (std::size_t i = 0; i < n; ++i) c.push_back(testing::random_scalar(rng, Q));
    return DualVector(n, c);
  };
  for (int t = 0; t < kPropertyInstances; ++t) {
    const std::size_t n = 1 + rng() % 8;
    const auto v = random_vec(n), w = random_vec(n);
    if (!(wedge(v, w) == -wedge(w, v))) o.fail("anticommutativity");
    if (!wedge(v, v).is_zero()) o.fail("v^v = 0");
    const auto x = testing::random_element(rng, n, 4);
    const auto y = testing::random_element(rng, n, 4);
    const auto z = testing::random_element(rng, n, 4);
    if (!(wedge(wedge(x, y), z) == wedge(x, wedge(y, z)))) o.fail("associativity");
    // Leibniz: u(a^b) = u(a)^b + (-1)^r a^u(b) for a of grade r.
    const DualVector u = random_dual(n);
    const int r = static_cast<int>(rng() % (n + 1));
    const auto a = testing::random_homogeneous(rng, n, r, 3);
    MultiVector rhs = wedge(contract(u, a), y);
    const MultiVector second = wedge(a, contract(u, y));
    rhs += r % 2 == 0 ? second : -second;
    if (!(contract(u, wedge(a, y)) == rhs)) o.fail("Leibniz for contraction");
    if (!contract(u, contract(u, x)).is_zero()) o.fail("boundary squares to zero");
  }
  // d^2 = 0 for differentials of Lie algebras placed on randomly chosen
  // coordinates of a larger abelian algebra.
  for (int t = 0; t < kPropertyInstances; ++t) {
    const std::size_t n = 3 + rng() % 4;
    std::vector<int> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i + 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto set = [&](Bracket& b, int i, int j, int k, const Scalar& v) {
      b.set(perm[static_cast<std::size_t>(i - 1)], perm[static_cast<std::size_t>(j - 1)],
            perm[static_cast<std::size_t>(k - 1)], v);
    };
    Bracket b(n, Q);
    switch (rng() % 3) {
      case 0:  // Heisenberg
        set(b, 1, 2, 3, testing::random_nonzero_scalar(rng, Q));
        break;
      case 1:  // sl2
        set(b, 1, 2, 2, Scalar(Q, 2));
        set(b, 1, 3, 3, Scalar(Q, -2));
        set(b, 2, 3, 1, Scalar(Q, 1));
        break;
      default:  // affine line
        set(b, 1, 2, 1, Scalar(Q, 1));
        break;
    }
    const Derivation d = derivation_from_bracket(b);
    const auto x = testing::random_element(rng, n, 4);
    if (!extend_derivation(d, extend_derivation(d, x)).is_zero()) o.fail("d^2 = 0 for a Lie differential");
  }
}

}  // namespace
}  // namespace extalg

int main() {
  using namespace extalg;
  int failures = 0;
  failures += run_criterion("face_ring_homology", kFaceRingLimit, face_ring_homology);
  failures += run_criterion("oracle_equivalence", kOracleLimit, oracle_equivalence);
  failures += run_criterion("orlik_solomon", kOrlikSolomonTotalLimit, orlik_solomon_dims);
  failures += run_criterion("jacobi_iff_square_zero", kJacobiLimit, jacobi_iff_square_zero);
  failures += run_criterion("clifford_small_cases", kCliffordLimit, clifford_small_cases);
  failures += run_criterion("tate_projective_line", kProjectiveLineLimit, tate_projective_line);
  failures += run_criterion("determinacy", kDeterminacyLimit, determinacy);
  failures += run_criterion("horrocks_mumford", kHorrocksMumfordLimit, horrocks_mumford);
  failures += run_criterion("core_properties", kCorePropertiesLimit, core_properties);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
