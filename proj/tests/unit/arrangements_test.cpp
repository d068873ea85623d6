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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "extalg/arrangements.hpp"
#include "extalg/errors.hpp"
#include "extalg/multivector.hpp"
#include "test_support.hpp"

namespace extalg {
namespace {

using testing::Rng;

const Field Q = Field::rationals();

VectorConfiguration config(std::size_t m, const std::vector<std::vector<long>>& rows,
                           Field field = Q) {
  std::vector<std::vector<Scalar>> v;
  for (const auto& r : rows) {
    std::vector<Scalar> s;
    for (long x : r) s.emplace_back(field, x);
    v.push_back(std::move(s));
  }
  return VectorConfiguration(m, std::move(v), field);
}

VectorConfiguration braid() { return config(3, {{1, -1, 0}, {0, 1, -1}, {-1, 0, 1}}); }

Matroid from_sets(std::size_t n, const std::vector<std::vector<int>>& sets) {
  std::vector<Monomial> faces;
  for (const auto& s : sets) faces.push_back(Monomial::from_indices(s));
  return Matroid(SimplicialComplex::from_faces(n, faces));
}

// Exchange axiom over every pair, not only |Y| = |X| + 1.
bool exchange_full_scan(const Matroid& m) {
  for (Monomial x : m.independents().faces()) {
    for (Monomial y : m.independents().faces()) {
      if (y.grade() <= x.grade()) continue;
      bool found = false;
      for (int i : y.without(x).indices()) found = found || m.is_independent(x | Monomial::generator(i));
      if (!found) return false;
    }
  }
  return true;
}

TEST(MatroidTest, FromVectorsExamples) {
  const Matroid coord = matroid_from_vectors(config(2, {{1, 0}, {0, 1}}));
  EXPECT_EQ(coord.independents().faces().size(), 4u);
  EXPECT_TRUE(coord.is_independent(Monomial::from_indices({1, 2})));

  const Matroid b = matroid_from_vectors(braid());
  EXPECT_FALSE(b.is_independent(Monomial::from_indices({1, 2, 3})));
  EXPECT_TRUE(b.is_independent(Monomial::from_indices({1, 3})));
  EXPECT_EQ(b.rank(), 2);

  const Matroid single = matroid_from_vectors(config(3, {{0, 2, 0}}));
  EXPECT_EQ(single.independents().faces().size(), 2u);

  EXPECT_THROW(config(2, {{0, 0}}), InvalidArgument);
  EXPECT_THROW(config(2, {{1, 0, 0}}), InvalidArgument);
}

TEST(MatroidTest, ParallelFormsAreDependentPairs) {
  const Matroid m = matroid_from_vectors(config(2, {{1, 1}, {2, 2}, {1, 0}}));
  EXPECT_FALSE(m.is_independent(Monomial::from_indices({1, 2})));
  EXPECT_TRUE(m.is_independent(Monomial::from_indices({1, 3})));
}

TEST(ExchangeTest, Examples) {
  EXPECT_TRUE(check_exchange(matroid_from_vectors(braid())));
  const Matroid bad = from_sets(3, {{}, {1}, {2}, {3}, {2, 3}});
  EXPECT_FALSE(check_exchange(bad));
  const auto witness = exchange_violation(bad);
  ASSERT_TRUE(witness.has_value());
  EXPECT_EQ(witness->first, Monomial::from_indices({1}));
  EXPECT_EQ(witness->second, Monomial::from_indices({2, 3}));

  std::vector<std::vector<int>> u24{{}, {1}, {2}, {3}, {4}};
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) u24.push_back({i, j});
  }
  EXPECT_TRUE(check_exchange(from_sets(4, u24)));
}

TEST(ExchangeTest, AgreesWithFullScan) {
  Rng rng(31);
  int failures = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const Matroid m(SimplicialComplex::from_facets(n, testing::random_facets(rng, n, 1 + rng() % 4)));
    const bool fast = check_exchange(m);
    EXPECT_EQ(fast, exchange_full_scan(m));
    failures += fast ? 0 : 1;
  }
  EXPECT_GT(failures, 0);
}

TEST(OrlikSolomonTest, Examples) {
  EXPECT_EQ(orlik_solomon(matroid_from_vectors(braid())).dims, (std::vector<std::size_t>{1, 3, 2}));
  EXPECT_EQ(orlik_solomon(matroid_from_vectors(config(2, {{1, 0}, {0, 1}}))).dims,
            (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(orlik_solomon(matroid_from_vectors(config(1, {{1}}))).dims,
            (std::vector<std::size_t>{1, 1}));
  EXPECT_THROW(orlik_solomon(from_sets(3, {{}, {1}, {2}, {3}, {2, 3}})), DomainError);
}

TEST(OrlikSolomonTest, BraidBasisIsGreedy) {
  const OSAlgebra a = orlik_solomon(matroid_from_vectors(braid()));
  ASSERT_EQ(a.bases.size(), 3u);
  EXPECT_EQ(a.bases[2], (std::vector<Monomial>{Monomial::from_indices({1, 2}),
                                               Monomial::from_indices({1, 3})}));
}

TEST(ComplementBettiTest, Examples) {
  EXPECT_EQ(complement_betti(braid()), (std::vector<std::size_t>{1, 3, 2}));
  EXPECT_EQ(complement_betti(config(2, {{1, 0}, {0, 1}})), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(complement_betti(VectorConfiguration(3, {}, Q)), (std::vector<std::size_t>{1}));
  EXPECT_THROW(complement_betti(config(2, {{1, 0}}, Field::prime(5))), DomainError);
}

TEST(ArrangementProperties, IdealIsClosedUnderBoundary) {
  // The boundary of every dependent monomial lies in the span of dependent
  // monomials and boundaries of dependent sets, degree by degree.
  Rng rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    std::vector<std::vector<long>> rows;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<long> r{static_cast<long>(rng() % 3) - 1, static_cast<long>(rng() % 3) - 1,
                          static_cast<long>(rng() % 3) - 1};
      if (r == std::vector<long>{0, 0, 0}) r[0] = 1;
      rows.push_back(r);
    }
    const Matroid m = matroid_from_vectors(config(3, rows));
    const DualVector u = DualVector::sum_of_duals(n, Q);
    for (int r = 1; r <= static_cast<int>(n); ++r) {
      const auto basis = monomials_of_grade(n, r - 1);
      std::map<std::uint64_t, std::size_t> col;
      for (std::size_t i = 0; i < basis.size(); ++i) col[basis[i].bits()] = i;
      EchelonBasis span(basis.size(), Q);
      for (Monomial s : basis) {
        if (!m.is_independent(s)) span.insert({{col[s.bits()], Scalar::one(Q)}});
      }
      std::vector<SparseVector> boundaries;
      for (Monomial d : monomials_of_grade(n, r)) {
        if (m.is_independent(d)) continue;
        SparseVector v;
        const MultiVector boundary = contract(u, MultiVector::monomial(n, d, Q));
        for (const auto& [mono, c] : boundary.terms()) {
          v.emplace_back(col[mono.bits()], c);
        }
        std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.first < b.first; });
        span.insert(v);
        boundaries.push_back(v);
      }
      // boundary of a boundary is zero, so only generators need checking.
      for (const auto& v : boundaries) EXPECT_TRUE(span.contains(v));
    }
  }
}

TEST(ArrangementProperties, FreeAndSimpleCases) {
  Rng rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    std::vector<std::vector<long>> rows;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<long> r(n, 0);
      r[i] = 1 + static_cast<long>(rng() % 3);
      rows.push_back(r);
    }
    const auto dims = complement_betti(config(n, rows));
    for (std::size_t r = 0; r <= n; ++r) {
      std::size_t binom = 1;
      for (std::size_t k = 0; k < r; ++k) binom = binom * (n - k) / (k + 1);
      EXPECT_EQ(dims[r], binom);
    }
  }
  // Four generic lines through the origin of k^2: simple, so dim A_1 = n.
  const auto dims = complement_betti(config(2, {{1, 0}, {0, 1}, {1, 1}, {1, 2}}));
  EXPECT_EQ(dims, (std::vector<std::size_t>{1, 4, 3}));
}

TEST(ArrangementProperties, UnusedCoordinateAndRelabeling) {
  Rng rng(34);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    std::vector<std::vector<long>> rows;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<long> r{static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 5) - 2,
                          static_cast<long>(rng() % 5) - 2};
      if (r == std::vector<long>{0, 0, 0}) r[2] = 1;
      rows.push_back(r);
    }
    const auto base = complement_betti(config(3, rows));
    auto padded = rows;
    for (auto& r : padded) r.push_back(0);
    EXPECT_EQ(complement_betti(config(4, padded)), base);
    auto shuffled = rows;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(complement_betti(config(3, shuffled)), base);
  }
}

}  // namespace
}  // namespace extalg
