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

#include <cstddef>
#include <vector>

#include "extalg/errors.hpp"
#include "extalg/lie.hpp"
#include "extalg/linalg.hpp"
#include "test_support.hpp"

namespace extalg {
namespace {

using testing::Rng;

const Field Q = Field::rationals();

Bracket make(std::size_t dim, const std::vector<std::tuple<int, int, int, long>>& entries,
             Field field = Q) {
  Bracket b(dim, field);
  for (const auto& [i, j, k, v] : entries) b.set(i, j, k, Scalar(field, v));
  return b;
}

Bracket sl2() { return make(3, {{1, 2, 2, 2}, {1, 3, 3, -2}, {2, 3, 1, 1}}); }
Bracket heisenberg() { return make(3, {{1, 2, 3, 1}}); }
Bracket affine_line() { return make(2, {{1, 2, 1, 1}}); }

// Lie algebras with Jacobi known to hold.
std::vector<Bracket> known_algebras() {
  return {sl2(),
          heisenberg(),
          affine_line(),
          Bracket(4),
          make(4, {{1, 2, 2, 2}, {1, 3, 3, -2}, {2, 3, 1, 1}}),  // gl2
          make(3, {{1, 2, 2, 1}, {1, 3, 3, 1}}),
          make(4, {{1, 2, 3, 1}, {1, 3, 4, 1}})};  // filiform
}

// Same algebra in the basis y_a = sum_k p[k][a] x_k.
Bracket change_basis(const Bracket& b, const Matrix& p) {
  const std::size_t n = b.dim();
  Bracket out(n, b.field());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = a + 1; c < n; ++c) {
      std::vector<Scalar> ya(n, Scalar::zero(b.field())), yc = ya;
      for (std::size_t k = 0; k < n; ++k) {
        ya[k] = p.at(k, a);
        yc[k] = p.at(k, c);
      }
      const auto coords = solve(p, b.bracket(ya, yc));
      for (std::size_t k = 0; k < n; ++k) {
        out.set(static_cast<int>(a + 1), static_cast<int>(c + 1), static_cast<int>(k + 1),
                coords->at(k));
      }
    }
  }
  return out;
}

Matrix random_invertible(Rng& rng, std::size_t n) {
  while (true) {
    Matrix p(n, n, Q);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) p.set(i, j, testing::random_scalar(rng, Q, 3));
    }
    if (rank(p) == n) return p;
  }
}

Bracket random_bracket(Rng& rng, std::size_t n, Field field = Q) {
  Bracket b(n, field);
  for (int i = 1; i <= static_cast<int>(n); ++i) {
    for (int j = i + 1; j <= static_cast<int>(n); ++j) {
      for (int k = 1; k <= static_cast<int>(n); ++k) {
        if (rng() % 3 == 0) b.set(i, j, k, testing::random_scalar(rng, field, 2));
      }
    }
  }
  return b;
}

// Chevalley-Eilenberg cohomology from alternating cochains:
// (d w)(x_0..x_r) = sum_{i<j} (-1)^{i+j} w([x_i, x_j], x_0..^..^..x_r).
std::vector<std::size_t> naive_ce_cohomology(const Bracket& b) {
  const std::size_t n = b.dim();
  const Field f = b.field();
  std::vector<std::vector<std::vector<int>>> sets(n + 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<int> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) s.push_back(static_cast<int>(i + 1));
    }
    sets[s.size()].push_back(s);
  }
  auto index_of = [&](const std::vector<int>& s) {
    const auto& level = sets[s.size()];
    return static_cast<std::size_t>(std::lower_bound(level.begin(), level.end(), s) - level.begin());
  };
  for (auto& level : sets) std::sort(level.begin(), level.end());
  std::vector<std::size_t> ranks(n + 2, 0);  // ranks[r]: d from r-cochains.
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<std::vector<Scalar>> m(sets[r + 1].size(),
                                       std::vector<Scalar>(sets[r].size(), Scalar::zero(f)));
    for (std::size_t t = 0; t < sets[r + 1].size(); ++t) {
      const auto& big = sets[r + 1][t];
      for (std::size_t i = 0; i < big.size(); ++i) {
        for (std::size_t j = i + 1; j < big.size(); ++j) {
          std::vector<int> rest;
          for (std::size_t l = 0; l < big.size(); ++l) {
            if (l != i && l != j) rest.push_back(big[l]);
          }
          const auto br = b.bracket(big[i], big[j]);
          const long sign = (i + j) % 2 == 0 ? 1 : -1;
          for (int k = 1; k <= static_cast<int>(n); ++k) {
            const Scalar& c = br[static_cast<std::size_t>(k - 1)];
            if (c.is_zero() || std::find(rest.begin(), rest.end(), k) != rest.end()) continue;
            std::vector<int> seq{k};
            seq.insert(seq.end(), rest.begin(), rest.end());
            const int perm = testing::bubble_sort_sign(seq);
            std::sort(seq.begin(), seq.end());
            m[t][index_of(seq)] += c * Scalar(f, sign * perm);
          }
        }
      }
    }
    ranks[r] = testing::dense_rank(std::move(m));
  }
  std::vector<std::size_t> out(n + 1);
  for (std::size_t r = 0; r <= n; ++r) {
    out[r] = sets[r].size() - ranks[r] - (r > 0 ? ranks[r - 1] : 0);
  }
  return out;
}

TEST(LieTest, BracketStorage) {
  Bracket b = sl2();
  EXPECT_EQ(b.coefficient(2, 1, 2), Scalar(Q, -2));
  EXPECT_EQ(b.coefficient(1, 2, 2), Scalar(Q, 2));
  EXPECT_TRUE(b.coefficient(1, 1, 1).is_zero());
  EXPECT_THROW(b.set(1, 1, 2, Scalar(Q, 1)), InvalidArgument);
  EXPECT_NO_THROW(b.set(2, 2, 1, Scalar(Q, 0)));
}

TEST(LieTest, DerivationFromBracket) {
  const Derivation d = derivation_from_bracket(affine_line());
  EXPECT_EQ(d.image(1), MultiVector::monomial(2, Monomial::from_indices({1, 2}), Q));
  EXPECT_TRUE(d.image(2).is_zero());
  EXPECT_THROW(Derivation({MultiVector::generator(2, 1, Q), MultiVector(2, Q)}, Q), InvalidArgument);
}

TEST(LieTest, CohomologyExamples) {
  EXPECT_EQ(lie_cohomology(sl2()), (std::vector<std::size_t>{1, 0, 0, 1}));
  EXPECT_EQ(lie_cohomology(affine_line()), (std::vector<std::size_t>{1, 1, 0}));
  EXPECT_EQ(lie_cohomology(heisenberg()), (std::vector<std::size_t>{1, 2, 2, 1}));
  EXPECT_EQ(lie_cohomology(Bracket(3)), (std::vector<std::size_t>{1, 3, 3, 1}));
}

TEST(LieTest, JacobiFailureDetected) {
  // Jacobi sum of (x1, x2, x3) is x1.
  const Bracket bad = make(3, {{1, 2, 1, 1}, {1, 3, 1, 1}, {2, 3, 2, 1}});
  EXPECT_FALSE(satisfies_jacobi(bad));
  EXPECT_FALSE(is_differential(derivation_from_bracket(bad)));
  EXPECT_THROW(lie_cohomology(bad), DomainError);
}

TEST(LieTest, ModularField) {
  const Field f = Field::prime(3);
  const Bracket b = make(3, {{1, 2, 2, 2}, {1, 3, 3, -2}, {2, 3, 1, 1}}, f);
  EXPECT_TRUE(satisfies_jacobi(b));
  EXPECT_EQ(lie_cohomology(b), naive_ce_cohomology(b));
}

TEST(LieProperties, JacobiIffSquareZero) {
  Rng rng(41);
  int holds = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    Bracket b = random_bracket(rng, n);
    const bool jac = satisfies_jacobi(b);
    holds += jac ? 1 : 0;
    EXPECT_EQ(jac, is_differential(derivation_from_bracket(b)));
  }
  for (const auto& b : known_algebras()) {
    EXPECT_TRUE(satisfies_jacobi(b));
    EXPECT_TRUE(is_differential(derivation_from_bracket(b)));
  }
  EXPECT_GT(holds, 0);
}

TEST(LieProperties, Leibniz) {
  Rng rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    const Derivation d = derivation_from_bracket(random_bracket(rng, n));
    const int ga = static_cast<int>(rng() % (n + 1));
    const int gb = static_cast<int>(rng() % (n + 1));
    const MultiVector a = testing::random_homogeneous(rng, n, ga, 3);
    const MultiVector b = testing::random_homogeneous(rng, n, gb, 3);
    MultiVector rhs = wedge(extend_derivation(d, a), b);
    MultiVector second = wedge(a, extend_derivation(d, b));
    rhs += ga % 2 == 0 ? second : -second;
    EXPECT_EQ(extend_derivation(d, wedge(a, b)), rhs);
  }
}

TEST(LieProperties, MatchesCochainOracle) {
  Rng rng(43);
  for (const auto& base : known_algebras()) {
    EXPECT_EQ(lie_cohomology(base), naive_ce_cohomology(base));
    for (int trial = 0; trial < 5; ++trial) {
      const Bracket b = change_basis(base, random_invertible(rng, base.dim()));
      ASSERT_TRUE(satisfies_jacobi(b));
      EXPECT_EQ(lie_cohomology(b), lie_cohomology(base));
    }
  }
}

TEST(LieProperties, EulerCharacteristicVanishes) {
  Rng rng(44);
  for (const auto& base : known_algebras()) {
    const Bracket b = change_basis(base, random_invertible(rng, base.dim()));
    long chi = 0;
    const auto h = lie_cohomology(b);
    for (std::size_t r = 0; r < h.size(); ++r) chi += (r % 2 == 0 ? 1 : -1) * static_cast<long>(h[r]);
    EXPECT_EQ(chi, 0);
    EXPECT_EQ(h.front(), 1u);
  }
}

TEST(LieProperties, DerivationMatrixSquaresToZero) {
  Rng rng(45);
  for (const auto& base : known_algebras()) {
    const Derivation d = derivation_from_bracket(change_basis(base, random_invertible(rng, base.dim())));
    for (int r = 0; r + 2 <= static_cast<int>(d.n()); ++r) {
      const Matrix a = derivation_matrix(d, r);
      const Matrix b = derivation_matrix(d, r + 1);
      EXPECT_TRUE((b * a).is_zero());
    }
  }
}

}  // namespace
}  // namespace extalg
