// Copyright 2026 The iqp Authors
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

#include "iqp/linalg.hpp"
#include "test_util.hpp"

using namespace iqp;
using iqp::testing::iv;
using iqp::testing::leibniz_det;
using iqp::testing::Rng;

namespace {

BigInt brute_delta(const IntMatrix& m) {
  BigInt best = 0;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k)
    for_each_combination(m.rows(), k, [&](std::span<const std::size_t> r) {
      for_each_combination(m.cols(), k, [&](std::span<const std::size_t> c) {
        BigInt d = abs(leibniz_det(m.select_rows(r).select_cols(c)));
        if (d > best) best = d;
        return true;
      });
      return true;
    });
  return best;
}

// Inertia from the characteristic polynomial. All roots of a symmetric
// matrix's characteristic polynomial are real, so Descartes' rule of signs
// counts positive and negative roots exactly.
Inertia descartes_inertia(const IntMatrix& m) {
  const std::size_t n = m.rows();
  // det(tI - M) = sum_k (-1)^k E_k t^{n-k}, E_k = sum of k x k principal minors.
  std::vector<BigInt> coeff(n + 1);
  coeff[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    BigInt e = 0;
    for_each_combination(n, k, [&](std::span<const std::size_t> idx) {
      e += leibniz_det(m.select_rows(idx).select_cols(idx));
      return true;
    });
    coeff[k] = (k % 2) ? BigInt(-e) : e;
  }
  std::size_t zero = 0;
  while (zero < n && sgn(coeff[n - zero]) == 0) ++zero;
  auto changes = [](const std::vector<BigInt>& c) {
    std::size_t count = 0;
    int last = 0;
    for (const auto& x : c) {
      int s = sgn(x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  std::vector<BigInt> neg(coeff);
  for (std::size_t k = 0; k <= n; ++k)
    if ((n - k) % 2) neg[k] = -neg[k];
  return {changes(coeff), changes(neg), zero};
}

}  // namespace

TEST(RowspaceMember, ScalarMultiple) {
  auto r = rank_and_rowspace_member(IntMatrix{{1, 0}}, iv({3, 0}));
  ASSERT_TRUE(r.member);
  EXPECT_EQ(*r.coefficients, RatVector{BigRat(3)});
}

TEST(RowspaceMember, OrthogonalCoordinate) {
  auto r = rank_and_rowspace_member(IntMatrix{{1, 0}}, iv({0, 1}));
  EXPECT_FALSE(r.member);
  EXPECT_FALSE(r.coefficients.has_value());
}

TEST(RowspaceMember, TwoByTwoSystem) {
  auto r = rank_and_rowspace_member(IntMatrix{{1, 1}, {1, -1}}, iv({2, 0}));
  ASSERT_TRUE(r.member);
  EXPECT_EQ(*r.coefficients, (RatVector{BigRat(1), BigRat(1)}));
}

TEST(RowspaceMember, EmptyMatrix) {
  EXPECT_TRUE(rank_and_rowspace_member(IntMatrix(0, 2), iv({0, 0})).member);
  EXPECT_FALSE(rank_and_rowspace_member(IntMatrix(0, 2), iv({0, 1})).member);
}

TEST(RowSpace, GreedyExtension) {
  RowSpace rs(3);
  EXPECT_TRUE(rs.add(iv({1, 2, 3})));
  EXPECT_FALSE(rs.add(iv({2, 4, 6})));
  EXPECT_TRUE(rs.add(iv({0, 1, 1})));
  EXPECT_TRUE(rs.contains(iv({1, 3, 4})));
  EXPECT_FALSE(rs.contains(iv({0, 0, 1})));
  EXPECT_EQ(rs.rank(), 2u);
}

TEST(MaxSubdeterminant, Identity) {
  EXPECT_EQ(max_subdeterminant(IntMatrix::identity(2)), 1);
}

TEST(MaxSubdeterminant, RotationLike) {
  EXPECT_EQ(max_subdeterminant(IntMatrix{{1, 1}, {-1, 1}}), 2);
}

TEST(MaxSubdeterminant, TotallyUnimodular) {
  // Node-arc incidence matrix of a directed triangle plus the identity.
  IntMatrix tu{{1, 0, -1, 1, 0, 0},
               {-1, 1, 0, 0, 1, 0},
               {0, -1, 1, 0, 0, 1}};
  EXPECT_EQ(max_subdeterminant(tu), 1);
}

TEST(MaxSubdeterminant, BudgetRefusesLargeExactRuns) {
  IntMatrix big(10, 10, BigInt(1));
  EXPECT_THROW(max_subdeterminant(big, DeltaMode::Exact, 100), BudgetExceeded);
  EXPECT_NO_THROW(max_subdeterminant(big, DeltaMode::Hadamard, 100));
}

TEST(MaxSubdeterminant, MatchesBruteForceAndHadamardDominates) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix m = rng.matrix(rng.uniform(1, 4), rng.uniform(1, 4), -3, 3);
    BigInt exact = max_subdeterminant(m);
    EXPECT_EQ(exact, brute_delta(m));
    EXPECT_GE(max_subdeterminant(m, DeltaMode::Hadamard), exact);
  }
}

TEST(AdjugateBasis, SingleRowUnit) {
  KernelBasis kb = adjugate_kernel_basis(IntMatrix{{1, 1}});
  ASSERT_EQ(kb.size(), 1u);
  EXPECT_EQ(kb.vectors[0], iv({-1, 1}));
  EXPECT_EQ(kb.delta, 1);
  EXPECT_LE(kb.norm_bound, max_subdeterminant(IntMatrix{{1, 1}}));
}

TEST(AdjugateBasis, SingleRowScaledPivot) {
  KernelBasis kb = adjugate_kernel_basis(IntMatrix{{2, 1}});
  ASSERT_EQ(kb.size(), 1u);
  EXPECT_EQ(kb.vectors[0], iv({-1, 2}));
  EXPECT_EQ(kb.delta, 2);
  EXPECT_EQ(kb.pivot_columns, std::vector<std::size_t>{0});
}

TEST(AdjugateBasis, CoordinateKernel) {
  KernelBasis kb = adjugate_kernel_basis(IntMatrix{{1, 0, 0}});
  ASSERT_EQ(kb.size(), 2u);
  EXPECT_EQ(kb.vectors[0], iv({0, 1, 0}));
  EXPECT_EQ(kb.vectors[1], iv({0, 0, 1}));
}

TEST(AdjugateBasis, EmptySystemGivesStandardBasis) {
  KernelBasis kb = adjugate_kernel_basis(IntMatrix(0, 3));
  ASSERT_EQ(kb.size(), 3u);
  EXPECT_EQ(kb.vectors[1], iv({0, 1, 0}));
}

TEST(AdjugateBasis, DependentRowsRejected) {
  EXPECT_THROW(adjugate_kernel_basis(IntMatrix{{1, 2}, {2, 4}}),
               RankDeficientRows);
}

TEST(AdjugateBasis, RandomFullRowRankProperties) {
  Rng rng(2024);
  int checked = 0;
  while (checked < 300) {
    std::size_t n = rng.uniform(2, 5);
    std::size_t k = rng.uniform(1, n - 1);
    IntMatrix c = rng.matrix(k, n, -3, 3);
    if (rank(c) != k) continue;
    ++checked;
    KernelBasis kb = adjugate_kernel_basis(c);
    ASSERT_EQ(kb.size(), n - k);
    BigInt delta = max_subdeterminant(c);
    for (std::size_t t = 0; t < kb.size(); ++t) {
      const IntVector& y = kb.vectors[t];
      for (const auto& v : mat_vec(c, y)) EXPECT_EQ(v, 0);
      EXPECT_LE(inf_norm(y), delta);
      // T-block is delta * identity.
      for (std::size_t u = 0; u < kb.free_columns.size(); ++u)
        EXPECT_EQ(y[kb.free_columns[u]], u == t ? kb.delta : BigInt(0));
    }
    EXPECT_EQ(rank(kb.as_columns(n).transpose()), n - k);
  }
}

TEST(Inertia, Identity) {
  EXPECT_EQ(inertia(IntMatrix::identity(2)), (Inertia{2, 0, 0}));
}

TEST(Inertia, IndefiniteWithPositiveDiagonal) {
  // Eigenvalues 3 and -1.
  EXPECT_EQ(inertia(IntMatrix{{1, 2}, {2, 1}}), (Inertia{1, 1, 0}));
}

TEST(Inertia, ZeroDiagonalPair) {
  EXPECT_EQ(inertia(IntMatrix{{0, 1}, {1, 0}}), (Inertia{1, 1, 0}));
}

TEST(Inertia, RestrictedToSubspace) {
  // Q = diag(1, -1, 0) restricted to span{e1 + e2}: (1 - 1) = 0.
  IntMatrix q{{1, 0, 0}, {0, -1, 0}, {0, 0, 0}};
  IntMatrix b{{1}, {1}, {0}};
  EXPECT_EQ(inertia_of_restricted_form(q, b), (Inertia{0, 0, 1}));
}

TEST(Inertia, RejectsAsymmetric) {
  EXPECT_THROW(inertia(IntMatrix{{0, 1}, {2, 0}}), NotSymmetric);
}

TEST(Inertia, AgreesWithDescartesOracle) {
  Rng rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t n = rng.uniform(2, 3);
    IntMatrix q = rng.symmetric(n, -3, 3);
    if (trial % 5 == 0)
      for (std::size_t i = 0; i < n; ++i) q(i, i) = 0;
    EXPECT_EQ(inertia(q), descartes_inertia(q)) << "trial " << trial;
  }
}

TEST(Inertia, CongruenceInvariant) {
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = rng.uniform(2, 4);
    std::size_t r = rng.uniform(1, n);
    IntMatrix q = rng.symmetric(n, -3, 3);
    IntMatrix b = rng.matrix(n, r, -2, 2);
    if (rank(b) != r) continue;
    // Random invertible rational S: integer S scaled by 1/den keeps the
    // congruence class, so S integer with det != 0 covers it.
    IntMatrix s = rng.matrix(r, r, -2, 2);
    if (sgn(determinant(s)) == 0) continue;
    RatMatrix bq = to_rat(mat_mul(b.transpose(), mat_mul(q, b)));
    RatMatrix sr = to_rat(s);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) sr(i, j) /= 3;
    RatMatrix congruent = mat_mul(sr.transpose(), mat_mul(bq, sr));
    EXPECT_EQ(inertia_of_symmetric(bq), inertia_of_symmetric(congruent));
    EXPECT_EQ(inertia_of_restricted_form(q, b),
              inertia_of_restricted_form(q, mat_mul(b, s)));
  }
}

TEST(RationalSystem, Underdetermined) {
  auto x = solve_rational_system(IntMatrix{{1, 1}}, iv({2}));
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0] + (*x)[1], 2);
}

TEST(RationalSystem, Inconsistent) {
  EXPECT_FALSE(solve_rational_system(IntMatrix{{1}, {1}}, iv({1, 2})));
}

TEST(RationalSystem, Diagonal) {
  auto x = solve_rational_system(IntMatrix{{2, 0}, {0, 3}}, iv({1, 1}));
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (RatVector{BigRat(1, 2), BigRat(1, 3)}));
}

TEST(AffineKey, SameSubspaceSameKey) {
  EXPECT_EQ(affine_key(IntMatrix{{1, 1}, {1, -1}}, iv({2, 0})),
            affine_key(IntMatrix{{1, 0}, {0, 1}}, iv({1, 1})));
  EXPECT_EQ(affine_key(IntMatrix{{2, 0}}, iv({4})),
            affine_key(IntMatrix{{-1, 0}}, iv({-2})));
  EXPECT_NE(affine_key(IntMatrix{{1, 0}}, iv({1})),
            affine_key(IntMatrix{{1, 0}}, iv({2})));
  EXPECT_EQ(affine_key(IntMatrix{{1}, {1}}, iv({1, 2})), "infeasible");
}

TEST(Determinant, MatchesLeibniz) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = rng.uniform(1, 5);
    IntMatrix m = rng.matrix(n, n, -4, 4);
    EXPECT_EQ(determinant(m), leibniz_det(m));
  }
}
