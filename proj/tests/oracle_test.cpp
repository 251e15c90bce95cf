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

#include "iqp/oracle.hpp"
#include "test_util.hpp"

using namespace iqp;
using iqp::testing::iv;
using iqp::testing::Rng;

TEST(EnumerateFeasible, UnitSquareInLexOrder) {
  auto pts = enumerate_feasible(box_polytope(iv({0, 0}), iv({1, 1})));
  std::vector<IntVector> want{iv({0, 0}), iv({0, 1}), iv({1, 0}), iv({1, 1})};
  EXPECT_EQ(pts, want);
}

TEST(EnumerateFeasible, SinglePointCone) {
  Polytope p{IntMatrix{{1, 1}, {-1, 0}, {0, -1}}, iv({0, 0, 0})};
  EXPECT_EQ(enumerate_feasible(p), std::vector<IntVector>{iv({0, 0})});
}

TEST(EnumerateFeasible, WithEquality) {
  Polytope p = box_polytope(iv({0, 0}), iv({2, 2}));
  std::vector<IntVector> pts;
  enumerate_feasible(p, IntMatrix{{1, -1}}, iv({0}), [&](const IntVector& x) {
    pts.push_back(x);
    return true;
  });
  std::vector<IntVector> want{iv({0, 0}), iv({1, 1}), iv({2, 2})};
  EXPECT_EQ(pts, want);
}

TEST(EnumerateFeasible, BudgetExceeded) {
  Polytope p = box_polytope(iv({0, 0, 0}), iv({99, 99, 99}));
  EXPECT_THROW(enumerate_feasible(p, 1000), BudgetExceeded);
}

TEST(EnumerateFeasible, MatchesDirectConstraintChecks) {
  Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = rng.uniform(1, 3);
    Polytope p = box_polytope(IntVector(n, BigInt(-3)), IntVector(n, BigInt(3)));
    for (int r = 0; r < 3; ++r) {
      p.a.append_row(rng.vector(n, -3, 3));
      p.b.push_back(rng.uniform(-2, 4));
    }
    auto pts = enumerate_feasible(p);
    std::vector<IntVector> direct;
    IntVector x(n, BigInt(-3));
    while (true) {
      if (p.contains(x)) direct.push_back(x);
      std::size_t i = n;
      while (i > 0 && x[i - 1] == 3) x[--i] = -3;
      if (i == 0) break;
      x[i - 1] += 1;
    }
    EXPECT_EQ(pts, direct);
  }
}

TEST(OracleMin, IndefiniteBox) {
  auto inst = IqpInstance::make(IntMatrix{{1, 2}, {2, 1}}, iv({0, 0}),
                                IntMatrix(0, 2), {});
  append_box_rows(inst.a, inst.b, iv({-2, -2}), iv({2, 2}));
  SolveResult r = oracle_min(inst);
  ASSERT_TRUE(r.optimal());
  EXPECT_EQ(*r.value, -8);
  EXPECT_EQ(*r.witness, iv({-2, 2}));
}

TEST(OracleMin, SeparableSaddle) {
  auto inst = IqpInstance::make(IntMatrix{{1, 0}, {0, -1}}, iv({0, 0}),
                                IntMatrix(0, 2), {});
  append_box_rows(inst.a, inst.b, iv({-2, -2}), iv({2, 2}));
  SolveResult r = oracle_min(inst);
  ASSERT_TRUE(r.optimal());
  EXPECT_EQ(*r.value, -4);
  EXPECT_EQ(*r.witness, iv({0, -2}));
}

TEST(OracleMin, Infeasible) {
  auto inst = IqpInstance::make(IntMatrix{{1}}, iv({0}), IntMatrix{{1}, {-1}},
                                iv({0, -1}));
  EXPECT_EQ(oracle_min(inst).status, SolveStatus::Infeasible);
}

TEST(BruteHull, SquareCorners) {
  auto v = brute_integer_hull_vertices(box_polytope(iv({0, 0}), iv({3, 3})));
  std::vector<IntVector> want{iv({0, 0}), iv({0, 3}), iv({3, 0}), iv({3, 3})};
  EXPECT_EQ(v, want);
}

TEST(BruteHull, Triangle) {
  Polytope p{IntMatrix{{2, 2}, {-1, 0}, {0, -1}}, iv({3, 0, 0})};
  std::vector<IntVector> want{iv({0, 0}), iv({0, 1}), iv({1, 0})};
  EXPECT_EQ(brute_integer_hull_vertices(p), want);
}

TEST(BruteHull, SinglePoint) {
  Polytope p = box_polytope(iv({2, -1}), iv({2, -1}));
  EXPECT_EQ(brute_integer_hull_vertices(p), std::vector<IntVector>{iv({2, -1})});
}

TEST(BruteHull, CollinearMidpointsAreNotVertices) {
  // Segment from (0,0) to (4,2) with integer points (0,0),(2,1),(4,2).
  Polytope p{IntMatrix{{1, -2}, {-1, 2}, {1, 0}, {-1, 0}}, iv({0, 0, 4, 0})};
  std::vector<IntVector> want{iv({0, 0}), iv({4, 2})};
  EXPECT_EQ(brute_integer_hull_vertices(p), want);
}
