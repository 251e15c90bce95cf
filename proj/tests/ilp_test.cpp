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

#include "iqp/ilp.hpp"
#include "iqp/instance.hpp"
#include "test_util.hpp"

using namespace iqp;
using iqp::testing::iv;
using iqp::testing::Rng;

namespace {

LpProblem one_var(long obj) {
  LpProblem p = LpProblem::with_vars(1);
  p.objective = iv({obj});
  return p;
}

// Brute force over the box, first minimizer in lexicographic order.
std::optional<std::pair<BigInt, IntVector>> brute_ilp(const LpProblem& p,
                                                      long lo, long hi) {
  const std::size_t n = p.num_vars();
  std::optional<std::pair<BigInt, IntVector>> best;
  IntVector x(n, BigInt(lo));
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < p.a_ineq.rows() && ok; ++i)
      ok = dot(p.a_ineq.row(i), std::span<const BigInt>(x)) <= p.b_ineq[i];
    for (std::size_t i = 0; i < p.a_eq.rows() && ok; ++i)
      ok = dot(p.a_eq.row(i), std::span<const BigInt>(x)) == p.b_eq[i];
    if (ok) {
      BigInt v = dot(p.objective, x);
      if (!best || v < best->first) best = {{v, x}};
    }
    std::size_t i = n;
    while (i > 0 && x[i - 1] == hi) x[--i] = lo;
    if (i == 0) break;
    x[i - 1] += 1;
  }
  return best;
}

}  // namespace

TEST(LpSolve, BoundedInterval) {
  LpProblem p = one_var(1);
  p.add_le(iv({1}), 3);
  p.add_le(iv({-1}), -1);
  LpOutcome out = lp_solve(p);
  ASSERT_EQ(out.status, LpStatus::Optimal);
  EXPECT_EQ(out.value, 1);
  EXPECT_EQ(out.point, RatVector{BigRat(1)});
}

TEST(LpSolve, Infeasible) {
  LpProblem p = one_var(1);
  p.add_le(iv({1}), 0);
  p.add_le(iv({-1}), -1);
  EXPECT_EQ(lp_solve(p).status, LpStatus::Infeasible);
}

TEST(LpSolve, Unbounded) {
  LpProblem p = one_var(-1);
  p.add_le(iv({-1}), 0);
  EXPECT_EQ(lp_solve(p).status, LpStatus::Unbounded);
}

TEST(LpSolve, EqualityRowsAndRedundancy) {
  // x + y = 2 stated twice, 0 <= x, y; min x - y.
  LpProblem p = LpProblem::with_vars(2);
  p.objective = iv({1, -1});
  p.add_eq(iv({1, 1}), 2);
  p.add_eq(iv({2, 2}), 4);
  p.add_le(iv({-1, 0}), 0);
  p.add_le(iv({0, -1}), 0);
  LpOutcome out = lp_solve(p);
  ASSERT_EQ(out.status, LpStatus::Optimal);
  EXPECT_EQ(out.value, -2);
  EXPECT_EQ(out.point, (RatVector{BigRat(0), BigRat(2)}));
}

TEST(LpSolve, ReusedBasisAcrossObjectives) {
  Polytope tri{IntMatrix{{-1, 0}, {0, -1}, {2, 3}}, iv({0, 0, 6})};
  ExactSimplex lp(tri.a, tri.b, IntMatrix(0, 2), {}, 2);
  ASSERT_TRUE(lp.feasible());
  EXPECT_EQ(lp.maximize(iv({1, 0})).value, 3);
  EXPECT_EQ(lp.maximize(iv({0, 1})).value, 2);
  EXPECT_EQ(lp.minimize(iv({1, 1})).value, 0);
  EXPECT_EQ(lp.maximize(iv({1, 1})).value, 3);
}

TEST(LpSolve, OptimalPointsAreExactlyFeasible) {
  Rng rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = rng.uniform(1, 4);
    LpProblem p = LpProblem::with_vars(n);
    p.objective = rng.vector(n, -3, 3);
    IntVector lo(n, BigInt(-4)), hi(n, BigInt(4));
    append_box_rows(p.a_ineq, p.b_ineq, lo, hi);
    for (int r = 0; r < 3; ++r) p.add_le(rng.vector(n, -3, 3), rng.uniform(-2, 6));
    if (rng.uniform(0, 2) == 0) p.add_eq(rng.vector(n, -2, 2), rng.uniform(-2, 2));
    LpOutcome out = lp_solve(p);
    if (out.status != LpStatus::Optimal) {
      EXPECT_EQ(out.status, LpStatus::Infeasible);
      continue;
    }
    for (std::size_t i = 0; i < p.a_ineq.rows(); ++i)
      EXPECT_LE(dot(to_rat(p.a_ineq.row_vector(i)), out.point),
                p.b_ineq[i]);
    for (std::size_t i = 0; i < p.a_eq.rows(); ++i)
      EXPECT_EQ(dot(to_rat(p.a_eq.row_vector(i)), out.point),
                p.b_eq[i]);
    EXPECT_EQ(out.value, dot(to_rat(p.objective), out.point));
  }
}

TEST(IlpSolve, LexicographicTieBreak) {
  LpProblem p = LpProblem::with_vars(2);
  p.objective = iv({1, 1});
  p.add_le(iv({-2, -2}), -3);
  append_box_rows(p.a_ineq, p.b_ineq, iv({0, 0}), iv({2, 2}));
  IlpOutcome out = ilp_solve(p);
  ASSERT_EQ(out.status, LpStatus::Optimal);
  EXPECT_EQ(out.value, 2);
  EXPECT_EQ(out.point, iv({0, 2}));
}

TEST(IlpSolve, IntegralRelaxationNeedsNoBranching) {
  LpProblem p = LpProblem::with_vars(2);
  p.objective = iv({1, 2});
  append_box_rows(p.a_ineq, p.b_ineq, iv({-1, 3}), iv({5, 7}));
  IlpOutcome out = ilp_solve(p);
  ASSERT_EQ(out.status, LpStatus::Optimal);
  EXPECT_EQ(out.nodes, 1u);
  EXPECT_EQ(out.point, iv({-1, 3}));
}

TEST(IlpSolve, NoIntegerPointInNonemptyPolytope) {
  LpProblem p = one_var(1);
  p.add_le(iv({-3}), -1);
  p.add_le(iv({3}), 2);
  EXPECT_EQ(lp_solve(p).status, LpStatus::Optimal);
  EXPECT_EQ(ilp_solve(p).status, LpStatus::Infeasible);
}

TEST(IlpSolve, BudgetExceeded) {
  LpProblem p = LpProblem::with_vars(2);
  p.objective = iv({1, 1});
  p.add_le(iv({-2, -2}), -3);
  append_box_rows(p.a_ineq, p.b_ineq, iv({0, 0}), iv({2, 2}));
  IlpOptions opt;
  opt.max_nodes = 1;
  EXPECT_THROW(ilp_solve(p, opt), BudgetExceeded);
}

TEST(IlpSolve, AgreesWithEnumeration) {
  Rng rng(4242);
  for (int trial = 0; trial < 250; ++trial) {
    std::size_t n = rng.uniform(1, 4);
    long lo = rng.uniform(-4, 0);
    long hi = lo + rng.uniform(0, 6);  // width <= 7 points
    LpProblem p = LpProblem::with_vars(n);
    p.objective = rng.vector(n, -3, 3);
    append_box_rows(p.a_ineq, p.b_ineq, IntVector(n, BigInt(lo)),
                    IntVector(n, BigInt(hi)));
    for (int r = rng.uniform(0, 3); r > 0; --r)
      p.add_le(rng.vector(n, -3, 3), rng.uniform(-3, 5));
    if (rng.uniform(0, 3) == 0) p.add_eq(rng.vector(n, -2, 2), rng.uniform(-2, 2));
    auto expect = brute_ilp(p, lo, hi);
    IlpOutcome got = ilp_solve(p);
    if (!expect) {
      EXPECT_EQ(got.status, LpStatus::Infeasible) << "trial " << trial;
      continue;
    }
    ASSERT_EQ(got.status, LpStatus::Optimal) << "trial " << trial;
    EXPECT_EQ(got.value, BigRat(expect->first));
    EXPECT_EQ(got.point, expect->second);

    IlpOptions no_prune;
    no_prune.prune = false;
    IlpOutcome unpruned = ilp_solve(p, no_prune);
    EXPECT_EQ(unpruned.value, got.value);
    EXPECT_EQ(unpruned.point, got.point);
    EXPECT_GE(unpruned.nodes, got.nodes);
  }
}
