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

// Brute-force ground truth. Shares no code path with the branching solver
// beyond the LP used to size the enumeration box.

#pragma once

#include <cstdint>
#include <functional>

#include "iqp/instance.hpp"
#include "iqp/result.hpp"

namespace iqp {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

// Every integer point of {Ax <= b, Cx = d} in lexicographic order. The
// callback may return false to stop early.
inline void enumerate_feasible(
    const Polytope& p, const IntMatrix& c, const IntVector& d,
    const std::function<bool(const IntVector&)>& visit,
    std::uint64_t budget = kDefaultEnumerationBudget) {
  const std::size_t n = p.dim();
  auto box = integer_bounding_box(p, c, d);
  if (!box) return;
  BigInt volume = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (box->upper[i] < box->lower[i]) return;
    volume *= box->upper[i] - box->lower[i] + 1;
  }
  if (volume > BigInt(std::to_string(budget)))
    throw BudgetExceeded("enumerate_feasible: box volume exceeds budget");

  IntVector x = box->lower;
  auto ok = [&]() {
    if (!p.contains(x)) return false;
    for (std::size_t i = 0; i < c.rows(); ++i)
      if (dot(c.row(i), std::span<const BigInt>(x)) != d[i]) return false;
    return true;
  };
  while (true) {
    if (ok() && !visit(x)) return;
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (x[i] < box->upper[i]) {
        x[i] += 1;
        for (std::size_t j = i + 1; j < n; ++j) x[j] = box->lower[j];
        break;
      }
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

inline std::vector<IntVector> enumerate_feasible(
    const Polytope& p, std::uint64_t budget = kDefaultEnumerationBudget) {
  std::vector<IntVector> pts;
  enumerate_feasible(
      p, IntMatrix(0, p.dim()), {},
      [&](const IntVector& x) {
        pts.push_back(x);
        return true;
      },
      budget);
  return pts;
}

// Exact minimum of the objective over the enumerated points. The first
// minimizer in lexicographic order is kept.
inline SolveResult oracle_min(const IqpInstance& inst,
                              std::uint64_t budget = kDefaultEnumerationBudget) {
  if (!check_bounded(inst)) {
    SolveResult r;
    r.status = SolveStatus::UnboundedRegion;
    return r;
  }
  SolveResult best;
  std::uint64_t count = 0;
  enumerate_feasible(
      inst.polytope(), inst.c0, inst.d0,
      [&](const IntVector& x) {
        ++count;
        BigInt v = inst.objective(x);
        if (!best.optimal() || v < *best.value) {
          best.status = SolveStatus::Optimal;
          best.value = v;
          best.witness = x;
        }
        return true;
      },
      budget);
  best.stats.leaves = count;
  return best;
}

namespace detail {

// v is in the convex hull of `others` iff the LP
//   sum_p lambda_p p = v, sum_p lambda_p = 1, lambda >= 0
// is feasible.
inline bool in_convex_hull(const IntVector& v,
                           const std::vector<const IntVector*>& others) {
  if (others.empty()) return false;
  const std::size_t n = v.size(), k = others.size();
  IntMatrix aeq(0, k);
  IntVector beq;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector row(k);
    for (std::size_t t = 0; t < k; ++t) row[t] = (*others[t])[i];
    aeq.append_row(row);
    beq.push_back(v[i]);
  }
  aeq.append_row(IntVector(k, BigInt(1)));
  beq.push_back(1);
  ExactSimplex lp(IntMatrix(0, k), {}, aeq, beq, k, std::vector<bool>(k, true));
  return lp.feasible();
}

}  // namespace detail

// Vertices of conv(P ∩ Z^n), in lexicographic order.
inline std::vector<IntVector> brute_integer_hull_vertices(
    const Polytope& p, std::uint64_t budget = kDefaultEnumerationBudget) {
  std::vector<IntVector> pts = enumerate_feasible(p, budget);
  const std::size_t n = p.dim();
  std::vector<IntVector> verts;
  for (std::size_t idx = 0; idx < pts.size(); ++idx) {
    const IntVector& v = pts[idx];
    // Midpoint of v +- e_i: not a vertex.
    bool interior = false;
    for (std::size_t i = 0; i < n && !interior; ++i) {
      IntVector up = v, dn = v;
      up[i] += 1;
      dn[i] -= 1;
      interior = std::binary_search(pts.begin(), pts.end(), up,
                                    lex_less<BigInt>) &&
                 std::binary_search(pts.begin(), pts.end(), dn,
                                    lex_less<BigInt>);
    }
    if (interior) continue;
    std::vector<const IntVector*> others;
    others.reserve(pts.size());
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != idx) others.push_back(&pts[j]);
    if (!detail::in_convex_hull(v, others)) verts.push_back(v);
  }
  return verts;
}

}  // namespace iqp
