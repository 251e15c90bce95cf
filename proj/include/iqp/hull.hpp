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

// Integer hull machinery: vertices of P, corner relaxations around them,
// dyadic slack cells, and a candidate superset of vert(P_I) with one ILP per
// nonempty cell. Concave minimization evaluates f on that superset.
//
// Slab j of a row with slack s = b_i - a_i^T x:
//   j = 0      s = 0
//   j >= 1     2^(j-1) <= s <= 2^j
// With integer data the slack of an integer point is an integer, so slabs
// 0..M cover every slack in [0, 2^M].

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "iqp/ilp.hpp"
#include "iqp/instance.hpp"
#include "iqp/linalg.hpp"
#include "iqp/result.hpp"

namespace iqp {

// All vertices of {Ax <= b}: every nonsingular n-row subsystem is solved and
// the feasible solutions are kept, deduplicated, in lexicographic order.
inline std::vector<RatVector> polytope_vertices(const Polytope& p) {
  const std::size_t n = p.dim(), m = p.num_rows();
  std::vector<RatVector> out;
  if (n == 0 || m < n) return out;
  for_each_combination(m, n, [&](std::span<const std::size_t> rows) {
    IntMatrix sub = p.a.select_rows(rows);
    if (sgn(determinant(sub)) == 0) return true;
    IntVector rhs;
    for (std::size_t r : rows) rhs.push_back(p.b[r]);
    auto x = solve_rational_system(sub, rhs);
    if (x && p.contains(*x)) out.push_back(std::move(*x));
    return true;
  });
  std::sort(out.begin(), out.end(), lex_less<BigRat>);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Maximum |det| over the n x n submatrices of A.
inline BigInt full_minor_delta(const IntMatrix& a) {
  return max_minor_of_order(a, a.cols());
}

// Smallest M >= 1 with 2 n^2 L_A Delta(A) < 2^M.
inline unsigned b_independent_M(std::size_t n, const BigInt& l_a,
                                const BigInt& delta) {
  BigInt target = BigInt(2 * n * n) * l_a * delta;
  unsigned m = 1;
  BigInt pow = 2;
  while (pow <= target) {
    pow *= 2;
    ++m;
  }
  return m;
}

inline unsigned b_independent_M(const IntMatrix& a) {
  return b_independent_M(a.cols(), max_abs_entry(a), full_minor_delta(a));
}

// 2 m^n (6 n^2 M)^(n-1).
inline BigInt ckhm_count_bound(std::size_t m, std::size_t n, unsigned M) {
  BigInt mn, inner;
  mpz_ui_pow_ui(mn.get_mpz_t(), m, n);
  mpz_ui_pow_ui(inner.get_mpz_t(), 6 * n * n * M, n == 0 ? 0 : n - 1);
  return 2 * mn * inner;
}

// P intersected with the box of radius n*Delta around a vertex of P.
// Original rows whose slack at the vertex exceeds n^2 L_A Delta are
// redundant inside the box and are dropped; the 2n box rows follow.
struct CornerRelaxation {
  RatVector vertex;
  Polytope region;
  std::vector<std::optional<std::size_t>> source_row;  // row of A, or box
};

inline CornerRelaxation corner_relaxation(const Polytope& p,
                                          const RatVector& vertex,
                                          const BigInt& delta,
                                          const BigInt& l_a) {
  const std::size_t n = p.dim();
  const BigInt radius = BigInt(n) * delta;
  const BigInt drop = BigInt(n * n) * l_a * delta;
  CornerRelaxation cr;
  cr.vertex = vertex;
  cr.region.a = IntMatrix(0, n);
  for (std::size_t i = 0; i < p.num_rows(); ++i) {
    BigRat slack = BigRat(p.b[i]) - dot(p.a.row(i), std::span<const BigRat>(vertex));
    if (slack > BigRat(drop)) continue;
    cr.region.a.append_row(p.a.row(i));
    cr.region.b.push_back(p.b[i]);
    cr.source_row.push_back(i);
  }
  IntVector lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = ceil_rat(vertex[i] - BigRat(radius));
    hi[i] = floor_rat(vertex[i] + BigRat(radius));
  }
  append_box_rows(cr.region.a, cr.region.b, lo, hi);
  for (std::size_t i = 0; i < 2 * n; ++i) cr.source_row.push_back(std::nullopt);
  return cr;
}

namespace detail {

inline BigInt pow2(unsigned e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

// Appends the slab rows of `row` for index j.
inline void append_slab(Polytope& out, std::span<const BigInt> a,
                        const BigInt& b, unsigned j) {
  IntVector neg(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) neg[k] = -a[k];
  if (j == 0) {
    out.a.append_row(neg);  // a x >= b
    out.b.push_back(-b);
    return;
  }
  out.a.append_row(a);  // a x <= b - 2^(j-1)
  out.b.push_back(b - pow2(j - 1));
  out.a.append_row(neg);  // a x >= b - 2^j
  out.b.push_back(-(b - pow2(j)));
}

}  // namespace detail

// The cell of `cr` with slab indices j (one per row of cr.region).
inline Polytope cell_polytope(const CornerRelaxation& cr,
                              const std::vector<unsigned>& j) {
  Polytope out = cr.region;
  for (std::size_t i = 0; i < j.size(); ++i)
    detail::append_slab(out, cr.region.a.row(i), cr.region.b[i], j[i]);
  return out;
}

// Slab indices in 0..M containing an integer slack s (two at powers of 2).
inline std::vector<unsigned> slabs_of_slack(const BigInt& s, unsigned M) {
  std::vector<unsigned> out;
  if (sgn(s) < 0) return out;
  if (sgn(s) == 0) return {0};
  for (unsigned j = 1; j <= M; ++j)
    if (detail::pow2(j - 1) <= s && s <= detail::pow2(j)) out.push_back(j);
  return out;
}

// Every cell of `cr` containing the integer point v.
inline std::vector<std::vector<unsigned>> cells_containing(
    const CornerRelaxation& cr, const IntVector& v, unsigned M) {
  std::vector<std::vector<unsigned>> out;
  if (!cr.region.contains(v)) return out;
  std::vector<std::vector<unsigned>> choices;
  for (std::size_t i = 0; i < cr.region.num_rows(); ++i) {
    BigInt s = cr.region.b[i] - dot(cr.region.a.row(i), std::span<const BigInt>(v));
    choices.push_back(slabs_of_slack(s, M));
    if (choices.back().empty()) return out;
  }
  std::vector<unsigned> j(choices.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == choices.size()) {
      out.push_back(j);
      return;
    }
    for (unsigned x : choices[i]) {
      j[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

struct CellId {
  std::size_t corner = 0;
  std::vector<unsigned> j;
};

struct HullCandidateSet {
  std::vector<IntVector> points;             // lexicographic order
  std::vector<std::vector<CellId>> sources;  // cells that produced each point
  std::vector<CornerRelaxation> corners;
  unsigned M = 0;
  BigInt delta = 0;
  BigInt l_a = 0;
  BigInt count_bound = 0;
  std::uint64_t cells_visited = 0;  // slab prefixes checked by LP
  std::uint64_t cells_nonempty = 0;
  std::uint64_t ilp_calls = 0;
};

struct HullOptions {
  std::uint64_t max_cells = 10'000'000;  // LP-checked slab prefixes
  IlpOptions ilp;
};

// Superset of vert(P_I): for every vertex of P, the cells of its corner
// relaxation are enumerated depth first over the rows, each prefix pruned
// by LP feasibility; one ILP feasibility call per full cell yields an
// integer point of it.
inline HullCandidateSet integer_hull_vertex_superset(
    const Polytope& p, const HullOptions& opt = {}) {
  p.validate();
  if (!is_bounded(p)) throw InvalidInstance("hull: polytope is unbounded");
  const std::size_t n = p.dim();
  HullCandidateSet out;
  out.l_a = max_abs_entry(p.a);
  out.delta = full_minor_delta(p.a);
  out.M = b_independent_M(n, out.l_a, out.delta);
  out.count_bound = ckhm_count_bound(p.num_rows(), n, out.M);

  std::map<IntVector, std::vector<CellId>, decltype(&lex_less<BigInt>)> found(
      &lex_less<BigInt>);
  // Any integer point of a cell will do: a cell holding a vertex of P_I
  // holds no other integer point.
  IlpOptions cell_ilp = opt.ilp;
  cell_ilp.lexicographic = false;
  const std::vector<RatVector> verts = polytope_vertices(p);
  for (std::size_t v = 0; v < verts.size(); ++v) {
    out.corners.push_back(corner_relaxation(p, verts[v], out.delta, out.l_a));
    const CornerRelaxation& cr = out.corners.back();
    const std::size_t rows = cr.region.num_rows();

    // Slab range per row from the LP range of its slack over the region.
    ExactSimplex base = relaxation(cr.region, IntMatrix(0, n), {});
    if (!base.feasible()) continue;
    // (slab, whether it contains the whole slack range of the row)
    std::vector<std::vector<std::pair<unsigned, bool>>> allowed(rows);
    for (std::size_t i = 0; i < rows; ++i) {
      IntVector a = cr.region.a.row_vector(i);
      auto lo = base.min_value(a), hi = base.max_value(a);
      if (!lo || !hi) throw InvalidInstance("hull: corner region unbounded");
      const BigRat smin = BigRat(cr.region.b[i]) - *hi;
      const BigRat smax = BigRat(cr.region.b[i]) - *lo;
      for (unsigned j = 0; j <= out.M; ++j) {
        BigRat lo_j = j == 0 ? BigRat(0) : BigRat(detail::pow2(j - 1));
        BigRat hi_j = j == 0 ? BigRat(0) : BigRat(detail::pow2(j));
        if (lo_j <= smax && smin <= hi_j)
          allowed[i].emplace_back(j, lo_j <= smin && smax <= hi_j);
      }
    }

    std::vector<unsigned> j(rows);
    Polytope cell = cr.region;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == rows) {
        ++out.cells_nonempty;
        ++out.ilp_calls;
        LpProblem lp = LpProblem::with_vars(n);
        lp.a_ineq = cell.a;
        lp.b_ineq = cell.b;
        IlpOutcome r = ilp_solve(lp, cell_ilp);
        if (r.status == LpStatus::Optimal)
          found.try_emplace(r.point).first->second.push_back({v, j});
        return;
      }
      for (auto [x, covers] : allowed[i]) {
        if (++out.cells_visited > opt.max_cells)
          throw BudgetExceeded("hull: cell budget exceeded");
        const std::size_t before = cell.num_rows();
        detail::append_slab(cell, cr.region.a.row(i), cr.region.b[i], x);
        const bool feasible =
            covers || relaxation(cell, IntMatrix(0, n), {}).feasible();
        if (feasible) {
          j[i] = x;
          rec(i + 1);
        }
        while (cell.num_rows() > before) {
          cell.a.pop_row();
          cell.b.pop_back();
        }
      }
    };
    rec(0);
  }
  for (auto& [pt, src] : found) {
    out.points.push_back(pt);
    out.sources.push_back(std::move(src));
  }
  return out;
}

namespace detail {

inline void require_concave(const IntMatrix& q) {
  if (!is_symmetric(q)) throw NotSymmetric("concave: Q is not symmetric");
  if (inertia(q).positive != 0)
    throw NotConcave("concave: Q has a positive eigenvalue");
}

}  // namespace detail

// Minimum over the candidate set `set` of P, which must come from
// integer_hull_vertex_superset(p).
inline SolveResult concave_minimize(const Polytope& p, const HullCandidateSet& set,
                                    const IntMatrix& q, const IntVector& c,
                                    const HullOptions& opt = {}) {
  detail::require_concave(q);
  SolveResult best;
  for (const auto& x : set.points) {
    BigInt v = dot(x, mat_vec(q, x)) + dot(c, x);
    absorb(best, SolveResult::optimum(v, x));
  }
  best.stats.leaves = set.points.size();
  if (!best.optimal()) {
    // Confirm that P has no integer point at all.
    LpProblem lp = LpProblem::with_vars(p.dim());
    lp.a_ineq = p.a;
    lp.b_ineq = p.b;
    if (ilp_solve(lp, opt.ilp).status == LpStatus::Optimal)
      throw std::logic_error("concave: empty candidate set for a feasible P");
  }
  return best;
}

// min x^T Q x + c^T x over P ∩ Z^n for Q with no positive eigenvalue.
inline SolveResult concave_minimize(const Polytope& p, const IntMatrix& q,
                                    const IntVector& c,
                                    const HullOptions& opt = {}) {
  detail::require_concave(q);
  if (!is_bounded(p)) {
    SolveResult r;
    r.status = SolveStatus::UnboundedRegion;
    return r;
  }
  return concave_minimize(p, integer_hull_vertex_superset(p, opt), q, c, opt);
}

}  // namespace iqp
