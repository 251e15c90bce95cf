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

// Branching engine for indefinite integer quadratic programs.
//
// Every node carries an equality system Cx = d of full row rank and an
// adjugate basis y_1..y_r of ker(C). A node is either flat (y_i^T Q lies in
// rowspace(C) for every i, so the objective is affine on the node and the
// node is an ILP leaf) or it branches:
//
//   constraint  append a_j^T x = b', b_j - W_j <= b' <= b_j, where
//               W_j = max_i |a_j^T y_i|            (shallow optima)
//   gradient    append 2 y_i^T Q x = z - c^T y_i, |z| <= y_i^T Q y_i
//                                                  (deep optima, sequential)
//   batch       append all independent gradient rows at once, only when no
//               basis direction has negative curvature (deep optima, batch)
//
// Children of a batch are flat by construction and are solved as leaves.
// The solver returns the minimum over all leaves; ties go to the
// lexicographically smallest witness.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "iqp/ilp.hpp"
#include "iqp/instance.hpp"
#include "iqp/linalg.hpp"
#include "iqp/result.hpp"

namespace iqp {

enum class Algorithm { Batch, Sequential };
inline const char* to_string(Algorithm a) {
  return a == Algorithm::Batch ? "batch" : "sequential";
}
struct CurvatureClasses {
  std::vector<std::size_t> negative;     // y^T Q y < 0, not flat
  std::vector<std::size_t> nonnegative;  // y^T Q y >= 0, not flat
  std::vector<std::size_t> flat;         // y^T Q in rowspace(C)
  std::vector<BigInt> curvature;         // y_i^T Q y_i for every i

  bool all_flat() const { return negative.empty() && nonnegative.empty(); }
};

struct Node {
  IntMatrix c;
  IntVector d;
  KernelBasis basis;
  CurvatureClasses classes;
  std::uint32_t depth = 0;
  PathStats path;
  bool forced_leaf = false;  // produced by a batch

  std::size_t dim() const { return c.cols(); }
  std::size_t kernel_dim() const { return c.cols() - c.rows(); }
};

struct ChildSystem {
  BranchKind kind = BranchKind::Constraint;
  IntMatrix c;
  IntVector d;
  std::optional<std::size_t> source_row;   // constraint: row index of A
  std::vector<std::size_t> basis_indices;  // gradient / batch directions
  std::vector<BigInt> z;                   // gradient values per direction
};

class NodeObserver {
 public:
  virtual ~NodeObserver() = default;
  virtual void on_node(const Node&) {}
  virtual void on_child(const Node& /*parent*/, const ChildSystem&,
                        const PathStats& /*child_path*/) {}
  virtual void on_leaf(const Node&, const SolveResult&) {}
};

struct SolverOptions {
  std::uint64_t max_nodes = 1'000'000;
  std::uint64_t max_children = 100'000;
  // Drop gradient values z with z != c^T y (mod 2); 2 y^T Q x is even.
  bool parity_filter = true;
  // Drop children whose equality system has no integer solution.
  bool lattice_filter = true;
  // Reuse the result of a node whose (row-sorted) system was solved before.
  // Cached entries carry their subtree statistics, so reports do not change.
  bool memoize = true;
  // Intersect branch ranges with the exact LP range of the branching
  // functional over the node's relaxation. Batch tuples are enumerated
  // coordinate by coordinate, each range taken with the earlier ones fixed.
  bool tighten_ranges = true;
  bool track_delta = true;
  std::uint64_t delta_exact_limit = 500;  // square submatrices per node
  unsigned threads = 1;
  IlpOptions ilp;
  NodeObserver* observer = nullptr;
};

// ---------------------------------------------------------------------------
// Node operations
// ---------------------------------------------------------------------------

inline IntVector q_times(const IntMatrix& q, const IntVector& y) {
  return mat_vec(q, y);
}

inline CurvatureClasses classify_curvature(const Node& node,
                                           const IntMatrix& q) {
  CurvatureClasses cls;
  RowSpace rs(node.c);
  for (std::size_t i = 0; i < node.basis.size(); ++i) {
    const IntVector& y = node.basis.vectors[i];
    IntVector qy = q_times(q, y);  // (y^T Q)^T, Q symmetric
    BigInt curv = dot(y, qy);
    cls.curvature.push_back(curv);
    if (rs.contains(qy))
      cls.flat.push_back(i);
    else if (sgn(curv) < 0)
      cls.negative.push_back(i);
    else
      cls.nonnegative.push_back(i);
  }
  return cls;
}

namespace detail {

inline ChildSystem extend(const Node& node, BranchKind kind) {
  ChildSystem ch;
  ch.kind = kind;
  ch.c = node.c;
  ch.d = node.d;
  return ch;
}

// Integer range [lo, hi] of row^T x over the relaxation, if it is bounded.
inline std::optional<std::pair<BigInt, BigInt>> lp_range(ExactSimplex& lp,
                                                         const IntVector& row) {
  if (!lp.feasible()) return std::pair<BigInt, BigInt>{1, 0};
  auto lo = lp.min_value(row);
  if (!lo) return std::nullopt;
  auto hi = lp.max_value(row);
  if (!hi) return std::nullopt;
  return std::pair<BigInt, BigInt>{ceil_rat(*lo), floor_rat(*hi)};
}

inline void check_child_budget(std::size_t count, const SolverOptions& opt) {
  if (count > opt.max_children)
    throw BudgetExceeded("branching: children per node exceed budget");
}

// Integers in [lo, hi] congruent to offset modulo g (all of them without a
// progression; only offset itself when g = 0).
inline std::vector<BigInt> progression_values(
    BigInt lo, const BigInt& hi,
    const std::optional<std::pair<BigInt, BigInt>>& prog) {
  std::vector<BigInt> out;
  if (!prog) {
    for (; lo <= hi; ++lo) out.push_back(lo);
    return out;
  }
  const auto& [offset, g] = *prog;
  if (sgn(g) == 0) {
    if (lo <= offset && offset <= hi) out.push_back(offset);
    return out;
  }
  BigInt r = lo - offset;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), g.get_mpz_t());
  if (sgn(r) != 0) lo += g - r;
  for (; lo <= hi; lo += g) out.push_back(lo);
  return out;
}

// Values z with |z| <= curvature, z == parity_base (mod 2) when filtering,
// intersected with [lo, hi] when given. With `prog`, only z in
// offset + g Z are produced.
inline std::vector<BigInt> gradient_values(
    const BigInt& curvature, const BigInt& parity_base, bool parity,
    const std::optional<std::pair<BigInt, BigInt>>& window,
    const std::optional<std::pair<BigInt, BigInt>>& prog = {}) {
  BigInt lo = -curvature, hi = curvature;
  if (window) {
    if (window->first > lo) lo = window->first;
    if (window->second < hi) hi = window->second;
  }
  std::vector<BigInt> zs = progression_values(lo, hi, prog);
  if (parity)
    std::erase_if(zs, [&](const BigInt& z) {
      BigInt diff = z - parity_base;
      return mpz_odd_p(diff.get_mpz_t()) != 0;
    });
  return zs;
}

// The progression of a^T x shifted by `shift`, or none without a lattice.
inline std::optional<std::pair<BigInt, BigInt>> shifted_progression(
    const IntegerLattice* lattice, std::span<const BigInt> a, const BigInt& shift,
    bool& empty) {
  empty = false;
  if (!lattice) return std::nullopt;
  auto p = lattice->progression(a);
  if (!p) {
    empty = true;
    return std::nullopt;
  }
  p->first += shift;
  return p;
}

}  // namespace detail

// One child per row a_j outside rowspace(C) and per b' in
// [b_j - W_j, b_j], W_j = max_i |a_j^T y_i|.
inline std::vector<ChildSystem> constraint_children(
    const Node& node, const IqpInstance& inst, const SolverOptions& opt = {},
    ExactSimplex* relax = nullptr, const IntegerLattice* lattice = nullptr) {
  std::vector<ChildSystem> out;
  // LP ranges by row; the range of -a is the negated range of a.
  std::map<IntVector, std::optional<std::pair<BigInt, BigInt>>, decltype(&lex_less<BigInt>)>
      ranges(&lex_less<BigInt>);
  auto range_of = [&](const IntVector& row) {
    IntVector neg(row.size());
    for (std::size_t k = 0; k < row.size(); ++k) neg[k] = -row[k];
    if (auto it = ranges.find(neg); it != ranges.end()) {
      if (!it->second) return it->second;
      return std::optional<std::pair<BigInt, BigInt>>(
          std::pair<BigInt, BigInt>{-it->second->second, -it->second->first});
    }
    auto [it, fresh] = ranges.try_emplace(row);
    if (fresh) it->second = detail::lp_range(*relax, row);
    return it->second;
  };
  for (std::size_t j = 0; j < inst.a.rows(); ++j) {
    auto aj = inst.a.row(j);
    BigInt width = 0;
    for (const auto& y : node.basis.vectors) {
      BigInt p = abs(dot(aj, std::span<const BigInt>(y)));
      if (p > width) width = p;
    }
    if (sgn(width) == 0) continue;  // a_j^T y_i = 0 for all i
    BigInt lo = inst.b[j] - width, hi = inst.b[j];
    if (relax) {
      auto range = range_of(inst.a.row_vector(j));
      if (range) {
        if (range->first > lo) lo = range->first;
        if (range->second < hi) hi = range->second;
      }
    }
    bool empty;
    auto prog = detail::shifted_progression(lattice, aj, BigInt(0), empty);
    if (empty) return out;
    for (auto& v : detail::progression_values(lo, hi, prog)) {
      ChildSystem ch = detail::extend(node, BranchKind::Constraint);
      ch.c.append_row(aj);
      ch.d.push_back(v);
      ch.source_row = j;
      out.push_back(std::move(ch));
      detail::check_child_budget(out.size(), opt);
    }
  }
  return out;
}

// Gradient branch on basis direction i (expected in the nonnegative class).
inline std::vector<ChildSystem> gradient_children(
    const Node& node, std::size_t i, const IntMatrix& q, const IntVector& c,
    const SolverOptions& opt = {}, ExactSimplex* relax = nullptr,
    const IntegerLattice* lattice = nullptr) {
  const IntVector& y = node.basis.vectors[i];
  IntVector qy = q_times(q, y);
  BigInt curv = dot(y, qy);
  BigInt cy = dot(c, y);
  IntVector row(qy.size());
  for (std::size_t k = 0; k < qy.size(); ++k) row[k] = 2 * qy[k];
  std::optional<std::pair<BigInt, BigInt>> window;
  if (relax) {
    auto r = detail::lp_range(*relax, row);
    if (r) window = std::pair<BigInt, BigInt>{r->first + cy, r->second + cy};
  }
  std::vector<ChildSystem> out;
  bool empty;
  auto prog = detail::shifted_progression(lattice, row, cy, empty);
  if (empty) return out;
  for (auto& z : detail::gradient_values(curv, cy, opt.parity_filter, window, prog)) {
    ChildSystem ch = detail::extend(node, BranchKind::Gradient);
    ch.c.append_row(row);
    ch.d.push_back(z - cy);
    ch.basis_indices = {i};
    ch.z = {z};
    out.push_back(std::move(ch));
    detail::check_child_budget(out.size(), opt);
  }
  return out;
}

// Directions of the batch: nonnegative-class indices, ascending, kept when
// y_i^T Q extends rowspace(C) plus the rows already selected.
inline std::vector<std::size_t> batch_directions(const Node& node,
                                                 const IntMatrix& q) {
  RowSpace rs(node.c);
  std::vector<std::size_t> sel;
  for (std::size_t i : node.classes.nonnegative)
    if (rs.add(q_times(q, node.basis.vectors[i]))) sel.push_back(i);
  return sel;
}

// With `region` given, tuples are enumerated depth first and each z_t
// range is the LP range of its row over the region with z_1..z_{t-1}
// fixed, so only rationally feasible tuples are produced.
inline std::vector<ChildSystem> batch_children(const Node& node,
                                               const IntMatrix& q,
                                               const IntVector& c,
                                               const SolverOptions& opt = {},
                                               const Polytope* region = nullptr) {
  std::vector<std::size_t> dirs = batch_directions(node, q);
  std::vector<IntVector> rows;
  std::vector<BigInt> cys, curvs;
  for (std::size_t i : dirs) {
    const IntVector& y = node.basis.vectors[i];
    IntVector qy = q_times(q, y);
    curvs.push_back(dot(y, qy));
    cys.push_back(dot(c, y));
    IntVector row(qy.size());
    for (std::size_t k = 0; k < qy.size(); ++k) row[k] = 2 * qy[k];
    rows.push_back(std::move(row));
  }
  std::vector<ChildSystem> out;
  if (dirs.empty()) return out;
  auto emit = [&](const std::vector<BigInt>& zs) {
    ChildSystem ch = detail::extend(node, BranchKind::Batch);
    ch.basis_indices = dirs;
    for (std::size_t t = 0; t < dirs.size(); ++t) {
      ch.c.append_row(rows[t]);
      ch.d.push_back(zs[t] - cys[t]);
    }
    ch.z = zs;
    out.push_back(std::move(ch));
    detail::check_child_budget(out.size(), opt);
  };

  if (!region) {
    std::vector<std::vector<BigInt>> values;
    BigInt product = 1;
    for (std::size_t t = 0; t < dirs.size(); ++t) {
      values.push_back(
          detail::gradient_values(curvs[t], cys[t], opt.parity_filter, {}));
      product *= values.back().size();
    }
    if (product > BigInt(std::to_string(opt.max_children)))
      throw BudgetExceeded("batch: tuple product exceeds child budget");
    if (sgn(product) == 0) return out;
    std::vector<std::size_t> pos(dirs.size(), 0);
    std::vector<BigInt> zs(dirs.size());
    while (true) {
      for (std::size_t t = 0; t < dirs.size(); ++t) zs[t] = values[t][pos[t]];
      emit(zs);
      std::size_t t = dirs.size();
      while (t > 0) {
        --t;
        if (++pos[t] < values[t].size()) break;
        pos[t] = 0;
        if (t == 0) return out;
      }
    }
  }

  IntMatrix fixed_c = node.c;
  IntVector fixed_d = node.d;
  std::vector<BigInt> zs;
  std::uint64_t visited = 0;
  std::function<void(std::size_t)> descend = [&](std::size_t t) {
    if (t == dirs.size()) {
      emit(zs);
      return;
    }
    if (++visited > opt.max_children)
      throw BudgetExceeded("batch: tuple search exceeds child budget");
    ExactSimplex lp(region->a, region->b, fixed_c, fixed_d, region->dim());
    auto window = detail::lp_range(lp, rows[t]);
    if (window) {
      window->first += cys[t];
      window->second += cys[t];
    }
    std::optional<std::pair<BigInt, BigInt>> prog;
    if (opt.lattice_filter) {
      bool empty;
      const IntegerLattice lattice(fixed_c, fixed_d);
      prog = detail::shifted_progression(&lattice, rows[t], cys[t], empty);
      if (empty) return;
    }
    for (auto& z : detail::gradient_values(curvs[t], cys[t], opt.parity_filter,
                                           window, prog)) {
      fixed_c.append_row(rows[t]);
      fixed_d.push_back(z - cys[t]);
      zs.push_back(z);
      descend(t + 1);
      zs.pop_back();
      fixed_d.pop_back();
      fixed_c.pop_row();
    }
  };
  descend(0);
  return out;
}

// ILP leaf: the objective is affine on {Cx = d}. With x0 any rational
// solution, f(x) = g^T x - x0^T Q x0 there, g = 2 Q x0 + c.
inline SolveResult flat_leaf(const Node& node, const IqpInstance& inst,
                             const IlpOptions& ilp = {}) {
  const std::size_t n = inst.n;
  auto x0 = solve_rational_system(node.c, node.d);
  if (!x0) return SolveResult::infeasible();
  if (node.c.rows() == n) {
    if (!is_integral(*x0)) return SolveResult::infeasible();
    IntVector x = to_int(*x0);
    if (!inst.polytope().contains(x)) return SolveResult::infeasible();
    BigInt f = inst.objective(x);
    return SolveResult::optimum(std::move(f), std::move(x));
  }
  RatVector g(n);
  for (std::size_t i = 0; i < n; ++i) {
    g[i] = inst.c[i];
    for (std::size_t j = 0; j < n; ++j) g[i] += 2 * inst.q(i, j) * (*x0)[j];
  }
  BigInt scale = 1;
  for (const auto& gi : g) scale = lcm(scale, BigInt(gi.get_den()));
  LpProblem p = LpProblem::with_vars(n);
  for (std::size_t i = 0; i < n; ++i) {
    BigRat s = g[i] * scale;
    p.objective[i] = s.get_num();
  }
  p.a_ineq = inst.a;
  p.b_ineq = inst.b;
  p.a_eq = node.c;
  p.b_eq = node.d;
  IlpOutcome res = ilp_solve(p, ilp);
  if (res.status == LpStatus::Infeasible) return SolveResult::infeasible();
  if (res.status == LpStatus::Unbounded) {
    SolveResult r;
    r.status = SolveStatus::UnboundedRegion;
    return r;
  }
  BigInt f = inst.objective(res.point);
  BigRat affine = dot(g, to_rat(res.point)) - dot(*x0, mat_vec(inst.q, *x0));
  if (affine != BigRat(f))
    throw std::logic_error("flat_leaf: objective is not affine on the leaf");
  return SolveResult::optimum(std::move(f), std::move(res.point));
}

// ---------------------------------------------------------------------------
// Engine
// ---------------------------------------------------------------------------

namespace detail {

// Sorts the rows of (C | d) lexicographically. Systems that differ only in
// row order become the same node.
inline void sort_rows(IntMatrix& c, IntVector& d) {
  const std::size_t k = c.rows();
  std::vector<std::size_t> order(k);
  for (std::size_t i = 0; i < k; ++i) order[i] = i;
  auto less = [&](std::size_t x, std::size_t y) {
    for (std::size_t j = 0; j < c.cols(); ++j)
      if (c(x, j) != c(y, j)) return c(x, j) < c(y, j);
    return d[x] < d[y];
  };
  if (std::is_sorted(order.begin(), order.end(), less)) return;
  std::sort(order.begin(), order.end(), less);
  IntMatrix sc(0, c.cols());
  IntVector sd;
  for (std::size_t i : order) {
    sc.append_row(c.row(i));
    sd.push_back(d[i]);
  }
  c = std::move(sc);
  d = std::move(sd);
}

inline std::string system_key(const IntMatrix& c, const IntVector& d,
                              bool forced) {
  std::string key = forced ? "F" : "N";
  for (std::size_t i = 0; i < c.rows(); ++i) {
    for (const auto& x : c.row(i)) {
      key += x.get_str();
      key += ',';
    }
    key += '=';
    key += d[i].get_str();
    key += ';';
  }
  return key;
}

class Engine {
 public:
  Engine(const IqpInstance& inst, Algorithm algo, const SolverOptions& opt)
      : inst_(inst), algo_(algo), opt_(opt) {}

  SolveResult run() {
    IntMatrix c = inst_.c0;
    IntVector d = inst_.d0;
    if (!solve_rational_system(c, d)) return SolveResult::infeasible();
    if (opt_.lattice_filter && !has_integer_solution(c, d))
      return SolveResult::infeasible();
    sort_rows(c, d);
    Entry e = solve_node(c, d, false, 0, PathStats{});
    SolveResult r = std::move(e.result);
    r.stats = std::move(e.stats);
    r.stats.memo_hits = memo_hits_.load();
    return r;
  }

 private:
  // Result (value and witness only) with the statistics of the subtree.
  struct Entry {
    SolveResult result;
    SolveStats stats;
  };

  void notify(const std::function<void(NodeObserver&)>& f) {
    if (!opt_.observer) return;
    std::lock_guard<std::mutex> lock(observer_mu_);
    f(*opt_.observer);
  }

  BigInt node_delta(const IntMatrix& c, bool& exact) const {
    if (c.rows() == 0) return 0;
    if (square_submatrix_count(c.rows(), c.cols()) <=
        BigInt(std::to_string(opt_.delta_exact_limit))) {
      return max_subdeterminant(c, DeltaMode::Exact, opt_.delta_exact_limit);
    }
    exact = false;
    return max_subdeterminant(c, DeltaMode::Hadamard);
  }

  Entry solve_node(const IntMatrix& c, const IntVector& d, bool forced,
                   std::uint32_t depth, const PathStats& path) {
    if (nodes_.fetch_add(1) + 1 > opt_.max_nodes)
      throw BudgetExceeded("solver: node budget exceeded");
    std::string key;
    if (opt_.memoize) {
      key = system_key(c, d, forced);
      std::lock_guard<std::mutex> lock(memo_mu_);
      auto it = memo_.find(key);
      if (it != memo_.end()) {
        ++memo_hits_;
        return it->second;
      }
    }
    Entry e = expand(c, d, forced, depth, path);
    if (opt_.memoize) {
      std::lock_guard<std::mutex> lock(memo_mu_);
      memo_.emplace(std::move(key), e);
    }
    return e;
  }

  void leaf(const Node& node, Entry& e, bool ilp) {
    e.stats.leaves = 1;
    if (ilp) e.stats.ilp_leaves = 1;
    e.result = flat_leaf(node, inst_, opt_.ilp);
    notify([&](NodeObserver& o) { o.on_leaf(node, e.result); });
  }

  Entry expand(const IntMatrix& c, const IntVector& d, bool forced,
               std::uint32_t depth, const PathStats& path) {
    const std::size_t n = inst_.n;
    Entry e;
    SolveStats& st = e.stats;
    st.nodes = 1;
    st.nodes_per_depth = {1};

    Node node;
    node.c = c;
    node.d = d;
    node.depth = depth;
    node.path = path;
    node.forced_leaf = forced;
    if (opt_.track_delta) {
      st.max_delta_seen = node_delta(c, st.delta_exact);
      if (st.max_delta_seen > node.path.max_delta_seen)
        node.path.max_delta_seen = st.max_delta_seen;
    }

    if (c.rows() == n) {
      leaf(node, e, false);
      return e;
    }
    ExactSimplex relax(inst_.a, inst_.b, c, d, n);
    if (!relax.feasible()) {
      st.leaves = 1;
      return e;
    }
    node.basis = adjugate_kernel_basis(c);
    node.classes = classify_curvature(node, inst_.q);
    notify([&](NodeObserver& o) { o.on_node(node); });

    if (forced && !node.classes.all_flat())
      throw std::logic_error("batch child is not flat");
    if (node.classes.all_flat()) {
      leaf(node, e, true);
      return e;
    }

    ExactSimplex* window = opt_.tighten_ranges ? &relax : nullptr;
    const Polytope region = inst_.polytope();
    const IntegerLattice lattice(c, d);
    const IntegerLattice* stride = opt_.lattice_filter ? &lattice : nullptr;
    std::vector<ChildSystem> children =
        constraint_children(node, inst_, opt_, window, stride);
    if (algo_ == Algorithm::Batch) {
      if (node.classes.negative.empty() && !node.classes.nonnegative.empty()) {
        auto batch = batch_children(node, inst_.q, inst_.c, opt_,
                                    opt_.tighten_ranges ? &region : nullptr);
        st.batches = 1;
        for (auto& ch : batch) children.push_back(std::move(ch));
      }
    } else {
      for (std::size_t i : node.classes.nonnegative) {
        auto grad = gradient_children(node, i, inst_.q, inst_.c, opt_, window, stride);
        for (auto& ch : grad) children.push_back(std::move(ch));
        detail::check_child_budget(children.size(), opt_);
      }
    }
    detail::check_child_budget(children.size(), opt_);

    // Merge siblings that describe the same affine subspace; drop systems
    // without rational or integer solutions.
    std::vector<ChildSystem> unique;
    std::unordered_set<std::string> seen;
    const ExtensionKeyer keyer(c, d);
    for (auto& ch : children) {
      const bool single = ch.c.rows() == c.rows() + 1;
      std::string k = single ? keyer.key(ch.c.row(c.rows()), ch.d.back())
                             : keyer.key(ch.c, ch.d, c.rows());
      if (k == "infeasible") continue;
      if (opt_.lattice_filter &&
          !(single ? lattice.admits(ch.c.row(c.rows()), ch.d.back())
                   : has_integer_solution(ch.c, ch.d)))
        continue;
      if (seen.insert(std::move(k)).second) unique.push_back(std::move(ch));
    }

    st.children_per_depth = {unique.size()};
    std::vector<PathStats> paths;
    for (const auto& ch : unique) {
      PathStats p = node.path;
      p.children_generated += unique.size();
      switch (ch.kind) {
        case BranchKind::Constraint:
          ++p.constraint_steps;
          ++st.constraint_children;
          break;
        case BranchKind::Gradient:
          ++p.gradient_steps;
          ++st.gradient_children;
          break;
        case BranchKind::Batch:
          p.batch_performed = true;
          ++st.batch_children;
          break;
      }
      notify([&](NodeObserver& o) { o.on_child(node, ch, p); });
      paths.push_back(std::move(p));
    }
    for (auto& ch : unique) sort_rows(ch.c, ch.d);

    std::vector<Entry> sub(unique.size());
    auto work = [&](std::size_t k) {
      sub[k] = solve_node(unique[k].c, unique[k].d,
                          unique[k].kind == BranchKind::Batch, depth + 1,
                          paths[k]);
    };
    if (depth == 0)
      run_all(unique.size(), work);
    else
      for (std::size_t k = 0; k < unique.size(); ++k) work(k);
    for (std::size_t k = 0; k < unique.size(); ++k) {
      absorb(e.result, sub[k].result);
      st.merge(sub[k].stats.below(unique[k].kind));
    }
    return e;
  }

  template <class F>
  void run_all(std::size_t count, F&& work) {
    const unsigned threads = std::max(1u, opt_.threads);
    if (threads == 1 || count <= 1) {
      for (std::size_t k = 0; k < count; ++k) work(k);
      return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, count); ++t) {
      pool.emplace_back([&] {
        while (true) {
          std::size_t k = next.fetch_add(1);
          if (k >= count) return;
          try {
            work(k);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mu);
            if (!error) error = std::current_exception();
            next.store(count);
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
  }

  const IqpInstance& inst_;
  Algorithm algo_;
  const SolverOptions& opt_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<std::uint64_t> memo_hits_{0};
  std::unordered_map<std::string, Entry> memo_;
  std::mutex memo_mu_;
  std::mutex observer_mu_;
};

inline SolveResult solve_with(const IqpInstance& inst, Algorithm algo,
                              const SolverOptions& opt) {
  inst.validate();
  if (!check_bounded(inst)) {
    SolveResult r;
    r.status = SolveStatus::UnboundedRegion;
    r.message = "feasible region is unbounded";
    return r;
  }
  try {
    return Engine(inst, algo, opt).run();
  } catch (const BudgetExceeded& e) {
    SolveResult r;
    r.status = SolveStatus::BudgetExceeded;
    r.message = e.what();
    return r;
  }
}

}  // namespace detail

inline SolveResult solve_sequential(const IqpInstance& inst,
                                    const SolverOptions& opt = {}) {
  return detail::solve_with(inst, Algorithm::Sequential, opt);
}

inline SolveResult solve_batch(const IqpInstance& inst,
                               const SolverOptions& opt = {}) {
  return detail::solve_with(inst, Algorithm::Batch, opt);
}

inline SolveResult solve(const IqpInstance& inst, Algorithm algo,
                         const SolverOptions& opt = {}) {
  return detail::solve_with(inst, algo, opt);
}

}  // namespace iqp
