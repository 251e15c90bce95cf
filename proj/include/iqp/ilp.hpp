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

// Exact branch-and-bound for integer linear programs over a bounded
// relaxation. The returned optimum is the lexicographically smallest
// integer minimizer.

#pragma once

#include <cstdint>

#include "iqp/lp.hpp"

namespace iqp {

struct IlpOptions {
  std::uint64_t max_nodes = 1'000'000;
  // Discard subtrees whose relaxation cannot beat the incumbent.
  bool prune = true;
  // Refine the optimum to the lexicographically smallest minimizer.
  bool lexicographic = true;
};

struct IlpOutcome {
  LpStatus status = LpStatus::Infeasible;
  BigRat value;  // integer valued
  IntVector point;
  std::uint64_t nodes = 0;             // branch-and-bound nodes, value phase
  std::uint64_t refinement_nodes = 0;  // nodes spent on the lexicographic pass
};

namespace detail {

class BranchAndBound {
 public:
  BranchAndBound(const LpProblem& p, const IlpOptions& opt)
      : p_(p), opt_(opt), n_(p.num_vars()) {}

  IlpOutcome run() {
    lower_.assign(n_, std::nullopt);
    upper_.assign(n_, std::nullopt);
    IlpOutcome out;
    unbounded_ = false;
    visit();
    out.nodes = nodes_;
    if (unbounded_) {
      out.status = LpStatus::Unbounded;
      return out;
    }
    if (!incumbent_) return out;
    out.status = LpStatus::Optimal;
    out.value = *incumbent_value_;
    out.point = *incumbent_;
    return out;
  }

 private:
  void visit() {
    if (unbounded_) return;
    if (++nodes_ > opt_.max_nodes)
      throw BudgetExceeded("ilp_solve: node budget exceeded");
    LpProblem q = p_;
    for (std::size_t j = 0; j < n_; ++j) {
      if (lower_[j]) {
        IntVector row(n_, BigInt(0));
        row[j] = -1;
        q.add_le(row, -*lower_[j]);
      }
      if (upper_[j]) {
        IntVector row(n_, BigInt(0));
        row[j] = 1;
        q.add_le(row, *upper_[j]);
      }
    }
    LpOutcome lp = lp_solve(q);
    if (lp.status == LpStatus::Infeasible) return;
    if (lp.status == LpStatus::Unbounded) {
      unbounded_ = true;
      return;
    }
    // Objective is integral on integer points, so the bound rounds up.
    if (opt_.prune && incumbent_value_ &&
        BigRat(ceil_rat(lp.value)) >= *incumbent_value_)
      return;
    std::size_t frac = n_;
    for (std::size_t j = 0; j < n_ && frac == n_; ++j)
      if (!is_integral(lp.point[j])) frac = j;
    if (frac == n_) {
      IntVector pt = to_int(lp.point);
      if (!incumbent_value_ || lp.value < *incumbent_value_ ||
          (lp.value == *incumbent_value_ && lex_less(pt, *incumbent_))) {
        incumbent_value_ = lp.value;
        incumbent_ = std::move(pt);
      }
      return;
    }
    const BigInt down = floor_rat(lp.point[frac]);
    auto saved_lo = lower_[frac], saved_up = upper_[frac];
    upper_[frac] = down;
    visit();
    upper_[frac] = saved_up;
    lower_[frac] = down + 1;
    visit();
    lower_[frac] = saved_lo;
  }

  const LpProblem& p_;
  const IlpOptions& opt_;
  std::size_t n_;
  std::vector<std::optional<BigInt>> lower_, upper_;
  std::optional<BigRat> incumbent_value_;
  std::optional<IntVector> incumbent_;
  std::uint64_t nodes_ = 0;
  bool unbounded_ = false;
};

}  // namespace detail

inline IlpOutcome ilp_solve(const LpProblem& p, const IlpOptions& opt = {}) {
  IlpOutcome out = detail::BranchAndBound(p, opt).run();
  if (out.status != LpStatus::Optimal || !opt.lexicographic) return out;

  // Fix the optimal value, then minimize the coordinates one at a time.
  const std::size_t n = p.num_vars();
  LpProblem q = p;
  q.add_eq(p.objective, out.value.get_num());
  IlpOptions sub = opt;
  sub.lexicographic = false;
  IntVector point = out.point;
  for (std::size_t i = 0; i < n; ++i) {
    q.objective.assign(n, BigInt(0));
    q.objective[i] = 1;
    sub.max_nodes = opt.max_nodes > out.nodes + out.refinement_nodes
                        ? opt.max_nodes - out.nodes - out.refinement_nodes
                        : 0;
    IlpOutcome step = detail::BranchAndBound(q, sub).run();
    out.refinement_nodes += step.nodes;
    if (step.status != LpStatus::Optimal)
      throw std::logic_error("ilp_solve: lexicographic refinement lost the optimum");
    IntVector row(n, BigInt(0));
    row[i] = 1;
    q.add_eq(row, step.point[i]);
    point = step.point;
  }
  out.point = std::move(point);
  return out;
}

}  // namespace iqp
