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

#pragma once

#include <cstdint>
#include <optional>

#include "iqp/numeric.hpp"

namespace iqp {

enum class SolveStatus { Optimal, Infeasible, UnboundedRegion, BudgetExceeded };

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::UnboundedRegion: return "unbounded_region";
    case SolveStatus::BudgetExceeded: return "budget_exceeded";
  }
  return "?";
}

// Per-path counters carried down the branching tree.
struct PathStats {
  std::uint32_t constraint_steps = 0;
  std::uint32_t gradient_steps = 0;
  bool batch_performed = false;
  BigInt max_delta_seen = 0;
  std::uint64_t children_generated = 0;
};

enum class BranchKind { Constraint, Gradient, Batch };

inline const char* to_string(BranchKind k) {
  switch (k) {
    case BranchKind::Constraint: return "constraint";
    case BranchKind::Gradient: return "gradient";
    case BranchKind::Batch: return "batch";
  }
  return "?";
}

// Aggregates over a (sub)tree. Depths and path counters are relative to the
// subtree root, so a cached subtree can be grafted at any depth. Every
// field except memo_hits describes the tree as if nothing were cached.
struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t ilp_leaves = 0;
  std::uint64_t memo_hits = 0;  // schedule dependent when threaded
  std::uint64_t constraint_children = 0;
  std::uint64_t gradient_children = 0;
  std::uint64_t batch_children = 0;
  std::uint64_t batches = 0;
  std::uint32_t max_constraint_steps = 0;  // along any path
  std::uint32_t max_gradient_steps = 0;
  std::uint32_t max_batches_on_path = 0;
  std::uint32_t max_depth = 0;
  BigInt max_delta_seen = 0;
  bool delta_exact = true;  // false once any node fell back to the bound
  std::vector<std::uint64_t> nodes_per_depth;
  std::vector<std::uint64_t> children_per_depth;

  void merge(const SolveStats& o) {
    nodes += o.nodes;
    leaves += o.leaves;
    ilp_leaves += o.ilp_leaves;
    memo_hits += o.memo_hits;
    constraint_children += o.constraint_children;
    gradient_children += o.gradient_children;
    batch_children += o.batch_children;
    batches += o.batches;
    max_constraint_steps = std::max(max_constraint_steps, o.max_constraint_steps);
    max_gradient_steps = std::max(max_gradient_steps, o.max_gradient_steps);
    max_batches_on_path = std::max(max_batches_on_path, o.max_batches_on_path);
    max_depth = std::max(max_depth, o.max_depth);
    if (o.max_delta_seen > max_delta_seen) max_delta_seen = o.max_delta_seen;
    delta_exact = delta_exact && o.delta_exact;
    auto add = [](std::vector<std::uint64_t>& a,
                  const std::vector<std::uint64_t>& b) {
      if (a.size() < b.size()) a.resize(b.size(), 0);
      for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    };
    add(nodes_per_depth, o.nodes_per_depth);
    add(children_per_depth, o.children_per_depth);
  }

  // Stats of a child subtree re-expressed relative to its parent, the edge
  // being a branch of kind `k`.
  SolveStats below(BranchKind k) const {
    SolveStats s = *this;
    s.nodes_per_depth.insert(s.nodes_per_depth.begin(), 0);
    s.children_per_depth.insert(s.children_per_depth.begin(), 0);
    ++s.max_depth;
    switch (k) {
      case BranchKind::Constraint: ++s.max_constraint_steps; break;
      case BranchKind::Gradient: ++s.max_gradient_steps; break;
      case BranchKind::Batch: ++s.max_batches_on_path; break;
    }
    return s;
  }
};

struct SolveResult {
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<BigInt> value;
  std::optional<IntVector> witness;
  SolveStats stats;
  std::string message;

  bool optimal() const { return status == SolveStatus::Optimal; }

  static SolveResult infeasible() { return {}; }
  static SolveResult optimum(BigInt v, IntVector x) {
    SolveResult r;
    r.status = SolveStatus::Optimal;
    r.value = std::move(v);
    r.witness = std::move(x);
    return r;
  }
};

// True if `cand` beats `best`: smaller value, ties to the lexicographically
// smaller witness. The merge is associative and commutative.
inline bool better(const SolveResult& cand, const SolveResult& best) {
  if (!cand.optimal()) return false;
  if (!best.optimal()) return true;
  if (*cand.value != *best.value) return *cand.value < *best.value;
  return lex_less(*cand.witness, *best.witness);
}

// Folds `cand` into `best` (value/witness only; stats are merged separately).
inline void absorb(SolveResult& best, const SolveResult& cand) {
  if (better(cand, best)) {
    best.status = SolveStatus::Optimal;
    best.value = cand.value;
    best.witness = cand.witness;
  }
}

}  // namespace iqp
