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

// Structural invariants of the branching tree, checked while a solve runs.
// The observer sees every distinct node once (memoized repeats are not
// re-expanded), so each parent/child edge of the tree is checked; path
// maxima come from the subtree statistics of the result.

#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "iqp/linalg.hpp"
#include "iqp/solver.hpp"

namespace iqp {

struct AuditOptions {
  bool inertia_decrement = true;
  bool batch_vanishing = true;
  // Delta(C) <= Delta(A) while C holds only rows of A; exact, so small n.
  bool delta_confinement = true;
  std::size_t delta_max_n = 3;
};

struct AuditReport {
  std::uint64_t nodes = 0;
  std::uint64_t gradient_children = 0;
  std::uint64_t batch_children = 0;
  std::uint64_t delta_checks = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

class InvariantAuditor : public NodeObserver {
 public:
  explicit InvariantAuditor(const IqpInstance& inst, AuditOptions opt = {})
      : inst_(inst), opt_(opt), cap_(inertia(inst.q).positive) {
    if (opt_.delta_confinement && inst.n <= opt_.delta_max_n &&
        inst.a.rows() > 0)
      delta_a_ = max_subdeterminant(inst.a, DeltaMode::Exact);
    else
      opt_.delta_confinement = false;
  }

  void on_node(const Node& node) override {
    ++report_.nodes;
    if (!opt_.delta_confinement || node.c.rows() == 0) return;
    if (!rows_of_a(node.c)) return;
    ++report_.delta_checks;
    BigInt dc = max_subdeterminant(node.c, DeltaMode::Exact);
    if (dc > delta_a_)
      fail("delta confinement: Delta(C) = " + dc.get_str() + " > Delta(A) = " +
           delta_a_.get_str());
  }

  void on_child(const Node& parent, const ChildSystem& ch,
                const PathStats& child_path) override {
    if (parent.forced_leaf) fail("single batch: a batch child was expanded");
    switch (ch.kind) {
      case BranchKind::Gradient:
        if (opt_.inertia_decrement) check_gradient(parent, ch);
        if (child_path.gradient_steps > cap_)
          fail("gradient cap: " + std::to_string(child_path.gradient_steps) +
               " steps on a path, nu+ = " + std::to_string(cap_));
        break;
      case BranchKind::Batch:
        if (parent.path.batch_performed)
          fail("single batch: second batch on a path");
        if (!child_path.batch_performed) fail("batch child path not marked");
        if (opt_.batch_vanishing) check_vanishing(ch);
        break;
      case BranchKind::Constraint:
        break;
    }
  }

  // Path maxima over the whole (unmemoized) tree.
  void check_result(const SolveResult& r, Algorithm algo) {
    if (algo == Algorithm::Sequential && r.stats.max_gradient_steps > cap_)
      fail("gradient cap: " + std::to_string(r.stats.max_gradient_steps) +
           " steps > nu+ = " + std::to_string(cap_));
    if (r.stats.max_batches_on_path > 1)
      fail("single batch: " + std::to_string(r.stats.max_batches_on_path) +
           " batches on one path");
  }

  const AuditReport& report() const { return report_; }

 private:
  void fail(std::string msg) {
    if (report_.violations.size() < 20) report_.violations.push_back(std::move(msg));
  }

  bool rows_of_a(const IntMatrix& c) const {
    for (std::size_t i = 0; i < c.rows(); ++i) {
      bool found = false;
      for (std::size_t j = 0; j < inst_.a.rows() && !found; ++j)
        found = std::equal(c.row(i).begin(), c.row(i).end(),
                           inst_.a.row(j).begin());
      if (!found) return false;
    }
    return true;
  }

  void check_gradient(const Node& parent, const ChildSystem& ch) {
    ++report_.gradient_children;
    const std::size_t before = inertia_on_kernel(inst_.q, parent.c).positive;
    const std::size_t after = inertia_on_kernel(inst_.q, ch.c).positive;
    if (after + 1 != before)
      fail("inertia decrement: nu+ " + std::to_string(before) + " -> " +
           std::to_string(after));
  }

  void check_vanishing(const ChildSystem& ch) {
    ++report_.batch_children;
    if (ch.c.rows() >= ch.c.cols()) return;
    IntMatrix b = adjugate_kernel_basis(ch.c).as_columns(inst_.n);
    IntMatrix form = mat_mul(b.transpose(), mat_mul(inst_.q, b));
    for (std::size_t i = 0; i < form.rows(); ++i)
      for (const auto& x : form.row(i))
        if (sgn(x) != 0) {
          fail("post-batch vanishing: B^T Q B has entry " + x.get_str());
          return;
        }
  }

  const IqpInstance& inst_;
  AuditOptions opt_;
  std::size_t cap_;
  BigInt delta_a_ = 0;
  AuditReport report_;
};

}  // namespace iqp
