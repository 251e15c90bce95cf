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


// Cross-checks one instance: batch, sequential and the oracle must agree
// on status and value, witnesses must be feasible with matching objective,
// and both tree searches run under the invariant auditor.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "iqp/audit.hpp"
#include "iqp/oracle.hpp"
#include "iqp/solver.hpp"

namespace iqp {

struct VerifyOptions {
  SolverOptions solver;
  std::uint64_t oracle_budget = kDefaultEnumerationBudget;
  bool audit = true;
  // Applied to the batch result before comparison; lets tests plant a fault.
  std::function<void(SolveResult&)> tamper;
};

struct VerifyReport {
  bool skipped = false;
  std::string skip_reason;
  SolveResult oracle, batch, sequential;
  AuditReport batch_audit, sequential_audit;
  std::vector<std::string> mismatches;

  bool ok() const { return skipped || mismatches.empty(); }
};

inline VerifyReport verify_instance(const IqpInstance& inst, const VerifyOptions& opt = {}) {
  VerifyReport rep;
  try {
    rep.oracle = oracle_min(inst, opt.oracle_budget);
  } catch (const BudgetExceeded& e) {
    rep.skipped = true;
    rep.skip_reason = std::string("oracle budget exceeded: ") + e.what();
    return rep;
  }
  if (rep.oracle.status == SolveStatus::UnboundedRegion) {
    rep.skipped = true;
    rep.skip_reason = "region is unbounded";
    return rep;
  }

  auto run = [&](Algorithm algo, AuditReport& audit) {
    InvariantAuditor auditor(inst);
    SolverOptions so = opt.solver;
    if (opt.audit) so.observer = &auditor;
    SolveResult r = solve(inst, algo, so);
    if (opt.audit) {
      auditor.check_result(r, algo);
      audit = auditor.report();
    }
    return r;
  };
  rep.batch = run(Algorithm::Batch, rep.batch_audit);
  if (opt.tamper) opt.tamper(rep.batch);
  rep.sequential = run(Algorithm::Sequential, rep.sequential_audit);

  auto check = [&](const char* name, const SolveResult& r) {
    const std::string who = name;
    if (r.status != rep.oracle.status) {
      rep.mismatches.push_back(who + ": status " + to_string(r.status) + ", oracle " +
                               to_string(rep.oracle.status));
      return;
    }
    if (!r.optimal()) return;
    if (*r.value != *rep.oracle.value)
      rep.mismatches.push_back(who + ": value " + r.value->get_str() + ", oracle " +
                               rep.oracle.value->get_str());
    if (!inst.feasible(*r.witness))
      rep.mismatches.push_back(who + ": witness is infeasible");
    else if (inst.objective(*r.witness) != *r.value)
      rep.mismatches.push_back(who + ": witness objective differs from value");
  };
  check("batch", rep.batch);
  check("sequential", rep.sequential);
  for (const auto& v : rep.batch_audit.violations) rep.mismatches.push_back("batch: " + v);
  for (const auto& v : rep.sequential_audit.violations)
    rep.mismatches.push_back("sequential: " + v);
  return rep;
}

}  // namespace iqp
