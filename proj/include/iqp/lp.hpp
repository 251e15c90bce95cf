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

// Exact simplex on a fraction-free integer tableau. Two phases, Dantzig
// pricing with a smallest-index (Bland) fallback. Variables are free unless
// flagged non-negative; free variables are split into a positive and a
// negative part.

#pragma once

#include <algorithm>
#include <optional>

#include "iqp/numeric.hpp"

namespace iqp {

enum class LpStatus { Optimal, Infeasible, Unbounded };

inline const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "?";
}

// min objective^T x  s.t.  a_ineq x <= b_ineq,  a_eq x = b_eq.
struct LpProblem {
  IntVector objective;
  IntMatrix a_ineq;
  IntVector b_ineq;
  IntMatrix a_eq;
  IntVector b_eq;
  std::vector<bool> nonnegative;  // empty: every variable is free

  std::size_t num_vars() const { return objective.size(); }

  static LpProblem with_vars(std::size_t n) {
    LpProblem p;
    p.objective.assign(n, BigInt(0));
    p.a_ineq = IntMatrix(0, n);
    p.a_eq = IntMatrix(0, n);
    return p;
  }

  void add_le(std::span<const BigInt> row, const BigInt& rhs) {
    a_ineq.append_row(row);
    b_ineq.push_back(rhs);
  }
  void add_le(const IntVector& row, const BigInt& rhs) {
    add_le(std::span<const BigInt>(row), rhs);
  }
  void add_eq(std::span<const BigInt> row, const BigInt& rhs) {
    a_eq.append_row(row);
    b_eq.push_back(rhs);
  }
  void add_eq(const IntVector& row, const BigInt& rhs) {
    add_eq(std::span<const BigInt>(row), rhs);
  }
};

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  BigRat value;
  RatVector point;
};

class ExactSimplex {
 public:
  ExactSimplex(const IntMatrix& a_ineq, const IntVector& b_ineq,
               const IntMatrix& a_eq, const IntVector& b_eq, std::size_t n,
               const std::vector<bool>& nonnegative = {})
      : n_(n) {
    // Column layout: structural parts, then slacks, then artificials.
    std::size_t col = 0;
    for (std::size_t j = 0; j < n; ++j) {
      plus_.push_back(col++);
      bool nn = !nonnegative.empty() && nonnegative[j];
      minus_.push_back(nn ? SIZE_MAX : col++);
    }
    const std::size_t mi = a_ineq.rows(), me = a_eq.rows();
    const std::size_t slack0 = col;
    col += mi;
    std::vector<bool> needs_art(mi + me, false);
    std::size_t arts = 0;
    for (std::size_t i = 0; i < mi; ++i)
      if (sgn(b_ineq[i]) < 0) needs_art[i] = true, ++arts;
    for (std::size_t i = 0; i < me; ++i) needs_art[mi + i] = true, ++arts;
    first_art_ = col;
    cols_ = col + arts;

    rows_.assign(mi + me, IntVector(cols_, BigInt(0)));
    rhs_.assign(mi + me, BigInt(0));
    basis_.assign(mi + me, 0);
    std::size_t art = first_art_;
    auto fill = [&](std::size_t r, std::span<const BigInt> a, const BigInt& b,
                    bool negate) {
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(a[j]) == 0) continue;
        BigInt v = negate ? BigInt(-a[j]) : a[j];
        if (minus_[j] != SIZE_MAX) rows_[r][minus_[j]] = -v;
        rows_[r][plus_[j]] = std::move(v);
      }
      rhs_[r] = negate ? BigInt(-b) : b;
    };
    for (std::size_t i = 0; i < mi; ++i) {
      bool neg = sgn(b_ineq[i]) < 0;
      fill(i, a_ineq.row(i), b_ineq[i], neg);
      rows_[i][slack0 + i] = neg ? -1 : 1;
      if (needs_art[i]) {
        rows_[i][art] = 1;
        basis_[i] = art++;
      } else {
        basis_[i] = slack0 + i;
      }
    }
    for (std::size_t i = 0; i < me; ++i) {
      const std::size_t r = mi + i;
      fill(r, a_eq.row(i), b_eq[i], sgn(b_eq[i]) < 0);
      rows_[r][art] = 1;
      basis_[r] = art++;
    }

    if (arts > 0) {
      IntVector cost(cols_, BigInt(0));
      for (std::size_t j = first_art_; j < cols_; ++j) cost[j] = 1;
      set_costs(cost);
      run();  // phase 1 is never unbounded
      for (std::size_t i = 0; i < rows_.size(); ++i)
        if (basis_[i] >= first_art_ && sgn(rhs_[i]) > 0) {
          feasible_ = false;
          return;
        }
      drive_out_artificials();
    }
    // Artificial columns are never needed again.
    cols_ = first_art_;
    for (auto& r : rows_) r.resize(cols_);
  }

  explicit ExactSimplex(const LpProblem& p)
      : ExactSimplex(p.a_ineq, p.b_ineq, p.a_eq, p.b_eq, p.num_vars(),
                     p.nonnegative) {}

  bool feasible() const { return feasible_; }

  // Minimizes objective^T x starting from the current feasible basis.
  LpOutcome minimize(std::span<const BigInt> objective) {
    LpOutcome out;
    if (!feasible_) return out;
    load_costs(objective);
    if (!run()) {
      out.status = LpStatus::Unbounded;
      return out;
    }
    out.status = LpStatus::Optimal;
    out.point = current_point();
    out.value = 0;
    for (std::size_t j = 0; j < n_; ++j) out.value += objective[j] * out.point[j];
    return out;
  }
  LpOutcome minimize(const IntVector& objective) {
    return minimize(std::span<const BigInt>(objective));
  }

  // Optimal value only; nullopt if unbounded or infeasible.
  std::optional<BigRat> min_value(std::span<const BigInt> objective) {
    if (!feasible_) return std::nullopt;
    load_costs(objective);
    if (!run()) return std::nullopt;
    BigInt num = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (basis_[i] < cols_ && sgn(cost_[basis_[i]]) != 0)
        mpz_addmul(num.get_mpz_t(), cost_[basis_[i]].get_mpz_t(),
                   rhs_[i].get_mpz_t());
    BigRat v(num, denom_);
    v.canonicalize();
    return v;
  }
  std::optional<BigRat> max_value(const IntVector& objective) {
    neg_.resize(objective.size());
    for (std::size_t j = 0; j < objective.size(); ++j)
      mpz_neg(neg_[j].get_mpz_t(), objective[j].get_mpz_t());
    auto v = min_value(neg_);
    if (v) *v = -*v;
    return v;
  }

  LpOutcome maximize(const IntVector& objective) {
    neg_.resize(objective.size());
    for (std::size_t j = 0; j < objective.size(); ++j)
      mpz_neg(neg_[j].get_mpz_t(), objective[j].get_mpz_t());
    LpOutcome out = minimize(neg_);
    if (out.status == LpStatus::Optimal) out.value = -out.value;
    return out;
  }

  // Any feasible point of the current basis.
  RatVector current_point() const {
    RatVector colval(cols_, BigRat(0));
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (basis_[i] < cols_) {
        colval[basis_[i]] = BigRat(rhs_[i], denom_);
        colval[basis_[i]].canonicalize();
      }
    RatVector x(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      x[j] = colval[plus_[j]];
      if (minus_[j] != SIZE_MAX) x[j] -= colval[minus_[j]];
    }
    return x;
  }

 private:
  // The tableau is kept fraction free: entries are integers over the common
  // denominator denom_ = |det B| of the current basis B, so a pivot is an
  // exact integer division.
  void load_costs(std::span<const BigInt> objective) {
    cost_.resize(cols_);
    for (auto& x : cost_) mpz_set_ui(x.get_mpz_t(), 0);
    for (std::size_t j = 0; j < n_; ++j) {
      cost_[plus_[j]] = objective[j];
      if (minus_[j] != SIZE_MAX)
        mpz_neg(cost_[minus_[j]].get_mpz_t(), objective[j].get_mpz_t());
    }
    set_costs(cost_);
  }

  void set_costs(const IntVector& cost) {
    reduced_.resize(cols_);
    for (std::size_t j = 0; j < cols_; ++j)
      mpz_mul(reduced_[j].get_mpz_t(), cost[j].get_mpz_t(), denom_.get_mpz_t());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const BigInt& cb = cost[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j)
        if (sgn(rows_[i][j]) != 0)
          mpz_submul(reduced_[j].get_mpz_t(), cb.get_mpz_t(),
                     rows_[i][j].get_mpz_t());
    }
  }

  // Dantzig pricing, switching to Bland's rule (which cannot cycle) once
  // the pivot count passes the tableau size. Returns false if the
  // objective is unbounded below.
  bool run() {
    const std::size_t bland_after = rows_.size() + cols_;
    const std::size_t active = std::min(cols_, first_art_);
    for (std::size_t iter = 0;; ++iter) {
      const bool bland = iter >= bland_after;
      std::size_t enter = SIZE_MAX;
      for (std::size_t j = 0; j < active; ++j) {
        if (sgn(reduced_[j]) >= 0) continue;
        if (enter == SIZE_MAX || (!bland && reduced_[j] < reduced_[enter]))
          enter = j;
        if (bland) break;
      }
      if (enter == SIZE_MAX) return true;
      // Minimum ratio rhs_i / a_i over a_i > 0, compared by cross products;
      // ties go to the smallest basic index.
      std::size_t leave = SIZE_MAX;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const BigInt& ai = rows_[i][enter];
        if (sgn(ai) <= 0) continue;
        if (leave == SIZE_MAX) {
          leave = i;
          continue;
        }
        mpz_mul(tmp_.get_mpz_t(), rhs_[i].get_mpz_t(),
                rows_[leave][enter].get_mpz_t());
        mpz_mul(tmp2_.get_mpz_t(), rhs_[leave].get_mpz_t(), ai.get_mpz_t());
        const int c = mpz_cmp(tmp_.get_mpz_t(), tmp2_.get_mpz_t());
        if (c < 0 || (c == 0 && basis_[i] < basis_[leave])) leave = i;
      }
      if (leave == SIZE_MAX) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    BigInt& p = p_;
    p = rows_[r][c];
    const IntVector& pr = rows_[r];
    // x <- (x p - x_c pr) / denom, for every entry of every other row.
    auto update = [&](IntVector& row, BigInt* rhs) {
      BigInt& f = f_;
      f = row[c];
      const bool scale = p != denom_;
      if (sgn(f) == 0) {
        if (!scale) return;
        for (auto& x : row)
          if (sgn(x) != 0) {
            mpz_mul(x.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), denom_.get_mpz_t());
          }
        if (rhs && sgn(*rhs) != 0) {
          mpz_mul(rhs->get_mpz_t(), rhs->get_mpz_t(), p.get_mpz_t());
          mpz_divexact(rhs->get_mpz_t(), rhs->get_mpz_t(), denom_.get_mpz_t());
        }
        return;
      }
      for (std::size_t j = 0; j < cols_; ++j) {
        BigInt& x = row[j];
        const bool in_pivot_row = sgn(pr[j]) != 0;
        if (sgn(x) == 0 && !in_pivot_row) continue;
        mpz_mul(x.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
        if (in_pivot_row)
          mpz_submul(x.get_mpz_t(), f.get_mpz_t(), pr[j].get_mpz_t());
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), denom_.get_mpz_t());
      }
      if (rhs) {
        mpz_mul(rhs->get_mpz_t(), rhs->get_mpz_t(), p.get_mpz_t());
        mpz_submul(rhs->get_mpz_t(), f.get_mpz_t(), rhs_[r].get_mpz_t());
        mpz_divexact(rhs->get_mpz_t(), rhs->get_mpz_t(), denom_.get_mpz_t());
      }
    };
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (i != r) update(rows_[i], &rhs_[i]);
    update(reduced_, nullptr);
    denom_ = p;
    basis_[r] = c;
    if (sgn(denom_) < 0) {
      // Keep the denominator positive so signs read off directly.
      denom_ = -denom_;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (auto& x : rows_[i]) mpz_neg(x.get_mpz_t(), x.get_mpz_t());
        mpz_neg(rhs_[i].get_mpz_t(), rhs_[i].get_mpz_t());
      }
      for (auto& x : reduced_) mpz_neg(x.get_mpz_t(), x.get_mpz_t());
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < first_art_) {
        ++i;
        continue;
      }
      std::size_t col = SIZE_MAX;
      for (std::size_t j = 0; j < first_art_; ++j)
        if (sgn(rows_[i][j]) != 0) {
          col = j;
          break;
        }
      if (col == SIZE_MAX) {
        // Redundant equality row; it is zero outside the artificials and
        // never takes part in a later pivot.
        rows_.erase(rows_.begin() + i);
        rhs_.erase(rhs_.begin() + i);
        basis_.erase(basis_.begin() + i);
        continue;
      }
      pivot(i, col);
      ++i;
    }
  }

  std::size_t n_;
  std::vector<std::size_t> plus_, minus_;
  std::size_t first_art_ = 0;
  std::size_t cols_ = 0;
  std::vector<IntVector> rows_;
  IntVector rhs_;
  std::vector<std::size_t> basis_;
  BigInt denom_ = 1;
  BigInt tmp_, tmp2_, p_, f_;
  IntVector cost_, neg_;
  IntVector reduced_;
  bool feasible_ = true;
};

inline LpOutcome lp_solve(const LpProblem& p) {
  ExactSimplex s(p);
  return s.minimize(p.objective);
}

}  // namespace iqp
