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

// Exact integer/rational linear algebra: echelon forms, rowspace tests,
// subdeterminants, the adjugate kernel basis and inertia by congruence.

#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <utility>

#include "iqp/numeric.hpp"

namespace iqp {

// ---------------------------------------------------------------------------
// Echelon forms
// ---------------------------------------------------------------------------

struct Echelon {
  RatMatrix reduced;                 // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

// Gauss-Jordan elimination. Zero rows are dropped from `reduced`. If
// `pivot_limit` is given, pivots are only searched in columns < limit (used
// for augmented systems).
inline Echelon rref(RatMatrix m, std::size_t pivot_limit = SIZE_MAX) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t limit = std::min(cols, pivot_limit);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    BigRat inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      BigRat f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  RatMatrix out(0, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < cols && !nonzero; ++j)
      nonzero = sgn(m(i, j)) != 0;
    if (nonzero) out.append_row(m.row(i));
  }
  return {std::move(out), std::move(pivots)};
}

inline std::size_t rank(const IntMatrix& m) {
  if (m.rows() == 0) return 0;
  return rref(to_rat(m)).pivots.size();
}

// Incrementally maintained row space in reduced echelon form. `add` is the
// greedy rank-extension step; `contains` is exact membership.
class RowSpace {
 public:
  explicit RowSpace(std::size_t dim) : dim_(dim) {}

  RowSpace(const IntMatrix& m) : dim_(m.cols()) {
    for (std::size_t i = 0; i < m.rows(); ++i) add(m.row(i));
  }

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  bool contains(std::span<const BigInt> v) const {
    return is_zero(reduce(v));
  }
  bool contains(const IntVector& v) const {
    return contains(std::span<const BigInt>(v));
  }

  // Returns true iff v was independent (and is now part of the space).
  bool add(std::span<const BigInt> v) {
    RatVector w = reduce(v);
    std::size_t p = 0;
    while (p < dim_ && sgn(w[p]) == 0) ++p;
    if (p == dim_) return false;
    BigRat inv = 1 / w[p];
    for (auto& x : w) x *= inv;
    for (auto& r : rows_) {
      if (sgn(r[p]) == 0) continue;
      BigRat f = r[p];
      for (std::size_t j = 0; j < dim_; ++j) r[j] -= f * w[j];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    auto off = pos - pivots_.begin();
    pivots_.insert(pos, p);
    rows_.insert(rows_.begin() + off, std::move(w));
    return true;
  }
  bool add(const IntVector& v) { return add(std::span<const BigInt>(v)); }

 private:
  RatVector reduce(std::span<const BigInt> v) const {
    RatVector w(v.begin(), v.end());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::size_t p = pivots_[k];
      if (sgn(w[p]) == 0) continue;
      BigRat f = w[p];
      for (std::size_t j = 0; j < dim_; ++j)
        if (sgn(rows_[k][j]) != 0) w[j] -= f * rows_[k][j];
    }
    return w;
  }
  static bool is_zero(const RatVector& w) {
    return std::all_of(w.begin(), w.end(),
                       [](const BigRat& x) { return sgn(x) == 0; });
  }

  std::size_t dim_;
  std::vector<RatVector> rows_;
  std::vector<std::size_t> pivots_;
};

// ---------------------------------------------------------------------------
// Rowspace membership and rational systems
// ---------------------------------------------------------------------------

struct RowspaceMembership {
  bool member = false;
  std::optional<RatVector> coefficients;  // lambda with v = lambda^T C
};

// Decides whether v = lambda^T C for some rational lambda. C is expected to
// have full row rank, which makes lambda unique.
inline RowspaceMembership rank_and_rowspace_member(const IntMatrix& c,
                                                   const IntVector& v) {
  const std::size_t k = c.rows(), n = c.cols();
  if (k == 0) {
    bool zero = std::all_of(v.begin(), v.end(),
                            [](const BigInt& x) { return sgn(x) == 0; });
    if (zero) return {true, RatVector{}};
    return {false, std::nullopt};
  }
  // Solve C^T lambda = v through the augmented system [C^T | v].
  RatMatrix aug(n, k + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = c(j, i);
    aug(i, k) = v[i];
  }
  Echelon e = rref(std::move(aug), k);
  for (std::size_t i = e.pivots.size(); i < e.reduced.rows(); ++i)
    return {false, std::nullopt};  // a row 0 = nonzero survived
  RatVector lambda(k, BigRat(0));
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    lambda[e.pivots[i]] = e.reduced(i, k);
  return {true, std::move(lambda)};
}

// Some rational solution of Cx = d with free variables set to zero, or
// nullopt when the system is inconsistent.
inline std::optional<RatVector> solve_rational_system(const IntMatrix& c,
                                                      const IntVector& d) {
  const std::size_t k = c.rows(), n = c.cols();
  if (k == 0) return RatVector(n, BigRat(0));
  RatMatrix aug(k, n + 1);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = c(i, j);
    aug(i, n) = d[i];
  }
  Echelon e = rref(std::move(aug), n);
  if (e.reduced.rows() > e.pivots.size()) return std::nullopt;
  RatVector x(n, BigRat(0));
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    x[e.pivots[i]] = e.reduced(i, n);
  return x;
}

// Canonical textual key of the affine space {x : Cx = d}; two consistent
// systems share a key iff they have the same solution set. Inconsistent
// systems map to "infeasible".
inline std::string affine_key(const IntMatrix& c, const IntVector& d) {
  const std::size_t k = c.rows(), n = c.cols();
  RatMatrix aug(k, n + 1);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = c(i, j);
    aug(i, n) = d[i];
  }
  Echelon e = rref(std::move(aug), n);
  if (e.reduced.rows() > e.pivots.size()) return "infeasible";
  std::string key = std::to_string(n) + ":";
  for (std::size_t i = 0; i < e.reduced.rows(); ++i) {
    for (const auto& x : e.reduced.row(i)) {
      key += x.get_str();
      key += ',';
    }
    key += ';';
  }
  return key;
}

// Canonical keys for extensions {Cx = d, Rx = r} of a fixed system Cx = d.
// The rows [R | r] are reduced against the echelon form of [C | d]; the
// echelon form of the remainder determines the extended subspace, so equal
// keys mean equal subspaces for systems sharing the same base.
class ExtensionKeyer {
 public:
  ExtensionKeyer(const IntMatrix& c, const IntVector& d) : n_(c.cols()) {
    RatMatrix aug(c.rows(), n_ + 1);
    for (std::size_t i = 0; i < c.rows(); ++i) {
      for (std::size_t j = 0; j < n_; ++j) aug(i, j) = c(i, j);
      aug(i, n_) = d[i];
    }
    base_ = rref(std::move(aug), n_);
  }

  // Key of the system whose rows from `first` on extend the base.
  std::string key(const IntMatrix& c, const IntVector& d,
                  std::size_t first) const {
    RatMatrix rest(0, n_ + 1);
    RatVector row(n_ + 1);
    BigRat t;
    for (std::size_t i = first; i < c.rows(); ++i) {
      for (std::size_t j = 0; j < n_; ++j) row[j] = c(i, j);
      row[n_] = d[i];
      for (std::size_t b = 0; b < base_.pivots.size(); ++b) {
        const std::size_t p = base_.pivots[b];
        if (sgn(row[p]) == 0) continue;
        const BigRat f = row[p];
        for (std::size_t j = p; j <= n_; ++j) {
          mpq_mul(t.get_mpq_t(), f.get_mpq_t(), base_.reduced(b, j).get_mpq_t());
          mpq_sub(row[j].get_mpq_t(), row[j].get_mpq_t(), t.get_mpq_t());
        }
      }
      rest.append_row(row);
    }
    Echelon e = rref(std::move(rest), n_);
    if (e.reduced.rows() > e.pivots.size()) return "infeasible";
    std::string key;
    for (std::size_t i = 0; i < e.reduced.rows(); ++i) {
      for (const auto& x : e.reduced.row(i)) {
        key += x.get_str();
        key += ',';
      }
      key += ';';
    }
    return key;
  }

  // Same key for a one-row extension a x = v. The reduction of [a | 0] is
  // cached per distinct a, so siblings differing only in v are cheap.
  std::string key(std::span<const BigInt> a, const BigInt& v) const {
    const Reduced& r = reduce(a);
    BigRat rhs = BigRat(v) - r.offset;
    if (r.coef.empty()) return sgn(rhs) == 0 ? std::string() : "infeasible";
    rhs /= r.lead;
    std::string key = r.prefix;
    key += rhs.get_str();
    key += ",;";
    return key;
  }

 private:
  struct Reduced {
    IntVector a;
    RatVector coef;  // normalized coefficient part, empty if in the base
    BigRat lead;
    BigRat offset;
    std::string prefix;
  };

  const Reduced& reduce(std::span<const BigInt> a) const {
    for (const auto& r : cache_)
      if (std::equal(a.begin(), a.end(), r.a.begin())) return r;
    Reduced out;
    out.a.assign(a.begin(), a.end());
    RatVector row(n_ + 1);
    for (std::size_t j = 0; j < n_; ++j) row[j] = a[j];
    row[n_] = 0;
    BigRat t;
    for (std::size_t b = 0; b < base_.pivots.size(); ++b) {
      const std::size_t p = base_.pivots[b];
      if (sgn(row[p]) == 0) continue;
      const BigRat f = row[p];
      for (std::size_t j = p; j <= n_; ++j) {
        mpq_mul(t.get_mpq_t(), f.get_mpq_t(), base_.reduced(b, j).get_mpq_t());
        mpq_sub(row[j].get_mpq_t(), row[j].get_mpq_t(), t.get_mpq_t());
      }
    }
    out.offset = -row[n_];
    std::size_t p = 0;
    while (p < n_ && sgn(row[p]) == 0) ++p;
    if (p < n_) {
      out.lead = row[p];
      out.coef.assign(row.begin(), row.begin() + n_);
      for (auto& x : out.coef) {
        x /= out.lead;
        out.prefix += x.get_str();
        out.prefix += ',';
      }
    }
    cache_.push_back(std::move(out));
    return cache_.back();
  }

  std::size_t n_;
  Echelon base_;
  mutable std::deque<Reduced> cache_;
};

// Integer feasibility of extensions of a fixed system Cx = d. Column
// operations C U = [L 0] are computed once; with w = L^{-1} d, the system
// extended by a x = v is solvable iff gcd((aU)_j, j >= rank) divides
// v - sum_{j<rank} (aU)_j w_j.
class IntegerLattice {
 public:
  IntegerLattice(IntMatrix c, const IntVector& d)
      : n_(c.cols()), u_(IntMatrix::identity(c.cols())) {
    const std::size_t k = c.rows(), n = n_;
    std::size_t col = 0;
    auto col_op = [&](std::size_t j, std::size_t piv, const BigInt& q,
                      std::size_t from) {
      for (std::size_t r = from; r < k; ++r) c(r, j) -= q * c(r, piv);
      for (std::size_t r = 0; r < n; ++r) u_(r, j) -= q * u_(r, piv);
    };
    auto col_swap = [&](std::size_t a, std::size_t b, std::size_t from) {
      for (std::size_t r = from; r < k; ++r) std::swap(c(r, a), c(r, b));
      for (std::size_t r = 0; r < n; ++r) std::swap(u_(r, a), u_(r, b));
    };
    for (std::size_t i = 0; i < k; ++i) {
      while (true) {
        std::size_t piv = n;
        for (std::size_t j = col; j < n; ++j)
          if (sgn(c(i, j)) != 0 && (piv == n || abs(c(i, j)) < abs(c(i, piv))))
            piv = j;
        if (piv == n) break;
        bool done = true;
        for (std::size_t j = col; j < n; ++j) {
          if (j == piv || sgn(c(i, j)) == 0) continue;
          BigInt q;
          mpz_fdiv_q(q.get_mpz_t(), c(i, j).get_mpz_t(), c(i, piv).get_mpz_t());
          col_op(j, piv, q, i);
          if (sgn(c(i, j)) != 0) done = false;
        }
        if (done) {
          if (piv != col) col_swap(col, piv, i);
          break;
        }
      }
      BigInt rhs = d[i];
      for (std::size_t j = 0; j < w_.size(); ++j) rhs -= c(i, j) * w_[j];
      if (col == n || sgn(c(i, col)) == 0) {
        if (sgn(rhs) != 0) feasible_ = false;
        continue;
      }
      if (!mpz_divisible_p(rhs.get_mpz_t(), c(i, col).get_mpz_t()))
        feasible_ = false;
      w_.push_back(rhs / c(i, col));
      ++col;
    }
  }

  bool feasible() const { return feasible_; }

  // {a^T x : Cx = d, x integer} = offset + g Z, as (offset, g); g = 0
  // means the single value offset. Empty when there is no integer point.
  std::optional<std::pair<BigInt, BigInt>> progression(std::span<const BigInt> a) const {
    if (!feasible_) return std::nullopt;
    const Entry& e = entry(a);
    return std::pair<BigInt, BigInt>{e.offset, e.g};
  }

  bool admits(std::span<const BigInt> a, const BigInt& v) const {
    if (!feasible_) return false;
    const Entry& e = entry(a);
    BigInt rest = v - e.offset;
    if (sgn(e.g) == 0) return sgn(rest) == 0;
    return mpz_divisible_p(rest.get_mpz_t(), e.g.get_mpz_t()) != 0;
  }

 private:
  struct Entry {
    IntVector a;
    BigInt g, offset;
  };

  const Entry& entry(std::span<const BigInt> a) const {
    for (const auto& e : cache_)
      if (std::equal(a.begin(), a.end(), e.a.begin())) return e;
    Entry e;
    e.a.assign(a.begin(), a.end());
    for (std::size_t j = 0; j < n_; ++j) {
      BigInt s = 0;
      for (std::size_t r = 0; r < n_; ++r) s += a[r] * u_(r, j);
      if (j < w_.size()) e.offset += s * w_[j];
      else e.g = gcd(e.g, s);
    }
    cache_.push_back(std::move(e));
    return cache_.back();
  }

  std::size_t n_;
  IntMatrix u_;
  IntVector w_;
  bool feasible_ = true;
  mutable std::deque<Entry> cache_;
};

// True iff Cx = d has an integer solution. Unimodular column operations
// bring C to [L 0] with L lower triangular; then L w = d is solved by
// forward substitution and every w_i must be integral.
inline bool has_integer_solution(IntMatrix c, const IntVector& d) {
  const std::size_t k = c.rows(), n = c.cols();
  std::vector<BigInt> w;
  w.reserve(k);
  std::size_t col = 0;
  for (std::size_t i = 0; i < k; ++i) {
    // Euclid across columns col..n-1 of row i until one nonzero remains.
    while (true) {
      std::size_t piv = n;
      for (std::size_t j = col; j < n; ++j)
        if (sgn(c(i, j)) != 0 && (piv == n || abs(c(i, j)) < abs(c(i, piv))))
          piv = j;
      if (piv == n) break;
      bool done = true;
      for (std::size_t j = col; j < n; ++j) {
        if (j == piv || sgn(c(i, j)) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), c(i, j).get_mpz_t(), c(i, piv).get_mpz_t());
        for (std::size_t r = i; r < k; ++r) c(r, j) -= q * c(r, piv);
        if (sgn(c(i, j)) != 0) done = false;
      }
      if (done) {
        if (piv != col)
          for (std::size_t r = i; r < k; ++r) std::swap(c(r, col), c(r, piv));
        break;
      }
    }
    BigInt rhs = d[i];
    for (std::size_t j = 0; j < w.size(); ++j) rhs -= c(i, j) * w[j];
    if (col == n || sgn(c(i, col)) == 0) {
      if (sgn(rhs) != 0) return false;  // dependent row, inconsistent
      continue;
    }
    if (!mpz_divisible_p(rhs.get_mpz_t(), c(i, col).get_mpz_t())) return false;
    w.push_back(rhs / c(i, col));
    ++col;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Determinants and subdeterminants
// ---------------------------------------------------------------------------

// Fraction-free (Bareiss) determinant of a square integer matrix.
inline BigInt determinant(IntMatrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw InvalidInstance("determinant of non-square matrix");
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(m(p, k)) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  BigInt det = m(n - 1, n - 1);
  return sign > 0 ? det : BigInt(-det);
}

// Calls f(indices) for every k-subset of {0..n-1} in lexicographic order;
// stops early if f returns false.
template <class F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!f(std::span<const std::size_t>(idx))) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline BigInt binomial(std::size_t n, std::size_t k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Number of square submatrices of an m x n matrix.
inline BigInt square_submatrix_count(std::size_t m, std::size_t n) {
  BigInt total = 0;
  for (std::size_t k = 1; k <= std::min(m, n); ++k)
    total += binomial(m, k) * binomial(n, k);
  return total;
}

enum class DeltaMode { Exact, Hadamard };

inline constexpr std::uint64_t kDefaultSubdeterminantBudget = 1'000'000;

inline BigInt ceil_sqrt(const BigInt& v) {
  BigInt s = sqrt(v);
  if (s * s < v) s += 1;
  return s;
}

namespace detail {

// Hadamard-type bound from the vector norms of rows (or columns): any k x k
// minor is at most the product of the k largest Euclidean norms.
inline BigInt hadamard_from_rows(const IntMatrix& m) {
  std::vector<BigInt> sq;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt s = 0;
    for (const auto& x : m.row(i)) s += x * x;
    if (sgn(s) != 0) sq.push_back(s);
  }
  if (sq.empty()) return 0;
  std::sort(sq.begin(), sq.end(), std::greater<>());
  const std::size_t k = std::min({sq.size(), m.rows(), m.cols()});
  BigInt prod = 1;
  for (std::size_t i = 0; i < k; ++i) prod *= sq[i];
  return ceil_sqrt(prod);
}

}  // namespace detail

// Maximum |det| over all square submatrices (Delta). Exact mode enumerates
// every minor and refuses to run past `budget` evaluations.
inline BigInt max_subdeterminant(
    const IntMatrix& m, DeltaMode mode = DeltaMode::Exact,
    std::uint64_t budget = kDefaultSubdeterminantBudget) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (mode == DeltaMode::Hadamard) {
    BigInt r = detail::hadamard_from_rows(m);
    BigInt c = detail::hadamard_from_rows(m.transpose());
    return r < c ? r : c;
  }
  if (square_submatrix_count(m.rows(), m.cols()) > BigInt(std::to_string(budget)))
    throw BudgetExceeded("max_subdeterminant: too many square submatrices");
  BigInt best = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& x : m.row(i))
      if (mpz_cmpabs(x.get_mpz_t(), best.get_mpz_t()) > 0) best = abs(x);
  BigInt t, u;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t i2 = i + 1; i2 < m.rows(); ++i2)
      for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t j2 = j + 1; j2 < m.cols(); ++j2) {
          mpz_mul(t.get_mpz_t(), m(i, j).get_mpz_t(), m(i2, j2).get_mpz_t());
          mpz_submul(t.get_mpz_t(), m(i, j2).get_mpz_t(), m(i2, j).get_mpz_t());
          if (mpz_cmpabs(t.get_mpz_t(), best.get_mpz_t()) > 0) best = abs(t);
        }
  for (std::size_t k = 3; k <= std::min(m.rows(), m.cols()); ++k) {
    for_each_combination(m.rows(), k, [&](std::span<const std::size_t> ri) {
      IntMatrix rows = m.select_rows(ri);
      for_each_combination(m.cols(), k, [&](std::span<const std::size_t> ci) {
        BigInt d = abs(determinant(rows.select_cols(ci)));
        if (d > best) best = d;
        return true;
      });
      return true;
    });
  }
  return best;
}

// Maximum |det| over the k x k submatrices using all columns when k equals
// the column count (the order used by proximity arguments).
inline BigInt max_minor_of_order(const IntMatrix& m, std::size_t k,
                                 std::uint64_t budget =
                                     kDefaultSubdeterminantBudget) {
  if (k == 0 || k > m.rows() || k > m.cols()) return 0;
  if (binomial(m.rows(), k) * binomial(m.cols(), k) >
      BigInt(std::to_string(budget)))
    throw BudgetExceeded("max_minor_of_order: too many submatrices");
  BigInt best = 0;
  for_each_combination(m.rows(), k, [&](std::span<const std::size_t> ri) {
    IntMatrix rows = m.select_rows(ri);
    for_each_combination(m.cols(), k, [&](std::span<const std::size_t> ci) {
      BigInt d = abs(determinant(rows.select_cols(ci)));
      if (d > best) best = d;
      return true;
    });
    return true;
  });
  return best;
}

// ---------------------------------------------------------------------------
// Adjugate kernel basis
// ---------------------------------------------------------------------------

struct KernelBasis {
  std::vector<IntVector> vectors;          // y_1..y_r
  std::vector<std::size_t> pivot_columns;  // S, |S| = rank(C)
  std::vector<std::size_t> free_columns;   // T, one per basis vector
  BigInt delta = 1;                        // det(C_S)
  BigInt norm_bound = 0;                   // max_i ||y_i||_inf

  std::size_t size() const { return vectors.size(); }

  // Basis vectors as the columns of an n x r matrix.
  IntMatrix as_columns(std::size_t n) const {
    IntMatrix b(n, vectors.size());
    for (std::size_t t = 0; t < vectors.size(); ++t)
      for (std::size_t i = 0; i < n; ++i) b(i, t) = vectors[t][i];
    return b;
  }
};

// Integer basis of ker(C): for each non-pivot column t, the S-block is
// -adj(C_S) C_t and the T-block is det(C_S) e_t. S is the lexicographically
// first set of columns with C_S nonsingular.
inline KernelBasis adjugate_kernel_basis(const IntMatrix& c) {
  const std::size_t k = c.rows(), n = c.cols();
  KernelBasis kb;
  if (k == 0) {
    for (std::size_t t = 0; t < n; ++t) {
      IntVector y(n, BigInt(0));
      y[t] = 1;
      kb.vectors.push_back(std::move(y));
      kb.free_columns.push_back(t);
    }
    kb.norm_bound = n > 0 ? 1 : 0;
    return kb;
  }
  // Greedy pivot columns of the echelon form are the lexicographically first
  // basis of the column matroid.
  Echelon e = rref(to_rat(c));
  if (e.pivots.size() != k)
    throw RankDeficientRows("adjugate_kernel_basis: rows are dependent");
  kb.pivot_columns = e.pivots;
  std::vector<bool> in_s(n, false);
  for (auto s : kb.pivot_columns) in_s[s] = true;
  for (std::size_t t = 0; t < n; ++t)
    if (!in_s[t]) kb.free_columns.push_back(t);

  IntMatrix cs = c.select_cols(kb.pivot_columns);
  kb.delta = determinant(cs);

  // adj(C_S) C_t = delta * C_S^{-1} C_t; solve all right-hand sides at once.
  const std::size_t r = kb.free_columns.size();
  RatMatrix aug(k, k + r);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = cs(i, j);
    for (std::size_t t = 0; t < r; ++t) aug(i, k + t) = c(i, kb.free_columns[t]);
  }
  Echelon sol = rref(std::move(aug), k);
  for (std::size_t t = 0; t < r; ++t) {
    IntVector y(n, BigInt(0));
    for (std::size_t i = 0; i < k; ++i) {
      BigRat v = -kb.delta * sol.reduced(i, k + t);
      if (!is_integral(v))
        throw std::logic_error("adjugate_kernel_basis: non-integral cofactor");
      y[kb.pivot_columns[i]] = v.get_num();
    }
    y[kb.free_columns[t]] = kb.delta;
    BigInt nb = inf_norm(y);
    if (nb > kb.norm_bound) kb.norm_bound = nb;
    kb.vectors.push_back(std::move(y));
  }
  return kb;
}

// ---------------------------------------------------------------------------
// Inertia
// ---------------------------------------------------------------------------

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

inline bool is_symmetric(const IntMatrix& q) {
  if (q.rows() != q.cols()) return false;
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = i + 1; j < q.cols(); ++j)
      if (q(i, j) != q(j, i)) return false;
  return true;
}

// Inertia of a symmetric rational matrix by symmetric congruence elimination.
inline Inertia inertia_of_symmetric(RatMatrix m) {
  const std::size_t r = m.rows();
  Inertia out;
  std::vector<bool> active(r, true);
  std::size_t remaining = r;
  while (remaining > 0) {
    std::size_t piv = r;
    for (std::size_t i = 0; i < r && piv == r; ++i)
      if (active[i] && sgn(m(i, i)) != 0) piv = i;
    if (piv == r) {
      // Zero diagonal: combine a pair with a nonzero off-diagonal entry.
      std::size_t pi = r, pj = r;
      for (std::size_t i = 0; i < r && pi == r; ++i) {
        if (!active[i]) continue;
        for (std::size_t j = 0; j < r; ++j)
          if (j != i && active[j] && sgn(m(i, j)) != 0) {
            pi = i;
            pj = j;
            break;
          }
      }
      if (pi == r) {
        out.zero += remaining;
        break;
      }
      for (std::size_t k = 0; k < r; ++k)
        if (active[k]) m(pi, k) += m(pj, k);
      for (std::size_t k = 0; k < r; ++k)
        if (active[k]) m(k, pi) += m(k, pj);
      piv = pi;
    }
    const BigRat p = m(piv, piv);
    if (sgn(p) > 0)
      ++out.positive;
    else
      ++out.negative;
    active[piv] = false;
    --remaining;
    for (std::size_t i = 0; i < r; ++i) {
      if (!active[i] || sgn(m(i, piv)) == 0) continue;
      BigRat f = m(i, piv) / p;
      for (std::size_t j = 0; j < r; ++j)
        if (active[j]) m(i, j) -= f * m(piv, j);
    }
  }
  return out;
}

// Inertia of B^T Q B, i.e. of Q restricted to the column span of B.
inline Inertia inertia_of_restricted_form(const IntMatrix& q,
                                          const IntMatrix& b) {
  if (!is_symmetric(q)) throw NotSymmetric("inertia: Q is not symmetric");
  IntMatrix form = mat_mul(b.transpose(), mat_mul(q, b));
  return inertia_of_symmetric(to_rat(form));
}

inline Inertia inertia(const IntMatrix& q) {
  return inertia_of_restricted_form(q, IntMatrix::identity(q.rows()));
}

// Inertia of Q on ker(C).
inline Inertia inertia_on_kernel(const IntMatrix& q, const IntMatrix& c) {
  KernelBasis kb = adjugate_kernel_basis(c);
  return inertia_of_restricted_form(q, kb.as_columns(q.rows()));
}

}  // namespace iqp
