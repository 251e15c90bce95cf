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

#include "iqp/linalg.hpp"
#include "iqp/lp.hpp"

namespace iqp {

// {x : A x <= b}
struct Polytope {
  IntMatrix a;
  IntVector b;

  std::size_t dim() const { return a.cols(); }
  std::size_t num_rows() const { return a.rows(); }

  bool contains(const IntVector& x) const {
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (dot(a.row(i), std::span<const BigInt>(x)) > b[i]) return false;
    return true;
  }
  bool contains(const RatVector& x) const {
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (dot(a.row(i), std::span<const BigRat>(x)) > b[i]) return false;
    return true;
  }

  void validate() const {
    if (a.rows() != b.size())
      throw InvalidInstance("polytope: A and b have different row counts");
  }
};

// min x^T Q x + c^T x  s.t.  A x <= b,  C x = d,  x integer.
struct IqpInstance {
  std::size_t n = 0;
  IntMatrix q;
  IntVector c;
  IntMatrix a;
  IntVector b;
  IntMatrix c0;  // initial equalities, possibly 0 x n
  IntVector d0;

  Polytope polytope() const { return {a, b}; }

  BigInt objective(const IntVector& x) const {
    BigInt v = dot(c, x);
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(x[i]) == 0) continue;
      BigInt row = 0;
      for (std::size_t j = 0; j < n; ++j) row += q(i, j) * x[j];
      v += x[i] * row;
    }
    return v;
  }

  BigRat objective(const RatVector& x) const {
    BigRat v = 0;
    for (std::size_t i = 0; i < n; ++i) {
      v += c[i] * x[i];
      for (std::size_t j = 0; j < n; ++j) v += x[i] * q(i, j) * x[j];
    }
    return v;
  }

  bool feasible(const IntVector& x) const {
    if (x.size() != n) return false;
    if (!polytope().contains(x)) return false;
    for (std::size_t i = 0; i < c0.rows(); ++i)
      if (dot(c0.row(i), std::span<const BigInt>(x)) != d0[i]) return false;
    return true;
  }

  void validate() const {
    if (q.rows() != n || q.cols() != n)
      throw InvalidInstance("instance: Q must be n x n");
    if (!is_symmetric(q)) throw NotSymmetric("instance: Q is not symmetric");
    if (c.size() != n) throw InvalidInstance("instance: c must have length n");
    if (a.cols() != n || a.rows() != b.size())
      throw InvalidInstance("instance: A must be m x n with |b| = m");
    if (c0.cols() != n || c0.rows() != d0.size())
      throw InvalidInstance("instance: C must be k x n with |d| = k");
    if (c0.rows() > 0 && rank(c0) != c0.rows())
      throw RankDeficientRows("instance: C does not have full row rank");
  }

  static IqpInstance make(IntMatrix q, IntVector c, IntMatrix a, IntVector b) {
    IqpInstance inst;
    inst.n = q.rows();
    inst.q = std::move(q);
    inst.c = std::move(c);
    inst.a = std::move(a);
    inst.b = std::move(b);
    inst.c0 = IntMatrix(0, inst.n);
    return inst;
  }

  friend bool operator==(const IqpInstance& x, const IqpInstance& y) {
    return x.n == y.n && x.q == y.q && x.c == y.c && x.a == y.a &&
           x.b == y.b && x.c0 == y.c0 && x.d0 == y.d0;
  }
};

// Rows of the box lo <= x <= hi, appended as +e_i <= hi_i, -e_i <= -lo_i.
inline void append_box_rows(IntMatrix& a, IntVector& b, const IntVector& lo,
                            const IntVector& hi) {
  const std::size_t n = lo.size();
  for (std::size_t i = 0; i < n; ++i) {
    IntVector up(n, BigInt(0)), down(n, BigInt(0));
    up[i] = 1;
    down[i] = -1;
    a.append_row(up);
    b.push_back(hi[i]);
    a.append_row(down);
    b.push_back(-lo[i]);
  }
}

inline Polytope box_polytope(const IntVector& lo, const IntVector& hi) {
  Polytope p{IntMatrix(0, lo.size()), {}};
  append_box_rows(p.a, p.b, lo, hi);
  return p;
}

// Linear relaxation of {Ax <= b, Cx = d}.
inline ExactSimplex relaxation(const Polytope& p, const IntMatrix& c,
                               const IntVector& d) {
  return ExactSimplex(p.a, p.b, c, d, p.dim());
}

struct BoxBounds {
  IntVector lower;
  IntVector upper;
};

// Integer bounding box of {Ax <= b, Cx = d} from exact per-coordinate LP
// extrema. nullopt: relaxation empty. Throws InvalidInstance if unbounded.
inline std::optional<BoxBounds> integer_bounding_box(const Polytope& p,
                                                     const IntMatrix& c,
                                                     const IntVector& d) {
  const std::size_t n = p.dim();
  ExactSimplex lp = relaxation(p, c, d);
  if (!lp.feasible()) return std::nullopt;
  BoxBounds box{IntVector(n), IntVector(n)};
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, BigInt(0));
    e[i] = 1;
    LpOutcome lo = lp.minimize(e);
    LpOutcome hi = lp.maximize(e);
    if (lo.status != LpStatus::Optimal || hi.status != LpStatus::Optimal)
      throw InvalidInstance("bounding box: region is unbounded");
    box.lower[i] = ceil_rat(lo.value);
    box.upper[i] = floor_rat(hi.value);
  }
  return box;
}

inline std::optional<BoxBounds> integer_bounding_box(const Polytope& p) {
  return integer_bounding_box(p, IntMatrix(0, p.dim()), {});
}

// True iff {x : Ax <= b} is bounded (an empty region counts as bounded).
inline bool is_bounded(const Polytope& p) {
  const std::size_t n = p.dim();
  ExactSimplex lp = relaxation(p, IntMatrix(0, n), {});
  if (!lp.feasible()) return true;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, BigInt(0));
    e[i] = 1;
    if (lp.minimize(e).status != LpStatus::Optimal) return false;
    if (lp.maximize(e).status != LpStatus::Optimal) return false;
  }
  return true;
}

inline bool check_bounded(const IqpInstance& inst) {
  const std::size_t n = inst.n;
  ExactSimplex lp(inst.a, inst.b, inst.c0, inst.d0, n);
  if (!lp.feasible()) return true;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, BigInt(0));
    e[i] = 1;
    if (lp.minimize(e).status != LpStatus::Optimal) return false;
    if (lp.maximize(e).status != LpStatus::Optimal) return false;
  }
  return true;
}

}  // namespace iqp
