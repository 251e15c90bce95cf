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

// Seeded random instances. The integer mapping is written out instead of
// using std::uniform_int_distribution, whose output is implementation
// defined, so a seed yields the same instance on every platform.

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>

#include "iqp/instance.hpp"

namespace iqp {

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [lo, hi].
  long uniform(long lo, long hi) {
    if (hi <= lo) return lo;
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
    std::uint64_t v;
    do v = gen_(); while (v >= limit);
    return lo + static_cast<long>(v % span);
  }

  IntVector vector(std::size_t n, long lo, long hi) {
    IntVector v(n);
    for (auto& x : v) x = uniform(lo, hi);
    return v;
  }

  IntMatrix symmetric(std::size_t n, long lo, long hi) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = uniform(lo, hi);
    return m;
  }

 private:
  std::mt19937_64 gen_;
};

struct GeneratorParams {
  std::uint64_t seed = 0;
  std::size_t n = 2;
  long entry_bound = 3;  // L
  std::size_t extra_rows = 0;
  long box = 3;
};

// Q, c uniform in [-L, L]; A is the box [-box, box]^n followed by
// `extra_rows` random rows, each with b_j = a_j^T x0 + slack for a random
// integer x0 in the box and slack in [1, L].
inline IqpInstance generate_instance(const GeneratorParams& g) {
  SeededRng rng(g.seed);
  const long L = std::max(0L, g.entry_bound);
  IqpInstance inst;
  inst.n = g.n;
  inst.q = rng.symmetric(g.n, -L, L);
  inst.c = rng.vector(g.n, -L, L);
  inst.a = IntMatrix(0, g.n);
  append_box_rows(inst.a, inst.b, IntVector(g.n, BigInt(-g.box)),
                  IntVector(g.n, BigInt(g.box)));
  IntVector x0 = rng.vector(g.n, -g.box, g.box);
  for (std::size_t r = 0; r < g.extra_rows; ++r) {
    IntVector row = rng.vector(g.n, -L, L);
    BigInt rhs = dot(row, x0) + rng.uniform(1, std::max(1L, L));
    inst.a.append_row(row);
    inst.b.push_back(std::move(rhs));
  }
  inst.c0 = IntMatrix(0, g.n);
  return inst;
}

// Parameters of the i-th instance of the standard random suite: n in
// {2,3,4}, entries in [-3,3], box [-3,3]^n and up to three extra rows.
inline GeneratorParams suite_params(std::uint64_t base_seed, std::size_t i) {
  SeededRng pick(base_seed * 1000003u + i);
  GeneratorParams g;
  g.seed = base_seed * 7919u + i;
  g.n = static_cast<std::size_t>(pick.uniform(2, 4));
  g.entry_bound = 3;
  g.extra_rows = static_cast<std::size_t>(pick.uniform(0, 3));
  g.box = 3;
  return g;
}

// Bounded polytope with n in [1,3] and m in [n+1, 6] rows, entries in
// [-L, L]. Rows are redrawn until the polytope is bounded; it always contains
// the integer point x0.
inline Polytope generate_polytope(std::uint64_t seed, long entry_bound = 3) {
  SeededRng rng(seed);
  const long L = std::max(1L, entry_bound);
  const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
  const std::size_t m = static_cast<std::size_t>(rng.uniform(static_cast<long>(n) + 1, 6));
  const IntVector x0 = rng.vector(n, -L, L);
  for (;;) {
    Polytope p;
    p.a = IntMatrix(0, n);
    while (p.a.rows() < m) {
      IntVector row = rng.vector(n, -L, L);
      if (std::all_of(row.begin(), row.end(), [](const BigInt& x) { return sgn(x) == 0; }))
        continue;
      p.b.push_back(dot(row, x0) + rng.uniform(0, L));
      p.a.append_row(row);
    }
    if (is_bounded(p)) return p;
  }
}

// Q = -B^T B with B a random k x n matrix, entries in [-2, 2]; no positive
// eigenvalue by construction.
inline IntMatrix generate_concave_form(std::uint64_t seed, std::size_t n) {
  SeededRng rng(seed);
  const std::size_t k = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n)));
  IntMatrix b(k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = rng.uniform(-2, 2);
  IntMatrix q(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      BigInt s = 0;
      for (std::size_t r = 0; r < k; ++r) s -= b(r, i) * b(r, j);
      q(i, j) = s;
    }
  return q;
}

}  // namespace iqp
