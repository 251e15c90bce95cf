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

// Densest k-Subgraph as an IQP, parameterized by a vertex cover C.
//
// Vertices outside C form an independent set and are grouped by their
// neighbourhood inside C (their type). Variables are z_v in {0,1} for
// v in C and a count n_t in [0, m_t] per type t. The induced edge count of
// the selection is
//   |E(S)| = 1/2 z^T A_C z + z^T B n = x^T Q x,  Q = 1/2 [[A_C, B], [B^T, 0]]
// with B_{v,t} = 1 iff v lies in the signature of t. The instance
// minimizes x^T (-2Q) x, so its optimal value is -2 |E(S)|.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "iqp/generator.hpp"
#include "iqp/instance.hpp"

namespace iqp {

struct Graph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // u < v, sorted

  bool adjacent(std::size_t u, std::size_t v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
  }

  // Normalizes endpoints, sorts and removes duplicate edges.
  static Graph from_edges(std::size_t n,
                          std::vector<std::pair<std::size_t, std::size_t>> e) {
    Graph g;
    g.n = n;
    for (auto [u, v] : e) {
      if (u >= n || v >= n) throw InvalidInstance("graph: endpoint out of range");
      if (u == v) throw InvalidInstance("graph: loops are not allowed");
      g.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
  }
};

// "p <n> <m>" header, then one "u v" line per edge, 0-indexed. Blank lines
// and lines starting with 'c' or '#' are ignored.
inline Graph parse_graph(std::istream& in) {
  std::string line;
  bool header = false;
  std::size_t n = 0, m = 0;
  std::vector<std::pair<std::size_t, std::size_t>> e;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == 'c' || first[0] == '#') continue;
    if (first == "p") {
      if (header) throw ParseError("graph: duplicate header");
      if (!(ls >> n >> m)) throw ParseError("graph: malformed header");
      header = true;
      continue;
    }
    if (!header) throw ParseError("graph: edge before header");
    std::size_t u, v;
    std::istringstream es(line);
    if (!(es >> u >> v)) throw ParseError("graph: malformed edge line: " + line);
    std::string rest;
    if (es >> rest) throw ParseError("graph: trailing text: " + line);
    e.emplace_back(u, v);
  }
  if (!header) throw ParseError("graph: missing header");
  if (e.size() != m) throw ParseError("graph: edge count differs from header");
  try {
    return Graph::from_edges(n, std::move(e));
  } catch (const InvalidInstance& ex) {
    throw ParseError(ex.what());
  }
}

inline std::string format_graph(const Graph& g) {
  std::string s = "p " + std::to_string(g.n) + " " + std::to_string(g.edges.size()) + "\n";
  for (auto [u, v] : g.edges) s += std::to_string(u) + " " + std::to_string(v) + "\n";
  return s;
}

struct VertexType {
  std::vector<std::size_t> signature;  // N(v) ∩ C, ascending
  std::vector<std::size_t> members;    // ascending
};

struct TypePartition {
  std::vector<std::size_t> cover;  // ascending
  std::vector<VertexType> types;   // ordered by signature
};

inline bool is_vertex_cover(const Graph& g, const std::vector<std::size_t>& cover) {
  std::vector<bool> in(g.n, false);
  for (std::size_t v : cover) {
    if (v >= g.n) return false;
    in[v] = true;
  }
  return std::all_of(g.edges.begin(), g.edges.end(),
                     [&](const auto& e) { return in[e.first] || in[e.second]; });
}

inline TypePartition neighbourhood_types(const Graph& g,
                                         std::vector<std::size_t> cover) {
  std::sort(cover.begin(), cover.end());
  cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
  if (!is_vertex_cover(g, cover))
    throw NotAVertexCover("reduction: the given set is not a vertex cover");
  std::vector<bool> in(g.n, false);
  for (std::size_t v : cover) in[v] = true;
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> groups;
  for (std::size_t v = 0; v < g.n; ++v) {
    if (in[v]) continue;
    std::vector<std::size_t> sig;
    for (std::size_t u : cover)
      if (g.adjacent(u, v)) sig.push_back(u);
    groups[sig].push_back(v);
  }
  TypePartition tp;
  tp.cover = std::move(cover);
  for (auto& [sig, mem] : groups) tp.types.push_back({sig, mem});
  return tp;
}

struct DksReduction {
  TypePartition partition;
  std::size_t kappa = 0;
  IqpInstance instance;  // objective is -2 |E(S)|
};

inline DksReduction densest_k_subgraph_to_iqp(const Graph& g,
                                              const std::vector<std::size_t>& cover,
                                              long long kappa) {
  if (kappa < 0 || static_cast<std::size_t>(kappa) > g.n)
    throw KappaOutOfRange("reduction: kappa must lie in [0, |V|]");
  DksReduction red;
  red.partition = neighbourhood_types(g, cover);
  red.kappa = static_cast<std::size_t>(kappa);
  const auto& cv = red.partition.cover;
  const auto& types = red.partition.types;
  const std::size_t k = cv.size(), t = types.size(), n = k + t;

  IqpInstance& inst = red.instance;
  inst.n = n;
  inst.q = IntMatrix(n, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && g.adjacent(cv[i], cv[j])) inst.q(i, j) = -1;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t s = 0; s < t; ++s)
      if (std::binary_search(types[s].signature.begin(), types[s].signature.end(), cv[i]))
        inst.q(i, k + s) = inst.q(k + s, i) = -1;
  inst.c = IntVector(n, BigInt(0));

  IntVector lo(n, BigInt(0)), hi(n);
  for (std::size_t i = 0; i < k; ++i) hi[i] = 1;
  for (std::size_t s = 0; s < t; ++s) hi[k + s] = types[s].members.size();
  inst.a = IntMatrix(0, n);
  append_box_rows(inst.a, inst.b, lo, hi);
  IntVector ones(n, BigInt(1)), neg(n, BigInt(-1));
  inst.a.append_row(ones);
  inst.b.push_back(BigInt(static_cast<long>(kappa)));
  inst.a.append_row(neg);
  inst.b.push_back(BigInt(-static_cast<long>(kappa)));
  inst.c0 = IntMatrix(0, n);
  return red;
}

// Selected vertices for a feasible point x = (z, n) of the reduction.
inline std::vector<std::size_t> decode_subgraph(const IntVector& x,
                                                const TypePartition& tp) {
  const std::size_t k = tp.cover.size();
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < k; ++i)
    if (x[i] == 1) s.push_back(tp.cover[i]);
  for (std::size_t t = 0; t < tp.types.size(); ++t) {
    const auto cnt = x[k + t].get_ui();
    for (std::size_t i = 0; i < cnt; ++i) s.push_back(tp.types[t].members[i]);
  }
  std::sort(s.begin(), s.end());
  return s;
}

inline std::size_t induced_edges(const Graph& g, const std::vector<std::size_t>& s) {
  std::vector<bool> in(g.n, false);
  for (std::size_t v : s) in[v] = true;
  return static_cast<std::size_t>(std::count_if(
      g.edges.begin(), g.edges.end(),
      [&](const auto& e) { return in[e.first] && in[e.second]; }));
}

// Maximum induced edge count over all kappa-subsets (exhaustive).
inline std::size_t densest_subgraph_brute(const Graph& g, std::size_t kappa) {
  if (g.n > 20) throw BudgetExceeded("densest_subgraph_brute: more than 20 vertices");
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != kappa) continue;
    std::size_t cnt = 0;
    for (auto [u, v] : g.edges)
      if ((mask >> u & 1u) && (mask >> v & 1u)) ++cnt;
    best = std::max(best, cnt);
  }
  return best;
}

// A minimum vertex cover by exhaustive search, smallest mask first.
inline std::vector<std::size_t> minimum_vertex_cover(const Graph& g) {
  if (g.n > 20) throw BudgetExceeded("minimum_vertex_cover: more than 20 vertices");
  std::vector<std::size_t> best;
  bool have = false;
  for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask) {
    if (have && static_cast<std::size_t>(std::popcount(mask)) >= best.size()) continue;
    bool ok = true;
    for (auto [u, v] : g.edges)
      if (!(mask >> u & 1u) && !(mask >> v & 1u)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    best.clear();
    for (std::size_t v = 0; v < g.n; ++v)
      if (mask >> v & 1u) best.push_back(v);
    have = true;
  }
  return best;
}

// Random graph on 1..max_vertices vertices; each edge present with
// probability 1/2.
inline Graph random_graph(std::uint64_t seed, std::size_t max_vertices) {
  SeededRng rng(seed);
  const std::size_t n = static_cast<std::size_t>(
      rng.uniform(1, static_cast<long>(std::max<std::size_t>(1, max_vertices))));
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.uniform(0, 1)) e.emplace_back(u, v);
  return Graph::from_edges(n, std::move(e));
}

}  // namespace iqp
