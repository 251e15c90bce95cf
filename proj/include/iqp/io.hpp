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


// Instance files and reports as JSON. Integers are written as decimal
// strings so arbitrary precision survives any JSON reader; on input both
// strings and plain JSON integers are accepted.
//
//   {"n": "2", "Q": [["1","0"],["0","-1"]], "c": ["0","0"],
//    "A": [...], "b": [...], "C": [...], "d": [...]}
//
// C and d are optional. Polytope files carry only A and b.

#pragma once

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "iqp/hull.hpp"
#include "iqp/instance.hpp"
#include "iqp/result.hpp"

namespace iqp::io {

using Json = nlohmann::ordered_json;

inline BigInt parse_int(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return BigInt(std::to_string(j.get<std::uint64_t>()));
    return BigInt(std::to_string(j.get<std::int64_t>()));
  }
  if (!j.is_string()) throw ParseError(where + ": expected an integer");
  const std::string s = j.get<std::string>();
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw ParseError(where + ": empty integer");
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') throw ParseError(where + ": not a decimal integer: " + s);
  return BigInt(s[0] == '+' ? s.substr(1) : s);
}

inline std::size_t parse_size(const Json& j, const std::string& where) {
  BigInt v = parse_int(j, where);
  if (sgn(v) < 0 || v > 4096) throw ParseError(where + ": out of range");
  return v.get_ui();
}

inline IntVector parse_vector(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  IntVector v;
  for (std::size_t i = 0; i < j.size(); ++i)
    v.push_back(parse_int(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

// Rows of length `cols`; an empty array is a 0 x cols matrix.
inline IntMatrix parse_matrix(const Json& j, std::size_t cols, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of rows");
  IntMatrix m(0, cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    IntVector row = parse_vector(j[i], where + "[" + std::to_string(i) + "]");
    if (row.size() != cols)
      throw ParseError(where + ": row " + std::to_string(i) + " has " +
                       std::to_string(row.size()) + " entries, expected " +
                       std::to_string(cols));
    m.append_row(row);
  }
  return m;
}

inline const Json& field(const Json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

inline IqpInstance parse_instance(const Json& doc) {
  if (!doc.is_object()) throw ParseError("instance: expected a JSON object");
  IqpInstance inst;
  inst.n = parse_size(field(doc, "n"), "n");
  inst.q = parse_matrix(field(doc, "Q"), inst.n, "Q");
  if (inst.q.rows() != inst.n) throw ParseError("Q: expected n rows");
  if (!is_symmetric(inst.q)) throw ParseError("Q: not symmetric");
  inst.c = parse_vector(field(doc, "c"), "c");
  if (inst.c.size() != inst.n) throw ParseError("c: expected n entries");
  inst.a = parse_matrix(field(doc, "A"), inst.n, "A");
  inst.b = parse_vector(field(doc, "b"), "b");
  if (inst.b.size() != inst.a.rows()) throw ParseError("b: expected one entry per row of A");
  const bool has_c = doc.contains("C"), has_d = doc.contains("d");
  if (has_c != has_d) throw ParseError("C and d must be given together");
  inst.c0 = has_c ? parse_matrix(doc["C"], inst.n, "C") : IntMatrix(0, inst.n);
  inst.d0 = has_d ? parse_vector(doc["d"], "d") : IntVector{};
  if (inst.d0.size() != inst.c0.rows()) throw ParseError("d: expected one entry per row of C");
  try {
    inst.validate();
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  return inst;
}

// A and b; n is optional and, when present, must match the columns of A.
inline Polytope parse_polytope(const Json& doc) {
  if (!doc.is_object()) throw ParseError("polytope: expected a JSON object");
  const Json& a = field(doc, "A");
  std::size_t n = 0;
  if (doc.contains("n")) n = parse_size(doc["n"], "n");
  else if (a.is_array() && !a.empty() && a[0].is_array()) n = a[0].size();
  else throw ParseError("polytope: cannot infer the dimension");
  Polytope p;
  p.a = parse_matrix(a, n, "A");
  p.b = parse_vector(field(doc, "b"), "b");
  if (p.b.size() != p.a.rows()) throw ParseError("b: expected one entry per row of A");
  return p;
}

inline Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline IqpInstance load_instance(const std::string& path) {
  return parse_instance(read_json(path));
}

inline Json to_json(const BigInt& x) { return x.get_str(); }

inline Json to_json(const IntVector& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(x.get_str());
  return j;
}

inline Json to_json(const RatVector& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(x.get_str());
  return j;
}

inline Json to_json(const IntMatrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(to_json(m.row_vector(i)));
  return j;
}

inline Json instance_to_json(const IqpInstance& inst) {
  Json j;
  j["n"] = std::to_string(inst.n);
  j["Q"] = to_json(inst.q);
  j["c"] = to_json(inst.c);
  j["A"] = to_json(inst.a);
  j["b"] = to_json(inst.b);
  if (inst.c0.rows() > 0) {
    j["C"] = to_json(inst.c0);
    j["d"] = to_json(inst.d0);
  }
  return j;
}

// Memo hits are left out: they depend on the thread schedule.
inline Json stats_to_json(const SolveStats& s) {
  Json j;
  j["nodes"] = s.nodes;
  j["leaves"] = s.leaves;
  j["ilp_leaves"] = s.ilp_leaves;
  j["constraint_children"] = s.constraint_children;
  j["gradient_children"] = s.gradient_children;
  j["batch_children"] = s.batch_children;
  j["batches"] = s.batches;
  j["max_constraint_steps"] = s.max_constraint_steps;
  j["max_gradient_steps"] = s.max_gradient_steps;
  j["max_batches_on_path"] = s.max_batches_on_path;
  j["max_depth"] = s.max_depth;
  j["max_delta_seen"] = s.max_delta_seen.get_str();
  j["max_delta_exact"] = s.delta_exact;
  j["nodes_per_depth"] = s.nodes_per_depth;
  j["children_per_depth"] = s.children_per_depth;
  return j;
}

inline Json result_to_json(const SolveResult& r, bool with_stats = true) {
  Json j;
  j["status"] = to_string(r.status);
  j["value"] = r.value ? Json(r.value->get_str()) : Json(nullptr);
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  if (!r.message.empty()) j["message"] = r.message;
  if (with_stats) j["stats"] = stats_to_json(r.stats);
  return j;
}

inline Json candidates_to_json(const HullCandidateSet& s) {
  Json j;
  j["M"] = s.M;
  j["delta"] = s.delta.get_str();
  j["L_A"] = s.l_a.get_str();
  j["count_bound"] = s.count_bound.get_str();
  j["corners"] = s.corners.size();
  j["cells_visited"] = s.cells_visited;
  j["cells_nonempty"] = s.cells_nonempty;
  j["ilp_calls"] = s.ilp_calls;
  Json pts = Json::array();
  for (const auto& p : s.points) pts.push_back(to_json(p));
  j["points"] = std::move(pts);
  return j;
}

namespace detail {

inline void write_json(std::string& out, const Json& j, std::size_t indent) {
  const bool flat = std::none_of(j.begin(), j.end(),
                                 [](const Json& e) { return e.is_structured(); });
  if (j.is_array() && (flat || j.empty())) {
    out += "[";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ", ";
      out += j[i].dump();
    }
    out += "]";
    return;
  }
  if (!j.is_structured() || j.empty()) {
    out += j.dump();
    return;
  }
  out += j.is_object() ? "{\n" : "[\n";
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out.append(indent + 2, ' ');
    if (j.is_object()) out += Json(it.key()).dump() + ": ";
    write_json(out, it.value(), indent + 2);
  }
  out += "\n";
  out.append(indent, ' ');
  out += j.is_object() ? "}" : "]";
}

}  // namespace detail

// Indented JSON with arrays of scalars kept on one line.
inline std::string dump(const Json& j) {
  std::string out;
  detail::write_json(out, j, 0);
  return out + "\n";
}

}  // namespace iqp::io
