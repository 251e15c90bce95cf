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


#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "iqp/iqp.hpp"

namespace {

using iqp::io::Json;

enum Exit : int {
  kOk = 0,
  kInternal = 1,
  kParse = 2,
  kNotConcave = 3,
  kNotCover = 4,
  kUnbounded = 5,
  kBudget = 6,
  kKappa = 7,
  kMismatch = 8,
};

constexpr const char* kExitHelp =
    "Exit codes:\n"
    "  0  success (optimal or infeasible)\n"
    "  1  internal error\n"
    "  2  parse error or invalid input\n"
    "  3  objective is not concave (hull --mode concave)\n"
    "  4  cover is not a vertex cover (reduce)\n"
    "  5  unbounded region\n"
    "  6  node, child, cell or enumeration budget exceeded\n"
    "  7  kappa outside [0, |V|] (reduce)\n"
    "  8  verify found a mismatch or invariant violation\n";

struct SolveFlags {
  std::uint64_t max_nodes = iqp::SolverOptions{}.max_nodes;
  std::uint64_t max_children = iqp::SolverOptions{}.max_children;
  unsigned threads = 1;
  bool no_parity = false;
  bool timing = false;

  void add(CLI::App* app) {
    app->add_option("--max-nodes", max_nodes, "Node budget")->capture_default_str();
    app->add_option("--max-children", max_children, "Children per node budget")
        ->capture_default_str();
    app->add_option("--threads", threads, "Worker threads for the root's subtrees")
        ->capture_default_str();
    app->add_flag("--no-parity", no_parity, "Disable the gradient parity filter");
    app->add_flag("--timing", timing, "Include wall time (makes output nondeterministic)");
  }

  iqp::SolverOptions options() const {
    iqp::SolverOptions o;
    o.max_nodes = max_nodes;
    o.max_children = max_children;
    o.threads = threads;
    o.parity_filter = !no_parity;
    return o;
  }
};

struct GenFlags {
  std::uint64_t seed = 0;
  std::size_t n = 2;
  long L = 3;
  std::size_t m = 0;
  long box = 3;

  void add(CLI::App* app) {
    app->add_option("--seed", seed, "Random seed")->capture_default_str();
    app->add_option("--n", n, "Dimension")->capture_default_str()->check(CLI::Range(1, 64));
    app->add_option("--L", L, "Entry bound for Q, c and the extra rows")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    app->add_option("--m", m, "Extra random rows beyond the box")->capture_default_str();
    app->add_option("--box", box, "Box half-width")->capture_default_str()->check(
        CLI::NonNegativeNumber);
  }

  iqp::GeneratorParams params(std::uint64_t offset = 0) const {
    iqp::GeneratorParams g;
    g.seed = seed + offset;
    g.n = n;
    g.entry_bound = L;
    g.extra_rows = m;
    g.box = box;
    return g;
  }
};

iqp::Algorithm parse_algorithm(const std::string& s) {
  return s == "sequential" ? iqp::Algorithm::Sequential : iqp::Algorithm::Batch;
}

int status_exit(const iqp::SolveResult& r) {
  switch (r.status) {
    case iqp::SolveStatus::UnboundedRegion: return kUnbounded;
    case iqp::SolveStatus::BudgetExceeded: return kBudget;
    default: return kOk;
  }
}

int cmd_solve(const std::string& path, const std::string& algorithm,
              const SolveFlags& flags) {
  iqp::IqpInstance inst = iqp::io::load_instance(path);
  auto t0 = std::chrono::steady_clock::now();
  iqp::SolveResult r = algorithm == "oracle"
                           ? iqp::oracle_min(inst)
                           : iqp::solve(inst, parse_algorithm(algorithm), flags.options());
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  Json out;
  out["algorithm"] = algorithm;
  out["n"] = inst.n;
  out["m"] = inst.a.rows();
  out.update(iqp::io::result_to_json(r, algorithm != "oracle"));
  if (flags.timing) out["wall_ms"] = ms;
  std::cout << iqp::io::dump(out);
  return status_exit(r);
}

Json verify_json(const std::string& label, const iqp::VerifyReport& rep) {
  Json j;
  j["instance"] = label;
  if (rep.skipped) {
    j["result"] = "skipped";
    j["reason"] = rep.skip_reason;
    return j;
  }
  j["result"] = rep.ok() ? "agree" : "mismatch";
  j["status"] = to_string(rep.oracle.status);
  j["value"] = rep.oracle.value ? Json(rep.oracle.value->get_str()) : Json(nullptr);
  j["batch"] = iqp::io::result_to_json(rep.batch, false);
  j["sequential"] = iqp::io::result_to_json(rep.sequential, false);
  Json audit;
  audit["nodes"] = rep.batch_audit.nodes + rep.sequential_audit.nodes;
  audit["gradient_children"] = rep.sequential_audit.gradient_children;
  audit["batch_children"] = rep.batch_audit.batch_children;
  audit["delta_checks"] = rep.batch_audit.delta_checks + rep.sequential_audit.delta_checks;
  j["audit"] = std::move(audit);
  j["mismatches"] = rep.mismatches;
  return j;
}

int cmd_verify(const std::vector<std::string>& paths, std::size_t trials,
               const GenFlags& gen, const SolveFlags& flags, std::uint64_t oracle_budget) {
  iqp::VerifyOptions vo;
  vo.solver = flags.options();
  vo.oracle_budget = oracle_budget;
  Json reports = Json::array();
  std::size_t agree = 0, skipped = 0, mismatched = 0;
  auto record = [&](const std::string& label, const iqp::IqpInstance& inst) {
    iqp::VerifyReport rep = iqp::verify_instance(inst, vo);
    if (rep.skipped) ++skipped;
    else if (rep.ok()) ++agree;
    else ++mismatched;
    reports.push_back(verify_json(label, rep));
  };
  for (const auto& p : paths) record(p, iqp::io::load_instance(p));
  for (std::size_t t = 0; t < trials; ++t) {
    iqp::GeneratorParams g = gen.params(t);
    record("seed " + std::to_string(g.seed), iqp::generate_instance(g));
  }
  Json out;
  out["instances"] = std::move(reports);
  out["agree"] = agree;
  out["skipped"] = skipped;
  out["mismatched"] = mismatched;
  std::cout << iqp::io::dump(out);
  return mismatched ? kMismatch : kOk;
}

int cmd_gen(const GenFlags& gen, const std::string& out_path) {
  const std::string text = iqp::io::dump(iqp::io::instance_to_json(
      iqp::generate_instance(gen.params())));
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw iqp::ParseError("cannot write " + out_path);
    out << text;
  }
  return kOk;
}

int cmd_hull(const std::string& path, const std::string& mode, std::uint64_t max_cells) {
  const Json doc = iqp::io::read_json(path);
  const iqp::Polytope p = iqp::io::parse_polytope(doc);
  if (!iqp::is_bounded(p)) {
    Json out;
    out["mode"] = mode;
    out["status"] = to_string(iqp::SolveStatus::UnboundedRegion);
    std::cout << iqp::io::dump(out);
    return kUnbounded;
  }
  iqp::HullOptions ho;
  ho.max_cells = max_cells;
  Json out;
  out["mode"] = mode;
  out["n"] = p.dim();
  out["m"] = p.num_rows();
  if (mode == "brute") {
    Json pts = Json::array();
    for (const auto& v : iqp::brute_integer_hull_vertices(p)) pts.push_back(iqp::io::to_json(v));
    out["count"] = pts.size();
    out["vertices"] = std::move(pts);
  } else if (mode == "superset") {
    iqp::HullCandidateSet s = iqp::integer_hull_vertex_superset(p, ho);
    out["count"] = s.points.size();
    out.update(iqp::io::candidates_to_json(s));
  } else {
    iqp::IqpInstance inst = iqp::io::parse_instance(doc);
    iqp::SolveResult r = iqp::concave_minimize(p, inst.q, inst.c, ho);
    out.update(iqp::io::result_to_json(r, false));
    out["candidates"] = r.stats.leaves;
  }
  std::cout << iqp::io::dump(out);
  return kOk;
}

std::vector<std::size_t> parse_cover(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != tok.size() || tok[0] == '-')
      throw iqp::ParseError("cover: not a vertex index: " + tok);
    out.push_back(v);
  }
  return out;
}

int cmd_reduce(const std::string& path, const std::string& cover_arg, bool cover_given,
               long long kappa, const SolveFlags& flags, const std::string& emit) {
  std::ifstream in(path);
  if (!in) throw iqp::ParseError("cannot open " + path);
  iqp::Graph g = iqp::parse_graph(in);
  std::vector<std::size_t> cover =
      cover_given ? parse_cover(cover_arg) : iqp::minimum_vertex_cover(g);
  iqp::DksReduction red = iqp::densest_k_subgraph_to_iqp(g, cover, kappa);
  if (!emit.empty()) {
    std::ofstream out(emit, std::ios::binary);
    if (!out) throw iqp::ParseError("cannot write " + emit);
    out << iqp::io::dump(iqp::io::instance_to_json(red.instance));
  }
  iqp::SolveResult r = iqp::solve(red.instance, iqp::Algorithm::Batch, flags.options());
  Json out;
  out["vertices"] = g.n;
  out["edges_total"] = g.edges.size();
  out["kappa"] = red.kappa;
  out["cover"] = red.partition.cover;
  out["types"] = red.partition.types.size();
  out["variables"] = red.instance.n;
  out["result"] = iqp::io::result_to_json(r, true);
  if (r.optimal()) {
    auto s = iqp::decode_subgraph(*r.witness, red.partition);
    out["subgraph"] = s;
    out["edges"] = iqp::induced_edges(g, s);
  }
  if (emit.empty()) out["instance"] = iqp::io::instance_to_json(red.instance);
  std::cout << iqp::io::dump(out);
  return status_exit(r);
}

int cmd_bench(std::size_t count, std::uint64_t seed, const std::string& algorithm,
              const SolveFlags& flags) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < count; ++i) {
    iqp::GeneratorParams g = iqp::suite_params(seed, i);
    iqp::IqpInstance inst = iqp::generate_instance(g);
    auto t0 = std::chrono::steady_clock::now();
    iqp::SolveResult r = iqp::solve(inst, parse_algorithm(algorithm), flags.options());
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    Json row;
    row["index"] = i;
    row["seed"] = g.seed;
    row["n"] = g.n;
    row["extra_rows"] = g.extra_rows;
    row.update(iqp::io::result_to_json(r, true));
    if (flags.timing) row["wall_ms"] = ms;
    rows.push_back(std::move(row));
  }
  Json out;
  out["algorithm"] = algorithm;
  out["instances"] = std::move(rows);
  std::cout << iqp::io::dump(out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for indefinite integer quadratic programs"};
  app.footer(kExitHelp);
  app.require_subcommand(1);

  SolveFlags flags;
  GenFlags gen;
  std::string path, algorithm = "batch", mode = "superset", out_path, cover, emit;
  std::vector<std::string> paths;
  std::size_t trials = 0, count = 20;
  long long kappa = 0;
  std::uint64_t max_cells = iqp::HullOptions{}.max_cells;
  std::uint64_t oracle_budget = iqp::kDefaultEnumerationBudget;
  std::uint64_t bench_seed = 11;

  auto* solve = app.add_subcommand("solve", "Solve an instance file");
  solve->add_option("path", path, "Instance file")->required();
  solve->add_option("--algorithm", algorithm, "batch, sequential or oracle")
      ->capture_default_str()
      ->check(CLI::IsMember({"batch", "sequential", "oracle"}));
  flags.add(solve);

  auto* verify = app.add_subcommand("verify", "Cross-check batch, sequential and oracle");
  verify->add_option("paths", paths, "Instance files");
  verify->add_option("--trials", trials, "Generated instances to check (seeds seed, seed+1, ...)")
      ->capture_default_str();
  verify->add_option("--oracle-budget", oracle_budget, "Largest box volume the oracle enumerates")
      ->capture_default_str();
  gen.add(verify);
  flags.add(verify);

  auto* genc = app.add_subcommand("gen", "Generate a random bounded instance");
  gen.add(genc);
  genc->add_option("-o,--output", out_path, "Write to a file instead of stdout");

  auto* hull = app.add_subcommand("hull", "Integer hull vertices and concave minimization");
  hull->add_option("path", path, "Polytope or instance file")->required();
  hull->add_option("--mode", mode, "superset, brute or concave")
      ->capture_default_str()
      ->check(CLI::IsMember({"superset", "brute", "concave"}));
  hull->add_option("--max-cells", max_cells, "Cell budget")->capture_default_str();

  auto* reduce = app.add_subcommand("reduce", "Densest k-Subgraph through the IQP solver");
  reduce->add_option("path", path, "Graph file (\"p n m\" header, one \"u v\" per line)")
      ->required();
  auto* cover_opt = reduce->add_option(
      "--cover", cover, "Vertex cover, comma separated (default: a minimum cover)");
  reduce->add_option("--kappa", kappa, "Subgraph size")->required();
  reduce->add_option("--emit", emit, "Write the reduced instance to a file");
  flags.add(reduce);

  auto* bench = app.add_subcommand("bench", "Solve the seeded random suite and report statistics");
  bench->add_option("--count", count, "Instances")->capture_default_str();
  bench->add_option("--seed", bench_seed, "Suite seed")->capture_default_str();
  bench->add_option("--algorithm", algorithm, "batch or sequential")
      ->capture_default_str()
      ->check(CLI::IsMember({"batch", "sequential"}));
  flags.add(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*solve) return cmd_solve(path, algorithm, flags);
    if (*verify) return cmd_verify(paths, trials, gen, flags, oracle_budget);
    if (*genc) return cmd_gen(gen, out_path);
    if (*hull) return cmd_hull(path, mode, max_cells);
    if (*reduce) return cmd_reduce(path, cover, cover_opt->count() > 0, kappa, flags, emit);
    if (*bench) return cmd_bench(count, bench_seed, algorithm, flags);
  } catch (const iqp::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const iqp::NotConcave& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotConcave;
  } catch (const iqp::NotAVertexCover& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotCover;
  } catch (const iqp::BudgetExceeded& e) {
    std::cerr << "error: budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const iqp::KappaOutOfRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kKappa;
  } catch (const iqp::Error& e) {
    // NotSymmetric, InvalidInstance, RankDeficientRows: bad input.
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
