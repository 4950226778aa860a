#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bpdel/errors.hpp"
#include "bpdel/graph.hpp"
#include "bpdel/hole_structure.hpp"
#include "bpdel/instances.hpp"
#include "bpdel/json_io.hpp"
#include "bpdel/recognition.hpp"
#include "bpdel/solver.hpp"

namespace bpdel::cli {

enum ExitCode : int {
  kSuccess = 0,
  kDiagnostic = 1,
  kUsage = 2,
  kContract = 3,
  kNo = 20,
};

struct RunConfig {
  std::string verb;
  std::string input = "-";
  std::optional<long long> k;
  std::string format = "json";
  std::size_t workers = 1;
  bool minimize = false;
  bool verify = true;
  std::size_t oracle_limit = kOracleMaxVertices;
  std::string deleted_path;
  // gen
  GenSpec gen;
  std::vector<std::string> gen_params;
  std::string out_path;
  std::string sidecar_path;
};

namespace detail {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Graph read_input(const std::string& path, std::istream& in) {
  if (path == "-") return parse_graph(in);
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open input file '" + path + "'");
  return parse_graph(file);
}

/// Whitespace-separated 1-based ids; '#' or 'c' starts a comment line.
inline VertexSet read_vertex_list(const std::string& path, const Graph& g) {
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open deletion file '" + path + "'");
  std::vector<Vertex> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(file, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) {
      if (tok == "c" || tok[0] == '#') break;
      std::size_t used = 0;
      long long id = 0;
      try {
        id = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw ParseError(line_no, "expected a vertex id, got '" + tok + "'");
      if (id < 1 || static_cast<std::size_t>(id) > g.num_vertices()) {
        throw ParseError(line_no, "vertex id out of range");
      }
      ids.push_back(static_cast<Vertex>(id - 1));
    }
  }
  return VertexSet(std::move(ids));
}

inline std::string id_list(const Graph& g, const VertexSet& vs) {
  std::string s;
  for (Vertex v : vs) s += (s.empty() ? "" : " ") + std::to_string(g.label(v));
  return s.empty() ? "(none)" : s;
}

inline std::string id_list(const Graph& g, const std::vector<Vertex>& vs) {
  std::string s;
  for (Vertex v : vs) s += (s.empty() ? "" : " ") + std::to_string(g.label(v));
  return s;
}

inline void emit(const RunConfig& cfg, std::ostream& out, const Json& json, const std::string& human) {
  if (cfg.format == "json") {
    out << json.dump(2) << '\n';
  } else {
    out << human;
  }
}

inline void emit_solution(const RunConfig& cfg, std::ostream& out, const Graph& g, bool yes,
                          std::optional<std::size_t> k, const Solution& s) {
  Json j = solution_json(g, yes, k, s);
  if (!cfg.verify) j["verified"] = nullptr;
  std::ostringstream h;
  h << (yes ? "YES" : "NO");
  if (k) h << " k=" << *k;
  if (yes) {
    h << " size=" << s.deleted.size() << '\n';
    h << "deleted: " << id_list(g, s.deleted) << '\n';
    h << "branch deleted: " << id_list(g, s.branch_deletions) << '\n';
    h << "cut deleted: " << id_list(g, s.cut_deletions) << '\n';
    if (cfg.verify) h << "verified: " << (s.verified ? "yes" : "no") << '\n';
  } else {
    h << '\n';
  }
  h << "branch nodes: " << s.stats.branch_nodes << ", max depth: " << s.stats.max_depth << '\n';
  emit(cfg, out, j, h.str());
}

inline int do_recognize(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const Graph g = read_input(cfg.input, in);
  const BpgResult r = is_bpg(g);
  const char* cls = r.bpg ? "bpg" : r.forbidden ? "neither" : "almost-bpg";
  Json j{{"class", cls}};
  j["witness"] = r.forbidden ? to_json(g, *r.forbidden) : Json(nullptr);
  j["hole"] = r.hole ? to_json(g, *r.hole) : Json(nullptr);
  std::ostringstream h;
  if (r.bpg) h << "BPG\n";
  else if (r.forbidden) h << "neither: " << to_string(r.forbidden->kind) << " on " << id_list(g, r.forbidden->vertices) << '\n';
  else h << "almost-BPG: hole of length " << r.hole->size() << " on " << id_list(g, r.hole->cycle) << '\n';
  emit(cfg, out, j, h.str());
  return kSuccess;
}

inline int do_analyze(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const Graph g = read_input(cfg.input, in);
  if (auto x = find_forbidden_set(g)) {
    throw ContractViolation("analyze needs an almost bipartite permutation graph; found " +
                            std::string(to_string(x->kind)) + " on " + id_list(g, x->vertices));
  }
  Json comps = Json::array();
  std::ostringstream h;
  bool all_passed = true;
  for (const VertexSet& comp : connected_components(g)) {
    const InducedSubgraph part = induced_subgraph(g, comp);
    if (!find_shortest_hole(part.graph)) continue;
    const HolePartition p = analyze_component(part.graph);
    const StructureReport report = verify_structure(part.graph, p);
    all_passed = all_passed && report.passed();
    comps.push_back(structure_json(part.graph, p, report));
    h << "component with hole of length " << p.m() << " (" << p.parity_tag() << "): "
      << id_list(part.graph, p.hole.cycle) << '\n';
    for (std::size_t i = 0; i < p.m(); ++i) {
      h << "  " << i << "  A: " << id_list(part.graph, p.A(i)) << "  B: " << id_list(part.graph, p.B(i)) << '\n';
    }
    for (const auto& c : report.checks) {
      h << "  " << (c.passed ? "ok   " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
    }
  }
  if (comps.empty()) throw ContractViolation("analyze needs a graph with a hole");
  emit(cfg, out, Json{{"components", comps}, {"passed", all_passed}}, h.str());
  return all_passed ? kSuccess : kDiagnostic;
}

inline int do_solve(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  if (!cfg.k) throw UsageError("solve needs --k");
  if (*cfg.k < 0) throw UsageError("--k must be non-negative");
  const Graph g = read_input(cfg.input, in);
  const auto k = static_cast<std::size_t>(*cfg.k);
  const SolveResult r = solve_fpt({g, k}, {cfg.workers, cfg.minimize, cfg.verify});
  emit_solution(cfg, out, g, r.yes, k, r.solution);
  return r.yes ? kSuccess : kNo;
}

inline int do_approx(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const Graph g = read_input(cfg.input, in);
  const Solution s = approx9(g, cfg.workers, cfg.verify);
  emit_solution(cfg, out, g, true, std::nullopt, s);
  return kSuccess;
}

inline int do_oracle(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const Graph g = read_input(cfg.input, in);
  Solution s;
  s.deleted = oracle_solve(g, cfg.oracle_limit);
  if (cfg.verify) s.verified = verify_deletion(g, s.deleted).valid;
  emit_solution(cfg, out, g, true, std::nullopt, s);
  return kSuccess;
}

inline int do_verify(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  if (cfg.deleted_path.empty()) throw UsageError("verify needs --deleted FILE");
  const Graph g = read_input(cfg.input, in);
  const VertexSet deleted = read_vertex_list(cfg.deleted_path, g);
  const DeletionCheck check = verify_deletion(g, deleted);
  const bool within = !cfg.k || static_cast<long long>(deleted.size()) <= *cfg.k;
  const bool ok = check.valid && within;
  Json j{{"valid", ok}, {"bpg_after_deletion", check.valid}, {"size", deleted.size()}};
  if (cfg.k) j["k"] = *cfg.k;
  j["witness"] = check.forbidden ? to_json(g, *check.forbidden) : Json(nullptr);
  j["hole"] = check.hole ? to_json(g, *check.hole) : Json(nullptr);
  std::ostringstream h;
  h << (ok ? "valid" : "invalid") << ": " << deleted.size() << " vertices deleted\n";
  if (check.forbidden) h << "remaining " << to_string(check.forbidden->kind) << " on " << id_list(g, check.forbidden->vertices) << '\n';
  if (check.hole) h << "remaining hole on " << id_list(g, check.hole->cycle) << '\n';
  if (!within) h << "size exceeds k = " << *cfg.k << '\n';
  emit(cfg, out, j, h.str());
  return ok ? kSuccess : kNo;
}

inline int do_gen(RunConfig cfg, std::ostream& out) {
  for (const std::string& kv : cfg.gen_params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects name=value, got '" + kv + "'");
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(kv.substr(eq + 1), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != kv.size() - eq - 1) throw UsageError("--param value must be an integer in '" + kv + "'");
    cfg.gen.params[kv.substr(0, eq)] = value;
  }
  const Generated g = generate(cfg.gen);
  const std::string text = serialize(g.g);
  const std::string sidecar = gen_sidecar(cfg.gen, g).dump(2) + "\n";
  if (cfg.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.out_path);
    if (!file) throw UsageError("cannot write '" + cfg.out_path + "'");
    file << text;
    if (cfg.sidecar_path.empty()) cfg.sidecar_path = cfg.out_path + ".json";
  }
  if (!cfg.sidecar_path.empty()) {
    std::ofstream file(cfg.sidecar_path);
    if (!file) throw UsageError("cannot write '" + cfg.sidecar_path + "'");
    file << sidecar;
  }
  return kSuccess;
}

}  // namespace detail

/// Parses arguments and runs one verb. Never throws; returns the exit status.
inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bipartite permutation vertex deletion toolkit", "bpdel"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub, bool takes_input) {
    if (takes_input) sub->add_option("input", cfg.input, "Graph file in edge-list format, '-' for stdin");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "human"}));
    sub->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
  };
  auto verify_flag = [&](CLI::App* sub) {
    sub->add_flag("--verify,!--no-verify", cfg.verify, "Re-check emitted deletion sets (default on)");
  };

  auto* recognize = app.add_subcommand("recognize", "Classify as BPG, almost-BPG or neither, with a witness");
  common(recognize, true);
  auto* analyze = app.add_subcommand("analyze", "Hole structure dump and verification report");
  common(analyze, true);
  auto* solve = app.add_subcommand("solve", "Exact FPT solver; exit 0 on YES, 20 on NO");
  common(solve, true);
  verify_flag(solve);
  solve->add_option("--k", cfg.k, "Deletion budget")->required();
  solve->add_flag("--minimize", cfg.minimize, "Greedily shrink the returned deletion set");
  auto* approx = app.add_subcommand("approx", "9-approximation");
  common(approx, true);
  verify_flag(approx);
  auto* oracle = app.add_subcommand("oracle", "Brute-force minimum deletion set");
  common(oracle, true);
  verify_flag(oracle);
  oracle->add_option("--max-n", cfg.oracle_limit, "Refuse graphs with more vertices");
  auto* verify = app.add_subcommand("verify", "Check a claimed deletion set; exit 0 if valid, 20 if not");
  common(verify, true);
  verify->add_option("--deleted", cfg.deleted_path, "File of 1-based vertex ids")->required();
  verify->add_option("--k", cfg.k, "Also require at most k deletions");
  auto* gen = app.add_subcommand("gen", "Seeded instance generator");
  gen->add_option("--family", cfg.gen.family, "staircase, cycle, thickened_cycle, random or planted")
      ->required()
      ->check(CLI::IsMember({"staircase", "cycle", "thickened_cycle", "random", "planted"}));
  gen->add_option("--base-family", cfg.gen.base_family, "Base family of a planted instance");
  gen->add_option("--param", cfg.gen_params, "Family knob name=value (repeatable)");
  gen->add_option("--seed", cfg.gen.seed, "64-bit seed");
  gen->add_option("--out", cfg.out_path, "Graph output file (default stdout)");
  gen->add_option("--sidecar", cfg.sidecar_path, "JSON sidecar file (default <out>.json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (recognize->parsed()) return detail::do_recognize(cfg, in, out);
    if (analyze->parsed()) return detail::do_analyze(cfg, in, out);
    if (solve->parsed()) return detail::do_solve(cfg, in, out);
    if (approx->parsed()) return detail::do_approx(cfg, in, out);
    if (oracle->parsed()) return detail::do_oracle(cfg, in, out);
    if (verify->parsed()) return detail::do_verify(cfg, in, out);
    if (gen->parsed()) return detail::do_gen(cfg, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const detail::UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ContractViolation& e) {
    err << "contract violation: " << e.what() << '\n';
    return kContract;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kDiagnostic;
  }
  return kUsage;
}

}  // namespace bpdel::cli
