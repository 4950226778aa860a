#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "bpdel/graph.hpp"
#include "bpdel/hole_structure.hpp"
#include "bpdel/instances.hpp"
#include "bpdel/patterns.hpp"
#include "bpdel/recognition.hpp"
#include "bpdel/solver.hpp"

namespace bpdel {

/// Keys keep insertion order so output is byte-stable.
using Json = nlohmann::ordered_json;

/// All ids in JSON are the graph's 1-based labels.
inline Json labels_json(const Graph& g, const VertexSet& vs) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(g.label(v));
  return out;
}

inline Json labels_json(const Graph& g, const std::vector<Vertex>& vs) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(g.label(v));
  return out;
}

inline Json to_json(const Graph& g, const ForbiddenSet& f) {
  return Json{{"kind", std::string(to_string(f.kind))}, {"vertices", labels_json(g, f.vertices)}};
}

/// Holes keep their cyclic order.
inline Json to_json(const Graph& g, const Hole& h) {
  return Json{{"length", h.size()}, {"cycle", labels_json(g, h.cycle)}};
}

inline Json to_json(const SolveStats& s) {
  return Json{{"branch_nodes", s.branch_nodes},
              {"max_depth", s.max_depth},
              {"leaves", s.leaves},
              {"forbidden_sets_removed", s.forbidden_sets_removed},
              {"component_cut_sizes", s.component_cut_sizes}};
}

/// {"answer","k","deleted","branch_deleted","cut_deleted","stats","verified"};
/// the deletion fields are empty lists on "no". k is omitted when absent.
inline Json solution_json(const Graph& g, bool yes, std::optional<std::size_t> k, const Solution& s) {
  Json out;
  out["answer"] = yes ? "yes" : "no";
  if (k) out["k"] = *k;
  out["deleted"] = labels_json(g, s.deleted);
  out["branch_deleted"] = labels_json(g, s.branch_deletions);
  out["cut_deleted"] = labels_json(g, s.cut_deletions);
  out["size"] = s.deleted.size();
  out["stats"] = to_json(s.stats);
  out["verified"] = s.verified;
  return out;
}

inline Json to_json(const CheckResult& c) {
  return Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
}

inline Json to_json(const StructureReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return Json{{"passed", r.passed()}, {"checks", checks}};
}

/// One component: its hole, classes per index in local order, parity, report.
inline Json structure_json(const Graph& g, const HolePartition& p, const StructureReport& report) {
  Json classes = Json::array();
  for (std::size_t i = 0; i < p.m(); ++i) {
    classes.push_back(Json{{"index", i}, {"A", labels_json(g, p.A(i))}, {"B", labels_json(g, p.B(i))}});
  }
  return Json{{"hole", to_json(g, p.hole)},
              {"m", p.m()},
              {"parity", p.parity_tag()},
              {"classes", classes},
              {"report", to_json(report)}};
}

inline Json gen_sidecar(const GenSpec& spec, const Generated& out) {
  Json params = Json::object();
  for (const auto& [name, value] : spec.params) params[name] = value;
  Json j{{"family", spec.family}};
  if (!spec.base_family.empty()) j["base_family"] = spec.base_family;
  j["params"] = params;
  j["seed"] = spec.seed;
  j["vertices"] = out.g.num_vertices();
  j["edges"] = out.g.num_edges();
  if (out.opt_upper_bound) j["opt_upper_bound"] = *out.opt_upper_bound;
  if (out.planted) j["planted"] = labels_json(out.g, *out.planted);
  return j;
}

}  // namespace bpdel
