#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bpdel/flow.hpp"
#include "bpdel/graph.hpp"
#include "bpdel/hole_structure.hpp"
#include "bpdel/parallel.hpp"
#include "bpdel/recognition.hpp"

namespace bpdel {

/// Network H_i for window V' = V[i-2, i+2]:
///   (u,in) -> (u,out)  capacity 1, for u in V'
///   (u,out) -> (v,in)  for every edge uv of G[V'], both directions
///   s -> (v,in)        if v has a neighbour in V[i-4, i-3]
///   (u,out) -> t       if u has a neighbour in V[i+3, i+4]
/// All arcs except the unit ones carry the sentinel capacity |V(g)|.
inline FlowNetwork build_network(const Graph& g, const HolePartition& p, long long i) {
  if (p.m() < 10) throw ContractViolation("hole-cut networks need a shortest hole of length >= 10");
  const VertexSet interior = window(p, i - 2, i + 2).all();
  const VertexSet source_pool = window(p, i - 4, i - 3).all();
  const VertexSet sink_pool = window(p, i + 3, i + 4).all();
  const auto infinity = static_cast<std::int64_t>(g.num_vertices());

  FlowNetwork net;
  std::vector<std::size_t> in_node(g.num_vertices()), out_node(g.num_vertices());
  for (Vertex v : interior) {
    in_node[v] = net.add_node(v, false);
    out_node[v] = net.add_node(v, true);
    net.add_arc(in_node[v], out_node[v], 1);
  }
  for (Vertex u : interior) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && interior.contains(v)) {
        net.add_arc(out_node[u], in_node[v], infinity);
        net.add_arc(out_node[v], in_node[u], infinity);
      }
    }
  }
  auto touches = [&](Vertex v, const VertexSet& pool) {
    for (Vertex w : g.neighbors(v)) {
      if (pool.contains(w)) return true;
    }
    return false;
  };
  for (Vertex v : interior) {
    if (touches(v, source_pool)) net.add_arc(FlowNetwork::kSource, in_node[v], infinity);
  }
  for (Vertex u : interior) {
    if (touches(u, sink_pool)) net.add_arc(out_node[u], FlowNetwork::kSink, infinity);
  }
  return net;
}

struct HoleCut {
  VertexSet vertices;
  std::size_t window_index = 0;
  std::int64_t flow_value = 0;

  std::size_t size() const noexcept { return vertices.size(); }
};

/// Minimum over all windows of the H_i minimum cuts; smallest index wins ties.
/// Throws DiagnosticFailure if a window breaks flow/cut duality or the chosen
/// cut does not leave a bipartite permutation graph.
inline HoleCut min_hole_cut(const Graph& g, const HolePartition& p, std::size_t workers = 1) {
  const std::size_t m = p.m();
  std::vector<std::optional<HoleCut>> per_window(m);
  parallel_for(m, workers, [&](std::size_t i) {
    const auto li = static_cast<long long>(i);
    const FlowResult flow = max_flow_min_cut(build_network(g, p, li));
    if (flow.value != static_cast<std::int64_t>(flow.cut.size()) || flow.cut_capacity != flow.value) {
      throw DiagnosticFailure("flow/cut duality broken in window " + std::to_string(i));
    }
    if (!flow.cut.is_subset_of(window(p, li - 2, li + 2).all())) {
      throw DiagnosticFailure("cut escapes its window " + std::to_string(i));
    }
    per_window[i] = HoleCut{flow.cut, i, flow.value};
  });
  std::optional<HoleCut> best;
  for (auto& c : per_window) {
    if (!best || c->size() < best->size()) best = std::move(c);
  }
  if (!is_bpg(remove_vertices(g, best->vertices).graph).bpg) {
    throw DiagnosticFailure("window " + std::to_string(best->window_index) +
                            " cut does not leave a bipartite permutation graph");
  }
  return *best;
}

}  // namespace bpdel
