#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <vector>

#include "bpdel/graph.hpp"

namespace bpdel {

struct FlowArc {
  std::size_t from = 0;
  std::size_t to = 0;
  std::int64_t capacity = 0;
};

/// Directed capacitated network. Nodes created by add_split_vertex() stand
/// for (v, in) and (v, out) of an original vertex v, joined by a unit arc.
struct FlowNetwork {
  static constexpr std::size_t kSource = 0;
  static constexpr std::size_t kSink = 1;

  std::vector<FlowArc> arcs;
  std::vector<Vertex> node_vertex{-1, -1};  // original vertex, -1 for s and t
  std::vector<char> node_is_out{0, 0};

  std::size_t num_nodes() const noexcept { return node_vertex.size(); }

  std::size_t add_node(Vertex v, bool out) {
    node_vertex.push_back(v);
    node_is_out.push_back(out ? 1 : 0);
    return node_vertex.size() - 1;
  }

  void add_arc(std::size_t from, std::size_t to, std::int64_t capacity) {
    arcs.push_back({from, to, capacity});
  }
};

struct FlowResult {
  std::int64_t value = 0;
  /// Original vertices whose (v,in)->(v,out) arc crosses the residual cut.
  VertexSet cut;
  /// Total capacity of all arcs leaving the source side of the cut.
  std::int64_t cut_capacity = 0;
  std::vector<char> source_side;
};

/// Shortest-augmenting-path maximum flow (Edmonds–Karp) and the minimum cut
/// given by residual reachability from the source.
inline FlowResult max_flow_min_cut(const FlowNetwork& net) {
  struct Residual {
    std::size_t to;
    std::int64_t cap;
  };
  const std::size_t nodes = net.num_nodes();
  std::vector<Residual> res;
  std::vector<std::vector<std::size_t>> out(nodes);
  res.reserve(net.arcs.size() * 2);
  for (const FlowArc& a : net.arcs) {
    out[a.from].push_back(res.size());
    res.push_back({a.to, a.capacity});
    out[a.to].push_back(res.size());
    res.push_back({a.from, 0});
  }

  FlowResult result;
  std::vector<std::size_t> via(nodes);
  std::vector<char> reached(nodes);
  auto bfs = [&] {
    std::fill(reached.begin(), reached.end(), 0);
    std::deque<std::size_t> queue{FlowNetwork::kSource};
    reached[FlowNetwork::kSource] = 1;
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t e : out[x]) {
        const std::size_t y = res[e].to;
        if (res[e].cap > 0 && !reached[y]) {
          reached[y] = 1;
          via[y] = e;
          queue.push_back(y);
        }
      }
    }
    return reached[FlowNetwork::kSink] != 0;
  };

  while (bfs()) {
    std::int64_t push = std::numeric_limits<std::int64_t>::max();
    for (std::size_t y = FlowNetwork::kSink; y != FlowNetwork::kSource; y = res[via[y] ^ 1].to) {
      push = std::min(push, res[via[y]].cap);
    }
    for (std::size_t y = FlowNetwork::kSink; y != FlowNetwork::kSource; y = res[via[y] ^ 1].to) {
      res[via[y]].cap -= push;
      res[via[y] ^ 1].cap += push;
    }
    result.value += push;
  }

  // bfs() left `reached` as the residual source side.
  result.source_side = reached;
  std::vector<Vertex> cut;
  for (const FlowArc& a : net.arcs) {
    if (!reached[a.from] || reached[a.to]) continue;
    result.cut_capacity += a.capacity;
    const Vertex v = net.node_vertex[a.from];
    if (v >= 0 && v == net.node_vertex[a.to] && !net.node_is_out[a.from] && net.node_is_out[a.to]) {
      cut.push_back(v);
    }
  }
  result.cut = VertexSet(std::move(cut));
  return result;
}

}  // namespace bpdel
