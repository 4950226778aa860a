#include <gtest/gtest.h>

#include "bpdel/hole_cut.hpp"
#include "bpdel/instances.hpp"
#include "bpdel/solver.hpp"
#include "oracles.hpp"

using namespace bpdel;

namespace {

HolePartition identity_partition(const Graph& g, std::size_t m) {
  Hole h;
  for (std::size_t i = 0; i < m; ++i) h.cycle.push_back(static_cast<Vertex>(i));
  return build_local_orders(g, classify_around_hole(g, h));
}

/// Random connected almost-BPG with hole: C_m plus vertices with random
/// neighbourhoods, each kept only if the graph stays almost-BPG.
Graph random_almost_bpg(SplitMix64& rng, std::size_t m, std::size_t extra) {
  Graph g = cycle_graph(m);
  for (std::size_t tries = 0; g.num_vertices() < m + extra && tries < 400; ++tries) {
    std::vector<Vertex> nb;
    for (Vertex v = 0; v < static_cast<Vertex>(g.num_vertices()); ++v) {
      if (rng.chance(0.25)) nb.push_back(v);
    }
    if (nb.empty()) continue;
    Graph candidate = add_vertices(g, {nb});
    if (is_almost_bpg(candidate).almost_bpg && find_shortest_hole(candidate)) g = std::move(candidate);
  }
  return g;
}

/// C_m with class i blown up to 2 or 3 twins, consecutive classes joined
/// completely except for edges dropped with probability `drop`.
Graph blow_up(SplitMix64& rng, std::size_t m, double drop) {
  std::vector<std::vector<Vertex>> cls(m);
  Vertex next = 0;
  for (auto& c : cls) {
    for (std::size_t t = 0, s = 2 + rng.below(2); t < s; ++t) c.push_back(next++);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    for (Vertex a : cls[i]) {
      for (Vertex b : cls[(i + 1) % m]) {
        if (!rng.chance(drop)) edges.emplace_back(a, b);
      }
    }
  }
  return Graph::from_edges(static_cast<std::size_t>(next), edges);
}

}  // namespace

TEST(Network, BareC10WindowZero) {
  const Graph g = cycle_graph(10);
  const HolePartition p = identity_partition(g, 10);
  const FlowNetwork net = build_network(g, p, 0);
  EXPECT_EQ(net.num_nodes(), 12u);
  std::size_t unit = 0, cross = 0, source = 0, sink = 0;
  for (const FlowArc& a : net.arcs) {
    if (a.from == FlowNetwork::kSource) {
      ++source;
      EXPECT_EQ(net.node_vertex[a.to], 8);
      EXPECT_FALSE(net.node_is_out[a.to]);
      EXPECT_EQ(a.capacity, 10);
    } else if (a.to == FlowNetwork::kSink) {
      ++sink;
      EXPECT_EQ(net.node_vertex[a.from], 2);
      EXPECT_TRUE(net.node_is_out[a.from]);
      EXPECT_EQ(a.capacity, 10);
    } else if (net.node_vertex[a.from] == net.node_vertex[a.to]) {
      ++unit;
      EXPECT_EQ(a.capacity, 1);
    } else {
      ++cross;
      EXPECT_TRUE(net.node_is_out[a.from]);
      EXPECT_FALSE(net.node_is_out[a.to]);
      EXPECT_TRUE(g.adjacent(net.node_vertex[a.from], net.node_vertex[a.to]));
      EXPECT_EQ(a.capacity, 10);
    }
  }
  EXPECT_EQ(unit, 5u);
  EXPECT_EQ(cross, 8u);
  EXPECT_EQ(source, 1u);
  EXPECT_EQ(sink, 1u);
}

TEST(Network, RotationalSymmetryOnBareCycle) {
  const Graph g = cycle_graph(10);
  const HolePartition p = identity_partition(g, 10);
  const FlowNetwork base = build_network(g, p, 0);
  for (long long i = 1; i < 10; ++i) {
    const FlowNetwork net = build_network(g, p, i);
    EXPECT_EQ(net.num_nodes(), base.num_nodes());
    EXPECT_EQ(net.arcs.size(), base.arcs.size());
    EXPECT_EQ(max_flow_min_cut(net).value, 1);
  }
}

TEST(Network, ShortHoleIsAContractViolation) {
  const Graph g = cycle_graph(10);
  HolePartition p = identity_partition(g, 10);
  p.hole.cycle.resize(9);
  EXPECT_THROW(build_network(g, p, 0), ContractViolation);
}

TEST(MaxFlow, SinglePath) {
  FlowNetwork net;
  const auto in = net.add_node(0, false), out = net.add_node(0, true);
  net.add_arc(FlowNetwork::kSource, in, 5);
  net.add_arc(in, out, 1);
  net.add_arc(out, FlowNetwork::kSink, 5);
  const FlowResult r = max_flow_min_cut(net);
  EXPECT_EQ(r.value, 1);
  EXPECT_EQ(r.cut.members(), (std::vector<Vertex>{0}));
  EXPECT_EQ(r.cut_capacity, 1);
}

TEST(MaxFlow, TwoDisjointPaths) {
  FlowNetwork net;
  for (Vertex v : {0, 1}) {
    const auto in = net.add_node(v, false), out = net.add_node(v, true);
    net.add_arc(FlowNetwork::kSource, in, 9);
    net.add_arc(in, out, 1);
    net.add_arc(out, FlowNetwork::kSink, 9);
  }
  const FlowResult r = max_flow_min_cut(net);
  EXPECT_EQ(r.value, 2);
  EXPECT_EQ(r.cut.size(), 2u);
}

TEST(MaxFlow, DisconnectedGivesZero) {
  FlowNetwork net;
  const auto in = net.add_node(0, false), out = net.add_node(0, true);
  net.add_arc(FlowNetwork::kSource, in, 3);
  net.add_arc(in, out, 1);
  const FlowResult r = max_flow_min_cut(net);
  EXPECT_EQ(r.value, 0);
  EXPECT_TRUE(r.cut.empty());
}

TEST(MaxFlow, NeedsResidualReversal) {
  // Diamond where the first BFS path must be partly undone.
  FlowNetwork net;
  std::vector<std::size_t> in, out;
  for (Vertex v = 0; v < 4; ++v) {
    in.push_back(net.add_node(v, false));
    out.push_back(net.add_node(v, true));
    net.add_arc(in[v], out[v], 1);
  }
  net.add_arc(FlowNetwork::kSource, in[0], 9);
  net.add_arc(FlowNetwork::kSource, in[1], 9);
  net.add_arc(out[0], in[2], 9);
  net.add_arc(out[0], in[3], 9);
  net.add_arc(out[1], in[2], 9);
  net.add_arc(out[2], FlowNetwork::kSink, 9);
  net.add_arc(out[3], FlowNetwork::kSink, 9);
  const FlowResult r = max_flow_min_cut(net);
  EXPECT_EQ(r.value, 2);
  EXPECT_EQ(static_cast<std::int64_t>(r.cut.size()), r.value);
  EXPECT_FALSE(oracle::reaches_sink(net, r.cut));
}

TEST(MinHoleCut, BareCycles) {
  for (std::size_t m : {10u, 11u, 14u, 20u}) {
    const Graph g = cycle_graph(m);
    const HoleCut cut = min_hole_cut(g, identity_partition(g, m));
    EXPECT_EQ(cut.size(), 1u) << m;
    EXPECT_EQ(cut.window_index, 0u);
    EXPECT_TRUE(is_bpg(remove_vertices(g, cut.vertices).graph).bpg);
  }
}

TEST(MinHoleCut, DuplicatedHoleVertexMatchesBruteForce) {
  // u = 10 with N(u) = {c0, c2}: every hole passes through c0 and c2.
  const Graph g = add_vertices(cycle_graph(10), {{0, 2}});
  const std::size_t brute = oracle::min_deletion(g);
  EXPECT_EQ(brute, 1u);
  EXPECT_TRUE(is_bpg(remove_vertices(g, VertexSet{0}).graph).bpg);
  const HoleCut cut = min_hole_cut(g, analyze_component(g));
  EXPECT_EQ(cut.size(), brute);
  EXPECT_TRUE(is_bpg(remove_vertices(g, cut.vertices).graph).bpg);
}

TEST(MinHoleCut, DoubledCycleNeedsTwo) {
  // Every c_i has a twin c_i' (id 10 + i) with the same neighbourhood type.
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 10; ++i) {
    const Vertex j = (i + 1) % 10;
    for (Vertex a : {i, static_cast<Vertex>(10 + i)}) {
      for (Vertex b : {j, static_cast<Vertex>(10 + j)}) edges.emplace_back(a, b);
    }
  }
  const Graph g = Graph::from_edges(20, edges);
  ASSERT_TRUE(is_almost_bpg(g).almost_bpg);
  const HoleCut cut = min_hole_cut(g, analyze_component(g));
  EXPECT_EQ(cut.size(), 2u);
  EXPECT_EQ(oracle_solve(g, 20).size(), 2u);
}

TEST(MinHoleCut, MatchesBruteForceOnSmallComponents) {
  SplitMix64 rng(606);
  std::size_t instances = 0;
  for (int trial = 0; trial < 160; ++trial) {
    const std::size_t m = 10 + rng.below(3);
    const Graph g = trial % 2 ? random_almost_bpg(rng, m, 12 - m)
                              : gen_thickened_cycle(m, rng.below(13 - m), rng.below(13 - m) / 2, rng.next());
    if (g.num_vertices() > 12) continue;
    ASSERT_TRUE(is_almost_bpg(g).almost_bpg);
    ASSERT_TRUE(find_shortest_hole(g));
    const HoleCut cut = min_hole_cut(g, analyze_component(g));
    EXPECT_EQ(cut.size(), oracle::min_deletion(g)) << serialize(g);
    EXPECT_TRUE(oracle::bpg(remove_vertices(g, cut.vertices).graph));
    ++instances;
  }
  EXPECT_GE(instances, 100u);
}

TEST(MinHoleCut, BlowUpsMatchSubsetSearch) {
  // Up to 36 vertices: too large for the obstruction oracle, so the minimum
  // comes from the increasing-size subset search with is_bpg.
  SplitMix64 rng(3);
  std::size_t checked = 0, thick = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = blow_up(rng, 10 + rng.below(3), trial % 2 ? 0.0 : 0.15);
    if (connected_components(g).size() != 1 || !is_almost_bpg(g).almost_bpg || !find_shortest_hole(g)) continue;
    const HoleCut cut = min_hole_cut(g, analyze_component(g));
    const VertexSet best = oracle_solve(g, 64);
    EXPECT_EQ(cut.size(), best.size()) << serialize(g);
    thick += cut.size() >= 2;
    ++checked;
  }
  EXPECT_GE(checked, 30u);
  EXPECT_GE(thick, 20u);
}

TEST(MinHoleCut, LargeThickenedCyclesDualityAndValidity) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t m = 10 + seed % 7;
    const Graph g = gen_thickened_cycle(m, 10 + seed % 11, 5 + seed % 9, seed);
    const HolePartition p = analyze_component(g);
    for (long long i = 0; i < static_cast<long long>(p.m()); ++i) {
      const FlowNetwork net = build_network(g, p, i);
      const FlowResult r = max_flow_min_cut(net);
      EXPECT_EQ(r.value, static_cast<std::int64_t>(r.cut.size()));
      EXPECT_EQ(r.cut_capacity, r.value);
      EXPECT_TRUE(r.cut.is_subset_of(window(p, i - 2, i + 2).all()));
      EXPECT_FALSE(oracle::reaches_sink(net, r.cut));
    }
    const HoleCut cut = min_hole_cut(g, p);
    EXPECT_TRUE(is_bpg(remove_vertices(g, cut.vertices).graph).bpg);
    EXPECT_EQ(min_hole_cut(g, p, 3).vertices, cut.vertices);
  }
}

TEST(SolveComponentPoly, Examples) {
  EXPECT_EQ(solve_component_poly(path_graph(9)).size(), 0u);
  EXPECT_EQ(solve_component_poly(cycle_graph(10)).size(), 1u);
  const Graph dup = add_vertices(cycle_graph(10), {{0, 2}});
  EXPECT_EQ(solve_component_poly(dup).size(), oracle::min_deletion(dup));
  EXPECT_THROW(solve_component_poly(cycle_graph(7)), ContractViolation);
  EXPECT_THROW(solve_component_poly(disjoint_union(cycle_graph(10), cycle_graph(10))), ContractViolation);
}
