#include <gtest/gtest.h>

#include "bpdel/errors.hpp"
#include "bpdel/graph.hpp"

using namespace bpdel;

namespace {

std::size_t parse_error_line(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "expected a parse error for:\n" << text;
  return 0;
}

}  // namespace

TEST(VertexSet, SortsAndDeduplicates) {
  VertexSet s{5, 1, 3, 1, 5};
  EXPECT_EQ(s.members(), (std::vector<Vertex>{1, 3, 5}));
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(2));
  s.insert(2);
  s.insert(VertexSet{0, 5});
  EXPECT_EQ(s.members(), (std::vector<Vertex>{0, 1, 2, 3, 5}));
  EXPECT_TRUE((VertexSet{1, 2}).is_subset_of(s));
  EXPECT_FALSE((VertexSet{4}).is_subset_of(s));
}

TEST(Graph, FromEdgesMergesDuplicatesAndRejectsLoops) {
  const Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}, {1, 2}});
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_THROW(Graph::from_edges(3, {{1, 1}}), ContractViolation);
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), ContractViolation);
}

TEST(Parse, TriangleWithComment) {
  const Graph g = parse_graph("c a triangle\np edge 3 3\ne 1 2\ne 2 3\ne 3 1\n");
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_edges(), 3u);
  EXPECT_TRUE(g.adjacent(0, 2));
}

TEST(Parse, DuplicateEdgesMergedAndNoTrailingNewline) {
  const Graph g = parse_graph("p edge 2 2\ne 1 2\ne 2 1");
  EXPECT_EQ(g.num_edges(), 1u);
}

TEST(Parse, IsolatedVertices) {
  const Graph g = parse_graph("p edge 4 0\n");
  EXPECT_EQ(g.num_vertices(), 4u);
  EXPECT_EQ(connected_components(g).size(), 4u);
}

TEST(Parse, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("p edge 3 1\ne 1 4\n"), 2u);
  EXPECT_EQ(parse_error_line("p edge 3 1\ne 2 2\n"), 2u);
  EXPECT_EQ(parse_error_line("c x\np edge three 1\n"), 2u);
  EXPECT_EQ(parse_error_line("e 1 2\n"), 1u);
  EXPECT_EQ(parse_error_line("p edge 3 0\np edge 3 0\n"), 2u);
  EXPECT_EQ(parse_error_line("p edge 3 1\ne 1 2 3\n"), 2u);
  EXPECT_EQ(parse_error_line("p edge 3 1\nx 1 2\n"), 2u);
  EXPECT_EQ(parse_error_line("p edge 3 1\ne 0 2\n"), 2u);
  EXPECT_GT(parse_error_line("p edge 3 2\ne 1 2\n"), 0u);
  EXPECT_GT(parse_error_line("c only a comment\n"), 0u);
}

TEST(Parse, SerializeRoundTrip) {
  const Graph g = Graph::from_edges(5, {{0, 4}, {1, 2}, {3, 4}, {2, 4}});
  const std::string text = serialize(g);
  EXPECT_EQ(text, "p edge 5 4\ne 1 5\ne 2 3\ne 3 5\ne 4 5\n");
  EXPECT_TRUE(parse_graph(text).same_edges(g));
}

TEST(Components, OrderedByMinimumVertex) {
  const Graph g = Graph::from_edges(6, {{4, 5}, {0, 3}, {3, 1}});
  const auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0].members(), (std::vector<Vertex>{0, 1, 3}));
  EXPECT_EQ(comps[1].members(), (std::vector<Vertex>{2}));
  EXPECT_EQ(comps[2].members(), (std::vector<Vertex>{4, 5}));
}

TEST(Induced, KeepsLabelsAndLifts) {
  const Graph g = cycle_graph(6);
  const InducedSubgraph sub = remove_vertices(g, VertexSet{0, 3});
  EXPECT_EQ(sub.graph.num_vertices(), 4u);
  EXPECT_EQ(sub.graph.num_edges(), 2u);
  EXPECT_EQ(sub.graph.label(0), 2);  // vertex 1 of g
  EXPECT_EQ(sub.lift(VertexSet{0, 3}).members(), (std::vector<Vertex>{1, 5}));
  const InducedSubgraph nested = induced_subgraph(sub.graph, VertexSet{1, 2});
  EXPECT_EQ(nested.graph.label(0), 3);
}

TEST(Distance, BfsOverTargets) {
  const Graph p = path_graph(6);
  EXPECT_EQ(distance(p, 0, VertexSet{4, 5}), 4u);
  EXPECT_EQ(distance(p, 2, VertexSet{2}), 0u);
  const Graph split = disjoint_union(path_graph(2), path_graph(2));
  EXPECT_FALSE(distance(split, 0, VertexSet{3}).has_value());
}

TEST(Bipartition, EvenCycleAndOddCycleWitness) {
  const auto even = bipartition_or_odd_cycle(cycle_graph(8));
  ASSERT_TRUE(even.is_bipartite());
  ASSERT_EQ(even.components.size(), 1u);
  EXPECT_EQ(even.components[0].left.size(), 4u);

  const Graph g = disjoint_union(path_graph(3), cycle_graph(7));
  const auto odd = bipartition_or_odd_cycle(g);
  ASSERT_FALSE(odd.is_bipartite());
  const auto& c = odd.odd_cycle;
  ASSERT_EQ(c.size() % 2, 1u);
  for (std::size_t t = 0; t < c.size(); ++t) EXPECT_TRUE(g.adjacent(c[t], c[(t + 1) % c.size()]));
  EXPECT_EQ(VertexSet(c).size(), c.size());
}

TEST(Bipartition, OddCycleWithChordalTail) {
  // Triangle 0-1-2 reached through a path from 5.
  const Graph g = Graph::from_edges(6, {{5, 4}, {4, 3}, {3, 0}, {0, 1}, {1, 2}, {2, 0}});
  const auto r = bipartition_or_odd_cycle(g);
  ASSERT_FALSE(r.is_bipartite());
  EXPECT_EQ(VertexSet(r.odd_cycle).members(), (std::vector<Vertex>{0, 1, 2}));
}

TEST(AddVertices, AppendsWithNeighbourhoods) {
  const Graph g = add_vertices(path_graph(3), {{0, 2}, {3}});
  EXPECT_EQ(g.num_vertices(), 5u);
  EXPECT_TRUE(g.adjacent(3, 0));
  EXPECT_TRUE(g.adjacent(3, 2));
  EXPECT_TRUE(g.adjacent(4, 3));
  EXPECT_EQ(g.num_edges(), 5u);
}
