#include <gtest/gtest.h>

#include "bpdel/instances.hpp"
#include "bpdel/solver.hpp"
#include "oracles.hpp"

using namespace bpdel;

namespace {

std::vector<Graph> small_corpus() {
  std::vector<Graph> out;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    out.push_back(gen_random(6 + seed % 5, seed % 2 ? 0.25 : 0.45, seed));
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    out.push_back(plant_vertices(gen_staircase(3, 4, seed).g, seed % 3, seed + 100).g);
  }
  out.push_back(cycle_graph(10));
  out.push_back(add_vertices(cycle_graph(8), {{0, 4}}));
  out.push_back(disjoint_union(complete_graph(3), cycle_graph(7)));
  return out;
}

std::uint64_t branch_bound(std::size_t k) {
  std::uint64_t p = 1;
  for (std::size_t t = 0; t <= k; ++t) p *= 9;
  return (p - 1) / 8;
}

}  // namespace

TEST(SolveFpt, C10) {
  EXPECT_FALSE(solve_fpt({cycle_graph(10), 0}).yes);
  const SolveResult r = solve_fpt({cycle_graph(10), 1});
  ASSERT_TRUE(r.yes);
  EXPECT_EQ(r.solution.deleted.size(), 1u);
  EXPECT_TRUE(r.solution.branch_deletions.empty());
  EXPECT_EQ(r.solution.cut_deletions, r.solution.deleted);
  EXPECT_TRUE(r.solution.verified);
  EXPECT_EQ(r.solution.stats.component_cut_sizes, (std::vector<std::size_t>{1}));
}

TEST(SolveFpt, TriangleBesideC10) {
  const Graph g = disjoint_union(complete_graph(3), cycle_graph(10));
  EXPECT_FALSE(solve_fpt({g, 1}).yes);
  const SolveResult r = solve_fpt({g, 2});
  ASSERT_TRUE(r.yes);
  ASSERT_EQ(r.solution.deleted.size(), 2u);
  const auto& d = r.solution.deleted.members();
  EXPECT_LT(d[0], 3);
  EXPECT_GE(d[1], 3);
  EXPECT_EQ(r.solution.branch_deletions.size(), 1u);
  EXPECT_EQ(r.solution.cut_deletions.size(), 1u);
}

TEST(SolveFpt, BpgNeedsNothing) {
  const SolveResult r = solve_fpt({gen_staircase(4, 5, 1).g, 0});
  ASSERT_TRUE(r.yes);
  EXPECT_TRUE(r.solution.deleted.empty());
  EXPECT_EQ(r.solution.stats.branch_nodes, 1u);
}

TEST(SolveFpt, MatchesOracleAtEveryK) {
  for (const Graph& g : small_corpus()) {
    const std::size_t opt = oracle_solve(g).size();
    for (std::size_t k = 0; k <= opt + 1; ++k) {
      const SolveResult r = solve_fpt({g, k});
      EXPECT_EQ(r.yes, k >= opt) << serialize(g) << "k=" << k;
      if (r.yes) {
        EXPECT_TRUE(oracle::bpg(remove_vertices(g, r.solution.deleted).graph));
      }
      if (k == opt) {
        EXPECT_EQ(r.solution.deleted.size(), opt);
      }
    }
  }
}

TEST(SolveFpt, BranchNodesWithinBound) {
  for (const Graph& g : small_corpus()) {
    for (std::size_t k = 0; k <= 3; ++k) {
      const SolveResult r = solve_fpt({g, k});
      EXPECT_LE(r.solution.stats.branch_nodes, branch_bound(k));
      EXPECT_LE(r.solution.stats.max_depth, k);
    }
  }
  // A NO instance explores the full tree: 4 disjoint triangles at k = 3.
  Graph g = complete_graph(3);
  for (int t = 0; t < 3; ++t) g = disjoint_union(g, complete_graph(3));
  const SolveResult r = solve_fpt({g, 3});
  EXPECT_FALSE(r.yes);
  EXPECT_EQ(r.solution.stats.branch_nodes, 1u + 3u + 9u + 27u);
}

TEST(SolveFpt, MinimizeKeepsValidity) {
  for (const Graph& g : small_corpus()) {
    const std::size_t opt = oracle_solve(g).size();
    const SolveResult r = solve_fpt({g, opt + 2}, {1, true, true});
    ASSERT_TRUE(r.yes);
    EXPECT_TRUE(is_bpg(remove_vertices(g, r.solution.deleted).graph).bpg);
    // Inclusion-minimal: every deleted vertex is needed.
    for (Vertex v : r.solution.deleted) {
      std::vector<Vertex> rest;
      for (Vertex u : r.solution.deleted) {
        if (u != v) rest.push_back(u);
      }
      EXPECT_FALSE(is_bpg(remove_vertices(g, VertexSet(rest)).graph).bpg);
    }
    VertexSet joined = r.solution.branch_deletions;
    joined.insert(r.solution.cut_deletions);
    EXPECT_EQ(joined, r.solution.deleted);
  }
}

TEST(SolveFpt, ParallelWorkersAgreeOnAnswer) {
  for (const Graph& g : small_corpus()) {
    const std::size_t opt = oracle_solve(g).size();
    for (std::size_t k : {opt == 0 ? 0 : opt - 1, opt}) {
      const SolveResult one = solve_fpt({g, k});
      const SolveResult four = solve_fpt({g, k}, {4, false, true});
      EXPECT_EQ(one.yes, four.yes);
      if (four.yes) {
        EXPECT_LE(four.solution.deleted.size(), k);
        EXPECT_TRUE(four.solution.verified);
      }
    }
  }
}

TEST(SolveFpt, SingleWorkerIsDeterministic) {
  const Graph g = plant_vertices(gen_thickened_cycle(12, 3, 3, 5), 2, 9).g;
  const SolveResult a = solve_fpt({g, 4});
  const SolveResult b = solve_fpt({g, 4});
  EXPECT_EQ(a.yes, b.yes);
  EXPECT_EQ(a.solution.deleted, b.solution.deleted);
  EXPECT_EQ(a.solution.stats.branch_nodes, b.solution.stats.branch_nodes);
}

TEST(SolveFpt, ComponentsAdd) {
  const Graph a = add_vertices(cycle_graph(10), {{0, 2}});
  const Graph b = disjoint_union(complete_graph(3), path_graph(4));
  const Graph both = disjoint_union(a, b);
  const std::size_t oa = oracle_solve(a).size(), ob = oracle_solve(b).size();
  EXPECT_FALSE(solve_fpt({both, oa + ob - 1}).yes);
  EXPECT_TRUE(solve_fpt({both, oa + ob}).yes);
}

TEST(SolveFpt, NoVerifyLeavesFlagUnset) {
  const SolveResult r = solve_fpt({cycle_graph(10), 1}, {1, false, false});
  ASSERT_TRUE(r.yes);
  EXPECT_FALSE(r.solution.verified);
}

TEST(ComponentPoly, Contracts) {
  EXPECT_THROW(solve_component_poly(complete_graph(3)), ContractViolation);
  EXPECT_TRUE(solve_component_poly(path_graph(5)).vertices.empty());
  EXPECT_THROW(solve_component_poly(disjoint_union(cycle_graph(10), cycle_graph(10))), ContractViolation);
  EXPECT_EQ(solve_component_poly(cycle_graph(12)).vertices.size(), 1u);
}

TEST(VerifyDeletion, ReportsWitness) {
  const Graph g = add_vertices(cycle_graph(10), {{0, 2}});
  const DeletionCheck bad = verify_deletion(g, VertexSet{});
  EXPECT_FALSE(bad.valid);
  ASSERT_TRUE(bad.hole.has_value());
  EXPECT_EQ(bad.hole->cycle.size(), 10u);
  const DeletionCheck tri = verify_deletion(disjoint_union(path_graph(2), complete_graph(3)), VertexSet{0});
  ASSERT_TRUE(tri.forbidden.has_value());
  EXPECT_EQ(VertexSet(tri.forbidden->vertices).members(), (std::vector<Vertex>{2, 3, 4}));
  EXPECT_TRUE(verify_deletion(g, VertexSet{0}).valid);
}

TEST(Approx9, Examples) {
  EXPECT_EQ(approx9(cycle_graph(7)).deleted.size(), 7u);
  EXPECT_EQ(approx9(cycle_graph(10)).deleted.size(), 1u);
  EXPECT_EQ(approx9(complete_graph(3)).deleted.size(), 3u);
  EXPECT_TRUE(approx9(path_graph(6)).deleted.empty());
}

TEST(Approx9, WithinNineTimesOptimum) {
  for (const Graph& g : small_corpus()) {
    const Solution s = approx9(g);
    const std::size_t opt = oracle_solve(g).size();
    EXPECT_LE(s.deleted.size(), 9 * opt);
    EXPECT_TRUE(s.verified);
    EXPECT_TRUE(oracle::bpg(remove_vertices(g, s.deleted).graph));
  }
}

TEST(Oracle, Examples) {
  EXPECT_TRUE(oracle_solve(path_graph(5)).empty());
  EXPECT_EQ(oracle_solve(cycle_graph(10)).size(), 1u);
  EXPECT_EQ(oracle_solve(disjoint_union(complete_graph(3), cycle_graph(10)), 13).size(), 2u);
  EXPECT_THROW(oracle_solve(cycle_graph(13)), OracleLimitExceeded);
  EXPECT_THROW(oracle_solve(cycle_graph(13)), ContractViolation);
}

TEST(Oracle, LexicographicallyFirst) {
  EXPECT_EQ(oracle_solve(cycle_graph(10)).members(), (std::vector<Vertex>{0}));
  EXPECT_EQ(oracle_solve(add_vertices(path_graph(2), {{0, 1}})).members(), (std::vector<Vertex>{0}));
}

TEST(Oracle, AgreesWithHittingSetOracle) {
  for (const Graph& g : small_corpus()) {
    EXPECT_EQ(oracle_solve(g).size(), oracle::min_deletion(g)) << serialize(g);
  }
}
