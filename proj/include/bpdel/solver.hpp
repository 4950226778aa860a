#pragma once

#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <vector>

#include "bpdel/graph.hpp"
#include "bpdel/hole_cut.hpp"
#include "bpdel/hole_structure.hpp"
#include "bpdel/parallel.hpp"
#include "bpdel/recognition.hpp"

namespace bpdel {

struct Instance {
  Graph g;
  std::size_t k = 0;
};

struct SolveStats {
  std::uint64_t branch_nodes = 0;
  std::size_t max_depth = 0;
  std::uint64_t leaves = 0;
  std::uint64_t forbidden_sets_removed = 0;
  /// Hole-cut size of each component at the accepting leaf (or in approx9).
  std::vector<std::size_t> component_cut_sizes;
};

/// deleted = branch_deletions ∪ cut_deletions (disjoint).
struct Solution {
  VertexSet deleted;
  VertexSet branch_deletions;
  VertexSet cut_deletions;
  SolveStats stats;
  bool verified = false;
};

struct SolveResult {
  bool yes = false;
  Solution solution;  // deletion sets empty on NO; stats always filled
};

struct SolveOptions {
  std::size_t workers = 1;
  bool minimize = false;
  /// Re-check is_bpg(g - deleted) and throw DiagnosticFailure on failure.
  bool verify = true;
};

/// Polynomial decision for a connected almost-BPG: empty if it is already a
/// BPG, otherwise a minimum hole cut. ContractViolation if g is not almost-BPG.
inline HoleCut solve_component_poly(const Graph& g, std::size_t workers = 1) {
  auto d = detail::detect(g, kUnboundedHole);
  if (d.forbidden) throw ContractViolation("component is not an almost bipartite permutation graph");
  if (!d.hole) return HoleCut{};
  if (connected_components(g).size() != 1) throw ContractViolation("component is not connected");
  const HolePartition p = build_local_orders(g, classify_around_hole(g, *d.hole));
  return min_hole_cut(g, p, workers);
}

/// Whether g - deleted is a BPG; witnesses are in g's ids.
struct DeletionCheck {
  bool valid = false;
  std::optional<ForbiddenSet> forbidden;
  std::optional<Hole> hole;
};

inline DeletionCheck verify_deletion(const Graph& g, const VertexSet& deleted) {
  const InducedSubgraph rest = remove_vertices(g, deleted);
  BpgResult r = is_bpg(rest.graph);
  DeletionCheck out{r.bpg, std::nullopt, std::nullopt};
  if (r.forbidden) out.forbidden = ForbiddenSet{r.forbidden->kind, rest.lift(r.forbidden->vertices)};
  if (r.hole) {
    Hole h;
    for (Vertex v : r.hole->cycle) h.cycle.push_back(rest.to_parent[v]);
    out.hole = std::move(h);
  }
  return out;
}

/// Greedily re-adds deleted vertices (ascending id) while the rest stays a BPG.
inline VertexSet minimize_solution(const Graph& g, const VertexSet& deleted) {
  std::vector<Vertex> current = deleted.members();
  for (Vertex v : deleted) {
    std::vector<Vertex> trial;
    for (Vertex w : current) {
      if (w != v) trial.push_back(w);
    }
    VertexSet candidate(trial);
    if (is_bpg(remove_vertices(g, candidate).graph).bpg) current = std::move(trial);
  }
  return VertexSet(std::move(current));
}

namespace detail {

struct LeafCuts {
  std::vector<Vertex> cut;
  std::vector<std::size_t> sizes;
};

/// Sum of per-component hole cuts of an almost-BPG, or nullopt once it exceeds budget.
inline std::optional<LeafCuts> component_cuts(const InducedSubgraph& rest, std::size_t budget,
                                              std::size_t workers) {
  LeafCuts out;
  std::size_t total = 0;
  for (const VertexSet& comp : connected_components(rest.graph)) {
    const InducedSubgraph part = induced_subgraph(rest.graph, comp);
    const HoleCut cut = solve_component_poly(part.graph, workers);
    total += cut.size();
    if (total > budget) return std::nullopt;
    out.sizes.push_back(cut.size());
    for (Vertex v : cut.vertices) out.cut.push_back(rest.to_parent[part.to_parent[v]]);
  }
  return out;
}

class BranchSearch {
 public:
  BranchSearch(const Graph& g, std::size_t workers) : g_(g), workers_(workers) {}

  std::optional<Solution> run(std::size_t k) {
    std::vector<Vertex> deleted;
    auto root = expand(deleted, k, 0);
    if (root && workers_ > 1 && k >= 1) {
      // Parallel over the root's children; the first acceptance wins.
      parallel_for(root->size(), workers_, [&](std::size_t c) {
        if (found_.load()) return;
        std::vector<Vertex> local{(*root)[c]};
        visit(local, k - 1, 1);
      });
    } else if (root && k >= 1) {
      for (Vertex v : *root) {
        deleted.assign(1, v);
        if (visit(deleted, k - 1, 1)) break;
      }
    }
    std::lock_guard lock(mutex_);
    if (result_) result_->stats = stats();
    return result_;
  }

  SolveStats stats() const {
    SolveStats s;
    s.branch_nodes = nodes_.load();
    s.max_depth = max_depth_.load();
    s.leaves = leaves_.load();
    if (result_) s.component_cut_sizes = result_->stats.component_cut_sizes;
    return s;
  }

 private:
  // Counts the node. Returns the forbidden set's vertices (parent ids,
  // ascending) when the node branches, nullopt when it is a leaf or pruned.
  std::optional<std::vector<Vertex>> expand(const std::vector<Vertex>& deleted, std::size_t k,
                                            std::size_t depth) {
    ++nodes_;
    for (std::size_t d = max_depth_.load(); depth > d && !max_depth_.compare_exchange_weak(d, depth);) {
    }
    const InducedSubgraph rest = remove_vertices(g_, VertexSet(deleted));
    if (auto x = find_forbidden_set(rest.graph)) {
      if (k == 0) return std::nullopt;
      return rest.lift(x->vertices).members();
    }
    ++leaves_;
    auto cuts = component_cuts(rest, k, 1);
    if (cuts) accept(deleted, *cuts);
    return std::nullopt;
  }

  bool visit(std::vector<Vertex>& deleted, std::size_t k, std::size_t depth) {
    if (found_.load()) return true;
    auto children = expand(deleted, k, depth);
    if (found_.load()) return true;
    if (!children) return false;
    for (Vertex v : *children) {
      deleted.push_back(v);
      const bool done = visit(deleted, k - 1, depth + 1);
      deleted.pop_back();
      if (done) return true;
    }
    return false;
  }

  void accept(const std::vector<Vertex>& deleted, const LeafCuts& cuts) {
    std::lock_guard lock(mutex_);
    if (result_) return;
    Solution s;
    s.branch_deletions = VertexSet(deleted);
    s.cut_deletions = VertexSet(cuts.cut);
    s.deleted = s.branch_deletions;
    s.deleted.insert(s.cut_deletions);
    s.stats.component_cut_sizes = cuts.sizes;
    result_ = std::move(s);
    found_.store(true);
  }

  const Graph& g_;
  std::size_t workers_;
  std::atomic<bool> found_{false};
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<std::uint64_t> leaves_{0};
  std::atomic<std::size_t> max_depth_{0};
  std::mutex mutex_;
  std::optional<Solution> result_;
};

}  // namespace detail

/// Branch on forbidden sets (children in ascending id, depth <= k), then
/// settle each almost-BPG leaf by per-component minimum hole cuts. The first
/// accepting leaf wins; with one worker the answer is deterministic.
inline SolveResult solve_fpt(const Instance& inst, SolveOptions options = {}) {
  detail::BranchSearch search(inst.g, options.workers);
  auto found = search.run(inst.k);
  SolveResult result;
  if (!found) {
    result.solution.stats = search.stats();
    return result;
  }
  result.yes = true;
  result.solution = std::move(*found);
  if (options.minimize) {
    const VertexSet kept = minimize_solution(inst.g, result.solution.deleted);
    auto restrict = [&](const VertexSet& s) {
      std::vector<Vertex> out;
      for (Vertex v : s) {
        if (kept.contains(v)) out.push_back(v);
      }
      return VertexSet(std::move(out));
    };
    result.solution.branch_deletions = restrict(result.solution.branch_deletions);
    result.solution.cut_deletions = restrict(result.solution.cut_deletions);
    result.solution.deleted = kept;
  }
  if (result.solution.deleted.size() > inst.k) throw DiagnosticFailure("solver exceeded its budget");
  if (options.verify) {
    result.solution.verified = verify_deletion(inst.g, result.solution.deleted).valid;
    if (!result.solution.verified) throw DiagnosticFailure("solver produced an invalid deletion set");
  }
  return result;
}

/// Removes whole forbidden sets (smallest pattern first) until the graph is
/// almost-BPG, then a minimum hole cut per component. At most 9 * OPT vertices.
inline Solution approx9(const Graph& g, std::size_t workers = 1, bool verify = true) {
  Solution s;
  for (;;) {
    const InducedSubgraph rest = remove_vertices(g, s.branch_deletions);
    auto x = find_forbidden_set(rest.graph);
    if (!x) break;
    s.branch_deletions.insert(rest.lift(x->vertices));
    ++s.stats.forbidden_sets_removed;
  }
  const InducedSubgraph rest = remove_vertices(g, s.branch_deletions);
  auto cuts = detail::component_cuts(rest, g.num_vertices(), workers);
  s.cut_deletions = VertexSet(cuts->cut);
  s.stats.component_cut_sizes = cuts->sizes;
  s.deleted = s.branch_deletions;
  s.deleted.insert(s.cut_deletions);
  if (!verify) return s;
  s.verified = verify_deletion(g, s.deleted).valid;
  if (!s.verified) throw DiagnosticFailure("approximation produced an invalid deletion set");
  return s;
}

inline constexpr std::size_t kOracleMaxVertices = 12;

/// Smallest deletion set by exhaustive search over subsets in increasing
/// size, lexicographically first among equals. Refuses graphs above max_n.
inline VertexSet oracle_solve(const Graph& g, std::size_t max_n = kOracleMaxVertices) {
  const std::size_t n = g.num_vertices();
  if (n > max_n) {
    throw OracleLimitExceeded("oracle refuses " + std::to_string(n) + " vertices (limit " +
                              std::to_string(max_n) + ")");
  }
  for (std::size_t size = 0; size <= n; ++size) {
    std::vector<Vertex> pick(size);
    for (std::size_t t = 0; t < size; ++t) pick[t] = static_cast<Vertex>(t);
    for (;;) {
      VertexSet candidate(pick);
      if (is_bpg(remove_vertices(g, candidate).graph).bpg) return candidate;
      // next combination in lexicographic order
      std::size_t t = size;
      while (t > 0 && pick[t - 1] == static_cast<Vertex>(n - size + t - 1)) --t;
      if (t == 0) break;
      ++pick[t - 1];
      for (std::size_t u = t; u < size; ++u) pick[u] = pick[u - 1] + 1;
    }
  }
  return VertexSet();  // unreachable: deleting everything leaves the empty graph
}

}  // namespace bpdel
