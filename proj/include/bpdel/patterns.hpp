#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bpdel/graph.hpp"

namespace bpdel {

/// The nine small minimal forbidden induced subgraphs for bipartite
/// permutation graphs. Larger holes are handled separately.
enum class PatternKind { K3, C5, C6, C7, C8, C9, T2, X2, X3 };

inline constexpr std::array<PatternKind, 9> kAllPatterns = {
    PatternKind::K3, PatternKind::C5, PatternKind::C6, PatternKind::C7, PatternKind::C8,
    PatternKind::C9, PatternKind::T2, PatternKind::X2, PatternKind::X3};

inline std::string_view to_string(PatternKind kind) {
  switch (kind) {
    case PatternKind::K3: return "K3";
    case PatternKind::C5: return "C5";
    case PatternKind::C6: return "C6";
    case PatternKind::C7: return "C7";
    case PatternKind::C8: return "C8";
    case PatternKind::C9: return "C9";
    case PatternKind::T2: return "T2";
    case PatternKind::X2: return "X2";
    case PatternKind::X3: return "X3";
  }
  return "?";
}

inline std::optional<PatternKind> pattern_from_string(std::string_view name) {
  for (PatternKind kind : kAllPatterns) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

inline std::optional<PatternKind> cycle_pattern(std::size_t length) {
  switch (length) {
    case 5: return PatternKind::C5;
    case 6: return PatternKind::C6;
    case 7: return PatternKind::C7;
    case 8: return PatternKind::C8;
    case 9: return PatternKind::C9;
    default: return std::nullopt;
  }
}

/// Fixed labelled copy of each pattern.
///
///   T2: spider, centre 0, legs 0-1-2, 0-3-4, 0-5-6.
///   X2: 4-cycle 0-1-2-3 with pendants 4~0, 5~1, 6~2.
///   X3: path 0-1-2-3-4, vertex 5 adjacent to 0, 2, 4, pendant 6~5.
inline Graph pattern_graph(PatternKind kind) {
  switch (kind) {
    case PatternKind::K3: return complete_graph(3);
    case PatternKind::C5: return cycle_graph(5);
    case PatternKind::C6: return cycle_graph(6);
    case PatternKind::C7: return cycle_graph(7);
    case PatternKind::C8: return cycle_graph(8);
    case PatternKind::C9: return cycle_graph(9);
    case PatternKind::T2:
      return Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    case PatternKind::X2:
      return Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {5, 1}, {6, 2}});
    case PatternKind::X3:
      return Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 0}, {5, 2}, {5, 4}, {6, 5}});
  }
  return Graph();
}

inline std::size_t pattern_size(PatternKind kind) { return pattern_graph(kind).num_vertices(); }

namespace detail {

inline bool extend_isomorphism(const Graph& a, const Graph& b, std::vector<Vertex>& map,
                               std::vector<char>& used, std::size_t next) {
  if (next == a.num_vertices()) return true;
  const auto v = static_cast<Vertex>(next);
  for (std::size_t c = 0; c < b.num_vertices(); ++c) {
    const auto w = static_cast<Vertex>(c);
    if (used[c] || a.degree(v) != b.degree(w)) continue;
    bool consistent = true;
    for (Vertex u = 0; u < v && consistent; ++u) {
      consistent = a.adjacent(u, v) == b.adjacent(map[u], w);
    }
    if (!consistent) continue;
    map[v] = w;
    used[c] = 1;
    if (extend_isomorphism(a, b, map, used, next + 1)) return true;
    used[c] = 0;
  }
  return false;
}

}  // namespace detail

/// Backtracking isomorphism test. Meant for graphs of pattern size.
inline bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  std::vector<std::size_t> da, db;
  for (Vertex v = 0; v < static_cast<Vertex>(a.num_vertices()); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<Vertex> map(a.num_vertices(), -1);
  std::vector<char> used(b.num_vertices(), 0);
  return detail::extend_isomorphism(a, b, map, used, 0);
}

/// Whether g[vertices] is isomorphic to the given pattern.
inline bool induces_pattern(const Graph& g, const VertexSet& vertices, PatternKind kind) {
  return are_isomorphic(induced_subgraph(g, vertices).graph, pattern_graph(kind));
}

/// A vertex set inducing one of the nine patterns.
struct ForbiddenSet {
  PatternKind kind;
  VertexSet vertices;

  friend bool operator==(const ForbiddenSet&, const ForbiddenSet&) = default;
};

}  // namespace bpdel
