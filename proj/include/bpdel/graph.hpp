#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <istream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "bpdel/errors.hpp"

namespace bpdel {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members) : members_(members) { normalize(); }
  explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members)) { normalize(); }

  static VertexSet from_bits(const Bitset& bits) {
    VertexSet set;
    for (auto i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i)) {
      set.members_.push_back(static_cast<Vertex>(i));
    }
    return set;
  }

  bool contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const std::vector<Vertex>& members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  void insert(Vertex v) {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it == members_.end() || *it != v) members_.insert(it, v);
  }

  void insert(const VertexSet& other) {
    std::vector<Vertex> merged;
    merged.reserve(members_.size() + other.size());
    std::set_union(members_.begin(), members_.end(), other.begin(), other.end(),
                   std::back_inserter(merged));
    members_ = std::move(merged);
  }

  bool is_subset_of(const VertexSet& other) const {
    return std::includes(other.begin(), other.end(), members_.begin(), members_.end());
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void normalize() {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  std::vector<Vertex> members_;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
///
/// Adjacency is kept twice: sorted neighbor lists for deterministic iteration
/// and one bit row per vertex for O(1) adjacency tests and set intersections.
/// The bit rows cost n^2/8 bytes.
///
/// Each vertex carries an external label (the 1-based id it had in the input
/// file); induced subgraphs inherit the labels of the vertices they keep.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n), bits_(n, Bitset(n)), labels_(n) {
    for (std::size_t v = 0; v < n; ++v) labels_[v] = v + 1;
  }

  /// Throws ContractViolation on out-of-range endpoints or self-loops.
  /// Duplicate edges are merged.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::vector<std::uint64_t> labels = {}) {
    Graph g(n);
    if (!labels.empty()) {
      if (labels.size() != n) throw ContractViolation("label count does not match vertex count");
      g.labels_ = std::move(labels);
    }
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
        throw ContractViolation("edge endpoint out of range");
      }
      if (u == v) throw ContractViolation("self-loop");
      g.bits_[u].set(v);
      g.bits_[v].set(u);
    }
    for (std::size_t v = 0; v < n; ++v) {
      for (auto w = g.bits_[v].find_first(); w != Bitset::npos; w = g.bits_[v].find_next(w)) {
        g.adj_[v].push_back(static_cast<Vertex>(w));
      }
      g.edge_count_ += g.adj_[v].size();
    }
    g.edge_count_ /= 2;
    return g;
  }

  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    std::vector<Edge> list(edges);
    return from_edges(n, list);
  }

  std::size_t num_vertices() const noexcept { return adj_.size(); }
  std::size_t num_edges() const noexcept { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const { return bits_[u].test(v); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  const Bitset& neighbor_bits(Vertex v) const { return bits_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  std::uint64_t label(Vertex v) const { return labels_[v]; }
  const std::vector<std::uint64_t>& labels() const noexcept { return labels_; }

  /// Each edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      for (Vertex v : adj_[u]) {
        if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
      }
    }
    return out;
  }

  Bitset empty_set() const { return Bitset(num_vertices()); }

  /// Same adjacency, labels ignored.
  bool same_edges(const Graph& other) const { return adj_ == other.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Bitset> bits_;
  std::vector<std::uint64_t> labels_;
  std::size_t edge_count_ = 0;
};

/// Two colour classes of a bipartite (sub)graph.
struct Bipartition {
  VertexSet left;
  VertexSet right;
};

/// An induced subgraph together with the map back to its parent's ids.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;

  VertexSet lift(const VertexSet& local) const {
    std::vector<Vertex> out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(to_parent[v]);
    return VertexSet(std::move(out));
  }
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  const std::size_t n = g.num_vertices();
  std::vector<Vertex> local(n, -1);
  InducedSubgraph out;
  out.to_parent.reserve(keep.size());
  for (Vertex v : keep) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw ContractViolation("vertex outside graph");
    local[v] = static_cast<Vertex>(out.to_parent.size());
    out.to_parent.push_back(v);
  }
  std::vector<Edge> edges;
  std::vector<std::uint64_t> labels;
  labels.reserve(keep.size());
  for (Vertex v : keep) {
    labels.push_back(g.label(v));
    for (Vertex w : g.neighbors(v)) {
      if (v < w && local[w] >= 0) edges.emplace_back(local[v], local[w]);
    }
  }
  out.graph = Graph::from_edges(keep.size(), edges, std::move(labels));
  return out;
}

/// g - removed.
inline InducedSubgraph remove_vertices(const Graph& g, const VertexSet& removed) {
  std::vector<Vertex> keep;
  keep.reserve(g.num_vertices());
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (!removed.contains(static_cast<Vertex>(v))) keep.push_back(static_cast<Vertex>(v));
  }
  return induced_subgraph(g, VertexSet(std::move(keep)));
}

/// Components ordered by their smallest vertex; each is a sorted set.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<char> seen(n, 0);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> members;
    seen[s] = 1;
    stack.push_back(static_cast<Vertex>(s));
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

/// Hop distance from u to the nearest member of targets; nullopt if unreachable.
inline std::optional<std::size_t> distance(const Graph& g, Vertex u, const VertexSet& targets) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> dist(n, SIZE_MAX);
  std::deque<Vertex> queue{u};
  dist[u] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (targets.contains(v)) return dist[v];
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == SIZE_MAX) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return std::nullopt;
}

/// Either one bipartition per component or an odd cycle.
struct BipartitionResult {
  std::vector<Bipartition> components;
  /// Odd cycle as a vertex sequence; consecutive vertices (cyclically) are adjacent.
  std::vector<Vertex> odd_cycle;

  bool is_bipartite() const noexcept { return odd_cycle.empty(); }
};

inline BipartitionResult bipartition_or_odd_cycle(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<int> color(n, -1);
  std::vector<Vertex> parent(n, -1);
  std::vector<std::size_t> depth(n, 0);
  BipartitionResult result;
  for (std::size_t s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    std::vector<Vertex> left, right;
    std::deque<Vertex> queue{static_cast<Vertex>(s)};
    color[s] = 0;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      (color[v] == 0 ? left : right).push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          parent[w] = v;
          depth[w] = depth[v] + 1;
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          // BFS levels of a monochromatic edge coincide; walk both up to the
          // common ancestor.
          std::vector<Vertex> up_v{v}, up_w{w};
          Vertex a = v, b = w;
          while (a != b) {
            a = parent[a];
            b = parent[b];
            up_v.push_back(a);
            up_w.push_back(b);
          }
          up_w.pop_back();
          // lca .. v, then w .. (child of lca)
          std::vector<Vertex> cycle(up_v.rbegin(), up_v.rend());
          cycle.insert(cycle.end(), up_w.begin(), up_w.end());
          result.components.clear();
          result.odd_cycle = std::move(cycle);
          return result;
        }
      }
    }
    result.components.push_back({VertexSet(std::move(left)), VertexSet(std::move(right))});
  }
  return result;
}

/// Line "p edge <n> <m>", then m lines "e <u> <v>" (1-based). Lines starting
/// with 'c' are comments. Duplicate edges are merged.
inline Graph parse_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::size_t declared_edges = 0;
  std::size_t seen_edges = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream tokens(line);
    std::string tag;
    if (!(tokens >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "p") {
      std::string format;
      long long nv = -1, ne = -1;
      if (n) throw ParseError(line_no, "duplicate header");
      if (!(tokens >> format >> nv >> ne) || format != "edge" || nv < 0 || ne < 0) {
        throw ParseError(line_no, "malformed header, expected 'p edge <n> <m>'");
      }
      std::string extra;
      if (tokens >> extra) throw ParseError(line_no, "trailing tokens after header");
      n = static_cast<std::size_t>(nv);
      declared_edges = static_cast<std::size_t>(ne);
      edges.reserve(declared_edges);
    } else if (tag == "e") {
      if (!n) throw ParseError(line_no, "edge line before header");
      long long u = 0, v = 0;
      if (!(tokens >> u >> v)) throw ParseError(line_no, "malformed edge line");
      std::string extra;
      if (tokens >> extra) throw ParseError(line_no, "trailing tokens after edge");
      if (u < 1 || v < 1 || static_cast<std::size_t>(u) > *n || static_cast<std::size_t>(v) > *n) {
        throw ParseError(line_no, "vertex id out of range");
      }
      if (u == v) throw ParseError(line_no, "self-loop");
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
      ++seen_edges;
    } else {
      throw ParseError(line_no, "unrecognized line type '" + tag + "'");
    }
  }
  if (!n) throw ParseError(line_no == 0 ? 1 : line_no, "missing header");
  if (seen_edges != declared_edges) {
    throw ParseError(line_no, "header declares " + std::to_string(declared_edges) +
                                  " edges but " + std::to_string(seen_edges) + " were listed");
  }
  return Graph::from_edges(*n, edges);
}

inline Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

/// Internal ids + 1; labels are not written.
inline std::string serialize(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

/// Convenience constructors used throughout tests and generators.
inline Graph cycle_graph(std::size_t m) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % m));
  }
  return Graph::from_edges(m, edges);
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  }
  return Graph::from_edges(n, edges);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph::from_edges(n, edges);
}

/// Disjoint union; the second graph's ids are shifted by a.num_vertices().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const auto shift = static_cast<Vertex>(a.num_vertices());
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph::from_edges(a.num_vertices() + b.num_vertices(), edges);
}

/// Copy of g with extra vertices appended; each new vertex gets the listed
/// neighbours (ids may refer to earlier new vertices).
inline Graph add_vertices(const Graph& g, const std::vector<std::vector<Vertex>>& new_neighbors) {
  std::vector<Edge> edges = g.edges();
  const std::size_t n = g.num_vertices();
  for (std::size_t k = 0; k < new_neighbors.size(); ++k) {
    for (Vertex w : new_neighbors[k]) edges.emplace_back(static_cast<Vertex>(n + k), w);
  }
  return Graph::from_edges(n + new_neighbors.size(), edges);
}

}  // namespace bpdel
