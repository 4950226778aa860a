#pragma once

#include <climits>
#include <cstdint>
#include <optional>
#include <vector>

#include "bpdel/graph.hpp"
#include "bpdel/patterns.hpp"

namespace bpdel {

/// Induced cycle on at least five vertices, listed in cyclic order.
struct Hole {
  std::vector<Vertex> cycle;

  std::size_t size() const noexcept { return cycle.size(); }
  Vertex at(long long i) const {
    const auto m = static_cast<long long>(cycle.size());
    return cycle[static_cast<std::size_t>(((i % m) + m) % m)];
  }
};

inline constexpr std::size_t kUnboundedHole = SIZE_MAX;

/// Shortest hole of g, or nullopt if it has none (or none of length <= max_length).
///
/// Every induced P4 v1 v2 v3 v4 is closed into a hole by a shortest v1-v4
/// path avoiding N(v2) and N(v3). Tuples are scanned in lexicographic order
/// of (v1, v2, v3, v4) and the first minimum wins; within one tuple the path
/// follows BFS parents, neighbours being explored in ascending order.
inline std::optional<Hole> find_shortest_hole(const Graph& g, std::size_t max_length = kUnboundedHole) {
  const std::size_t n = g.num_vertices();
  if (max_length < 5 || n < 5) return std::nullopt;
  long long best = max_length == kUnboundedHole ? LLONG_MAX : static_cast<long long>(max_length) + 1;
  std::vector<Vertex> best_cycle;

  std::vector<std::uint32_t> stamp(n, 0), target_stamp(n, 0);
  std::vector<long long> dist(n, 0), target_dist(n, 0);
  std::vector<Vertex> parent(n, -1), target_parent(n, -1);
  std::vector<Vertex> queue;
  queue.reserve(n);
  std::uint32_t round = 0;
  Bitset blocked(n), targets(n);

  for (Vertex v1 = 0; v1 < static_cast<Vertex>(n); ++v1) {
    for (Vertex v2 : g.neighbors(v1)) {
      for (Vertex v3 : g.neighbors(v2)) {
        if (v3 == v1 || g.adjacent(v1, v3)) continue;
        targets = g.neighbor_bits(v3);
        targets -= g.neighbor_bits(v2);
        targets -= g.neighbor_bits(v1);
        targets.reset(static_cast<std::size_t>(v2));
        targets.reset(static_cast<std::size_t>(v1));
        if (targets.none()) continue;
        blocked = g.neighbor_bits(v2);
        blocked |= g.neighbor_bits(v3);

        // A target reached with d path edges closes a hole on d + 3 vertices.
        const long long expand_limit = best - 5;
        ++round;
        queue.clear();
        queue.push_back(v1);
        stamp[v1] = round;
        dist[v1] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
          const Vertex y = queue[head];
          if (dist[y] > expand_limit) break;
          for (Vertex x : g.neighbors(y)) {
            if (targets.test(static_cast<std::size_t>(x))) {
              if (target_stamp[x] != round) {
                target_stamp[x] = round;
                target_dist[x] = dist[y] + 1;
                target_parent[x] = y;
              }
            } else if (!blocked.test(static_cast<std::size_t>(x)) && stamp[x] != round) {
              stamp[x] = round;
              dist[x] = dist[y] + 1;
              parent[x] = y;
              queue.push_back(x);
            }
          }
        }
        for (auto t = targets.find_first(); t != Bitset::npos; t = targets.find_next(t)) {
          const auto v4 = static_cast<Vertex>(t);
          if (target_stamp[v4] != round) continue;
          const long long length = target_dist[v4] + 3;
          if (length >= best) continue;
          best = length;
          std::vector<Vertex> path{v4};
          for (Vertex y = target_parent[v4]; y != v1; y = parent[y]) path.push_back(y);
          path.push_back(v1);
          best_cycle.assign(path.rbegin(), path.rend());
          best_cycle.push_back(v3);
          best_cycle.push_back(v2);
          if (best == 5) return Hole{best_cycle};
        }
      }
    }
  }
  if (best_cycle.empty()) return std::nullopt;
  return Hole{best_cycle};
}

namespace detail {

inline std::optional<ForbiddenSet> find_triangle(const Graph& g) {
  const auto n = static_cast<Vertex>(g.num_vertices());
  Bitset common(g.num_vertices());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      common = g.neighbor_bits(u);
      common &= g.neighbor_bits(v);
      auto w = common.find_next(static_cast<std::size_t>(v));
      if (w != Bitset::npos) return ForbiddenSet{PatternKind::K3, {u, v, static_cast<Vertex>(w)}};
    }
  }
  return std::nullopt;
}

// The three 7-vertex searches below assume g is triangle-free.

inline std::optional<ForbiddenSet> find_t2(const Graph& g) {
  const auto n = static_cast<Vertex>(g.num_vertices());
  const std::size_t sz = g.num_vertices();
  Bitset pa(sz), pb(sz), pc(sz), pb2(sz), pc2(sz);
  for (Vertex x = 0; x < n; ++x) {
    auto nx = g.neighbors(x);
    if (nx.size() < 3) continue;
    for (std::size_t i = 0; i < nx.size(); ++i) {
      for (std::size_t j = i + 1; j < nx.size(); ++j) {
        for (std::size_t k = j + 1; k < nx.size(); ++k) {
          const Vertex a = nx[i], b = nx[j], c = nx[k];
          pa = g.neighbor_bits(a);
          pa -= g.neighbor_bits(b);
          pa -= g.neighbor_bits(c);
          pa.reset(static_cast<std::size_t>(x));
          if (pa.none()) continue;
          pb = g.neighbor_bits(b);
          pb -= g.neighbor_bits(a);
          pb -= g.neighbor_bits(c);
          pb.reset(static_cast<std::size_t>(x));
          if (pb.none()) continue;
          pc = g.neighbor_bits(c);
          pc -= g.neighbor_bits(a);
          pc -= g.neighbor_bits(b);
          pc.reset(static_cast<std::size_t>(x));
          if (pc.none()) continue;
          for (auto a2 = pa.find_first(); a2 != Bitset::npos; a2 = pa.find_next(a2)) {
            pb2 = pb;
            pb2 -= g.neighbor_bits(static_cast<Vertex>(a2));
            for (auto b2 = pb2.find_first(); b2 != Bitset::npos; b2 = pb2.find_next(b2)) {
              pc2 = pc;
              pc2 -= g.neighbor_bits(static_cast<Vertex>(a2));
              pc2 -= g.neighbor_bits(static_cast<Vertex>(b2));
              auto c2 = pc2.find_first();
              if (c2 != Bitset::npos) {
                return ForbiddenSet{PatternKind::T2,
                                    {x, a, b, c, static_cast<Vertex>(a2), static_cast<Vertex>(b2),
                                     static_cast<Vertex>(c2)}};
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

inline std::optional<ForbiddenSet> find_x2(const Graph& g) {
  const auto n = static_cast<Vertex>(g.num_vertices());
  const std::size_t sz = g.num_vertices();
  Bitset fourth(sz), p1(sz), p2(sz), p3(sz), p2b(sz), p3b(sz);
  // q2 carries the middle pendant; q1, q3 are its cycle neighbours, q4 opposite.
  for (Vertex q2 = 0; q2 < n; ++q2) {
    auto nq = g.neighbors(q2);
    for (std::size_t i = 0; i < nq.size(); ++i) {
      for (std::size_t j = i + 1; j < nq.size(); ++j) {
        const Vertex q1 = nq[i], q3 = nq[j];
        fourth = g.neighbor_bits(q1);
        fourth &= g.neighbor_bits(q3);
        fourth.reset(static_cast<std::size_t>(q2));
        for (auto q4b = fourth.find_first(); q4b != Bitset::npos; q4b = fourth.find_next(q4b)) {
          const auto q4 = static_cast<Vertex>(q4b);
          const Vertex cyc[4] = {q1, q2, q3, q4};
          auto pendant_pool = [&](Bitset& pool, Vertex owner) {
            pool = g.neighbor_bits(owner);
            for (Vertex q : cyc) {
              if (q != owner) pool -= g.neighbor_bits(q);
              pool.reset(static_cast<std::size_t>(q));
            }
          };
          pendant_pool(p1, q1);
          if (p1.none()) continue;
          pendant_pool(p2, q2);
          if (p2.none()) continue;
          pendant_pool(p3, q3);
          if (p3.none()) continue;
          for (auto a = p1.find_first(); a != Bitset::npos; a = p1.find_next(a)) {
            p2b = p2;
            p2b -= g.neighbor_bits(static_cast<Vertex>(a));
            for (auto b = p2b.find_first(); b != Bitset::npos; b = p2b.find_next(b)) {
              p3b = p3;
              p3b -= g.neighbor_bits(static_cast<Vertex>(a));
              p3b -= g.neighbor_bits(static_cast<Vertex>(b));
              auto c = p3b.find_first();
              if (c != Bitset::npos) {
                return ForbiddenSet{PatternKind::X2,
                                    {q1, q2, q3, q4, static_cast<Vertex>(a), static_cast<Vertex>(b),
                                     static_cast<Vertex>(c)}};
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

inline std::optional<ForbiddenSet> find_x3(const Graph& g) {
  const auto n = static_cast<Vertex>(g.num_vertices());
  const std::size_t sz = g.num_vertices();
  Bitset pool(sz), tail(sz);
  // Path p1..p5, hub x adjacent to p1, p3, p5, pendant y on x.
  for (Vertex x = 0; x < n; ++x) {
    if (g.degree(x) < 4) continue;
    for (Vertex p3 : g.neighbors(x)) {
      for (Vertex p2 : g.neighbors(p3)) {
        if (p2 == x) continue;
        for (Vertex p1 : g.neighbors(p2)) {
          if (p1 == p3 || !g.adjacent(p1, x)) continue;
          for (Vertex p4 : g.neighbors(p3)) {
            if (p4 == x || p4 == p2 || g.adjacent(p4, p1)) continue;
            for (Vertex p5 : g.neighbors(p4)) {
              if (p5 == p3 || p5 == p1 || !g.adjacent(p5, x) || g.adjacent(p5, p2)) continue;
              pool = g.neighbor_bits(x);
              pool.reset(static_cast<std::size_t>(p1));
              pool.reset(static_cast<std::size_t>(p3));
              pool.reset(static_cast<std::size_t>(p5));
              pool -= g.neighbor_bits(p2);
              pool -= g.neighbor_bits(p4);
              auto y = pool.find_first();
              if (y != Bitset::npos) {
                return ForbiddenSet{PatternKind::X3,
                                    {p1, p2, p3, p4, p5, x, static_cast<Vertex>(y)}};
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

struct Detection {
  std::optional<ForbiddenSet> forbidden;
  std::optional<Hole> hole;
};

/// Smallest-pattern-first search: K3, C5, C6, T2, X2, X3, C7, C8, C9.
/// max_hole bounds the hole search; 9 suffices for the pattern list.
inline Detection detect(const Graph& g, std::size_t max_hole) {
  if (auto tri = find_triangle(g)) return {tri, std::nullopt};
  auto hole = find_shortest_hole(g, max_hole);
  auto as_cycle = [&](std::size_t upto) -> std::optional<ForbiddenSet> {
    if (hole && hole->size() <= upto) {
      return ForbiddenSet{*cycle_pattern(hole->size()), VertexSet(hole->cycle)};
    }
    return std::nullopt;
  };
  if (auto c = as_cycle(6)) return {c, std::nullopt};
  if (auto t = find_t2(g)) return {t, std::nullopt};
  if (auto x = find_x2(g)) return {x, std::nullopt};
  if (auto x = find_x3(g)) return {x, std::nullopt};
  if (auto c = as_cycle(9)) return {c, std::nullopt};
  return {std::nullopt, hole};
}

}  // namespace detail

/// Some induced copy of K3, T2, X2, X3 or C5..C9, or nullopt iff g is an
/// almost bipartite permutation graph.
inline std::optional<ForbiddenSet> find_forbidden_set(const Graph& g) {
  return detail::detect(g, 9).forbidden;
}

struct AlmostBpgResult {
  bool almost_bpg = false;
  std::optional<ForbiddenSet> witness;
};

inline AlmostBpgResult is_almost_bpg(const Graph& g) {
  auto witness = find_forbidden_set(g);
  return {!witness.has_value(), witness};
}

struct BpgResult {
  bool bpg = false;
  std::optional<ForbiddenSet> forbidden;  // set when g is not almost-BPG
  std::optional<Hole> hole;               // set when g is almost-BPG but has a hole
};

/// Bipartite permutation graph = almost-BPG without holes.
inline BpgResult is_bpg(const Graph& g) {
  auto d = detail::detect(g, kUnboundedHole);
  return {!d.forbidden && !d.hole, d.forbidden, d.hole};
}

/// Linear orders on the two sides of a bipartition.
struct StrongOrdering {
  std::vector<Vertex> order_u;
  std::vector<Vertex> order_w;
};

namespace detail {

inline std::vector<long long> positions_of(const Graph& g, const std::vector<Vertex>& order,
                                           const VertexSet& side, const char* what) {
  std::vector<long long> pos(g.num_vertices(), -1);
  if (order.size() != side.size()) {
    throw ContractViolation(std::string(what) + " order does not cover its side");
  }
  for (std::size_t r = 0; r < order.size(); ++r) {
    const Vertex v = order[r];
    if (!side.contains(v) || pos[v] >= 0) {
      throw ContractViolation(std::string(what) + " order is not a permutation of its side");
    }
    pos[v] = static_cast<long long>(r);
  }
  return pos;
}

}  // namespace detail

/// For all u <_U u', w <_W w': uw', u'w in E imply uw, u'w' in E.
/// O(|E|^2). Throws ContractViolation if the orders do not cover the sides.
inline bool verify_strong_ordering(const Graph& g, const Bipartition& bip, const StrongOrdering& so) {
  auto pos_u = detail::positions_of(g, so.order_u, bip.left, "U");
  auto pos_w = detail::positions_of(g, so.order_w, bip.right, "W");
  std::vector<Edge> cross;
  for (Vertex u : bip.left) {
    for (Vertex w : g.neighbors(u)) {
      if (pos_w[w] >= 0) cross.emplace_back(u, w);
    }
  }
  for (auto [u, w_hi] : cross) {
    for (auto [u_hi, w] : cross) {
      if (pos_u[u] < pos_u[u_hi] && pos_w[w] < pos_w[w_hi]) {
        if (!g.adjacent(u, w) || !g.adjacent(u_hi, w_hi)) return false;
      }
    }
  }
  return true;
}

/// Adjacency property: every N(u), u in left, is consecutive in order_w.
/// Enclosure property: N(u') - N(u) is consecutive whenever N(u) is a subset of N(u').
inline bool verify_adjacency_enclosure(const Graph& g, const Bipartition& bip,
                                       const std::vector<Vertex>& order_w) {
  auto pos = detail::positions_of(g, order_w, bip.right, "W");
  auto consecutive = [&](const Bitset& set) {
    long long lo = LLONG_MAX, hi = -1, count = 0;
    for (auto v = set.find_first(); v != Bitset::npos; v = set.find_next(v)) {
      const long long p = pos[v];
      if (p < 0) continue;
      lo = std::min(lo, p);
      hi = std::max(hi, p);
      ++count;
    }
    return count == 0 || hi - lo + 1 == count;
  };
  for (Vertex u : bip.left) {
    if (!consecutive(g.neighbor_bits(u))) return false;
  }
  Bitset diff(g.num_vertices());
  for (Vertex u : bip.left) {
    for (Vertex u2 : bip.left) {
      if (u == u2 || !g.neighbor_bits(u).is_subset_of(g.neighbor_bits(u2))) continue;
      diff = g.neighbor_bits(u2);
      diff -= g.neighbor_bits(u);
      if (!consecutive(diff)) return false;
    }
  }
  return true;
}

}  // namespace bpdel
