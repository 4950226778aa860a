#pragma once

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "bpdel/graph.hpp"
#include "bpdel/random.hpp"
#include "bpdel/recognition.hpp"

namespace bpdel {

enum class Side { A, B };

inline constexpr Side other(Side s) noexcept { return s == Side::A ? Side::B : Side::A; }

struct ClassPosition {
  Side side = Side::A;
  std::size_t index = 0;
  std::size_t rank = 0;
};

/// Classification of a connected almost-BPG around a shortest hole c_0..c_{m-1}:
///   A_i = { v : N(v) ∩ C = {c_{i-1}, c_{i+1}} },   B_i = { v : N(v) ∩ C = {c_i} }.
/// Once orders are built each class list is a linear extension of its local
/// strict order, with equal-neighbourhood ties in ascending id.
struct HolePartition {
  Hole hole;
  std::vector<std::vector<Vertex>> class_a;
  std::vector<std::vector<Vertex>> class_b;
  std::vector<ClassPosition> position;
  bool orders_built = false;

  std::size_t m() const noexcept { return hole.size(); }

  std::size_t wrap(long long i) const noexcept {
    const auto mm = static_cast<long long>(m());
    return static_cast<std::size_t>(((i % mm) + mm) % mm);
  }

  const std::vector<Vertex>& members(Side side, long long i) const {
    return side == Side::A ? class_a[wrap(i)] : class_b[wrap(i)];
  }
  const std::vector<Vertex>& A(long long i) const { return class_a[wrap(i)]; }
  const std::vector<Vertex>& B(long long i) const { return class_b[wrap(i)]; }

  /// Recompute position from the class lists.
  void refresh_positions() {
    for (std::size_t i = 0; i < m(); ++i) {
      for (std::size_t r = 0; r < class_a[i].size(); ++r) position[class_a[i][r]] = {Side::A, i, r};
      for (std::size_t r = 0; r < class_b[i].size(); ++r) position[class_b[i][r]] = {Side::B, i, r};
    }
  }

  bool even() const noexcept { return m() % 2 == 0; }
  const char* parity_tag() const noexcept { return even() ? "cylinder" : "moebius"; }
};

/// Throws StructureViolation when some vertex has a hole neighbourhood other
/// than {c_i} or {c_{i-1}, c_{i+1}}, or when the hole is shorter than 10.
inline HolePartition classify_around_hole(const Graph& g, const Hole& hole) {
  const std::size_t m = hole.size();
  if (m < 10) throw StructureViolation("hole of length " + std::to_string(m) + " cannot be shortest");
  HolePartition p;
  p.hole = hole;
  p.class_a.assign(m, {});
  p.class_b.assign(m, {});
  p.position.assign(g.num_vertices(), {});
  std::vector<long long> hole_index(g.num_vertices(), -1);
  for (std::size_t i = 0; i < m; ++i) hole_index[hole.cycle[i]] = static_cast<long long>(i);

  for (Vertex v = 0; v < static_cast<Vertex>(g.num_vertices()); ++v) {
    std::vector<long long> hits;
    for (Vertex w : g.neighbors(v)) {
      if (hole_index[w] >= 0) hits.push_back(hole_index[w]);
    }
    std::sort(hits.begin(), hits.end());
    if (hits.size() == 1) {
      p.class_b[static_cast<std::size_t>(hits[0])].push_back(v);
      continue;
    }
    if (hits.size() == 2) {
      const long long mm = static_cast<long long>(m);
      const long long a = hits[0], b = hits[1];
      if (b - a == 2) {
        p.class_a[static_cast<std::size_t>(a + 1)].push_back(v);
        continue;
      }
      if ((a + mm - b) == 2) {
        p.class_a[p.wrap(b + 1)].push_back(v);
        continue;
      }
    }
    throw StructureViolation("vertex " + std::to_string(g.label(v)) + " has " +
                             std::to_string(hits.size()) + " hole neighbours in an invalid shape");
  }
  p.refresh_positions();
  return p;
}

namespace detail {

/// Left witness pools of class (side, i): the other side at i-2 and this side
/// at i-1. Right pools mirror them at i+1, i+2.
inline Bitset witness_pool(const Graph& g, const HolePartition& p, Side side, long long i, int dir) {
  Bitset pool(g.num_vertices());
  for (Vertex w : p.members(side, i + dir)) pool.set(static_cast<std::size_t>(w));
  for (Vertex w : p.members(other(side), i + 2 * dir)) pool.set(static_cast<std::size_t>(w));
  return pool;
}

/// before[a][b]: members[a] precedes members[b] under the local witness relation.
inline std::vector<std::vector<char>> witness_relation(const Graph& g, const HolePartition& p,
                                                       Side side, long long i) {
  const auto& cls = p.members(side, i);
  const Bitset left = witness_pool(g, p, side, i, -1);
  const Bitset right = witness_pool(g, p, side, i, +1);
  std::vector<Bitset> nl, nr;
  for (Vertex v : cls) {
    nl.push_back(g.neighbor_bits(v) & left);
    nr.push_back(g.neighbor_bits(v) & right);
  }
  std::vector<std::vector<char>> before(cls.size(), std::vector<char>(cls.size(), 0));
  for (std::size_t a = 0; a < cls.size(); ++a) {
    for (std::size_t b = 0; b < cls.size(); ++b) {
      if (a == b) continue;
      // some left witness sees a but not b, or some right witness sees b but not a
      before[a][b] = !nl[a].is_subset_of(nl[b]) || !nr[b].is_subset_of(nr[a]);
    }
  }
  return before;
}

}  // namespace detail

/// Sort every class by its local strict order; ties (equal neighbourhoods) by id.
/// Throws StructureViolation if the witness relation is cyclic.
inline HolePartition build_local_orders(const Graph& g, HolePartition p) {
  for (std::size_t i = 0; i < p.m(); ++i) {
    for (Side side : {Side::A, Side::B}) {
      auto& cls = side == Side::A ? p.class_a[i] : p.class_b[i];
      std::sort(cls.begin(), cls.end());
      auto before = detail::witness_relation(g, p, side, static_cast<long long>(i));
      const std::size_t k = cls.size();
      std::vector<std::size_t> indegree(k, 0);
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) indegree[b] += before[a][b] ? 1 : 0;
      }
      // cls is sorted, so the smallest index is the smallest id.
      std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
      for (std::size_t a = 0; a < k; ++a) {
        if (indegree[a] == 0) ready.push(a);
      }
      std::vector<Vertex> ordered;
      while (!ready.empty()) {
        const std::size_t a = ready.top();
        ready.pop();
        ordered.push_back(cls[a]);
        for (std::size_t b = 0; b < k; ++b) {
          if (before[a][b] && --indegree[b] == 0) ready.push(b);
        }
      }
      if (ordered.size() != k) {
        throw StructureViolation(std::string("local order of ") + (side == Side::A ? "A_" : "B_") +
                                 std::to_string(i) + " is cyclic");
      }
      cls = std::move(ordered);
    }
  }
  p.refresh_positions();
  p.orders_built = true;
  return p;
}

/// A[i,j] and B[i,j] in window order: A[i,j] = A_i, B_{i+1}, A_{i+2}, ... and
/// B[i,j] = B_i, A_{i+1}, B_{i+2}, ..., each class in its local order.
struct WindowSpec {
  long long i = 0;
  long long j = 0;
  std::vector<Vertex> a_side;
  std::vector<Vertex> b_side;

  VertexSet set_a() const { return VertexSet(a_side); }
  VertexSet set_b() const { return VertexSet(b_side); }
  VertexSet all() const {
    VertexSet s = set_a();
    s.insert(set_b());
    return s;
  }
};

/// Requires i <= j and j - i < m (at most m indices, so no class repeats).
inline WindowSpec window(const HolePartition& p, long long i, long long j) {
  if (j < i) throw ContractViolation("window end precedes its start");
  if (j - i >= static_cast<long long>(p.m())) throw ContractViolation("window wraps onto itself");
  WindowSpec w{i, j, {}, {}};
  for (long long t = 0; t <= j - i; ++t) {
    const Side a_class = t % 2 == 0 ? Side::A : Side::B;
    const auto& xs = p.members(a_class, i + t);
    const auto& ys = p.members(other(a_class), i + t);
    w.a_side.insert(w.a_side.end(), xs.begin(), xs.end());
    w.b_side.insert(w.b_side.end(), ys.begin(), ys.end());
  }
  return w;
}

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct StructureReport {
  std::vector<CheckResult> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

namespace detail {

inline std::string class_name(Side side, std::size_t i) {
  return (side == Side::A ? "A_" : "B_") + std::to_string(i);
}

inline Bitset to_bits(const Graph& g, const std::vector<Vertex>& vs) {
  Bitset b(g.num_vertices());
  for (Vertex v : vs) b.set(static_cast<std::size_t>(v));
  return b;
}

/// Side-window containing both vertices with their offsets; for <_cl.
/// Window (side, s) covers indices s..s+4 with class side at even offsets.
inline bool window_key(const HolePartition& p, Side window_side, std::size_t s, Vertex v,
                       std::pair<std::size_t, std::size_t>& key) {
  const ClassPosition& pos = p.position[v];
  const std::size_t t = (pos.index + p.m() - s) % p.m();
  if (t > 4) return false;
  const Side expected = t % 2 == 0 ? window_side : other(window_side);
  if (pos.side != expected) return false;
  key = {t, pos.rank};
  return true;
}

}  // namespace detail

/// v <_cl v': both lie in some five-index window A[i-2,i+2] or B[i-2,i+2]
/// and v comes first in that window's order.
inline bool less_cl(const HolePartition& p, Vertex v, Vertex w) {
  for (std::size_t s = 0; s < p.m(); ++s) {
    for (Side side : {Side::A, Side::B}) {
      std::pair<std::size_t, std::size_t> kv, kw;
      if (detail::window_key(p, side, s, v, kv) && detail::window_key(p, side, s, w, kw) && kv < kw) {
        return true;
      }
    }
  }
  return false;
}

/// (a) every vertex is within distance 1 of the hole.
inline CheckResult check_domination(const Graph& g, const HolePartition& p) {
  CheckResult r{"domination", true, {}};
  VertexSet on_hole(p.hole.cycle);
  for (Vertex v = 0; v < static_cast<Vertex>(g.num_vertices()); ++v) {
    auto d = distance(g, v, on_hole);
    if (!d || *d > 1) {
      r.passed = false;
      r.detail = "vertex " + std::to_string(g.label(v)) + " is not dominated by the hole";
      return r;
    }
  }
  return r;
}

/// (b) class shapes, A_i/B_i independent, A_i x B_i complete,
/// N(A_i) within B[i-2,i+2] and N(B_i) within A[i-2,i+2].
inline CheckResult check_class_neighborhoods(const Graph& g, const HolePartition& p) {
  CheckResult r{"class-neighborhoods", true, {}};
  auto fail = [&](std::string msg) {
    if (r.passed) r.detail = std::move(msg);
    r.passed = false;
  };
  const Bitset hole_bits = detail::to_bits(g, p.hole.cycle);
  std::vector<int> seen(g.num_vertices(), 0);
  for (std::size_t i = 0; i < p.m(); ++i) {
    const auto li = static_cast<long long>(i);
    for (Side side : {Side::A, Side::B}) {
      const auto& cls = p.members(side, li);
      Bitset expected_hole(g.num_vertices());
      if (side == Side::A) {
        expected_hole.set(static_cast<std::size_t>(p.hole.at(li - 1)));
        expected_hole.set(static_cast<std::size_t>(p.hole.at(li + 1)));
      } else {
        expected_hole.set(static_cast<std::size_t>(p.hole.at(li)));
      }
      const WindowSpec w = window(p, li - 2, li + 2);
      // For class A_i the admissible neighbours form B[i-2,i+2]; for B_i, A[i-2,i+2].
      const Bitset allowed = detail::to_bits(g, side == Side::A ? w.b_side : w.a_side);
      const Bitset opposite = detail::to_bits(g, p.members(other(side), li));
      for (Vertex v : cls) {
        ++seen[v];
        const Bitset& nv = g.neighbor_bits(v);
        if ((nv & hole_bits) != expected_hole) {
          fail(std::to_string(g.label(v)) + " does not have the hole neighbourhood of " +
               detail::class_name(side, i));
        }
        for (Vertex u : cls) {
          if (g.adjacent(u, v)) fail(detail::class_name(side, i) + " is not independent");
        }
        if (!opposite.is_subset_of(nv)) {
          fail(std::to_string(g.label(v)) + " misses part of " + detail::class_name(other(side), i));
        }
        if (!nv.is_subset_of(allowed)) {
          fail(std::to_string(g.label(v)) + " has a neighbour outside its five-index window");
        }
      }
    }
  }
  for (Vertex v = 0; v < static_cast<Vertex>(g.num_vertices()); ++v) {
    if (seen[v] != 1) fail("vertex " + std::to_string(g.label(v)) + " is not in exactly one class");
  }
  return r;
}

/// (c) for class X_i and each direction, the restrictions N(w) ∩ X_i over the
/// witness pool are pairwise comparable, and the far pool's restrictions are
/// contained in the near pool's.
inline CheckResult check_restricted_comparability(const Graph& g, const HolePartition& p) {
  CheckResult r{"restricted-comparability", true, {}};
  for (std::size_t i = 0; i < p.m() && r.passed; ++i) {
    const auto li = static_cast<long long>(i);
    for (Side side : {Side::A, Side::B}) {
      const Bitset cls = detail::to_bits(g, p.members(side, li));
      for (int dir : {-1, +1}) {
        const auto& near = p.members(side, li + dir);            // A_{i±1} for A_i
        const auto& far = p.members(other(side), li + 2 * dir);  // B_{i±2} for A_i
        std::vector<Vertex> pool(near.begin(), near.end());
        pool.insert(pool.end(), far.begin(), far.end());
        for (Vertex w : pool) {
          const Bitset rw = g.neighbor_bits(w) & cls;
          for (Vertex w2 : pool) {
            const Bitset rw2 = g.neighbor_bits(w2) & cls;
            if (!rw.is_subset_of(rw2) && !rw2.is_subset_of(rw)) {
              r.passed = false;
              r.detail = "incomparable restrictions on " + detail::class_name(side, i);
            }
          }
        }
        for (Vertex w : far) {
          for (Vertex w2 : near) {
            if (!(g.neighbor_bits(w) & cls).is_subset_of(g.neighbor_bits(w2) & cls)) {
              r.passed = false;
              r.detail = "far witness not enclosed by near witness on " + detail::class_name(side, i);
            }
          }
        }
      }
    }
  }
  return r;
}

/// (d) the witness relation is antisymmetric, incomparable exactly for equal
/// neighbourhoods, and respected by the stored class order.
inline CheckResult check_local_orders(const Graph& g, const HolePartition& p) {
  CheckResult r{"local-orders", true, {}};
  if (!p.orders_built) return {"local-orders", false, "orders not built"};
  for (std::size_t i = 0; i < p.m() && r.passed; ++i) {
    for (Side side : {Side::A, Side::B}) {
      const auto& cls = p.members(side, static_cast<long long>(i));
      auto before = detail::witness_relation(g, p, side, static_cast<long long>(i));
      for (std::size_t a = 0; a < cls.size(); ++a) {
        for (std::size_t b = 0; b < cls.size(); ++b) {
          if (a == b) continue;
          const bool same = g.neighbor_bits(cls[a]) == g.neighbor_bits(cls[b]);
          const bool comparable = before[a][b] || before[b][a];
          std::string where = " in " + detail::class_name(side, i);
          if (before[a][b] && before[b][a]) {
            r = {"local-orders", false, "2-cycle" + where};
          } else if (comparable == same) {
            r = {"local-orders", false, "comparability disagrees with neighbourhood equality" + where};
          } else if (before[a][b] && a > b) {
            r = {"local-orders", false, "stored order is not a linear extension" + where};
          }
        }
      }
    }
  }
  return r;
}

/// (e) for every window of span m-3: classes A[i,j], B[i,j] are independent
/// and both window orders have the adjacency and enclosure properties.
inline CheckResult check_windows(const Graph& g, const HolePartition& p) {
  CheckResult r{"window-bpg", true, {}};
  const auto mm = static_cast<long long>(p.m());
  for (long long i = 0; i < mm; ++i) {
    const WindowSpec w = window(p, i, i + mm - 3);
    const VertexSet keep = w.all();
    const InducedSubgraph sub = induced_subgraph(g, keep);
    std::vector<Vertex> local(g.num_vertices(), -1);
    for (std::size_t k = 0; k < sub.to_parent.size(); ++k) local[sub.to_parent[k]] = static_cast<Vertex>(k);
    auto map = [&](const std::vector<Vertex>& vs) {
      std::vector<Vertex> out;
      for (Vertex v : vs) out.push_back(local[v]);
      return out;
    };
    const std::vector<Vertex> ua = map(w.a_side), wb = map(w.b_side);
    const Bipartition bip{VertexSet(ua), VertexSet(wb)};
    const Bipartition flipped{bip.right, bip.left};
    bool independent = true;
    for (auto [x, y] : sub.graph.edges()) {
      if (bip.left.contains(x) == bip.left.contains(y)) independent = false;
    }
    const std::string where = "window [" + std::to_string(i) + "," + std::to_string(i + mm - 3) + "]";
    if (!independent) return {"window-bpg", false, where + " is not bipartite with its classes"};
    if (!verify_adjacency_enclosure(sub.graph, bip, wb)) {
      return {"window-bpg", false, where + ": B-order fails adjacency/enclosure"};
    }
    if (!verify_adjacency_enclosure(sub.graph, flipped, ua)) {
      return {"window-bpg", false, where + ": A-order fails adjacency/enclosure"};
    }
  }
  return r;
}

/// Some rotation/direction of the hole satisfies c'_i <_cl c'_{i+2} with no
/// hole vertex strictly between them, for every i.
inline bool hole_is_monotone(const Graph& g, const HolePartition& p, const Hole& h) {
  const auto k = static_cast<long long>(h.size());
  for (int dir : {+1, -1}) {
    for (long long start = 0; start < k; ++start) {
      auto at = [&](long long t) { return h.at(start + dir * t); };
      bool ok = true;
      for (long long t = 0; t < k && ok; ++t) {
        const Vertex a = at(t), mid = at(t + 1), b = at(t + 2);
        ok = g.adjacent(a, mid) && less_cl(p, a, b);
        for (long long o = 0; o < k && ok; ++o) {
          const Vertex c = h.cycle[static_cast<std::size_t>(o)];
          if (c != a && c != b && less_cl(p, a, c) && less_cl(p, c, b)) ok = false;
        }
      }
      if (ok) return true;
    }
  }
  return false;
}

/// The partition's own hole plus holes found in random vertex-deleted copies.
inline std::vector<Hole> sample_holes(const Graph& g, const HolePartition& p, std::size_t samples,
                                      std::uint64_t seed) {
  std::vector<Hole> out{p.hole};
  std::set<std::vector<Vertex>> seen{VertexSet(p.hole.cycle).members()};
  SplitMix64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<Vertex> drop{p.hole.cycle[rng.below(p.m())]};
    const double rate = 0.05 + 0.25 * rng.unit();
    for (Vertex v = 0; v < static_cast<Vertex>(g.num_vertices()); ++v) {
      if (rng.chance(rate)) drop.push_back(v);
    }
    const InducedSubgraph sub = remove_vertices(g, VertexSet(drop));
    auto hole = find_shortest_hole(sub.graph);
    if (!hole) continue;
    Hole lifted;
    for (Vertex v : hole->cycle) lifted.cycle.push_back(sub.to_parent[v]);
    if (seen.insert(VertexSet(lifted.cycle).members()).second) out.push_back(std::move(lifted));
  }
  return out;
}

/// (f) every sampled hole is monotone in the cyclic window order.
inline CheckResult check_hole_monotonicity(const Graph& g, const HolePartition& p,
                                           const std::vector<Hole>& holes) {
  for (const Hole& h : holes) {
    if (!hole_is_monotone(g, p, h)) {
      std::string ids;
      for (Vertex v : h.cycle) ids += " " + std::to_string(g.label(v));
      return {"hole-monotonicity", false, "no monotone labelling for hole" + ids};
    }
  }
  return {"hole-monotonicity", true, std::to_string(holes.size()) + " holes checked"};
}

struct VerifyOptions {
  std::size_t hole_samples = 24;
  std::uint64_t seed = 1;
};

inline StructureReport verify_structure(const Graph& g, const HolePartition& p, VerifyOptions options = {}) {
  StructureReport report;
  report.checks.push_back(check_domination(g, p));
  report.checks.push_back(check_class_neighborhoods(g, p));
  report.checks.push_back(check_restricted_comparability(g, p));
  report.checks.push_back(check_local_orders(g, p));
  // The window and hole checks read the class lists through window(); they
  // are only meaningful on a partition that passed the shape checks.
  if (report.checks[1].passed && p.orders_built) {
    report.checks.push_back(check_windows(g, p));
    report.checks.push_back(
        check_hole_monotonicity(g, p, sample_holes(g, p, options.hole_samples, options.seed)));
  } else {
    report.checks.push_back({"window-bpg", false, "skipped: partition is invalid"});
    report.checks.push_back({"hole-monotonicity", false, "skipped: partition is invalid"});
  }
  return report;
}

/// Shortest hole, classification and local orders in one call.
inline HolePartition analyze_component(const Graph& g) {
  auto hole = find_shortest_hole(g);
  if (!hole) throw ContractViolation("graph has no hole");
  return build_local_orders(g, classify_around_hole(g, *hole));
}

}  // namespace bpdel
