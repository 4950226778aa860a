#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bpdel/errors.hpp"
#include "bpdel/graph.hpp"
#include "bpdel/hole_structure.hpp"
#include "bpdel/random.hpp"
#include "bpdel/recognition.hpp"
#include "bpdel/solver.hpp"

namespace bpdel {

/// Column interval [first, last] of the W side, 0-based and inclusive.
using Interval = std::pair<std::size_t, std::size_t>;

struct Staircase {
  Graph g;
  Bipartition sides;
  StrongOrdering ordering;
};

/// u_i = i, w_j = |intervals| + j; u_i is adjacent to w_first..w_last of its
/// interval. Throws ContractViolation unless both endpoints are non-decreasing,
/// each interval is non-empty and inside [0, nW), and consecutive intervals overlap.
inline Staircase staircase_from_intervals(std::size_t nW, const std::vector<Interval>& intervals) {
  const std::size_t nU = intervals.size();
  if (nU == 0 || nW == 0) throw ContractViolation("staircase needs both sides non-empty");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < nU; ++i) {
    const auto [l, r] = intervals[i];
    if (l > r || r >= nW) throw ContractViolation("staircase interval out of range");
    if (i > 0) {
      const auto [pl, pr] = intervals[i - 1];
      if (l < pl || r < pr || l > pr) throw ContractViolation("staircase intervals are not monotone");
    }
    for (std::size_t j = l; j <= r; ++j) {
      edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(nU + j));
    }
  }
  std::vector<Vertex> us(nU), ws(nW);
  for (std::size_t i = 0; i < nU; ++i) us[i] = static_cast<Vertex>(i);
  for (std::size_t j = 0; j < nW; ++j) ws[j] = static_cast<Vertex>(nU + j);
  return {Graph::from_edges(nU + nW, edges), {VertexSet(us), VertexSet(ws)}, {us, ws}};
}

/// Random monotone intervals with l_0 = 0 and r_{nU-1} = nW - 1, so every
/// vertex is covered and the graph is connected.
inline Staircase gen_staircase(std::size_t nU, std::size_t nW, std::uint64_t seed) {
  if (nU == 0 || nW == 0) throw ContractViolation("staircase needs nU, nW >= 1");
  SplitMix64 rng(seed);
  const std::size_t reach = (nW + nU - 1) / nU + 1;
  std::vector<Interval> intervals;
  std::size_t l = 0, prev_r = 0;
  for (std::size_t i = 0; i < nU; ++i) {
    const std::size_t lo = std::max(l, prev_r);
    std::size_t r = std::min(nW - 1, lo + rng.below(reach + 1));
    if (i + 1 == nU) r = nW - 1;
    intervals.emplace_back(l, r);
    prev_r = r;
    l = static_cast<std::size_t>(rng.between(static_cast<std::int64_t>(l), static_cast<std::int64_t>(r)));
  }
  return staircase_from_intervals(nW, intervals);
}

inline Graph gen_cycle(std::size_t m) {
  if (m < 3) throw ContractViolation("cycle needs at least 3 vertices");
  return cycle_graph(m);
}

/// G(n, p): each pair independently with probability p, pairs in (u < v) order.
inline Graph gen_random(std::size_t n, double p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng.chance(p)) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return Graph::from_edges(n, edges);
}

inline constexpr std::size_t kThickenAttempts = 400;

namespace detail {

/// Random consecutive run of `order` covering positions [lo, hi], widened by
/// up to two positions on either side.
inline std::vector<Vertex> random_run(SplitMix64& rng, const std::vector<Vertex>& order, std::size_t lo,
                                      std::size_t hi) {
  const std::size_t first = lo - std::min<std::size_t>(lo, rng.below(3));
  const std::size_t last = std::min(order.size() - 1, hi + static_cast<std::size_t>(rng.below(3)));
  return {order.begin() + static_cast<std::ptrdiff_t>(first), order.begin() + static_cast<std::ptrdiff_t>(last) + 1};
}

/// Neighbourhood proposal for a new member of class (side, i): a run of the
/// opposite five-index window that contains the classes it must be
/// complete to (c_{i-1} .. c_{i+1} for A_i, all of A_i for B_i).
inline std::vector<Vertex> propose_neighbourhood(SplitMix64& rng, const HolePartition& p, Side side,
                                                 long long i) {
  const WindowSpec w = window(p, i - 2, i + 2);
  const std::vector<Vertex>& order = side == Side::A ? w.b_side : w.a_side;
  std::size_t lo = order.size(), hi = 0;
  auto cover = [&](Vertex v) {
    const auto at = static_cast<std::size_t>(std::find(order.begin(), order.end(), v) - order.begin());
    lo = std::min(lo, at);
    hi = std::max(hi, at);
  };
  if (side == Side::A) {
    cover(p.hole.at(i - 1));
    cover(p.hole.at(i + 1));
  } else {
    for (Vertex v : p.A(i)) cover(v);
  }
  return random_run(rng, order, lo, hi);
}

}  // namespace detail

/// C_m thickened by extraA vertices in random A-classes and extraB in random
/// B-classes. Each vertex is proposed against the current window orders and
/// kept only if the graph stays almost-BPG with shortest hole m and the vertex
/// classifies around the base cycle on the requested side; one vertex gets
/// kThickenAttempts proposals before GenerationError.
inline Graph gen_thickened_cycle(std::size_t m, std::size_t extraA, std::size_t extraB, std::uint64_t seed) {
  if (m < 10) throw ContractViolation("thickened cycles need m >= 10");
  SplitMix64 rng(seed);
  Graph g = cycle_graph(m);
  Hole base;
  for (std::size_t i = 0; i < m; ++i) base.cycle.push_back(static_cast<Vertex>(i));
  HolePartition p = build_local_orders(g, classify_around_hole(g, base));

  std::vector<Side> pending(extraA, Side::A);
  pending.insert(pending.end(), extraB, Side::B);
  rng.shuffle(pending);
  for (Side side : pending) {
    bool placed = false;
    for (std::size_t attempt = 0; attempt < kThickenAttempts && !placed; ++attempt) {
      const auto i = static_cast<long long>(rng.below(m));
      Graph candidate = add_vertices(g, {detail::propose_neighbourhood(rng, p, side, i)});
      if (!is_almost_bpg(candidate).almost_bpg) continue;
      auto shortest = find_shortest_hole(candidate);
      if (!shortest || shortest->size() != m) continue;
      try {
        HolePartition next = build_local_orders(candidate, classify_around_hole(candidate, base));
        if (next.position[g.num_vertices()].side != side) continue;
        g = std::move(candidate);
        p = std::move(next);
        placed = true;
      } catch (const StructureViolation&) {
      }
    }
    if (!placed) throw GenerationError("could not place a thickening vertex within the resample limit");
  }
  return g;
}

struct PlantedInstance {
  Graph g;
  std::size_t opt_upper_bound = 0;
  /// Deleting these leaves a BPG.
  VertexSet planted;
};

/// Appends q vertices, each adjacent to every old vertex with probability 1/2.
/// planted = the new vertices plus, for a base that is not a BPG, the
/// approx9 deletion set of the base.
inline PlantedInstance plant_vertices(const Graph& base, std::size_t q, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const std::size_t n = base.num_vertices();
  std::vector<std::vector<Vertex>> fresh(q);
  for (auto& nb : fresh) {
    for (std::size_t v = 0; v < n; ++v) {
      if (rng.chance(0.5)) nb.push_back(static_cast<Vertex>(v));
    }
  }
  PlantedInstance out{add_vertices(base, fresh), 0, {}};
  for (std::size_t t = 0; t < q; ++t) out.planted.insert(static_cast<Vertex>(n + t));
  if (!is_bpg(base).bpg) out.planted.insert(approx9(base).deleted);
  out.opt_upper_bound = out.planted.size();
  return out;
}

/// Family name plus integer knobs:
///   staircase       nU, nW
///   cycle           m
///   thickened_cycle m, extraA, extraB
///   random          n, p_percent
///   planted         q, applied to base_family with the same params
struct GenSpec {
  std::string family;
  std::map<std::string, std::int64_t> params;
  std::uint64_t seed = 0;
  std::string base_family;
};

struct Generated {
  Graph g;
  std::optional<std::size_t> opt_upper_bound;
  std::optional<VertexSet> planted;
};

namespace detail {

inline std::size_t require_param(const GenSpec& spec, const std::string& name) {
  auto it = spec.params.find(name);
  if (it == spec.params.end()) throw ContractViolation("family " + spec.family + " needs parameter " + name);
  if (it->second < 0) throw ContractViolation("parameter " + name + " must be non-negative");
  return static_cast<std::size_t>(it->second);
}

inline Graph generate_base(const GenSpec& spec, const std::string& family, std::uint64_t seed) {
  GenSpec named = spec;
  named.family = family;
  if (family == "staircase") {
    return gen_staircase(require_param(named, "nU"), require_param(named, "nW"), seed).g;
  }
  if (family == "cycle") return gen_cycle(require_param(named, "m"));
  if (family == "thickened_cycle") {
    return gen_thickened_cycle(require_param(named, "m"), require_param(named, "extraA"),
                               require_param(named, "extraB"), seed);
  }
  if (family == "random") {
    return gen_random(require_param(named, "n"), static_cast<double>(require_param(named, "p_percent")) / 100.0,
                      seed);
  }
  throw ContractViolation("unknown instance family '" + family + "'");
}

}  // namespace detail

inline PlantedInstance gen_planted(const GenSpec& base, std::size_t q, std::uint64_t seed) {
  if (base.family == "planted") throw ContractViolation("planted instances need a non-planted base family");
  return plant_vertices(detail::generate_base(base, base.family, base.seed), q, seed);
}

/// A planted spec generates its base from `seed` and its noise from the
/// first SplitMix64 output of `seed`.
inline Generated generate(const GenSpec& spec) {
  if (spec.family == "planted") {
    GenSpec base = spec;
    base.family = spec.base_family;
    PlantedInstance inst = gen_planted(base, detail::require_param(spec, "q"), SplitMix64(spec.seed).next());
    return {std::move(inst.g), inst.opt_upper_bound, std::move(inst.planted)};
  }
  return {detail::generate_base(spec, spec.family, spec.seed), std::nullopt, std::nullopt};
}

}  // namespace bpdel
