#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "twojoin/detect.hpp"
#include "twojoin/graph.hpp"
#include "twojoin/split.hpp"

// Brute-force ground truth for small graphs. Nothing here uses forcing,
// universal sets or bad paths; 2-joins come from classifying every vertex
// bipartition directly.
namespace twojoin::oracle {

inline constexpr std::size_t kMaxTwoJoinVertices = 16;
inline constexpr std::size_t kMaxStarCutsetVertices = 12;

// Canonical order: (minimal side size, sorted minimal side, sorted A1).
inline bool canonical_less(const TwoJoinSplit& s, const TwoJoinSplit& t) {
  const std::size_t ss = s.min_side_size(), ts = t.min_side_size();
  const VertexSet& sm = s.side(s.minimal_side());
  const VertexSet& tm = t.side(t.minimal_side());
  return std::tie(ss, sm, s.a1) < std::tie(ts, tm, t.a1);
}

// Every 2-join of g, one split per 2-join with vertex 0 in X1, as
// normalized by classify_partition; with nonpath_only, path 2-joins are
// dropped.
inline std::vector<TwoJoinSplit> enumerate_2joins(const Graph& g, bool nonpath_only) {
  const std::size_t n = g.n();
  if (n > kMaxTwoJoinVertices) throw PreconditionError("enumerate_2joins: oracle is capped at 16 vertices");
  require_connected(g, "enumerate_2joins");
  std::vector<TwoJoinSplit> out;
  if (n < 6) return out;
  // Bit i of mask selects vertex i + 1; vertex 0 is always in X1.
  const std::uint32_t limit = std::uint32_t{1} << (n - 1);
  VertexSet x1;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask)) + 1;
    if (size < 3 || size > n - 3) continue;
    x1.assign(1, 0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (mask >> i & 1u) x1.push_back(static_cast<Vertex>(i + 1));
    }
    auto s = classify_partition(g, x1);
    if (!s) continue;
    if (nonpath_only && !is_nonpath(g, *s)) continue;
    out.push_back(std::move(*s));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

// Smallest min(|X1|, |X2|) over all (non-path) 2-joins.
inline std::optional<std::size_t> oracle_min_side(const Graph& g, bool nonpath_only) {
  const auto all = enumerate_2joins(g, nonpath_only);
  if (all.empty()) return std::nullopt;
  return all.front().min_side_size();
}

// Exhaustive search over centers x and all S with x in S inside N[x].
// Witnesses are ordered by center, then |S|, then S lexicographically.
inline std::optional<StarCutset> oracle_star_cutset(const Graph& g) {
  const std::size_t n = g.n();
  if (n > kMaxStarCutsetVertices) throw PreconditionError("oracle_star_cutset: oracle is capped at 12 vertices");
  for (Vertex x = 0; x < n; ++x) {
    const auto nb = g.neighbors(x);
    std::vector<VertexSet> candidates;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << nb.size()); ++mask) {
      VertexSet s{x};
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (mask >> i & 1u) s.push_back(nb[i]);
      }
      candidates.push_back(make_set(std::move(s)));
    }
    std::sort(candidates.begin(), candidates.end(), [](const VertexSet& a, const VertexSet& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    for (auto& s : candidates) {
      StarCutset sc{x, std::move(s)};
      if (is_star_cutset(g, sc)) return sc;
    }
  }
  return std::nullopt;
}

}  // namespace twojoin::oracle
