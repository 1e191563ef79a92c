#pragma once

#include <algorithm>
#include <atomic>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "twojoin/forcing.hpp"
#include "twojoin/graph.hpp"
#include "twojoin/parallel.hpp"
#include "twojoin/split.hpp"
#include "twojoin/universal.hpp"

namespace twojoin {

// ---------------------------------------------------------------------------
// Bad paths
// ---------------------------------------------------------------------------

// Bad paths relative to a 4-tuple z: induced paths of length >= 2 from a_i
// to b_i that avoid a_{3-i}, b_{3-i} and whose interior vertices all have
// degree 2 in G.
struct BadPathAnalysis {
  std::vector<std::vector<Vertex>> paths;  // each runs a_i ... b_i
  std::vector<int> sides;                  // i for each path
  std::optional<Vertex> uncovered;         // smallest vertex outside z on no bad path

  std::size_t k() const noexcept { return paths.size(); }
  std::size_t count(int side) const {
    return static_cast<std::size_t>(std::count(sides.begin(), sides.end(), side));
  }
};

namespace detail {

inline bool in_tuple(const FourTuple& z, Vertex v) {
  return v == z.a1 || v == z.a2 || v == z.b1 || v == z.b2;
}

inline BadPathAnalysis bad_paths_unchecked(const Graph& g, const FourTuple& z) {
  const std::size_t n = g.n();
  BadPathAnalysis out;
  // Interior candidates: degree-2 vertices outside z. Their components in
  // G are paths or cycles; every bad path interior is one whole path
  // component, because its ends attach to vertices of z.
  auto inner = [&](Vertex v) { return g.degree(v) == 2 && !in_tuple(z, v); };
  std::vector<char> covered(n, 0);
  std::vector<char> visited(n, 0);

  for (Vertex start = 0; start < n; ++start) {
    if (visited[start] || !inner(start)) continue;
    // Walk both directions from start.
    std::vector<Vertex> left, right;
    Vertex ends[2] = {start, start};
    bool cycle = false;
    visited[start] = 1;
    for (int dir = 0; dir < 2 && !cycle; ++dir) {
      Vertex prev = start;
      Vertex cur = g.neighbors(start)[dir];
      auto& chain = dir == 0 ? left : right;
      while (inner(cur)) {
        if (cur == start) {
          cycle = true;
          break;
        }
        visited[cur] = 1;
        chain.push_back(cur);
        const auto nb = g.neighbors(cur);
        const Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
      }
      ends[dir] = cur;
    }
    if (cycle) continue;

    const Vertex x = ends[0], y = ends[1];
    int side = 0;
    if ((x == z.a1 && y == z.b1) || (x == z.b1 && y == z.a1)) side = 1;
    if ((x == z.a2 && y == z.b2) || (x == z.b2 && y == z.a2)) side = 2;
    if (side == 0) continue;
    const Vertex a = side == 1 ? z.a1 : z.a2;
    const Vertex b = side == 1 ? z.b1 : z.b2;
    if (g.adjacent(a, b)) continue;  // chord: not induced

    // left runs away from start towards x, right towards y.
    std::vector<Vertex> path;
    path.push_back(x);
    for (auto it = left.rbegin(); it != left.rend(); ++it) path.push_back(*it);
    path.push_back(start);
    for (Vertex v : right) path.push_back(v);
    path.push_back(y);
    if (path.front() != a) std::reverse(path.begin(), path.end());
    for (std::size_t i = 1; i + 1 < path.size(); ++i) covered[path[i]] = 1;
    out.paths.push_back(std::move(path));
    out.sides.push_back(side);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!in_tuple(z, v) && !covered[v]) {
      out.uncovered = v;
      break;
    }
  }
  return out;
}

}  // namespace detail

inline BadPathAnalysis bad_paths(const Graph& g, const FourTuple& z) {
  if (!is_proper(g, z)) throw PreconditionError("bad_paths: 4-tuple is not proper");
  return detail::bad_paths_unchecked(g, z);
}

// ---------------------------------------------------------------------------
// Detection reports
// ---------------------------------------------------------------------------

struct DetectOptions {
  unsigned threads = 1;
};

struct DetectStats {
  std::size_t universal_size = 0;
  // Tuples of the universal set scanned in list order up to the answer.
  std::size_t tuples_examined = 0;
  std::size_t forcing_runs = 0;
};

struct Detection {
  std::optional<TwoJoinSplit> split;
  std::optional<FourTuple> tuple;  // universal-set member that produced split
  // On absence: the exhausted universal set, enough to replay every
  // per-tuple check.
  std::vector<FourTuple> certificate;
  DetectStats stats;

  explicit operator bool() const noexcept { return split.has_value(); }
};

namespace detail {

// Relabels A/B so that z.a1 lies in A1 (or A2 when z's first pair is on
// the second side).
inline TwoJoinSplit oriented(TwoJoinSplit s, const FourTuple& z) {
  const bool flip = contains(s.x1, z.a1) ? contains(s.b1, z.a1) : contains(s.b2, z.a1);
  if (flip) {
    std::swap(s.a1, s.b1);
    std::swap(s.a2, s.b2);
  }
  return s;
}

// Decision for one tuple when every vertex outside z is interior to a bad
// path, i.e. G is the union of the bad paths and the edges a1a2, b1b2.
//
// Counting gate: no non-path 2-join compatible with z when k <= 2, or
// k = 3 with every vertex of z on some bad path. Otherwise a side made of
// bad paths sharing their ends is built and re-validated. The interior of
// a bad path moved across must have at least two vertices, so every
// single-vertex path stays home and long paths fill the home side up to
// two.
inline std::optional<TwoJoinSplit> union_of_bad_paths(const Graph& g, const FourTuple& z,
                                                      const BadPathAnalysis& bp) {
  const std::size_t k = bp.k();
  const std::size_t k1 = bp.count(1), k2 = bp.count(2);
  const bool z_on_paths = k1 > 0 && k2 > 0;
  if (k <= 2 || (k == 3 && z_on_paths)) return std::nullopt;

  for (int side = 1; side <= 2; ++side) {
    if ((side == 1 ? k1 : k2) < 2) continue;
    std::vector<char> home(g.n(), 0);
    std::size_t taken = 0;
    for (std::size_t pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < k; ++i) {
        if (bp.sides[i] != side) continue;
        const auto& p = bp.paths[i];
        const bool is_short = p.size() == 3;
        if ((pass == 0 && is_short) || (pass == 1 && !is_short && taken < 2)) {
          for (Vertex v : p) home[v] = 1;
          ++taken;
        }
      }
    }
    // X1 holds a1, b1 whichever side was built.
    VertexSet x1;
    for (Vertex v = 0; v < g.n(); ++v) {
      if ((home[v] != 0) == (side == 1)) x1.push_back(v);
    }
    if (auto s = classify_partition(g, x1); s && is_nonpath(g, *s)) return oriented(*s, z);
  }
  return std::nullopt;
}

struct TupleCounter {
  std::atomic<std::size_t> forcing_runs{0};
};

inline std::optional<TwoJoinSplit> nonpath_for_tuple(const Graph& g, const FourTuple& z,
                                                     TupleCounter& counter) {
  const BadPathAnalysis bp = bad_paths_unchecked(g, z);
  if (bp.uncovered) {
    const Vertex u = *bp.uncovered;
    for (bool first : {true, false}) {
      counter.forcing_runs.fetch_add(1, std::memory_order_relaxed);
      const VertexSet seed = first ? make_set({z.a1, z.b1, u}) : make_set({z.a2, z.b2, u});
      auto r = force(g, z, seed, first).split;
      if (r && is_nonpath(g, *r)) return r;
    }
    return std::nullopt;
  }
  return union_of_bad_paths(g, z, bp);
}

template <class PerTuple>
Detection run_detection(const Graph& g, const DetectOptions& opts, const char* who, PerTuple per_tuple) {
  require_connected(g, who);
  Detection d;
  std::vector<FourTuple> u = universal_set(g);
  d.stats.universal_size = u.size();
  TupleCounter counter;
  auto hit = first_hit(u.size(), opts.threads,
                       [&](std::size_t i) { return per_tuple(u[i], counter); });
  d.stats.forcing_runs = counter.forcing_runs.load();
  if (hit) {
    d.stats.tuples_examined = hit->first + 1;
    d.tuple = u[hit->first];
    d.split = std::move(hit->second);
  } else {
    d.stats.tuples_examined = u.size();
    d.certificate = std::move(u);
  }
  return d;
}

}  // namespace detail

// Some 2-join of the connected graph g, or certified absence (the
// certificate is the exhausted universal set). O(n^2 m).
inline Detection detect_2join_report(const Graph& g, const DetectOptions& opts = {}) {
  return detail::run_detection(g, opts, "detect_2join",
                               [&](const FourTuple& z, detail::TupleCounter& c) {
                                 c.forcing_runs.fetch_add(2, std::memory_order_relaxed);
                                 return detail::find_compatible_unchecked(g, z);
                               });
}

inline std::optional<TwoJoinSplit> detect_2join(const Graph& g) {
  return detect_2join_report(g).split;
}

// Some non-path 2-join of g, or certified absence. O(n^2 m).
inline Detection detect_nonpath_2join_report(const Graph& g, const DetectOptions& opts = {}) {
  return detail::run_detection(g, opts, "detect_nonpath_2join",
                               [&](const FourTuple& z, detail::TupleCounter& c) {
                                 return detail::nonpath_for_tuple(g, z, c);
                               });
}

inline std::optional<TwoJoinSplit> detect_nonpath_2join(const Graph& g) {
  return detect_nonpath_2join_report(g).split;
}

// ---------------------------------------------------------------------------
// Star cutsets
// ---------------------------------------------------------------------------

// S with center x in S, S \ {x} inside N(x), G \ S disconnected.
struct StarCutset {
  Vertex center = 0;
  VertexSet cutset;

  friend bool operator==(const StarCutset&, const StarCutset&) = default;
};

inline bool is_star_cutset(const Graph& g, const StarCutset& sc) {
  if (sc.center >= g.n() || !contains(sc.cutset, sc.center)) return false;
  for (Vertex v : sc.cutset) {
    if (v >= g.n()) return false;
    if (v != sc.center && !g.adjacent(v, sc.center)) return false;
  }
  std::vector<char> gone(g.n(), 0);
  for (Vertex v : sc.cutset) gone[v] = 1;
  std::size_t comps = 0;
  std::vector<char> seen(g.n(), 0);
  for (Vertex s = 0; s < g.n(); ++s) {
    if (gone[s] || seen[s]) continue;
    if (++comps >= 2) return true;
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (!gone[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return false;
}

namespace detail {

// Number of components of G restricted to vertices with keep[v], capped at 2.
inline std::size_t count_components(const Graph& g, const std::vector<char>& keep) {
  std::size_t comps = 0;
  std::vector<char> seen(g.n(), 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.n() && comps < 2; ++s) {
    if (!keep[s] || seen[s]) continue;
    ++comps;
    stack.assign(1, s);
    seen[s] = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (keep[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return comps;
}

}  // namespace detail

// First star cutset found over centers x in ascending order, or nullopt.
//
// Any star cutset centered at x can be turned into one of three shapes:
// N[x] when G \ N[x] has two components; N[x] \ {v} for a neighbor v with
// no neighbor outside N[x] when G \ N[x] is connected; and, when N[x] = V,
// {x} if G \ x is disconnected, else V minus two non-adjacent neighbors.
inline std::optional<StarCutset> has_star_cutset(const Graph& g) {
  require_connected(g, "has_star_cutset");
  const std::size_t n = g.n();
  for (Vertex x = 0; x < n; ++x) {
    std::vector<char> closed(n, 0);
    closed[x] = 1;
    for (Vertex w : g.neighbors(x)) closed[w] = 1;
    std::vector<char> outside(n);
    for (Vertex v = 0; v < n; ++v) outside[v] = !closed[v];

    auto closed_set = [&] {
      VertexSet s;
      for (Vertex v = 0; v < n; ++v) {
        if (closed[v]) s.push_back(v);
      }
      return s;
    };

    const std::size_t comps = detail::count_components(g, outside);
    if (comps >= 2) return StarCutset{x, closed_set()};
    if (comps == 1) {
      for (Vertex v : g.neighbors(x)) {
        const auto nb = g.neighbors(v);
        if (std::all_of(nb.begin(), nb.end(), [&](Vertex w) { return closed[w] != 0; })) {
          VertexSet s = closed_set();
          s.erase(std::find(s.begin(), s.end(), v));
          return StarCutset{x, std::move(s)};
        }
      }
      continue;
    }
    // N[x] = V.
    std::vector<char> rest(n, 1);
    rest[x] = 0;
    if (n > 1 && detail::count_components(g, rest) >= 2) return StarCutset{x, {x}};
    const auto nb = g.neighbors(x);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (!g.adjacent(nb[i], nb[j])) {
          VertexSet s;
          for (Vertex v = 0; v < n; ++v) {
            if (v != nb[i] && v != nb[j]) s.push_back(v);
          }
          return StarCutset{x, std::move(s)};
        }
      }
    }
  }
  return std::nullopt;
}

// Thrown by minimally_sided_nonpath_2join when its no-star-cutset
// precondition fails; carries the witness.
class StarCutsetError : public PreconditionError {
 public:
  explicit StarCutsetError(StarCutset witness)
      : PreconditionError("graph has a star cutset centered at " + std::to_string(witness.center)),
        witness_(std::move(witness)) {}

  const StarCutset& witness() const noexcept { return witness_; }

 private:
  StarCutset witness_;
};

// ---------------------------------------------------------------------------
// Minimally-sided searches
// ---------------------------------------------------------------------------

struct MinimalSearch {
  std::optional<TwoJoinSplit> split;
  DetectStats stats;

  explicit operator bool() const noexcept { return split.has_value(); }
};

namespace detail {

struct Ranked {
  std::size_t size;
  VertexSet side;
  std::size_t index;
  TwoJoinSplit split;

  bool operator<(const Ranked& o) const {
    return std::tie(size, side, index) < std::tie(o.size, o.side, o.index);
  }
};

inline void offer(std::optional<Ranked>& best, const TwoJoinSplit& s, std::size_t index) {
  const std::size_t size = s.min_side_size();
  const VertexSet& side = s.side(s.minimal_side());
  if (best && std::tie(best->size, best->side) <= std::tie(size, side)) return;
  best = Ranked{size, side, index, s};
}

enum class SeedShape { single, pairs };

// Forces every seed {a1, b1, u} / {a2, b2, u} (and with `pairs` also every
// {a1, b1, u, v} / {a2, b2, u, v}) for every tuple of the universal set,
// keeping the result with the smallest minimal side.
inline MinimalSearch minimal_sweep(const Graph& g, bool keep_path_2joins, SeedShape shape,
                                   const DetectOptions& opts) {
  MinimalSearch out;
  const std::vector<FourTuple> u = universal_set(g);
  out.stats.universal_size = u.size();
  out.stats.tuples_examined = u.size();
  const unsigned workers = std::max(1u, opts.threads);
  std::vector<std::optional<Ranked>> best(workers);
  std::atomic<std::size_t> runs{0};
  const std::size_t n = g.n();

  for_each_index(u.size(), workers, [&](std::size_t i, unsigned w) {
    const FourTuple& z = u[i];
    std::size_t local_runs = 0;
    auto consider = [&](const std::optional<TwoJoinSplit>& r) {
      if (r && (keep_path_2joins || is_nonpath(g, *r))) offer(best[w], *r, i);
    };
    // single[first][u]: forcing result for the three-vertex seed.
    std::vector<std::optional<TwoJoinSplit>> single[2];
    single[0].resize(n);
    single[1].resize(n);
    for (Vertex x = 0; x < n; ++x) {
      if (in_tuple(z, x)) continue;
      for (int side = 0; side < 2; ++side) {
        const bool first = side == 0;
        const VertexSet seed = first ? make_set({z.a1, z.b1, x}) : make_set({z.a2, z.b2, x});
        ++local_runs;
        single[side][x] = force(g, z, seed, first).split;
        consider(single[side][x]);
      }
    }
    if (shape == SeedShape::pairs) {
      for (Vertex x = 0; x < n; ++x) {
        if (in_tuple(z, x)) continue;
        for (Vertex y = x + 1; y < n; ++y) {
          if (in_tuple(z, y)) continue;
          for (int side = 0; side < 2; ++side) {
            const auto& base = single[side][x];
            // A larger seed can only shrink the set of qualifying 2-joins;
            // if the minimal side for {.., x} already holds y it is also
            // the minimal side for {.., x, y}.
            if (!base) continue;
            const bool first = side == 0;
            if (contains(first ? base->x1 : base->x2, y)) continue;
            const VertexSet seed = first ? make_set({z.a1, z.b1, x, y}) : make_set({z.a2, z.b2, x, y});
            ++local_runs;
            consider(force(g, z, seed, first).split);
          }
        }
      }
    }
    runs.fetch_add(local_runs, std::memory_order_relaxed);
  });

  std::optional<Ranked> overall;
  for (auto& b : best) {
    if (b && (!overall || *b < *overall)) overall = std::move(b);
  }
  out.stats.forcing_runs = runs.load();
  if (overall) out.split = std::move(overall->split);
  return out;
}

}  // namespace detail

// Minimally-sided non-path 2-join of a connected graph with no star
// cutset, or certified absence of any non-path 2-join. O(n^3 m). Throws
// StarCutsetError if g has a star cutset.
inline MinimalSearch minimally_sided_nonpath_2join_report(const Graph& g, const DetectOptions& opts = {}) {
  require_connected(g, "minimally_sided_nonpath_2join");
  if (auto sc = has_star_cutset(g)) throw StarCutsetError(std::move(*sc));
  return detail::minimal_sweep(g, false, detail::SeedShape::single, opts);
}

inline std::optional<TwoJoinSplit> minimally_sided_nonpath_2join(const Graph& g) {
  return minimally_sided_nonpath_2join_report(g).split;
}

// Minimally-sided 2-join (path 2-joins allowed), or certified absence of
// any 2-join. O(n^3 m).
inline MinimalSearch minimally_sided_2join_report(const Graph& g, const DetectOptions& opts = {}) {
  require_connected(g, "minimally_sided_2join");
  return detail::minimal_sweep(g, true, detail::SeedShape::single, opts);
}

inline std::optional<TwoJoinSplit> minimally_sided_2join(const Graph& g) {
  return minimally_sided_2join_report(g).split;
}

// Minimally-sided non-path 2-join in any connected graph (star cutsets
// allowed), seeding the forcing with vertex pairs. O(n^4 m).
inline MinimalSearch minimally_sided_nonpath_general_report(const Graph& g, const DetectOptions& opts = {}) {
  require_connected(g, "minimally_sided_nonpath_general");
  return detail::minimal_sweep(g, false, detail::SeedShape::pairs, opts);
}

inline std::optional<TwoJoinSplit> minimally_sided_nonpath_general(const Graph& g) {
  return minimally_sided_nonpath_general_report(g).split;
}

// ---------------------------------------------------------------------------
// Blocks of decomposition
// ---------------------------------------------------------------------------

struct Block {
  Graph graph;
  // original[i] is the input id of block vertex i, for i < side size.
  std::vector<Vertex> original;
  // Marker path ids, from the end complete to A to the end complete to B.
  std::vector<Vertex> marker;
};

inline constexpr std::size_t kDefaultMarkerLength = 3;

namespace detail {

inline Block make_block(const Graph& g, const VertexSet& side, const VertexSet& a,
                        const VertexSet& b, std::size_t length) {
  Block blk;
  blk.original = side;
  std::vector<std::int64_t> index(g.n(), -1);
  for (std::size_t i = 0; i < side.size(); ++i) index[side[i]] = static_cast<std::int64_t>(i);
  std::vector<Edge> edges;
  for (Vertex u : side) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && index[v] >= 0) {
        edges.emplace_back(static_cast<Vertex>(index[u]), static_cast<Vertex>(index[v]));
      }
    }
  }
  const auto base = static_cast<Vertex>(side.size());
  for (std::size_t i = 0; i <= length; ++i) blk.marker.push_back(base + static_cast<Vertex>(i));
  for (std::size_t i = 0; i < length; ++i) edges.emplace_back(blk.marker[i], blk.marker[i + 1]);
  for (Vertex v : a) edges.emplace_back(static_cast<Vertex>(index[v]), blk.marker.front());
  for (Vertex v : b) edges.emplace_back(static_cast<Vertex>(index[v]), blk.marker.back());
  blk.graph = Graph::from_edges(side.size() + length + 1, edges);
  return blk;
}

}  // namespace detail

// G1 keeps X1 and replaces X2 by a chordless marker path of `length`
// edges whose first vertex is complete to A1 and last vertex complete to
// B1; G2 likewise for X2. Side vertices keep their relative order.
inline std::pair<Block, Block> decompose_blocks(const Graph& g, const TwoJoinSplit& s,
                                                std::size_t length = kDefaultMarkerLength) {
  if (length < 1) throw PreconditionError("decompose_blocks: marker length must be at least 1");
  if (!is_valid_split(g, s)) throw PreconditionError("decompose_blocks: split is not a 2-join of the graph");
  return {detail::make_block(g, s.x1, s.a1, s.b1, length), detail::make_block(g, s.x2, s.a2, s.b2, length)};
}

}  // namespace twojoin
