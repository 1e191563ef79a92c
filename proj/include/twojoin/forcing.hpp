#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <vector>

#include "twojoin/graph.hpp"
#include "twojoin/split.hpp"

namespace twojoin {

// Exploration marks. A vertex's mark records its adjacency to a2 / b2:
// alpha_beta = both, alpha = a2 only, beta = b2 only, epsilon = neither.
// The four anchor vertices start unmarked; every other vertex loses its
// mark once explored.
enum class Mark : std::uint8_t { none, epsilon, alpha, beta, alpha_beta };

// Work counters for one forcing run.
struct ForcingStats {
  std::size_t explores = 0;
  std::size_t adjacency_scans = 0;  // neighbor-list entries read
  std::size_t list_scans = 0;       // A / B list entries read
  std::size_t moved = 0;
};

namespace detail {
class ForcingRun;
}

// Working state (S, T, A, B, marks) of one forcing run, exposed read-only
// to observers. anchor() is the tuple as the run sees it: its a1 and b1 lie
// in the seed, so for a seed on the second side the roles are exchanged.
class ForcingState {
 public:
  std::size_t n() const noexcept { return in_s_.size(); }
  const FourTuple& anchor() const noexcept { return z_; }
  const VertexSet& seed() const noexcept { return seed_; }
  bool in_s(Vertex v) const { return in_s_[v] != 0; }
  bool in_t(Vertex v) const { return in_s_[v] == 0; }
  bool in_a(Vertex v) const { return in_a_[v] != 0; }
  bool in_b(Vertex v) const { return in_b_[v] != 0; }
  Mark mark(Vertex v) const { return mark_[v]; }
  std::size_t t_size() const noexcept { return t_size_; }

 private:
  friend class detail::ForcingRun;

  FourTuple z_;
  VertexSet seed_;
  std::vector<char> in_s_, in_a_, in_b_;
  std::vector<Mark> mark_;
  std::size_t t_size_ = 0;
};

struct ForcingOptions {
  // Called after every Explore that did not stop the run.
  std::function<void(const ForcingState&)> on_explore;
  ForcingStats* stats = nullptr;
};

struct ForcingResult {
  std::optional<TwoJoinSplit> split;
  // Set when the run stopped on an alpha_beta-marked vertex of S.
  std::optional<Vertex> stopped_at;
};

namespace detail {

// One run of the forcing procedure with a1, b1 in the seed. Preconditions
// are the caller's responsibility. Returns the split with X1 = final S.
class ForcingRun {
 public:
  ForcingRun(const Graph& g, const FourTuple& z, const VertexSet& seed, const ForcingOptions& opts)
      : g_(g), opts_(opts) {
    const std::size_t n = g.n();
    st_.z_ = z;
    st_.seed_ = seed;
    st_.in_s_.assign(n, 0);
    st_.in_a_.assign(n, 0);
    st_.in_b_.assign(n, 0);
    st_.mark_.assign(n, Mark::none);
    tag_.assign(n, 0);
  }

  ForcingResult run() {
    const Graph& g = g_;
    const FourTuple& z = st_.z_;
    const std::size_t n = g.n();

    for (Vertex v : st_.seed_) st_.in_s_[v] = 1;
    st_.t_size_ = n - st_.seed_.size();

    for (Vertex w : g.neighbors(z.a1)) {
      if (!st_.in_s_[w]) {
        st_.in_a_[w] = 1;
        a_list_.push_back(w);
      }
    }
    for (Vertex w : g.neighbors(z.b1)) {
      if (!st_.in_s_[w]) {
        st_.in_b_[w] = 1;
        b_list_.push_back(w);
      }
    }
    stats_.adjacency_scans += g.degree(z.a1) + g.degree(z.b1);

    for (Vertex v = 0; v < n; ++v) {
      if (v == z.a1 || v == z.a2 || v == z.b1 || v == z.b2) continue;
      const bool sees_a2 = g.adjacent(v, z.a2);
      const bool sees_b2 = g.adjacent(v, z.b2);
      st_.mark_[v] = sees_a2 ? (sees_b2 ? Mark::alpha_beta : Mark::alpha)
                             : (sees_b2 ? Mark::beta : Mark::epsilon);
    }
    for (Vertex v : st_.seed_) {
      if (st_.mark_[v] != Mark::none) pending_.push(v);
    }

    std::vector<Vertex> both;
    for (Vertex w : a_list_) {
      if (st_.in_b_[w]) both.push_back(w);
    }
    move(both);

    while (!pending_.empty()) {
      const Vertex x = pending_.top();
      pending_.pop();
      if (st_.mark_[x] == Mark::alpha_beta) {
        finish_stats();
        return {std::nullopt, x};
      }
      explore(x);
      st_.mark_[x] = Mark::none;
      ++stats_.explores;
      if (opts_.on_explore) opts_.on_explore(st_);
    }
    finish_stats();
    if (st_.t_size_ < 3) return {};

    TwoJoinSplit s;
    for (Vertex v = 0; v < n; ++v) (st_.in_s_[v] ? s.x1 : s.x2).push_back(v);
    for (Vertex w : g.neighbors(z.a2)) {
      if (st_.in_s_[w]) s.a1.push_back(w);
    }
    for (Vertex w : g.neighbors(z.b2)) {
      if (st_.in_s_[w]) s.b1.push_back(w);
    }
    for (Vertex w : g.neighbors(z.a1)) {
      if (!st_.in_s_[w]) s.a2.push_back(w);
    }
    for (Vertex w : g.neighbors(z.b1)) {
      if (!st_.in_s_[w]) s.b2.push_back(w);
    }
    return {std::move(s), std::nullopt};
  }

 private:
  void move(const std::vector<Vertex>& ys) {
    for (Vertex y : ys) {
      st_.in_s_[y] = 1;
      st_.in_a_[y] = 0;
      st_.in_b_[y] = 0;
      --st_.t_size_;
      ++stats_.moved;
      if (st_.mark_[y] != Mark::none) pending_.push(y);
    }
  }

  // Moves (list Δ (N(x) ∩ T)); the list keeps list ∩ N(x).
  void move_symmetric_difference(Vertex x, std::vector<Vertex>& list, std::vector<char>& member) {
    const std::uint32_t stamp = x + 1;
    for (Vertex w : g_.neighbors(x)) {
      if (!st_.in_s_[w]) tag_[w] = stamp;
    }
    stats_.adjacency_scans += g_.degree(x);

    std::vector<Vertex> out;
    std::vector<Vertex> kept;
    stats_.list_scans += list.size();
    for (Vertex v : list) {
      if (!member[v]) continue;  // moved earlier
      (tag_[v] == stamp ? kept : out).push_back(v);
    }
    for (Vertex w : g_.neighbors(x)) {
      if (!st_.in_s_[w] && !member[w]) out.push_back(w);
    }
    list = std::move(kept);
    move(out);
  }

  void explore(Vertex x) {
    switch (st_.mark_[x]) {
      case Mark::alpha:
        move_symmetric_difference(x, a_list_, st_.in_a_);
        break;
      case Mark::beta:
        move_symmetric_difference(x, b_list_, st_.in_b_);
        break;
      case Mark::epsilon: {
        std::vector<Vertex> out;
        for (Vertex w : g_.neighbors(x)) {
          if (!st_.in_s_[w]) out.push_back(w);
        }
        stats_.adjacency_scans += g_.degree(x);
        move(out);
        break;
      }
      default:
        break;
    }
  }

  void finish_stats() {
    if (opts_.stats) *opts_.stats = stats_;
  }

  const Graph& g_;
  const ForcingOptions& opts_;
  ForcingState st_;
  std::vector<Vertex> a_list_, b_list_;
  std::vector<std::uint32_t> tag_;
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> pending_;
  ForcingStats stats_;
};

inline const ForcingOptions& no_forcing_options() {
  static const ForcingOptions opts;
  return opts;
}

// Unchecked forcing. `first_side` tells whether the seed holds a1, b1
// (true) or a2, b2 (false); the returned split always has a1 in A1, b1 in
// B1, a2 in A2 and b2 in B2, with the seed inside X1 or X2 accordingly.
inline ForcingResult force(const Graph& g, const FourTuple& z, const VertexSet& seed,
                           bool first_side, const ForcingOptions& opts = no_forcing_options()) {
  if (first_side) return ForcingRun(g, z, seed, opts).run();
  ForcingResult r = ForcingRun(g, FourTuple{z.a2, z.a1, z.b2, z.b1}, seed, opts).run();
  if (r.split) r.split = r.split->mirrored();
  return r;
}

}  // namespace detail

// Finds the 2-join compatible with z (a1 in A1, b1 in B1, a2 in A2, b2 in
// B2) whose side containing `seed` is inclusion-minimal, or reports that
// none exists. The seed must meet {a1, a2, b1, b2} in exactly {a1, b1}
// (seed lands in X1) or exactly {a2, b2} (seed lands in X2).
inline ForcingResult force_side_traced(const Graph& g, const FourTuple& z, VertexSet seed,
                                       const ForcingOptions& opts = detail::no_forcing_options()) {
  if (!is_proper(g, z)) throw PreconditionError("force_side: 4-tuple is not proper");
  seed = make_set(std::move(seed));
  if (seed.size() < 3) throw PreconditionError("force_side: seed needs at least 3 vertices");
  for (Vertex v : seed) {
    if (v >= g.n()) throw PreconditionError("force_side: seed vertex out of range");
  }
  const bool has_a1 = contains(seed, z.a1), has_b1 = contains(seed, z.b1);
  const bool has_a2 = contains(seed, z.a2), has_b2 = contains(seed, z.b2);
  bool first_side;
  if (has_a1 && has_b1 && !has_a2 && !has_b2) {
    first_side = true;
  } else if (has_a2 && has_b2 && !has_a1 && !has_b1) {
    first_side = false;
  } else {
    throw PreconditionError("force_side: seed must contain exactly {a1,b1} or exactly {a2,b2} of the tuple");
  }
  require_connected(g, "force_side");
  return detail::force(g, z, seed, first_side, opts);
}

inline std::optional<TwoJoinSplit> force_side(const Graph& g, const FourTuple& z, VertexSet seed) {
  return force_side_traced(g, z, std::move(seed)).split;
}

namespace detail {

inline std::optional<TwoJoinSplit> find_compatible_unchecked(const Graph& g, const FourTuple& z) {
  if (g.n() < 6) return std::nullopt;
  Vertex u = 0;
  while (u == z.a1 || u == z.a2 || u == z.b1 || u == z.b2) ++u;
  if (auto r = force(g, z, make_set({z.a1, z.b1, u}), true).split) return r;
  return force(g, z, make_set({z.a2, z.b2, u}), false).split;
}

}  // namespace detail

// Some 2-join compatible with z, or nullopt when none exists. The free
// seed vertex is the smallest id outside z.
inline std::optional<TwoJoinSplit> find_compatible(const Graph& g, const FourTuple& z) {
  if (!is_proper(g, z)) throw PreconditionError("find_compatible: 4-tuple is not proper");
  require_connected(g, "find_compatible");
  return detail::find_compatible_unchecked(g, z);
}

}  // namespace twojoin
