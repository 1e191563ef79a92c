#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <ostream>
#include <vector>

#include "twojoin/graph.hpp"

namespace twojoin {

// Candidate anchor (a1, a2, b1, b2) for a 2-join: a1, b1 meant for the
// first side, a2, b2 for the second.
struct FourTuple {
  Vertex a1 = 0;
  Vertex a2 = 0;
  Vertex b1 = 0;
  Vertex b2 = 0;

  // The same anchor with the A and B roles exchanged.
  FourTuple twin() const { return {b1, b2, a1, a2}; }

  friend auto operator<=>(const FourTuple&, const FourTuple&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const FourTuple& z) {
  return os << '(' << z.a1 << ',' << z.a2 << ',' << z.b1 << ',' << z.b2 << ')';
}

// Pairwise distinct, a1a2 and b1b2 edges, a1b2 and b1a2 non-edges.
inline bool is_proper(const Graph& g, const FourTuple& z) {
  const Vertex v[4] = {z.a1, z.a2, z.b1, z.b2};
  for (int i = 0; i < 4; ++i) {
    if (v[i] >= g.n()) return false;
    for (int j = i + 1; j < 4; ++j) {
      if (v[i] == v[j]) return false;
    }
  }
  return g.adjacent(z.a1, z.a2) && g.adjacent(z.b1, z.b2) && !g.adjacent(z.a1, z.b2) &&
         !g.adjacent(z.b1, z.a2);
}

// A split (X1, X2, A1, B1, A2, B2) of a 2-join. All sets sorted.
struct TwoJoinSplit {
  VertexSet x1, x2;
  VertexSet a1, b1;
  VertexSet a2, b2;

  VertexSet c1() const { return difference(x1, a1, b1); }
  VertexSet c2() const { return difference(x2, a2, b2); }

  const VertexSet& side(int i) const { return i == 1 ? x1 : x2; }
  const VertexSet& a(int i) const { return i == 1 ? a1 : a2; }
  const VertexSet& b(int i) const { return i == 1 ? b1 : b2; }

  // The smaller side; on equal sizes the lexicographically smaller one.
  int minimal_side() const {
    if (x1.size() != x2.size()) return x1.size() < x2.size() ? 1 : 2;
    return x1 <= x2 ? 1 : 2;
  }
  std::size_t min_side_size() const { return std::min(x1.size(), x2.size()); }

  // Sides exchanged.
  TwoJoinSplit mirrored() const { return {x2, x1, a2, b2, a1, b1}; }

  friend bool operator==(const TwoJoinSplit&, const TwoJoinSplit&) = default;

 private:
  static VertexSet difference(const VertexSet& x, const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    for (Vertex v : x) {
      if (!contains(a, v) && !contains(b, v)) out.push_back(v);
    }
    return out;
  }
};

// True if both splits describe the same 2-join with the same side order,
// up to exchanging the A and B labels.
inline bool same_split(const TwoJoinSplit& s, const TwoJoinSplit& t) {
  if (s.x1 != t.x1 || s.x2 != t.x2) return false;
  if (s.a1 == t.a1 && s.b1 == t.b1 && s.a2 == t.a2 && s.b2 == t.b2) return true;
  return s.a1 == t.b1 && s.b1 == t.a1 && s.a2 == t.b2 && s.b2 == t.a2;
}

// a1, b1 on one side and a2, b2 on the other.
inline bool is_compatible(const FourTuple& z, const TwoJoinSplit& s) {
  auto in = [](const VertexSet& x, Vertex p, Vertex q) { return contains(x, p) && contains(x, q); };
  return (in(s.x1, z.a1, z.b1) && in(s.x2, z.a2, z.b2)) ||
         (in(s.x2, z.a1, z.b1) && in(s.x1, z.a2, z.b2));
}

// Decides whether (x1, V \ x1) is a 2-join and, if so, returns its split.
// The split is unique up to exchanging A and B; it is normalized so that
// A1 holds the smallest vertex of x1 that has a neighbor across.
inline std::optional<TwoJoinSplit> classify_partition(const Graph& g, const VertexSet& x1) {
  const std::size_t n = g.n();
  std::vector<char> in1(n, 0);
  std::size_t size1 = 0;
  for (Vertex v : x1) {
    if (v >= n || in1[v]) return std::nullopt;
    in1[v] = 1;
    ++size1;
  }
  if (size1 < 3 || n - size1 < 3) return std::nullopt;

  // Cross-neighborhoods of X1 vertices must take at most two distinct
  // non-empty values, which become A2 and B2.
  std::optional<VertexSet> first, second;
  VertexSet a1, b1;
  VertexSet cross;
  for (Vertex v = 0; v < n; ++v) {
    if (!in1[v]) continue;
    cross.clear();
    for (Vertex w : g.neighbors(v)) {
      if (!in1[w]) cross.push_back(w);
    }
    if (cross.empty()) continue;
    if (!first) {
      first = cross;
      a1.push_back(v);
    } else if (cross == *first) {
      a1.push_back(v);
    } else if (!second) {
      second = cross;
      b1.push_back(v);
    } else if (cross == *second) {
      b1.push_back(v);
    } else {
      return std::nullopt;
    }
  }
  if (!first || !second) return std::nullopt;
  // Disjointness of A2 and B2; completeness then follows from the way A1
  // and B1 were collected, and no X2 vertex outside A2 u B2 sees X1.
  for (Vertex v : *first) {
    if (contains(*second, v)) return std::nullopt;
  }

  TwoJoinSplit s;
  s.x1.reserve(size1);
  s.x2.reserve(n - size1);
  for (Vertex v = 0; v < n; ++v) (in1[v] ? s.x1 : s.x2).push_back(v);
  s.a1 = std::move(a1);
  s.b1 = std::move(b1);
  s.a2 = std::move(*first);
  s.b2 = std::move(*second);
  return s;
}

// Full check of a split against the 2-join definition.
inline bool is_valid_split(const Graph& g, const TwoJoinSplit& s) {
  const auto c = classify_partition(g, s.x1);
  return c && same_split(*c, s);
}

// G[X_side] is a chordless path with one end in A, the other in B and the
// interior in C. Forces |A| = |B| = 1.
inline bool is_path_side(const Graph& g, const TwoJoinSplit& s, int side) {
  const VertexSet& x = s.side(side);
  const VertexSet& a = s.a(side);
  const VertexSet& b = s.b(side);
  if (a.size() != 1 || b.size() != 1 || x.size() < 2) return false;

  std::size_t inner_edges = 0;
  for (Vertex v : x) {
    std::size_t d = 0;
    for (Vertex w : g.neighbors(v)) {
      if (contains(x, w)) ++d;
    }
    const bool end = v == a.front() || v == b.front();
    if (d != (end ? 1u : 2u)) return false;
    inner_edges += d;
  }
  if (inner_edges / 2 != x.size() - 1) return false;

  // Degrees alone allow a path plus disjoint cycles; walk from the A end.
  Vertex prev = a.front(), cur = a.front();
  std::size_t walked = 1;
  while (true) {
    Vertex next = cur;
    for (Vertex w : g.neighbors(cur)) {
      if (w != prev && contains(x, w)) {
        next = w;
        break;
      }
    }
    if (next == cur) break;
    prev = cur;
    cur = next;
    ++walked;
  }
  return cur == b.front() && walked == x.size();
}

inline bool is_nonpath(const Graph& g, const TwoJoinSplit& s) {
  return !is_path_side(g, s, 1) && !is_path_side(g, s, 2);
}

}  // namespace twojoin
