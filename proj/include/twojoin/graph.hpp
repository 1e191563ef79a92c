#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twojoin/errors.hpp"

namespace twojoin {

using Vertex = std::uint32_t;

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

// Largest vertex count accepted; the adjacency bit table is n*n bits.
inline constexpr std::size_t kMaxVertices = 20000;

// Simple undirected graph on vertices 0..n-1. Immutable once built.
//
// Neighbor lists are kept sorted so that every traversal built on top of
// them is deterministic (smallest id first). adjacent() is O(1) through a
// symmetric bit table.
class Graph {
 public:
  Graph() = default;

  // Throws GraphError on self-loops, duplicate edges (in either
  // orientation), endpoints >= n, or n > kMaxVertices.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    if (n > kMaxVertices) {
      throw GraphError("graph has " + std::to_string(n) + " vertices, cap is " +
                       std::to_string(kMaxVertices));
    }
    Graph g;
    g.n_ = n;
    g.adj_.resize(n);
    g.bits_.assign((n * n + 63) / 64, 0);
    for (const auto& [u, v] : edges) {
      if (u >= n || v >= n) {
        throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") has an endpoint outside 0.." + std::to_string(n ? n - 1 : 0));
      }
      if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
      if (g.adjacent(u, v)) {
        throw GraphError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
      }
      g.set_bit(u, v);
      g.set_bit(v, u);
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
      ++g.m_;
    }
    for (auto& list : g.adj_) std::sort(list.begin(), list.end());
    return g;
  }

  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  bool adjacent(Vertex u, Vertex v) const {
    const std::size_t bit = static_cast<std::size_t>(u) * n_ + v;
    return (bits_[bit >> 6] >> (bit & 63)) & 1u;
  }

  // All edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : adj_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void set_bit(Vertex u, Vertex v) {
    const std::size_t bit = static_cast<std::size_t>(u) * n_ + v;
    bits_[bit >> 6] |= std::uint64_t{1} << (bit & 63);
  }

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> bits_;
};

inline Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  return Graph::from_edges(n, edges);
}

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return Graph::from_edges(n, edges);
}

// Sorted set helpers.
inline bool contains(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline VertexSet make_set(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Maximal connected vertex sets, each sorted, ordered by smallest member.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> comps;
  std::vector<char> seen(g.n(), 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  std::vector<char> seen(g.n(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.n();
}

inline void require_connected(const Graph& g, const char* who) {
  if (!is_connected(g)) throw PreconditionError(std::string(who) + ": input graph is disconnected");
}

// Rooted BFS spanning tree. Among the neighbors of v one level closer to
// the root, the smallest id is the parent; children lists are ascending.
struct BfsTree {
  Vertex root = 0;
  std::vector<std::optional<Vertex>> parent;
  std::vector<std::size_t> level;
  std::vector<std::vector<Vertex>> children;

  std::size_t size() const noexcept { return level.size(); }
};

inline BfsTree bfs_tree(const Graph& g, Vertex root) {
  if (root >= g.n()) throw PreconditionError("bfs_tree: root out of range");
  require_connected(g, "bfs_tree");

  const std::size_t n = g.n();
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  BfsTree t;
  t.root = root;
  t.parent.assign(n, std::nullopt);
  t.level.assign(n, kUnseen);
  t.children.assign(n, {});

  std::queue<Vertex> queue;
  t.level[root] = 0;
  queue.push(root);
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(v)) {
      if (t.level[w] == kUnseen) {
        t.level[w] = t.level[v] + 1;
        queue.push(w);
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (v == root) continue;
    for (Vertex w : g.neighbors(v)) {
      if (t.level[w] + 1 == t.level[v]) {
        t.parent[v] = w;
        t.children[w].push_back(v);
        break;
      }
    }
  }
  return t;
}

// All vertices whose root path passes through u (u included), sorted.
inline VertexSet descendants(const BfsTree& t, Vertex u) {
  VertexSet out;
  std::vector<Vertex> stack{u};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (Vertex c : t.children[v]) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Induced subgraph on `keep` (sorted); vertex keep[i] becomes i.
inline Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<std::int64_t> index(g.n(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<std::int64_t>(i);
  std::vector<Edge> edges;
  for (Vertex u : keep) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && index[v] >= 0) {
        edges.emplace_back(static_cast<Vertex>(index[u]), static_cast<Vertex>(index[v]));
      }
    }
  }
  return Graph::from_edges(keep.size(), edges);
}

}  // namespace twojoin
