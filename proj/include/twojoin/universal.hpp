#pragma once

#include <vector>

#include "twojoin/graph.hpp"
#include "twojoin/split.hpp"

namespace twojoin {

struct UniversalStats {
  std::size_t tree_pair_tuples = 0;   // from pairs of tree edges
  std::size_t ancestor_tuples = 0;    // from (u, v) descendant pairs
  std::size_t descendant_sets = 0;    // D_u computations
};

// A set of proper 4-tuples containing, for every 2-join of the connected
// graph g, a tuple compatible with it. Size O(n^2), built in O(n(n + m)).
//
// Root 0, BFS tree T. First every proper orientation of every pair of
// tree edges; then for each u with level >= 2 and v with level >= 1, the
// smallest a1 in the subtree D_u adjacent to v yields (a1, v, p(u), p(p(u)))
// and (p(p(u)), p(u), v, a1) when proper.
//
// Tuples are unique and no tuple appears together with its A/B twin.
// Tree edge pairs are taken unordered (the reversed pair only produces
// twins), and a subtree tuple whose a1-v edge is a tree edge is already
// present from the first step up to its twin, so it is skipped. Every
// other subtree tuple is determined by (u, v), which leaves no duplicates.
inline std::vector<FourTuple> universal_set(const Graph& g, UniversalStats* stats = nullptr) {
  require_connected(g, "universal_set");
  std::vector<FourTuple> out;
  if (g.n() < 4) return out;

  const BfsTree t = bfs_tree(g, 0);
  UniversalStats local;

  // Tree edges as (parent, child), ordered by child.
  std::vector<Edge> tree;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (t.parent[v]) tree.emplace_back(*t.parent[v], v);
  }
  for (std::size_t i = 0; i < tree.size(); ++i) {
    for (std::size_t j = i + 1; j < tree.size(); ++j) {
      const auto [p, q] = tree[i];
      const auto [r, s] = tree[j];
      const FourTuple cands[4] = {{p, q, r, s}, {p, q, s, r}, {q, p, r, s}, {q, p, s, r}};
      for (const auto& z : cands) {
        if (is_proper(g, z)) {
          out.push_back(z);
          ++local.tree_pair_tuples;
        }
      }
    }
  }

  auto tree_edge = [&](Vertex x, Vertex y) { return t.parent[x] == y || t.parent[y] == x; };

  std::vector<char> in_d(g.n(), 0);
  for (Vertex u = 0; u < g.n(); ++u) {
    if (t.level[u] < 2) continue;
    const VertexSet d = descendants(t, u);
    ++local.descendant_sets;
    for (Vertex x : d) in_d[x] = 1;
    const Vertex pu = *t.parent[u];
    const Vertex ppu = *t.parent[pu];
    for (Vertex v = 0; v < g.n(); ++v) {
      if (t.level[v] < 1) continue;
      // Neighbor lists are sorted, so the first hit is the smallest a1.
      const Vertex* hit = nullptr;
      for (const Vertex& w : g.neighbors(v)) {
        if (in_d[w]) {
          hit = &w;
          break;
        }
      }
      if (!hit || tree_edge(*hit, v)) continue;
      const Vertex a1 = *hit;
      const FourTuple first{a1, v, pu, ppu};
      const FourTuple second{ppu, pu, v, a1};
      if (is_proper(g, first)) {
        out.push_back(first);
        ++local.ancestor_tuples;
      }
      if (is_proper(g, second)) {
        out.push_back(second);
        ++local.ancestor_tuples;
      }
    }
    for (Vertex x : d) in_d[x] = 0;
  }
  if (stats) *stats = local;
  return out;
}

}  // namespace twojoin
