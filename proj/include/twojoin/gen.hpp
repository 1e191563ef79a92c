#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include "twojoin/graph.hpp"
#include "twojoin/split.hpp"

// Deterministic instance generators.
namespace twojoin::gen {

inline Graph cycle(std::size_t k) {
  if (k < 3) throw PreconditionError("cycle: need at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % k));
  }
  return Graph::from_edges(k, edges);
}

inline Graph path(std::size_t k) {
  if (k < 1) throw PreconditionError("path: need at least 1 vertex");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < k; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Graph::from_edges(k, edges);
}

inline Graph complete(std::size_t k) {
  if (k < 1) throw PreconditionError("complete: need at least 1 vertex");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < k; ++u) {
    for (Vertex v = u + 1; v < k; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(k, edges);
}

struct Planted {
  Graph graph;
  TwoJoinSplit split;
};

// Disjoint union of two sides plus A1 x A2 and B1 x B2. Side-2 vertex i
// becomes side1.n() + i.
inline Planted planted(const Graph& side1, const VertexSet& a1, const VertexSet& b1,
                       const Graph& side2, const VertexSet& a2, const VertexSet& b2) {
  auto check = [](const Graph& side, const VertexSet& a, const VertexSet& b, const char* which) {
    if (side.n() < 3) throw PreconditionError(std::string("planted: ") + which + " needs at least 3 vertices");
    if (a.empty() || b.empty()) throw PreconditionError(std::string("planted: empty A or B on ") + which);
    for (Vertex v : a) {
      if (v >= side.n()) throw PreconditionError(std::string("planted: A vertex out of range on ") + which);
      if (contains(b, v)) throw PreconditionError(std::string("planted: A and B overlap on ") + which);
    }
    for (Vertex v : b) {
      if (v >= side.n()) throw PreconditionError(std::string("planted: B vertex out of range on ") + which);
    }
  };
  const VertexSet sa1 = make_set(a1), sb1 = make_set(b1), sa2 = make_set(a2), sb2 = make_set(b2);
  check(side1, sa1, sb1, "side 1");
  check(side2, sa2, sb2, "side 2");

  const auto shift = static_cast<Vertex>(side1.n());
  std::vector<Edge> edges = side1.edges();
  for (const auto& [u, v] : side2.edges()) edges.emplace_back(u + shift, v + shift);
  for (Vertex u : sa1) {
    for (Vertex v : sa2) edges.emplace_back(u, v + shift);
  }
  for (Vertex u : sb1) {
    for (Vertex v : sb2) edges.emplace_back(u, v + shift);
  }
  Planted p;
  p.graph = Graph::from_edges(side1.n() + side2.n(), edges);
  for (Vertex v = 0; v < side1.n(); ++v) p.split.x1.push_back(v);
  for (Vertex v = 0; v < side2.n(); ++v) p.split.x2.push_back(v + shift);
  p.split.a1 = sa1;
  p.split.b1 = sb1;
  for (Vertex v : sa2) p.split.a2.push_back(v + shift);
  for (Vertex v : sb2) p.split.b2.push_back(v + shift);
  if (!is_valid_split(p.graph, p.split)) throw std::logic_error("planted: split failed validation");
  return p;
}

// Two hexagons 0..5 and 6..11; A = two adjacent vertices, B = the two
// opposite ones on each side.
inline Planted double_hexagon() {
  const Graph c6 = cycle(6);
  return planted(c6, {0, 1}, {3, 4}, c6, {0, 1}, {3, 4});
}

// Two K4s with |A| = |B| = 2 on each side. Has a star cutset.
inline Planted double_k4() {
  const Graph k4 = complete(4);
  return planted(k4, {0, 1}, {2, 3}, k4, {0, 1}, {2, 3});
}

// Two cycles of length n/2 joined like double_hexagon. Sparse benchmark
// family; n must be even and at least 12.
inline Planted double_cycle(std::size_t n) {
  if (n < 12 || n % 2) throw PreconditionError("double_cycle: n must be even and at least 12");
  const std::size_t h = n / 2;
  const Graph c = cycle(h);
  const auto mid = static_cast<Vertex>(h / 2);
  return planted(c, {0, 1}, {mid, mid + 1}, c, {0, 1}, {mid, mid + 1});
}

// Seeded G(n, p) conditioned on connectivity.
//
// Scheme: std::mt19937_64 seeded with `seed`. One attempt draws one 64-bit
// word per vertex pair (u, v), u < v, in lexicographic order and keeps the
// edge iff (word >> 11) * 2^-53 < p. Attempts continue on the same engine
// until the sampled graph is connected.
inline Graph random_connected(std::size_t n, double p, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("random_connected: n must be at least 1");
  if (!(p > 0.0 && p <= 1.0)) throw PreconditionError("random_connected: p must lie in (0, 1]");
  std::mt19937_64 engine(seed);
  while (true) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        const double draw = static_cast<double>(engine() >> 11) * 0x1.0p-53;
        if (draw < p) edges.emplace_back(u, v);
      }
    }
    Graph g = Graph::from_edges(n, edges);
    if (is_connected(g)) return g;
  }
}

// Vertex names of the 16-vertex example with no extreme 2-join; name i
// is vertex i.
inline constexpr std::array<std::string_view, 16> kFigure1Names = {
    "a1", "a1'", "a2", "a2'", "b1", "b1'", "b2", "b2'",
    "w",  "w1",  "x",  "x1",  "y",  "y1",  "z",  "z1"};

namespace detail {
inline Vertex figure1_id(std::string_view name) {
  for (std::size_t i = 0; i < kFigure1Names.size(); ++i) {
    if (kFigure1Names[i] == name) return static_cast<Vertex>(i);
  }
  throw std::logic_error("unknown figure vertex");
}
}  // namespace detail

// The eight edges drawn bold: a1, a1' complete to a2, a2' and b1, b1'
// complete to b2, b2'.
inline std::vector<Edge> figure1_bold_edges() {
  using detail::figure1_id;
  static constexpr std::pair<std::string_view, std::string_view> kBold[] = {
      {"a1", "a2"}, {"a1", "a2'"}, {"a1'", "a2"}, {"a1'", "a2'"},
      {"b1", "b2"}, {"b1", "b2'"}, {"b1'", "b2"}, {"b1'", "b2'"}};
  std::vector<Edge> out;
  for (const auto& [u, v] : kBold) out.emplace_back(figure1_id(u), figure1_id(v));
  return out;
}

inline Graph figure1_graph() {
  using detail::figure1_id;
  static constexpr std::pair<std::string_view, std::string_view> kThin[] = {
      {"x", "x1"},  {"x1", "w1"},  {"w", "w1"},  {"w", "b1'"}, {"w1", "a1'"}, {"x1", "b1"},
      {"a1'", "b1"}, {"y", "a2"},  {"y", "y1"},  {"y1", "z1"}, {"z", "z1"},   {"z", "b2'"},
      {"b2", "y1"}, {"a2'", "z1"}, {"a2'", "b2"}, {"x", "a1"}};
  std::vector<Edge> edges;
  for (const auto& [u, v] : kThin) edges.emplace_back(figure1_id(u), figure1_id(v));
  for (const auto& e : figure1_bold_edges()) edges.push_back(e);
  return Graph::from_edges(kFigure1Names.size(), edges);
}

}  // namespace twojoin::gen
