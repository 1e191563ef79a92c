#pragma once

#include <algorithm>
#include <charconv>
#include <optional>
#include <tuple>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "twojoin/graph.hpp"
#include "twojoin/split.hpp"

namespace twojoin {

// Edge list: "u v" per line, 0-based, '#' comments, optional first line
// "n <count>". DIMACS: 'c' comments, "p edge <n> <m>", "e <u> <v>" 1-based.
enum class GraphFormat { edge_list, dimacs };

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::size_t parse_count(std::string_view tok, std::size_t line_no) {
  std::size_t value = 0;
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return value;
}

// Range, loop and duplicate checks are done here rather than in
// Graph::from_edges so that errors carry the offending line number.
inline Graph finish(std::size_t n, const std::vector<Edge>& edges,
                    const std::vector<std::size_t>& lines) {
  if (n > kMaxVertices) throw ParseError(0, "vertex count exceeds cap " + std::to_string(kMaxVertices));
  struct Entry {
    Vertex u, v;
    std::size_t line;
  };
  std::vector<Entry> sorted;
  sorted.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u >= n || v >= n) throw ParseError(lines[i], "vertex id out of range");
    if (u == v) throw ParseError(lines[i], "self-loop");
    if (u > v) std::swap(u, v);
    sorted.push_back({u, v, lines[i]});
  }
  std::sort(sorted.begin(), sorted.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.u, a.v, a.line) < std::tie(b.u, b.v, b.line);
  });
  std::optional<std::size_t> dup_line;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].u == sorted[i - 1].u && sorted[i].v == sorted[i - 1].v) {
      dup_line = std::min(dup_line.value_or(sorted[i].line), sorted[i].line);
    }
  }
  if (dup_line) throw ParseError(*dup_line, "duplicate edge");
  return Graph::from_edges(n, edges);
}

inline Graph parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::vector<std::size_t> lines;
  std::optional<std::size_t> declared;
  std::size_t max_id_plus_one = 0;
  bool first_content = true;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    const auto toks = split_ws(line);
    if (toks.empty() || toks[0].front() == '#') continue;
    if (first_content && toks[0] == "n") {
      if (toks.size() != 2) throw ParseError(line_no, "expected 'n <count>'");
      declared = parse_count(toks[1], line_no);
      first_content = false;
      continue;
    }
    first_content = false;
    if (toks.size() != 2) throw ParseError(line_no, "expected 'u v'");
    const std::size_t u = parse_count(toks[0], line_no);
    const std::size_t v = parse_count(toks[1], line_no);
    if (declared && (u >= *declared || v >= *declared)) {
      throw ParseError(line_no, "vertex id out of range");
    }
    if (u >= kMaxVertices || v >= kMaxVertices) throw ParseError(line_no, "vertex id exceeds cap");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    lines.push_back(line_no);
    max_id_plus_one = std::max({max_id_plus_one, u + 1, v + 1});
  }
  return finish(declared.value_or(max_id_plus_one), edges, lines);
}

inline Graph parse_dimacs(std::istream& in) {
  std::vector<Edge> edges;
  std::vector<std::size_t> lines;
  std::optional<std::size_t> declared;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    const auto toks = split_ws(line);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (declared) throw ParseError(line_no, "second problem line");
      if (toks.size() != 4 || toks[1] != "edge") throw ParseError(line_no, "expected 'p edge <n> <m>'");
      declared = parse_count(toks[2], line_no);
      parse_count(toks[3], line_no);
      if (*declared > kMaxVertices) throw ParseError(line_no, "vertex count exceeds cap");
      continue;
    }
    if (toks[0] == "e") {
      if (!declared) throw ParseError(line_no, "edge before problem line");
      if (toks.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
      const std::size_t u = parse_count(toks[1], line_no);
      const std::size_t v = parse_count(toks[2], line_no);
      if (u < 1 || v < 1 || u > *declared || v > *declared) {
        throw ParseError(line_no, "vertex id out of range 1.." + std::to_string(*declared));
      }
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
      lines.push_back(line_no);
      continue;
    }
    throw ParseError(line_no, "unknown line type '" + std::string(toks[0]) + "'");
  }
  if (!declared) throw ParseError(0, "missing 'p edge' line");
  return finish(*declared, edges, lines);
}

}  // namespace detail

inline Graph parse_graph(std::istream& in, GraphFormat format) {
  return format == GraphFormat::dimacs ? detail::parse_dimacs(in) : detail::parse_edge_list(in);
}

inline Graph parse_graph(std::string_view text, GraphFormat format) {
  std::istringstream in{std::string(text)};
  return parse_graph(in, format);
}

// DIMACS if the first non-blank line starts with 'p' or 'c', else edge list.
inline GraphFormat sniff_format(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto toks = detail::split_ws(line);
    if (toks.empty()) continue;
    return (toks[0] == "p" || toks[0] == "c") ? GraphFormat::dimacs : GraphFormat::edge_list;
  }
  return GraphFormat::edge_list;
}

inline void write_graph(std::ostream& out, const Graph& g, GraphFormat format) {
  if (format == GraphFormat::dimacs) {
    out << "p edge " << g.n() << ' ' << g.m() << '\n';
    for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  } else {
    out << "n " << g.n() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  }
}

inline std::string serialize_graph(const Graph& g, GraphFormat format) {
  std::ostringstream out;
  write_graph(out, g, format);
  return out.str();
}

// Split files: six lines "X1:", "A1:", "B1:", "X2:", "A2:", "B2:", each
// followed by sorted ids. The same layout is the body of detector output.
inline void write_split(std::ostream& out, const TwoJoinSplit& s) {
  auto line = [&](const char* key, const VertexSet& set) {
    out << key << ':';
    for (Vertex v : set) out << ' ' << v;
    out << '\n';
  };
  line("X1", s.x1);
  line("A1", s.a1);
  line("B1", s.b1);
  line("X2", s.x2);
  line("A2", s.a2);
  line("B2", s.b2);
}

inline TwoJoinSplit parse_split(std::istream& in) {
  static constexpr std::string_view kKeys[6] = {"X1:", "A1:", "B1:", "X2:", "A2:", "B2:"};
  TwoJoinSplit s;
  VertexSet* slots[6] = {&s.x1, &s.a1, &s.b1, &s.x2, &s.a2, &s.b2};
  bool filled[6] = {};
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    auto toks = detail::split_ws(line);
    if (toks.empty() || toks[0].front() == '#') continue;
    // "X1: 1 2" and "X1:1 2" are both accepted.
    std::string_view key = toks[0];
    std::string_view glued;
    if (auto colon = key.find(':'); colon != std::string_view::npos && colon + 1 < key.size()) {
      glued = key.substr(colon + 1);
      key = key.substr(0, colon + 1);
    }
    std::size_t slot = 6;
    for (std::size_t i = 0; i < 6; ++i) {
      if (key == kKeys[i]) slot = i;
    }
    if (slot == 6) throw ParseError(line_no, "unknown split key '" + std::string(toks[0]) + "'");
    if (filled[slot]) throw ParseError(line_no, "repeated key " + std::string(key));
    filled[slot] = true;
    std::vector<Vertex> ids;
    if (!glued.empty()) ids.push_back(static_cast<Vertex>(detail::parse_count(glued, line_no)));
    for (std::size_t i = 1; i < toks.size(); ++i) {
      ids.push_back(static_cast<Vertex>(detail::parse_count(toks[i], line_no)));
    }
    *slots[slot] = make_set(std::move(ids));
  }
  for (std::size_t i = 0; i < 6; ++i) {
    if (!filled[i]) throw ParseError(0, "split file is missing " + std::string(kKeys[i]));
  }
  return s;
}

}  // namespace twojoin
