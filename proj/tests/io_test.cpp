#include <gtest/gtest.h>

#include <sstream>

#include "test_support.hpp"

namespace twojoin {
namespace {

std::size_t error_line(std::string_view text, GraphFormat f) {
  try {
    parse_graph(text, f);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ParseError for: " << text;
  return 0;
}

TEST(ParseDimacs, Basic) {
  const Graph g = parse_graph("c a triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n", GraphFormat::dimacs);
  EXPECT_EQ(g, gen::complete(3));
}

TEST(ParseDimacs, Errors) {
  EXPECT_EQ(error_line("p edge 3 1\ne 1 4\n", GraphFormat::dimacs), 2u);
  EXPECT_EQ(error_line("e 1 2\np edge 3 1\n", GraphFormat::dimacs), 1u);
  EXPECT_EQ(error_line("p edge 3 2\ne 1 2\ne 2 1\n", GraphFormat::dimacs), 3u);
  EXPECT_EQ(error_line("p edge 3 1\nx 1 2\n", GraphFormat::dimacs), 2u);
  EXPECT_EQ(error_line("p edge 3 1\ne 2 2\n", GraphFormat::dimacs), 2u);
  EXPECT_EQ(error_line("p edge 3 1\ne 0 2\n", GraphFormat::dimacs), 2u);
}

TEST(ParseEdgeList, InfersVertexCount) {
  const Graph g = parse_graph("# comment\n0 1\n1 2\n\n2 3\n", GraphFormat::edge_list);
  EXPECT_EQ(g, gen::path(4));
}

TEST(ParseEdgeList, DeclaredCountKeepsIsolatedVertices) {
  const Graph g = parse_graph("n 5\n0 1\n", GraphFormat::edge_list);
  EXPECT_EQ(g.n(), 5u);
  EXPECT_EQ(g.m(), 1u);
}

TEST(ParseEdgeList, Errors) {
  EXPECT_EQ(error_line("0 1\n1 x\n", GraphFormat::edge_list), 2u);
  EXPECT_EQ(error_line("n 3\n0 1\n1 3\n", GraphFormat::edge_list), 3u);
  EXPECT_EQ(error_line("0 1\n1 2\n2 1\n", GraphFormat::edge_list), 3u);
  EXPECT_EQ(error_line("0 1\n1 2 3\n", GraphFormat::edge_list), 2u);
  EXPECT_EQ(error_line("0 0\n", GraphFormat::edge_list), 1u);
  EXPECT_EQ(error_line("0 -1\n", GraphFormat::edge_list), 1u);
}

TEST(ParseError, MessageCarriesLine) {
  try {
    parse_graph("0 1\nbad\n", GraphFormat::edge_list);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(Sniff, Formats) {
  EXPECT_EQ(sniff_format("c hi\np edge 1 0\n"), GraphFormat::dimacs);
  EXPECT_EQ(sniff_format("\np edge 1 0\n"), GraphFormat::dimacs);
  EXPECT_EQ(sniff_format("0 1\n"), GraphFormat::edge_list);
  EXPECT_EQ(sniff_format("n 3\n"), GraphFormat::edge_list);
}

TEST(WriteGraph, ExactText) {
  EXPECT_EQ(serialize_graph(gen::path(3), GraphFormat::edge_list), "n 3\n0 1\n1 2\n");
  EXPECT_EQ(serialize_graph(gen::path(3), GraphFormat::dimacs), "p edge 3 2\ne 1 2\ne 2 3\n");
}

TEST(RoundTrip, BothFormats) {
  auto corpus = testing::random_corpus(200, 1, 25, 4242);
  corpus.push_back({"empty", build_graph(0, {})});
  corpus.push_back({"isolated", build_graph(4, {{0, 1}})});
  for (const auto& [name, g] : corpus) {
    for (GraphFormat f : {GraphFormat::edge_list, GraphFormat::dimacs}) {
      const std::string text = serialize_graph(g, f);
      ASSERT_EQ(parse_graph(text, f), g) << name;
      ASSERT_EQ(sniff_format(text), f) << name;
      ASSERT_EQ(serialize_graph(parse_graph(text, f), f), text) << name;
    }
  }
}

TEST(SplitFiles, RoundTrip) {
  const auto s = *classify_partition(gen::cycle(6), {0, 1, 2});
  std::stringstream io;
  write_split(io, s);
  EXPECT_EQ(io.str(), "X1: 0 1 2\nA1: 0\nB1: 2\nX2: 3 4 5\nA2: 5\nB2: 3\n");
  EXPECT_EQ(parse_split(io), s);
}

TEST(SplitFiles, GluedKeysAndErrors) {
  std::istringstream ok("X1:0 1 2\nA1:0\nB1:2\nX2:3 4 5\nA2:5\nB2:3\n");
  EXPECT_EQ(parse_split(ok).x2, (VertexSet{3, 4, 5}));
  std::istringstream missing("X1: 0 1 2\nA1: 0\n");
  EXPECT_THROW(parse_split(missing), ParseError);
  std::istringstream repeated("X1: 0\nX1: 1\nA1: 0\nB1: 2\nX2: 3 4 5\nA2: 5\nB2: 3\n");
  EXPECT_THROW(parse_split(repeated), ParseError);
}

}  // namespace
}  // namespace twojoin
