#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "longcycle/error.hpp"
#include "longcycle/graph6.hpp"

#ifndef LONGCYCLE_TEST_DATA_DIR
#error "LONGCYCLE_TEST_DATA_DIR must be defined"
#endif

namespace longcycle {
namespace {

const std::string kDataDir = LONGCYCLE_TEST_DATA_DIR;

// Encodings produced by networkx.
TEST(Graph6Test, Goldens) {
  EXPECT_EQ(emit_graph6(Graph(1)), "@");
  EXPECT_EQ(emit_graph6(complete_graph(2)), "A_");
  EXPECT_EQ(emit_graph6(Graph(2)), "A?");
  EXPECT_EQ(emit_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(emit_graph6(cycle_graph(5)), "Dhc");
  EXPECT_EQ(emit_graph6(path_graph(4)), "Ch");

  EXPECT_EQ(parse_graph6("@"), Graph(1));
  EXPECT_EQ(parse_graph6("A_"), complete_graph(2));
  EXPECT_EQ(parse_graph6("A?"), Graph(2));
  EXPECT_EQ(parse_graph6("Dhc"), cycle_graph(5));
}

TEST(Graph6Test, LargestOrder) {
  const std::string k62 = emit_graph6(complete_graph(62));
  EXPECT_EQ(k62.size(), 317U);
  EXPECT_EQ(k62.front(), '}');
  EXPECT_EQ(k62.substr(k62.size() - 3), "~~_");
  EXPECT_EQ(parse_graph6(k62), complete_graph(62));
  EXPECT_THROW(emit_graph6(Graph(63)), DomainError);
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

Graph parse_edge_line(const std::string& line) {
  std::istringstream in(line);
  int n = 0;
  in >> n;
  GraphBuilder b(n);
  for (std::string tok; in >> tok;) {
    const auto dash = tok.find('-');
    b.add_edge(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
  }
  return b.build();
}

TEST(Graph6Test, ReferenceCorpusMatchesEdgeLists) {
  const auto lines = read_lines(kDataDir + "/reference_corpus.g6");
  const auto edges = read_lines(kDataDir + "/reference_corpus.edges");
  ASSERT_EQ(lines.size(), 268U);
  ASSERT_EQ(edges.size(), lines.size());
  const auto graphs = read_graph6_file(kDataDir + "/reference_corpus.g6");
  ASSERT_EQ(graphs.size(), lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    EXPECT_EQ(graphs[i], parse_edge_line(edges[i])) << "line " << i + 1;
    EXPECT_EQ(emit_graph6(graphs[i]), lines[i]) << "line " << i + 1;
  }
}

TEST(Graph6Test, RoundTripAllSmallGraphs) {
  for (int n = 1; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      GraphBuilder b(n);
      int bit = 0;
      for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u, ++bit)
          if (mask >> bit & 1) b.add_edge(u, v);
      const Graph g = b.build();
      EXPECT_EQ(parse_graph6(emit_graph6(g)), g);
    }
  }
}

TEST(Graph6Test, StreamSkipsHeaderAndBlankLines) {
  std::istringstream in(">>graph6<<A_\r\n\nDhc\n");
  const auto gs = read_graph6(in);
  ASSERT_EQ(gs.size(), 2U);
  EXPECT_EQ(gs[0], complete_graph(2));
  EXPECT_EQ(gs[1], cycle_graph(5));
}

TEST(Graph6Test, Malformed) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("?"), ParseError);       // order 0
  EXPECT_THROW(parse_graph6("~?@"), ParseError);     // multi-byte size form
  EXPECT_THROW(parse_graph6("D"), ParseError);       // truncated
  EXPECT_THROW(parse_graph6("Dhcc"), ParseError);    // trailing byte
  EXPECT_THROW(parse_graph6("A`"), ParseError);      // padding bit set
  EXPECT_THROW(parse_graph6("A\x7f"), ParseError);   // byte out of range
  EXPECT_THROW(parse_graph6("A "), ParseError);
  std::istringstream bad("A_\nA`\n");
  try {
    read_graph6(bad);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find('2'), std::string::npos);
  }
}

}  // namespace
}  // namespace longcycle
