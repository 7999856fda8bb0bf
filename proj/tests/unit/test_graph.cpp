#include <gtest/gtest.h>

#include <dlap/error.hpp>
#include <dlap/families.hpp>
#include <dlap/graph.hpp>
#include <dlap/random.hpp>

#include "oracles.hpp"

using namespace dlap;

namespace {

std::vector<std::pair<std::size_t, std::size_t>> edge_pairs(const Graph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

}  // namespace

TEST(EdgeList, ParsesPlainPairs) {
  const Graph g = parse_edge_list("0 1\n1 2");
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(edge_pairs(g), (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}}));
}

TEST(EdgeList, RejectsLoop) { EXPECT_THROW(parse_edge_list("0 0"), ValidationError); }

TEST(EdgeList, ExplicitOrderAllowsIsolatedVertices) {
  const Graph g = parse_edge_list("n 4\n0 1");
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.size(), 1u);
  EXPECT_FALSE(is_connected(g));
}

TEST(EdgeList, DeduplicatesAndIgnoresComments) {
  const Graph g = parse_edge_list("# triangle\n0 1\n1 0\n\n1 2 # tail\n2 0\n");
  EXPECT_EQ(g.size(), 3u);
}

TEST(EdgeList, MalformedTokenReportsLine) {
  try {
    parse_edge_list("0 1\n1 x\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_edge_list("0 1 2"), ParseError);
  EXPECT_THROW(parse_edge_list("-1 2"), ParseError);
  EXPECT_THROW(parse_edge_list("n 2\n0 5"), ValidationError);
}

TEST(Graph6, DecodesHandWorkedStrings) {
  EXPECT_EQ(parse_graph6("A_"), complete_graph(2));
  const Graph p3 = parse_graph6("BW");
  EXPECT_EQ(edge_pairs(p3), oracle::decode_graph6("BW"));
  EXPECT_EQ(edge_pairs(p3), (std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}, {1, 2}}));
  EXPECT_TRUE(oracle::permutation_isomorphic(p3, path_graph(3)));
  EXPECT_EQ(parse_graph6("C~"), complete_graph(4));
}

TEST(Graph6, RejectsBadInput) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6(" _"), ParseError);
  EXPECT_THROW(parse_graph6("C"), ParseError);   // truncated
  EXPECT_THROW(parse_graph6("A_?"), ParseError);  // trailing byte
  EXPECT_THROW(parse_graph6("A~"), ParseError);  // padding bits set
  EXPECT_THROW(parse_graph6("~?"), ParseError);  // long form
}

TEST(Graph6, RoundTripMatchesHandDecoder) {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(20);
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (rng.bernoulli(0.4)) edges.push_back({u, v});
    const Graph g(n, edges);
    const std::string s = to_graph6(g);
    EXPECT_EQ(parse_graph6(s), g);
    EXPECT_EQ(to_graph6(parse_graph6(s)), s);
    EXPECT_EQ(edge_pairs(g), oracle::decode_graph6(s));
  }
}

TEST(Apsp, NamedGraphs) {
  const auto p3 = bfs_apsp(path_graph(3));
  const std::vector<std::int64_t> expect{0, 1, 2, 1, 0, 1, 2, 1, 0};
  EXPECT_TRUE(std::equal(expect.begin(), expect.end(), p3.values().begin()));
  const auto k3 = bfs_apsp(complete_graph(3));
  for (std::size_t u = 0; u < 3; ++u)
    for (std::size_t v = 0; v < 3; ++v) EXPECT_EQ(k3(u, v), u == v ? 0 : 1);
  const auto c4 = bfs_apsp(cycle_graph(4));
  EXPECT_EQ(c4(0, 1), 1);
  EXPECT_EQ(c4(0, 2), 2);
  EXPECT_EQ(c4(1, 3), 2);
  EXPECT_EQ(c4(3, 0), 1);
}

TEST(Apsp, DisconnectedNamesBothComponents) {
  try {
    bfs_apsp(parse_edge_list("0 1\n2 3"));
    FAIL() << "expected DisconnectedError";
  } catch (const DisconnectedError& e) {
    EXPECT_EQ(e.reached(), 0u);
    EXPECT_EQ(e.unreached(), 2u);
  }
}

TEST(Apsp, AgreesWithFloydWarshallAndValidates) {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng.below(6);
    const Graph g = random_connected_graph(n, 0.4, rng);
    const auto d = bfs_apsp(g);
    const auto fw = oracle::floyd_warshall(g);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) ASSERT_EQ(d(u, v), fw[u][v]);
    EXPECT_NO_THROW(validate_metric(d, true));
  }
}

TEST(Transmission, RowSums) {
  EXPECT_EQ(transmission(bfs_apsp(path_graph(3))), (std::vector<std::int64_t>{3, 2, 3}));
  EXPECT_EQ(transmission(bfs_apsp(complete_graph(4))), (std::vector<std::int64_t>{3, 3, 3, 3}));
  EXPECT_EQ(transmission(bfs_apsp(cycle_graph(4))), (std::vector<std::int64_t>{4, 4, 4, 4}));
}

TEST(Transmission, TotalIsTwiceUnorderedSum) {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_connected_graph(2 + rng.below(10), 0.3, rng);
    const auto d = bfs_apsp(g);
    const auto t = transmission(d);
    std::int64_t total = 0, unordered = 0;
    for (auto x : t) total += x;
    for (std::size_t u = 0; u < d.size(); ++u)
      for (std::size_t v = u + 1; v < d.size(); ++v) unordered += d(u, v);
    EXPECT_EQ(total, 2 * unordered);
  }
}

TEST(NamedGraphs, Shapes) {
  EXPECT_EQ(path_graph(5).size(), 4u);
  EXPECT_EQ(cycle_graph(5).size(), 5u);
  EXPECT_EQ(complete_graph(5).size(), 10u);
  const Graph k23 = complete_bipartite_graph(2, 3);
  EXPECT_EQ(k23.size(), 6u);
  EXPECT_FALSE(k23.has_edge(0, 1));
  EXPECT_TRUE(k23.has_edge(0, 4));
  EXPECT_THROW(cycle_graph(2), ValidationError);
}
