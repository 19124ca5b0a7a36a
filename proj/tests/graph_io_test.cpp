#include "sccay/graph_io.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sccay/error.hpp"
#include "test_graphs.hpp"

namespace sccay {
namespace {

TEST(Graph6Test, KnownEncodings) {
  // Reference strings from the graph6 format description.
  EXPECT_EQ(to_graph6(testing::complete(4)), "C~");
  EXPECT_EQ(to_graph6(testing::cycle(5)), "Dhc");
  EXPECT_EQ(to_graph6(testing::empty(1)), "@");
  EXPECT_EQ(to_graph6(testing::path(2)), "A_");
  EXPECT_EQ(to_graph6(testing::complete(2)), "A_");
}

TEST(Graph6Test, RoundTrip) {
  std::mt19937_64 rng(11);
  for (int n : {1, 2, 5, 6, 7, 12, 62, 63, 64, 100, 300}) {
    const auto g = oracle::random_graph(n, 0.37, rng);
    const auto text = to_graph6(g);
    EXPECT_EQ(from_graph6(text), g) << n;
    EXPECT_EQ(from_graph6(">>graph6<<" + text + "\n"), g);
  }
  // Extended header for n >= 63.
  const auto big = to_graph6(testing::empty(63));
  EXPECT_EQ(big.substr(0, 4), std::string("~") + char(63) + char(63) + char(63 + 63));
}

TEST(Graph6Test, Malformed) {
  EXPECT_THROW(from_graph6(""), ParseError);
  EXPECT_THROW(from_graph6("D"), ParseError);       // truncated body
  EXPECT_THROW(from_graph6("Dhcc"), ParseError);    // trailing byte
  EXPECT_THROW(from_graph6("D\x20\x20"), ParseError);  // byte below 63
  EXPECT_THROW(from_graph6("A~"), ParseError);      // nonzero padding bits
}

TEST(EdgeListTest, RoundTrip) {
  const auto c5 = testing::cycle(5);
  const auto text = to_edge_list(c5);
  EXPECT_EQ(text, "n 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
  EXPECT_EQ(from_edge_list(text), c5);
  EXPECT_EQ(from_edge_list("# comment\n0 1\n1 2  # tail\n"), testing::path(3));
  EXPECT_EQ(from_edge_list("n 4\n0 1\n").size(), 4);
}

TEST(EdgeListTest, Malformed) {
  EXPECT_THROW(from_edge_list("0 0\n"), Error);
  EXPECT_THROW(from_edge_list("0 x\n"), ParseError);
  EXPECT_THROW(from_edge_list("n 2\n0 5\n"), Error);
}

}  // namespace
}  // namespace sccay
