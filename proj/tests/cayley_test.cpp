#include "sccay/cayley.hpp"

#include <gtest/gtest.h>

#include "sccay/constructions.hpp"
#include "sccay/error.hpp"
#include "sccay/graph_checks.hpp"
#include "test_graphs.hpp"

namespace sccay {
namespace {

GroupElement E(std::vector<int> r) { return GroupElement{std::move(r)}; }

ConnectionSet cyclic_set(int n, std::vector<int> xs) {
  std::vector<GroupElement> els;
  for (int x : xs) els.push_back(E({x}));
  return validate_connection_set(AbelianGroup({n}), els);
}

TEST(ValidateTest, Examples) {
  EXPECT_EQ(cyclic_set(5, {1, 4}).indices(), (std::vector<int>{1, 4}));
  try {
    cyclic_set(5, {1, 2});
    FAIL() << "expected InvalidConnectionSet";
  } catch (const InvalidConnectionSet& e) {
    ASSERT_EQ(e.violations().size(), 2u);
    EXPECT_EQ(e.violations()[0].kind, ConnectionSetViolation::Kind::kMissingInverse);
    EXPECT_EQ(e.violations()[0].element, E({1}));
    EXPECT_EQ(e.violations()[0].missing, E({4}));
  }
  try {
    cyclic_set(5, {0, 1, 4});
    FAIL() << "expected InvalidConnectionSet";
  } catch (const InvalidConnectionSet& e) {
    ASSERT_EQ(e.violations().size(), 1u);
    EXPECT_EQ(e.violations()[0].kind, ConnectionSetViolation::Kind::kIdentity);
  }
  EXPECT_THROW(cyclic_set(5, {7}), StructuralError);
  // Duplicates collapse.
  EXPECT_EQ(cyclic_set(5, {1, 4, 1}).size(), 2);
}

TEST(BuildCayleyTest, Examples) {
  EXPECT_EQ(build_cayley(cyclic_set(5, {1, 4})), testing::cycle(5));
  const auto p13 = build_cayley(cyclic_set(13, {1, 3, 4, 9, 10, 12}));
  EXPECT_EQ(p13.size(), 13);
  EXPECT_EQ(p13.regular_degree(), 6);
  const auto z4 = build_cayley(cyclic_set(4, {2}));
  EXPECT_EQ(z4.regular_degree(), 1);
  EXPECT_TRUE(z4.adjacent(0, 2));
  EXPECT_TRUE(z4.adjacent(1, 3));
  EXPECT_FALSE(is_connected(z4));
}

TEST(BuildCayleyTest, EdgeRuleUsesDifferences) {
  const AbelianGroup g({3, 3});
  const auto s = validate_connection_set(g, std::vector<GroupElement>{E({0, 1}), E({0, 2}), E({1, 1}), E({2, 2})});
  const auto graph = build_cayley(s);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) EXPECT_EQ(graph.adjacent(i, j), s.contains_index(g.sub_index(i, j)));
}

TEST(ComplementSetTest, Examples) {
  EXPECT_EQ(complement_connection_set(cyclic_set(5, {1, 4})).indices(), (std::vector<int>{2, 3}));
  EXPECT_EQ(complement_connection_set(cyclic_set(13, {1, 3, 4, 9, 10, 12})).indices(),
            (std::vector<int>{2, 5, 6, 7, 8, 11}));
  EXPECT_EQ(complement_connection_set(cyclic_set(3, {1, 2})).size(), 0);
}

TEST(ComplementSetTest, LabeledComplement) {
  for (const auto& rep : {paley(13), paley(25), peisert(49), davis(3)}) {
    const auto& s = rep.connection_set;
    EXPECT_EQ(build_cayley(complement_connection_set(s)), complement(build_cayley(s)));
  }
}

TEST(ConnectedTest, Examples) {
  EXPECT_FALSE(is_connected_cayley(cyclic_set(4, {2})));
  EXPECT_TRUE(is_connected_cayley(cyclic_set(5, {1, 4})));
  EXPECT_TRUE(is_connected_cayley(davis(3).connection_set));
  EXPECT_EQ(is_connected_cayley(cyclic_set(12, {3, 9})), is_connected(build_cayley(cyclic_set(12, {3, 9}))));
}

TEST(LexProductTest, Examples) {
  const auto s = cyclic_set(5, {1, 4});
  const auto lp = lex_product(s, s);
  EXPECT_EQ(lp.size(), 12);
  EXPECT_EQ(lp.group().factors(), (std::vector<int>{5, 5}));
  EXPECT_EQ(build_cayley(lp), lexicographic_product(build_cayley(s), build_cayley(s)));
  const auto empty3 = connection_set_from_indices(AbelianGroup({3}), {});
  const auto blown = lex_product(s, empty3);
  EXPECT_EQ(blown.size(), 2 * 3);
  const auto copies = lex_product(empty3, s);
  EXPECT_EQ(copies.size(), 2);
  for (const auto& e : copies.elements()) EXPECT_EQ(e.residues[0], 0);
}

TEST(ConnectionSetTextTest, RoundTrip) {
  const auto s = davis(3).connection_set;
  const auto text = format_connection_set(s);
  EXPECT_EQ(text.substr(0, 15), "group Z9xZ9\n0,1");
  EXPECT_EQ(parse_connection_set(text), s);
  EXPECT_EQ(parse_connection_set("# c5\ngroup Z5\n1\n4\n"), cyclic_set(5, {1, 4}));
  EXPECT_EQ(parse_inline_connection_set("Z5:1;4"), cyclic_set(5, {1, 4}));
  EXPECT_THROW(parse_connection_set("1\n4\n"), ParseError);
  EXPECT_THROW(parse_connection_set("group Z5\n1\n2\n"), InvalidConnectionSet);
}

}  // namespace
}  // namespace sccay
