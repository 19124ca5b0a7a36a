#include "sccay/constructions.hpp"

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "sccay/error.hpp"
#include "sccay/graph_checks.hpp"

namespace sccay {
namespace {

std::set<std::vector<int>> residues(const ConnectionSet& s) {
  std::set<std::vector<int>> out;
  for (const auto& e : s.elements()) out.insert(e.residues);
  return out;
}

SrgParams srg_of(const ConstructionReport& r) {
  const auto c = check_srg(build_cayley(r.connection_set));
  EXPECT_TRUE(c.ok()) << r.family;
  return c.params.value_or(SrgParams{});
}

TEST(PaleyTest, Examples) {
  const auto p5 = paley(5);
  EXPECT_EQ(residues(p5.connection_set), (std::set<std::vector<int>>{{1}, {4}}));
  EXPECT_EQ(srg_of(p5), (SrgParams{5, 2, 0, 1}));
  const auto p13 = paley(13);
  EXPECT_EQ(residues(p13.connection_set), (std::set<std::vector<int>>{{1}, {3}, {4}, {9}, {10}, {12}}));
  EXPECT_EQ(srg_of(p13), (SrgParams{13, 6, 2, 3}));
  const auto p9 = paley(9);
  EXPECT_EQ(p9.group().factors(), (std::vector<int>{3, 3}));
  EXPECT_EQ(srg_of(p9), (SrgParams{9, 4, 1, 2}));
  ASSERT_TRUE(p9.field.has_value());
  EXPECT_EQ(p9.field->modulus, (std::vector<int>{1, 0, 1}));
  EXPECT_EQ(p9.parameters.at("t"), 2);
}

TEST(PaleyTest, Errors) {
  EXPECT_THROW(paley(7), ParameterError);
  EXPECT_THROW(paley(15), ParameterError);
  EXPECT_THROW(paley(1), ParameterError);
}

TEST(PaleyTest, ConferenceParametersAcrossOrders) {
  for (int q : {17, 29, 37, 41, 49, 53, 61, 73, 81, 89, 97, 101, 109, 113, 121, 125}) {
    const int t = (q - 1) / 4;
    EXPECT_EQ(srg_of(paley(q)), (SrgParams{q, 2 * t, t - 1, t})) << q;
  }
}

TEST(PeisertTest, Examples) {
  const auto p9 = peisert(9);
  EXPECT_EQ(residues(p9.connection_set), (std::set<std::vector<int>>{{1, 0}, {1, 1}, {2, 0}, {2, 2}}));
  EXPECT_EQ(srg_of(p9), (SrgParams{9, 4, 1, 2}));
  ASSERT_TRUE(p9.field.has_value());
  EXPECT_EQ(p9.field->primitive_element, (FieldElement{{1, 1}}));
  EXPECT_EQ(srg_of(peisert(49)), (SrgParams{49, 24, 11, 12}));
  EXPECT_THROW(peisert(13), ParameterError);
  EXPECT_THROW(peisert(27), ParameterError);
  EXPECT_EQ(srg_of(peisert(81)), (SrgParams{81, 40, 19, 20}));
}

TEST(DavisTest, P3) {
  const auto d = davis(3);
  EXPECT_EQ(d.group().factors(), (std::vector<int>{9, 9}));
  EXPECT_EQ(d.connection_set.size(), 40);
  ASSERT_TRUE(d.davis.has_value());
  // The trailing range [4, 3] is empty; the listed D subgroups are <(1,0)>, <(0,1)>.
  EXPECT_EQ(d.davis->trailing_range_first, 4);
  EXPECT_EQ(d.davis->trailing_range_last, 3);
  EXPECT_EQ(d.davis->d_generators.size(), 2u);
  EXPECT_EQ(d.davis->c_size + d.davis->d_size, 40);
  EXPECT_EQ(srg_of(d), (SrgParams{81, 40, 19, 20}));
}

TEST(DavisTest, P5) {
  const auto d = davis(5);
  EXPECT_EQ(d.connection_set.size(), 312);
  ASSERT_TRUE(d.davis.has_value());
  EXPECT_EQ(d.davis->d_generators.size(), 3u);
  EXPECT_EQ(d.davis->trailing_range_first, 11);
  EXPECT_EQ(d.davis->trailing_range_last, 11);
  EXPECT_EQ(srg_of(d), (SrgParams{625, 312, 155, 156}));
}

TEST(DavisTest, Errors) {
  EXPECT_THROW(davis(2), ParameterError);
  EXPECT_THROW(davis(9), ParameterError);
  EXPECT_THROW(davis(37), ParameterError);  // 37^4 vertices exceed the graph budget
}

TEST(DavisTest, CardinalityFormula) {
  for (int p : {3, 5, 7}) {
    const auto d = davis(p);
    const int p2 = p * p;
    EXPECT_EQ(d.connection_set.size(), (p2 * p2 - 1) / 2);
    EXPECT_EQ(d.davis->c_size, (p2 - 1) / 2 * (p2 - p));
    EXPECT_EQ(d.davis->d_size, (p + 1) / 2 * (p2 - 1));
  }
}

TEST(LexprodTest, Paley5) {
  const auto r = lexprod(paley(5), paley(5));
  EXPECT_EQ(r.family, "lexprod");
  EXPECT_EQ(r.connection_set.size(), 12);
  EXPECT_EQ(r.group().name(), "Z5xZ5");
  EXPECT_FALSE(check_srg(build_cayley(r.connection_set)).ok());
}

TEST(FeasibilityTest, Examples) {
  const auto f81 = paley_type_order_feasible(81);
  EXPECT_TRUE(f81.feasible);
  EXPECT_EQ(f81.which, Feasibility::Case::kPrimePower);
  EXPECT_FALSE(paley_type_order_feasible(45).feasible);
  const auto f = paley_type_order_feasible(5625);
  EXPECT_TRUE(f.feasible);
  EXPECT_EQ(f.which, Feasibility::Case::kNineTimesFourthPower);
  EXPECT_EQ(f.base, 5);
  const auto g = paley_type_order_feasible(15 * 15 * 15 * 15);
  EXPECT_TRUE(g.feasible);
  EXPECT_EQ(g.which, Feasibility::Case::kFourthPower);
  EXPECT_FALSE(paley_type_order_feasible(7).feasible);
  EXPECT_FALSE(paley_type_order_feasible(1).feasible);
  EXPECT_FALSE(paley_type_order_feasible(16).feasible);
}

TEST(FeasibilityTest, MatchesSieveOracle) {
  constexpr int kLimit = 10000;
  const auto expected = oracle::feasible_orders_by_sieve(kLimit);
  for (int m = 1; m <= kLimit; ++m) ASSERT_EQ(paley_type_order_feasible(m).feasible, expected[m]) << m;
}

}  // namespace
}  // namespace sccay
