#include "sccay/group_algebra.hpp"

#include <gtest/gtest.h>

#include <random>

#include "sccay/cayley.hpp"
#include "sccay/constructions.hpp"
#include "sccay/error.hpp"

namespace sccay {
namespace {

GroupElement E(std::vector<int> r) { return GroupElement{std::move(r)}; }

std::vector<GroupElement> cyc(std::vector<int> xs) {
  std::vector<GroupElement> out;
  for (int x : xs) out.push_back(E({x}));
  return out;
}

// Ordered difference-pair counts, computed without the group algebra.
std::vector<std::int64_t> difference_counts(const AbelianGroup& g, const std::vector<int>& d) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(g.order()), 0);
  for (int a : d)
    for (int b : d) ++c[g.sub_index(a, b)];
  return c;
}

TEST(GroupAlgebraTest, Indicators) {
  const AbelianGroup z5({5});
  EXPECT_EQ(ga_from_set(z5, cyc({1, 4})).coeffs(), (std::vector<std::int64_t>{0, 1, 0, 0, 1}));
  EXPECT_EQ(ga_add(ga_from_set(z5, cyc({1})), ga_from_set(z5, cyc({2, 3}))), ga_from_set(z5, cyc({1, 2, 3})));
  EXPECT_EQ(ga_from_set(z5, {}).coeffs(), std::vector<std::int64_t>(5, 0));
  EXPECT_EQ(ga_from_set(z5, cyc({1, 1})).coeffs(), (std::vector<std::int64_t>{0, 1, 0, 0, 0}));
}

TEST(GroupAlgebraTest, Multiplication) {
  const AbelianGroup z5({5});
  const auto s = ga_from_set(z5, cyc({1, 4}));
  EXPECT_EQ(ga_mul(s, s).coeffs(), (std::vector<std::int64_t>{2, 0, 1, 1, 0}));
  const AbelianGroup g({3, 3});
  const auto x = ga_from_set(g, std::vector<GroupElement>{E({1, 2})});
  EXPECT_EQ(ga_mul(x, ga_identity(g)), x);
  EXPECT_EQ(ga_mul(ga_total(g), ga_total(g)), ga_scale(9, ga_total(g)));
  EXPECT_THROW(ga_mul(s, x), StructuralError);
}

TEST(GroupAlgebraTest, OverflowGuard) {
  const AbelianGroup z2({2});
  const GroupAlgebraElement big(z2, {GroupAlgebraElement::kCoefficientBound / 2, 0});
  EXPECT_THROW(ga_mul(big, ga_scale(4, ga_identity(z2))), Error);
}

TEST(GroupAlgebraTest, MultiplicationMatchesDifferenceCounts) {
  std::mt19937_64 rng(21);
  const AbelianGroup g({4, 6});
  for (int i = 0; i < 50; ++i) {
    std::vector<int> d;
    for (int x = 0; x < g.order(); ++x)
      if (rng() % 3 == 0) d.push_back(x);
    std::vector<int> neg;
    for (int x : d) neg.push_back(g.neg_index(x));
    const auto prod = ga_mul(ga_from_indices(g, d), ga_from_indices(g, neg));
    EXPECT_EQ(prod.coeffs(), difference_counts(g, d));
  }
}

TEST(VerifyPdsTest, Examples) {
  const AbelianGroup z13({13});
  EXPECT_TRUE(verify_pds(z13, cyc({1, 3, 4, 9, 10, 12}), 2, 3).holds);
  const auto d3 = davis(3);
  EXPECT_TRUE(verify_pds(d3.group(), d3.connection_set.elements(), 19, 20).holds);
  const AbelianGroup z5({5});
  for (int lambda = 0; lambda < 3; ++lambda)
    for (int mu = 0; mu < 3; ++mu) {
      const auto r = verify_pds(z5, cyc({1, 2}), lambda, mu);
      EXPECT_FALSE(r.holds);
      EXPECT_TRUE(r.witness.has_value());
    }
}

TEST(VerifySrgEquationTest, Examples) {
  const auto p5 = paley(5).connection_set;
  EXPECT_TRUE(verify_srg_equation(p5, {5, 2, 0, 1}).holds);
  EXPECT_TRUE(verify_srg_equation(davis(3).connection_set, {81, 40, 19, 20}).holds);
  const auto r = verify_srg_equation(paley(13).connection_set, {13, 6, 3, 2});
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_NE(r.witness->observed, r.witness->expected);
}

TEST(VerifyMixedProductTest, Examples) {
  EXPECT_TRUE(verify_mixed_product(paley(5).connection_set, 1).holds);
  EXPECT_TRUE(verify_mixed_product(paley(13).connection_set, 3).holds);
  EXPECT_TRUE(verify_mixed_product(davis(3).connection_set, 20).holds);
  EXPECT_THROW(verify_mixed_product(paley(13).connection_set, 2), ParameterError);
  // Right size, wrong structure: a non-PDS half set in Z13.
  const auto s = parse_inline_connection_set("Z13:1;12;2;11;3;10");
  EXPECT_FALSE(verify_mixed_product(s, 3).holds);
}

TEST(SchurTest, Examples) {
  const auto p13 = verify_schur_partition(paley(13).connection_set);
  EXPECT_TRUE(p13.closed);
  ASSERT_EQ(p13.structure.size(), 3u);
  // S*S = 6e + 2S + 3N for Paley(13).
  EXPECT_EQ(p13.structure[1][1], (std::vector<std::int64_t>{6, 2, 3}));
  EXPECT_TRUE(verify_schur_partition(davis(3).connection_set).closed);
  const auto bad = verify_schur_partition(parse_inline_connection_set("Z13:1;12;2;11"));
  EXPECT_FALSE(bad.closed);
  ASSERT_TRUE(bad.witness.has_value());
}

TEST(SchurTest, NonPaleySquareCoefficients) {
  // S^2 for S = {1,12,2,11} in Z13, computed by hand.
  const AbelianGroup z13({13});
  const auto s = ga_from_set(z13, cyc({1, 12, 2, 11}));
  const std::vector<std::int64_t> expected{4, 2, 1, 2, 1, 0, 0, 0, 0, 1, 2, 1, 2};
  EXPECT_EQ(ga_mul(s, s).coeffs(), expected);
}

TEST(PdsEquivalenceTest, RandomInverseClosedSets) {
  std::mt19937_64 rng(99);
  for (const auto& factors : {std::vector<int>{13}, std::vector<int>{3, 3}, std::vector<int>{5, 5}}) {
    const AbelianGroup g(factors);
    for (int i = 0; i < 100; ++i) {
      std::vector<int> idx;
      for (int x = 1; x < g.order(); ++x) {
        const int y = g.neg_index(x);
        if (y >= x && rng() % 2) {
          idx.push_back(x);
          if (y != x) idx.push_back(y);
        }
      }
      const auto s = connection_set_from_indices(g, idx);
      const auto counts = difference_counts(g, s.indices());
      const int lambda = s.size() ? static_cast<int>(counts[s.indices()[0]]) : 0;
      int mu = 0;
      for (int x = 1; x < g.order(); ++x)
        if (!s.contains_index(x)) {
          mu = static_cast<int>(counts[x]);
          break;
        }
      EXPECT_EQ(verify_pds(g, s.elements(), lambda, mu).holds,
                verify_srg_equation(s, SrgParams{g.order(), s.size(), lambda, mu}).holds);
    }
  }
}

}  // namespace
}  // namespace sccay
