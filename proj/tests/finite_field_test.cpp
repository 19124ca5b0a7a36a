#include "sccay/finite_field.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "sccay/error.hpp"

namespace sccay {
namespace {

FieldElement F(std::vector<int> c) { return FieldElement{std::move(c)}; }

std::set<std::vector<int>> as_set(const std::vector<FieldElement>& v) {
  std::set<std::vector<int>> out;
  for (const auto& e : v) out.insert(e.coeffs);
  return out;
}

TEST(FiniteFieldTest, LexSmallestModulus) {
  EXPECT_EQ(FiniteField::make(13, 1).modulus(), (std::vector<int>{0, 1}));
  EXPECT_EQ(FiniteField::make(3, 2).modulus(), (std::vector<int>{1, 0, 1}));
  EXPECT_EQ(FiniteField::make(7, 2).modulus(), (std::vector<int>{1, 0, 1}));
  EXPECT_EQ(FiniteField::make(2, 3).modulus(), (std::vector<int>{1, 0, 1, 1}));  // 1+x^2+x^3 precedes 1+x+x^3
  EXPECT_EQ(format_polynomial(FiniteField::make(3, 2).modulus()), "x^2+1");
}

TEST(FiniteFieldTest, InvalidParameters) {
  EXPECT_THROW(FiniteField::make(4, 1), ParameterError);
  EXPECT_THROW(FiniteField::make(3, 0), ParameterError);
  EXPECT_THROW(FiniteField::make(2, 13), ParameterError);  // 8192 > budget
  EXPECT_THROW(FiniteField(3, {2, 0, 1}), ParameterError);  // x^2 + 2 = (x-1)(x+1)
}

TEST(FiniteFieldTest, IrreducibilityAgainstRootSearch) {
  // Degree 2 and 3 polynomials are irreducible iff they have no root.
  for (int p : {2, 3, 5, 7}) {
    for (int a = 0; a < p; ++a) {
      for (int b = 0; b < p; ++b) {
        for (int c = 0; c < p; ++c) {
          const std::vector<int> cubic{a, b, c, 1};
          const std::vector<int> quad{a, b, 1};
          bool cubic_root = false;
          bool quad_root = false;
          for (int x = 0; x < p; ++x) {
            cubic_root |= (a + b * x + c * x * x + x * x * x) % p == 0;
            quad_root |= (a + b * x + x * x) % p == 0;
          }
          EXPECT_EQ(is_irreducible(p, cubic), !cubic_root);
          EXPECT_EQ(is_irreducible(p, quad), !quad_root);
        }
      }
    }
  }
}

TEST(FiniteFieldTest, ArithmeticExamples) {
  const auto gf9 = FiniteField::make(3, 2);
  EXPECT_EQ(gf9.mul(gf9.x(), gf9.x()), F({2, 0}));
  EXPECT_EQ(gf9.pow(F({1, 1}), 2), F({0, 2}));
  const auto gf13 = FiniteField::make(13, 1);
  EXPECT_EQ(gf13.inverse(F({2})), F({7}));
  EXPECT_THROW(gf13.inverse(gf13.zero()), ParameterError);
}

TEST(FiniteFieldTest, OrdersAndPrimitiveElements) {
  const auto gf9 = FiniteField::make(3, 2);
  EXPECT_EQ(gf9.multiplicative_order(gf9.x()), 4);
  EXPECT_EQ(gf9.primitive_element(), F({1, 1}));
  EXPECT_EQ(gf9.multiplicative_order(F({1, 1})), 8);
  EXPECT_EQ(FiniteField::make(13, 1).primitive_element(), F({2}));
  EXPECT_THROW(gf9.multiplicative_order(gf9.zero()), ParameterError);
  // Order by repeated multiplication agrees for every nonzero element.
  for (auto field : {FiniteField::make(5, 2), FiniteField::make(2, 4), FiniteField::make(13, 1)}) {
    for (const auto& a : field.elements()) {
      if (field.is_zero(a)) continue;
      int k = 1;
      for (FieldElement y = a; !(y == field.one()); y = field.mul(y, a)) ++k;
      EXPECT_EQ(field.multiplicative_order(a), k);
    }
  }
}

TEST(FiniteFieldTest, Squares) {
  EXPECT_EQ(as_set(FiniteField::make(13, 1).squares()),
            (std::set<std::vector<int>>{{1}, {3}, {4}, {9}, {10}, {12}}));
  EXPECT_EQ(as_set(FiniteField::make(5, 1).squares()), (std::set<std::vector<int>>{{1}, {4}}));
  for (auto [p, r] : {std::pair{3, 2}, {5, 2}, {13, 1}, {7, 2}, {3, 4}}) {
    const auto field = FiniteField::make(p, r);
    const auto sq = field.squares();
    const auto set = as_set(sq);
    EXPECT_EQ(static_cast<int>(sq.size()), (field.order() - 1) / 2);
    for (const auto& a : sq)
      for (const auto& b : sq) EXPECT_TRUE(set.count(field.mul(a, b).coeffs));
    if (field.order() % 4 == 1) {
      EXPECT_TRUE(set.count(field.neg(field.one()).coeffs));
      for (const auto& a : sq) EXPECT_TRUE(set.count(field.neg(a).coeffs));
    }
  }
}

TEST(FiniteFieldTest, PeisertSet) {
  const auto gf9 = FiniteField::make(3, 2);
  EXPECT_EQ(as_set(gf9.peisert_set()), (std::set<std::vector<int>>{{1, 0}, {1, 1}, {2, 0}, {2, 2}}));
  const auto gf49 = FiniteField::make(7, 2);
  const auto s = gf49.peisert_set();
  const auto set = as_set(s);
  EXPECT_EQ(s.size(), 24u);
  EXPECT_FALSE(set.count(gf49.zero().coeffs));
  for (const auto& a : s) EXPECT_TRUE(set.count(gf49.neg(a).coeffs));
  // S and {a^i : i = 2,3 mod 4} partition the nonzero elements.
  const auto a = gf49.primitive_element();
  std::set<std::vector<int>> other;
  for (int i = 0; i < 48; ++i)
    if (i % 4 >= 2) other.insert(gf49.pow(a, i).coeffs);
  EXPECT_EQ(other.size(), 24u);
  for (const auto& e : other) EXPECT_FALSE(set.count(e));
  EXPECT_THROW(FiniteField::make(5, 1).peisert_set(), ParameterError);
  EXPECT_THROW(FiniteField::make(3, 1).peisert_set(), ParameterError);
  EXPECT_THROW(FiniteField::make(3, 2).peisert_set(F({1, 0})), ParameterError);  // 1 is not primitive
}

TEST(FiniteFieldTest, PeisertSetWithOtherGenerator) {
  const auto gf9 = FiniteField::make(3, 2);
  const auto s = gf9.peisert_set(F({1, 2}));  // x^3 = 2x... another primitive element
  EXPECT_EQ(s.size(), 4u);
}

TEST(FiniteFieldTest, AdditiveCoordinates) {
  const auto gf9 = FiniteField::make(3, 2);
  EXPECT_EQ(gf9.to_group(F({2, 1})).residues, (std::vector<int>{2, 1}));
  EXPECT_EQ(gf9.index_of(F({2, 1})), 7);
  EXPECT_EQ(FiniteField::make(13, 1).to_group(F({7})).residues, std::vector<int>{7});
  EXPECT_EQ(gf9.to_group(gf9.zero()), gf9.additive_group().identity());
  for (auto [p, r] : {std::pair{3, 2}, {3, 4}, {2, 6}, {5, 2}}) {
    const auto field = FiniteField::make(p, r);
    const auto group = field.additive_group();
    ASSERT_EQ(group.order(), field.order());
    const auto all = field.elements();
    for (const auto& a : all) {
      EXPECT_EQ(field.from_group(field.to_group(a)), a);
      EXPECT_EQ(group.index_of(field.to_group(a)), field.index_of(a));
      for (const auto& b : all) {
        ASSERT_EQ(field.to_group(field.add(a, b)), group.add(field.to_group(a), field.to_group(b)));
      }
    }
  }
}

TEST(FiniteFieldTest, FieldAxiomsOnRandomTriples) {
  std::mt19937_64 rng(7);
  for (auto [p, r] : {std::pair{3, 2}, {13, 1}, {5, 2}, {7, 2}, {3, 4}}) {
    const auto field = FiniteField::make(p, r);
    std::uniform_int_distribution<int> pick(0, field.order() - 1);
    for (int i = 0; i < 500; ++i) {
      const auto a = field.element_at(pick(rng));
      const auto b = field.element_at(pick(rng));
      const auto c = field.element_at(pick(rng));
      EXPECT_EQ(field.mul(field.mul(a, b), c), field.mul(a, field.mul(b, c)));
      EXPECT_EQ(field.mul(a, field.add(b, c)), field.add(field.mul(a, b), field.mul(a, c)));
      EXPECT_EQ(field.mul(a, b), field.mul(b, a));
      EXPECT_EQ(field.add(a, field.neg(a)), field.zero());
      if (!field.is_zero(a)) {
        EXPECT_EQ(field.mul(a, field.inverse(a)), field.one());
      }
    }
  }
}

TEST(FiniteFieldTest, TextForms) {
  const auto gf9 = FiniteField::make(3, 2);
  EXPECT_EQ(format_field_element(F({2, 1})), "2,1");
  EXPECT_EQ(parse_field_element(gf9, "1,1"), F({1, 1}));
  EXPECT_THROW(parse_field_element(gf9, "3,0"), ParseError);
  EXPECT_THROW(parse_field_element(gf9, "1"), ParseError);
}

}  // namespace
}  // namespace sccay
