#include <gtest/gtest.h>

#include "oracle.hpp"
#include "wsdual/cyclotomic.hpp"

using namespace wsdual;

namespace {

const CyclotomicProduct kE12({{1, -1}, {2, 1}, {3, 1}, {6, -1}, {7, 1}, {14, -1}, {21, -1}, {42, 1}});
const CyclotomicProduct kQ17({{1, -1}, {3, 1}, {15, -1}, {30, 1}});

}  // namespace

TEST(CyclotomicProduct, DropsZeroExponents) {
  CyclotomicProduct p;
  p.multiply(3, 2);
  p.multiply(3, -2);
  EXPECT_TRUE(p.is_one());
  EXPECT_EQ(p.to_string(), "1");
  EXPECT_THROW(p.multiply(0, 1), InputError);
}

TEST(CyclotomicProduct, DegreeAndExponentSum) {
  EXPECT_EQ(kE12.degree(), 12);
  EXPECT_EQ(kE12.exponent_sum(), 0);
  EXPECT_EQ(kQ17.degree(), 17);
}

TEST(CyclotomicProduct, Formatting) {
  EXPECT_EQ(kQ17.to_string(), "(1-t^3)(1-t^30) / (1-t)(1-t^15)");
  EXPECT_EQ(CyclotomicProduct({{10, 2}, {1, -1}}).to_string(), "(1-t^10)^2 / (1-t)");
  EXPECT_EQ(CyclotomicProduct(std::map<Int, Int>{{1, -1}}).to_string(), "1 / (1-t)");
}

TEST(CyclotomicProduct, GroupOperations) {
  EXPECT_TRUE((kE12 * kE12.inverse()).is_one());
  EXPECT_EQ(kQ17.pow(2), kQ17 * kQ17);
  EXPECT_EQ(kQ17.pow(-1), kQ17.inverse());
  EXPECT_TRUE(kQ17.pow(0).is_one());
}

TEST(SaitoDual, ReversesOrdersAndNegates) {
  EXPECT_EQ(saito_dual(kE12, 42), kE12);
  const CyclotomicProduct e13({{1, -1}, {2, 1}, {3, 1}, {6, -1}, {15, -1}, {30, 1}});
  EXPECT_EQ(saito_dual(e13, 30), CyclotomicProduct({{1, -1}, {2, 1}, {5, 1}, {10, -1}, {15, -1}, {30, 1}}));
  EXPECT_EQ(saito_dual(saito_dual(e13, 30), 30), e13);
  EXPECT_THROW(saito_dual(kQ17, 20), InputError);
}

TEST(EvaluateAtOne, RequiresVanishingExponentSum) {
  EXPECT_EQ(evaluate_at_one(kQ17).value, Rational(6));
  EXPECT_EQ(evaluate_at_one(kE12).value, Rational(1));
  EXPECT_THROW(evaluate_at_one(CyclotomicProduct(std::map<Int, Int>{{2, 1}})), DataError);
  EXPECT_EQ(evaluate_at_one(CyclotomicProduct({{2, 1}, {3, -1}})).value, Rational(2, 3));
}

TEST(EvaluateAtOne, DiscriminantSign) {
  EXPECT_EQ(evaluate_at_one(kQ17, 3).discriminant, 6);
  EXPECT_EQ(evaluate_at_one(kQ17, 2).discriminant, -6);
  EXPECT_FALSE(evaluate_at_one(kQ17).discriminant.has_value());
}

TEST(ExpandSeries, MatchesNaiveMultiplication) {
  for (const auto& p : {kE12, kQ17, CyclotomicProduct({{1, 1}, {2, -1}, {3, -1}, {6, 1}}),
                        CyclotomicProduct({{1, -3}, {4, 2}})}) {
    EXPECT_EQ(expand_series(p, 40), oracle::naive_series(p.exponents(), 40)) << p.to_string();
  }
  EXPECT_EQ(expand_series(CyclotomicProduct({{1, 1}, {2, -1}, {3, -1}, {6, 1}}), 2), (std::vector<Int>{1, -1, 1}));
}
