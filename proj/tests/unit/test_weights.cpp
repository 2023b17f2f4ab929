#include <gtest/gtest.h>

#include "wsdual/weights.hpp"

using namespace wsdual;

TEST(WeightSystem, ParsesAndFormats) {
  const auto w = parse_weight_system(" 6, 14 ,21 ; 42 ");
  EXPECT_EQ(w.size(), 3u);
  EXPECT_EQ(w.degree(), 42);
  EXPECT_EQ(w.virtual_weight(), 1);
  EXPECT_EQ(w.to_string(), "6,14,21;42");
  EXPECT_TRUE(w.is_reduced());
  EXPECT_TRUE(w.is_canonical());
  EXPECT_TRUE(is_calabi_yau(w));
}

TEST(WeightSystem, RejectsMalformedInput) {
  for (const char* bad : {"", "1,2", "1,2;", ";6", "1;2", "1,2,3,4,5;20", "1,a;3", "1,2;0", "1,-2;6", "0,0;3",
                          "1,2;6;7", "1,,2;6"}) {
    EXPECT_THROW(parse_weight_system(bad), InputError) << bad;
  }
}

TEST(WeightSystem, ZeroWeightNeedsOptIn) {
  EXPECT_THROW(parse_weight_system("0,1,2;4"), InputError);
  const auto w = parse_weight_system("0,1,2;4", true);
  EXPECT_TRUE(w.has_zero_weight());
  EXPECT_THROW(parse_weight_system("0,0,2;4", true), InputError);
}

TEST(WeightSystem, VirtualWeightCanBeNonPositive) {
  const auto w = parse_weight_system("2,3;5");
  EXPECT_EQ(w.virtual_weight(), 0);
  EXPECT_FALSE(is_calabi_yau(w));
  EXPECT_FALSE(is_calabi_yau(parse_weight_system("2,3;7")));
}

TEST(Reduce, DividesByGcdAndSorts) {
  const auto r = parse_and_reduce("42,12,28;84");
  EXPECT_EQ(r.canonical.to_string(), "6,14,21;42");
  EXPECT_EQ(r.divisor, 2);
  EXPECT_EQ(r.permutation, (std::vector<std::size_t>{1, 2, 0}));
  EXPECT_TRUE(r.canonical.is_canonical());
}

TEST(Reduce, Idempotent) {
  const auto once = parse_and_reduce("10,4,6;40").canonical;
  EXPECT_EQ(reduce(once).canonical, once);
  EXPECT_EQ(reduce(once).divisor, 1);
}

TEST(Reduce, GcdNotDividingDegreeIsAnError) {
  EXPECT_THROW(parse_and_reduce("2,4;7"), InputError);
}

TEST(ScaleToReduced, KeepsOrder) {
  const auto w = scale_to_reduced(parse_weight_system("6,2;12"));
  EXPECT_EQ(w.to_string(), "3,1;6");
}

TEST(Equivalent, UpToScaleAndPermutation) {
  EXPECT_TRUE(equivalent(parse_weight_system("6,14,21;42"), parse_weight_system("42,12,28;84")));
  EXPECT_FALSE(equivalent(parse_weight_system("6,14,21;42"), parse_weight_system("6,14,21;43")));
  EXPECT_FALSE(equivalent(parse_weight_system("1,2;6"), parse_weight_system("1,2,3;6")));
  EXPECT_TRUE(equivalent(parse_weight_system("0,1,2;4", true), parse_weight_system("2,1,0;4", true)));
  EXPECT_FALSE(equivalent(parse_weight_system("0,1,2;4", true), parse_weight_system("0,2,4;8", true)));
}
