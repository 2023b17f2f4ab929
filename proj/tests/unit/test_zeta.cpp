#include <gtest/gtest.h>

#include "oracle.hpp"
#include "wsdual/monomial.hpp"
#include "wsdual/zeta.hpp"

using namespace wsdual;

namespace {

MagicSquare square(const char* monomials, const char* wa, const char* wb) {
  return validate(parse_matrix(monomials), parse_weight_system(wa), parse_weight_system(wb));
}

}  // namespace

TEST(SpecialSubsets, DiagonalHasAllSubsets) {
  const auto subsets = special_subsets(square("x^7, y^3, z^2", "6,14,21;42", "6,14,21;42"));
  ASSERT_EQ(subsets.size(), 8u);
  EXPECT_TRUE(subsets.front().columns.empty());
  EXPECT_EQ(subsets.front().gcd_weight, 42);
  EXPECT_EQ(subsets.front().order, 1);
  EXPECT_EQ(subsets.front().exponent, -1);
  EXPECT_EQ(subsets.back().columns.size(), 3u);
  EXPECT_EQ(subsets.back().minor, 42);
  EXPECT_EQ(subsets[1].columns, (std::vector<std::size_t>{0}));
  EXPECT_EQ(subsets[1].order, 7);
}

TEST(SpecialSubsets, DegenerateSupportIsAnError) {
  const auto ms = validate(IntMatrix{{2, 0, 0}, {2, 0, 0}, {0, 1, 1}}, parse_weight_system("1,1,1;2"),
                           parse_weight_system("1,1,4;4"));
  try {
    special_subsets(ms);
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("{1}"), std::string::npos) << e.what();
  }
}

TEST(SpecialSubsets, NeedsReducedPositiveWeights) {
  EXPECT_THROW(special_subsets(square("x^3, y^2", "4,6;12", "4,6;12")), DataError);
}

TEST(ReducedZeta, E12) {
  const auto ms = square("x^7, y^3, z^2", "6,14,21;42", "6,14,21;42");
  const CyclotomicProduct expected({{1, -1}, {2, 1}, {3, 1}, {6, -1}, {7, 1}, {14, -1}, {21, -1}, {42, 1}});
  EXPECT_EQ(reduced_zeta(ms), expected);
  EXPECT_EQ(saito_dual(reduced_zeta(ms), 42), expected);
}

TEST(ReducedZeta, E13AndItsTranspose) {
  const auto ms = square("x^5y, y^3, z^2", "4,10,15;30", "6,8,15;30");
  EXPECT_EQ(reduced_zeta(ms), CyclotomicProduct({{1, -1}, {2, 1}, {3, 1}, {6, -1}, {15, -1}, {30, 1}}));
  EXPECT_EQ(reduced_zeta(transpose(ms)), CyclotomicProduct({{1, -1}, {2, 1}, {5, 1}, {10, -1}, {15, -1}, {30, 1}}));
  EXPECT_EQ(transpose_zeta_from_special(ms), reduced_zeta(transpose(ms)));
}

TEST(CharacteristicPolynomial, EllipticE8) {
  const auto ms = square("x^3, y^2", "2,3;6", "2,3;6");
  EXPECT_EQ(reduced_zeta(ms), CyclotomicProduct({{1, -1}, {2, 1}, {3, 1}, {6, -1}}));
  EXPECT_EQ(characteristic_polynomial(ms), reduced_zeta(ms).inverse());
  EXPECT_EQ(expand_series(characteristic_polynomial(ms), 2), (std::vector<Int>{1, -1, 1}));
}

TEST(LatticeInvariants, E12) {
  const auto inv = lattice_invariants(square("x^7, y^3, z^2", "6,14,21;42", "6,14,21;42"));
  EXPECT_EQ(inv.mu, 12);
  EXPECT_EQ(inv.mu0, 0);
  EXPECT_EQ(inv.rho, 10);
}

TEST(LatticeInvariants, NoRhoOutsideThreeVariableCalabiYau) {
  EXPECT_FALSE(lattice_invariants(square("x^3, y^2", "2,3;6", "2,3;6")).rho.has_value());
  EXPECT_FALSE(lattice_invariants(square("x^3, y^3, z^3", "1,1,1;3", "1,1,1;3")).rho.has_value());
}

TEST(CharacteristicPolynomial, MatchesMilnorOrlikForBrieskornPham) {
  for (const char* text : {"x^7, y^3, z^2", "x^5, y^4, z^2", "x^3, y^3, z^3", "x^2, y^3", "x^4, y^6, z^5, t^2"}) {
    const IntMatrix c = parse_monomials(text);
    const std::size_t n = c.size();
    Int h = 1;
    for (std::size_t i = 0; i < n; ++i) h = std::lcm(h, c(i, i));
    std::vector<Int> a;
    for (std::size_t i = 0; i < n; ++i) a.push_back(h / c(i, i));
    const WeightSystem w(a, h);
    const auto ms = validate(c, w, w);
    const auto expected = oracle::milnor_orlik_factors(a, h);
    ASSERT_TRUE(expected.has_value());
    std::map<Int, Int> got(characteristic_polynomial(ms).exponents());
    std::map<Int, Int> want;
    for (const auto& [l, e] : *expected)
      if (e != 0) want[l] = e;
    EXPECT_EQ(got, want) << text;
    EXPECT_EQ(lattice_invariants(ms).mu, oracle::milnor_number(a, h)) << text;
  }
}

TEST(IsSpecial, AgreesWithEnumeration) {
  const auto ms = square("y^2, x^2y", "1,2;4", "1,2;4");
  EXPECT_TRUE(is_special(ms, {}));
  EXPECT_TRUE(is_special(ms, {1}));
  EXPECT_FALSE(is_special(ms, {0}));
  EXPECT_TRUE(is_special(ms, {0, 1}));
  EXPECT_EQ(special_subsets(ms).size(), 3u);
}
