#include <gtest/gtest.h>

#include "oracle.hpp"
#include "wsdual/magic.hpp"
#include "wsdual/monomial.hpp"

using namespace wsdual;

namespace {

MagicSquare square(const char* monomials, const char* wa, const char* wb) {
  return validate(parse_matrix(monomials), parse_weight_system(wa, true), parse_weight_system(wb, true));
}

}  // namespace

TEST(Validate, AcceptsWeightedMagicSquare) {
  const auto ms = square("x^5z, xy^3, z^2", "1,3,5;10", "4,10,13;30");
  EXPECT_EQ(ms.size(), 3u);
}

TEST(Validate, ReportsFirstFailingRowOrColumn) {
  try {
    square("x^5z, xy^3, z^3", "1,3,5;10", "4,10,13;30");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("row 3"), std::string::npos) << e.what();
  }
  try {
    square("x^5z, xy^3, z^2", "1,3,5;10", "4,10,14;30");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("column"), std::string::npos) << e.what();
  }
  EXPECT_THROW(square("x^3, y^2", "2,3;6", "2,3,1;6"), ValidationError);
  EXPECT_THROW(validate(IntMatrix{{-1, 4}, {0, 2}}, parse_weight_system("2,3;6"), parse_weight_system("2,3;6")),
               ValidationError);
}

TEST(Classify, PrimitiveAlmostPrimitivePlain) {
  const auto e12 = classify(square("x^7, y^3, z^2", "6,14,21;42", "6,14,21;42"));
  EXPECT_EQ(e12.determinant, 42);
  EXPECT_EQ(e12.classification, Coupling::primitive);
  EXPECT_TRUE(e12.primitive);
  EXPECT_TRUE(e12.almost_primitive);
  EXPECT_TRUE(e12.strong);

  const auto ap = classify(square("x^5z, xy^3, z^2", "1,3,5;10", "4,10,13;30"));
  EXPECT_EQ(ap.classification, Coupling::almost_primitive);
  EXPECT_EQ(std::abs(ap.determinant), 10 * 3);

  const auto u12 = classify(square("x^4, y^3, z^3", "3,4,4;12", "3,4,4;12"));
  EXPECT_EQ(u12.determinant, 36);
  EXPECT_EQ(u12.classification, Coupling::plain);
}

TEST(Classify, StrongnessFlags) {
  const auto r = classify(square("y^2, x^2y", "1,2;4", "1,2;4"));
  EXPECT_FALSE(r.strong);
  EXPECT_EQ(r.row_has_zero, (std::vector<bool>{true, false}));
  EXPECT_EQ(r.column_has_zero, (std::vector<bool>{true, false}));
}

TEST(InverseData, RecoversWeights) {
  const auto ms = square("x^5z, xy^3, z^2", "1,3,5;10", "4,10,13;30");
  const auto d = inverse_data(ms);
  EXPECT_EQ(d.det_b, determinant(shifted_matrix(ms.entries())));
  EXPECT_TRUE(equivalent(d.recovered_wa, ms.row_weights()));
  EXPECT_TRUE(equivalent(d.recovered_wb, ms.column_weights()));
  const Rational a0 = ms.row_weights().virtual_weight();
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(d.row_sums[i], Rational(ms.row_weights().weight(i)) / a0);
}

TEST(InverseData, SingularShiftThrows) {
  EXPECT_THROW(inverse_data(square("x^2, y^2", "1,1;2", "1,1;2")), DataError);
}

TEST(Transpose, SwapsWeightsAndIsInvolution) {
  const auto ms = square("x^5z, xy^3, z^2", "1,3,5;10", "4,10,13;30");
  const auto t = transpose(ms);
  EXPECT_EQ(t.row_weights(), ms.column_weights());
  EXPECT_EQ(t.entries(), ms.entries().transposed());
  EXPECT_EQ(transpose(t), ms);
}

TEST(Classify, DeterminantAgreesWithOracle) {
  const auto ms = square("x^5z, xy^3, z^2", "1,3,5;10", "4,10,13;30");
  EXPECT_EQ(classify(ms).determinant, oracle::leibniz_det(ms.entries().rows()));
}
