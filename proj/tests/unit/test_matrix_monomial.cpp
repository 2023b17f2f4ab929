#include <random>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "wsdual/monomial.hpp"

using namespace wsdual;

TEST(Determinant, MatchesLeibnizOracle) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<Int> entry(-9, 9);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      oracle::Rows rows(n, std::vector<Int>(n));
      for (auto& r : rows)
        for (auto& x : r) x = entry(rng);
      EXPECT_EQ(determinant(IntMatrix::from_rows(rows)), oracle::leibniz_det(rows));
    }
  }
}

TEST(Determinant, EmptyMatrixIsOne) { EXPECT_EQ(determinant(IntMatrix(0)), 1); }

TEST(Inverse, TimesMatrixIsIdentity) {
  const IntMatrix m{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  const auto inv = inverse(m);
  EXPECT_EQ(to_rational(m) * inv, RationalMatrix::identity(3));
  EXPECT_EQ(inv * to_rational(m), RationalMatrix::identity(3));
}

TEST(Inverse, SingularThrows) {
  EXPECT_THROW(inverse(IntMatrix{{1, 2}, {2, 4}}), DataError);
}

TEST(Solve, MatchesCramerOracle) {
  const oracle::Rows rows{{4, 0, 1}, {1, 3, 0}, {0, 2, 5}};
  std::vector<Rational> ones(3, Rational(1));
  const auto x = solve(to_rational(IntMatrix::from_rows(rows)), ones);
  const auto expected = *oracle::cramer_ones(rows);
  for (std::size_t i = 0; i < 3; ++i)
    EXPECT_EQ(x[i], Rational(expected[i].numerator(), expected[i].denominator()));
}

TEST(Submatrix, PicksRowsAndColumns) {
  const IntMatrix m{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  const std::vector<std::size_t> rows{0, 2}, cols{1, 2};
  EXPECT_EQ(submatrix(m, rows, cols), (IntMatrix{{2, 3}, {8, 9}}));
}

TEST(FromRows, RejectsRagged) {
  EXPECT_THROW(IntMatrix::from_rows({{1, 2}, {3}}), InputError);
}

TEST(Monomials, ParsesLettersAndBraces) {
  EXPECT_EQ(parse_monomials("x^5z, xy^3, z^2"), (IntMatrix{{5, 0, 1}, {1, 3, 0}, {0, 0, 2}}));
  EXPECT_EQ(parse_monomials("x^{11}, y z^2 ,1"), (IntMatrix{{11, 0, 0}, {0, 1, 2}, {0, 0, 0}}));
  EXPECT_EQ(parse_monomials("x1^2x2, x2^3, x3^2x4, x4^2"),
            (IntMatrix{{2, 1, 0, 0}, {0, 3, 0, 0}, {0, 0, 2, 1}, {0, 0, 0, 2}}));
}

TEST(Monomials, RoundTrip) {
  const IntMatrix m{{12, 0, 1}, {0, 1, 0}, {1, 1, 2}};
  EXPECT_EQ(format_monomials(m), "x^{12}z, y, xyz^2");
  EXPECT_EQ(parse_monomials(format_monomials(m)), m);
}

TEST(Monomials, Errors) {
  EXPECT_THROW(parse_monomials("x^2"), InputError);
  EXPECT_THROW(parse_monomials("x^2, w^3"), InputError);
  EXPECT_THROW(parse_monomials("x^2, z^3"), InputError);
  EXPECT_THROW(parse_monomials("x^{2, y"), InputError);
  EXPECT_THROW(parse_monomials("x^, y"), InputError);
  EXPECT_THROW(parse_monomials("x1^2, x3"), InputError);
}

TEST(ParseMatrix, AcceptsRowsOrMonomials) {
  EXPECT_EQ(parse_matrix("3,0;0,2"), (IntMatrix{{3, 0}, {0, 2}}));
  EXPECT_EQ(parse_matrix("x^3, y^2"), (IntMatrix{{3, 0}, {0, 2}}));
  EXPECT_EQ(format_rows(IntMatrix{{3, 0}, {0, 2}}), "3,0;0,2");
  EXPECT_THROW(parse_matrix("3,0;0"), InputError);
  EXPECT_THROW(parse_matrix("3"), InputError);
}
