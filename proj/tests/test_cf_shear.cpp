#include <gtest/gtest.h>

#include <cmath>

#include "tsurf/cf.hpp"
#include "tsurf/shear.hpp"

using namespace tsurf;

TEST(ContinuedFraction, Expand) {
  EXPECT_EQ(cf_expand(15, 11).terms, (std::vector<std::int64_t>{1, 2, 1, 3}));
  EXPECT_EQ(cf_expand(15, 11).to_string(), "[1, 2, 1, 3]");
  EXPECT_EQ(cf_expand(7, 4).terms, (std::vector<std::int64_t>{1, 1, 3}));
  EXPECT_EQ(cf_expand(Rational(4, 7)).terms, (std::vector<std::int64_t>{0, 1, 1, 3}));
  EXPECT_THROW(cf_expand(1, 0), Error);
}

TEST(ContinuedFraction, EvalInvertsExpand) {
  for (std::int64_t q = 1; q <= 30; ++q)
    for (std::int64_t p = 0; p <= 30; ++p)
      EXPECT_EQ(cf_eval(cf_expand(p, q)), Rational(p, q));
}

TEST(ContinuedFraction, Convergents) {
  auto c = convergents(cf_expand(15, 11));
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c[0], Rational(1));
  EXPECT_EQ(c[1], Rational(3, 2));
  EXPECT_EQ(c[2], Rational(4, 3));
  EXPECT_EQ(c[3], Rational(15, 11));
}

TEST(ContinuedFraction, RectangleCutting) {
  EXPECT_EQ(rectangle_cut_counts(15, 11), (std::vector<std::int64_t>{1, 2, 1, 3}));
  EXPECT_EQ(rectangle_cut_counts(4, 7), (std::vector<std::int64_t>{0, 1, 1, 3}));
}

TEST(ContinuedFraction, GoldenRatioIsAllOnes) {
  auto cf = cf_expand_float((1 + std::sqrt(5.0)) / 2, 20);
  ASSERT_GE(cf.terms.size(), 15u);
  for (std::size_t i = 0; i < 15; ++i) EXPECT_EQ(cf.terms[i], 1);
}

TEST(ContinuedFraction, RationalApproximation) {
  EXPECT_EQ(rational_approximation(0.75, 64, 1e-12), Rational(3, 4));
  EXPECT_FALSE(rational_approximation(std::acos(-1.0), 64, 1e-9).has_value());
}

TEST(ShearMatrix, DeterminantChecked) {
  EXPECT_THROW(ShearMatrix(2, 0, 0, 1), Error);
  EXPECT_NO_THROW(ShearMatrix(3, 7, 2, 5));
}

TEST(ShearMatrix, Decompose) {
  ShearMatrix m(3, 7, 2, 5);
  auto w = decompose(m);
  EXPECT_EQ(w.to_string(), "S^1 T^2 S^2");
  EXPECT_TRUE(verify_decomposition(m, w));
  EXPECT_EQ(decompose(ShearMatrix()).to_string(), "I");
  EXPECT_EQ(decompose(ShearMatrix(1, 4, 0, 1)).to_string(), "S^4");
  EXPECT_THROW(decompose(ShearMatrix(1, -1, 0, 1)), Error);
}

TEST(ShearMatrix, DecompositionRoundTripsOverNonnegativeMatrices) {
  int checked = 0;
  for (std::int64_t a = 0; a <= 12; ++a)
    for (std::int64_t b = 0; b <= 12; ++b)
      for (std::int64_t c = 0; c <= 12; ++c)
        for (std::int64_t d = 0; d <= 12; ++d)
          if (a * d - b * c == 1) {
            ShearMatrix m(a, b, c, d);
            EXPECT_TRUE(verify_decomposition(m, decompose(m))) << m.to_string();
            ++checked;
          }
  EXPECT_GT(checked, 100);
}

TEST(ShearMatrix, SlopeAction) {
  EXPECT_EQ(slope_action(ShearMatrix(3, 7, 2, 5), Slope{1, 1}).to_string(), "7/10");
  EXPECT_EQ(slope_action(ShearMatrix::S(), Slope{1, 1}).to_string(), "1/2");
  EXPECT_EQ(slope_action(ShearMatrix::T(), Slope{1, 1}).to_string(), "2");
  EXPECT_EQ(slope_action(ShearMatrix::S(), Slope::infinity()).to_string(), "1");
  EXPECT_EQ(slope_action(ShearMatrix(0, -1, 1, 0), Slope{0, 1}).to_string(), "inf");
}
