#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "skeleton/double_double.hpp"

using namespace skeleton;

TEST(DoubleDouble, ArithmeticCarriesLowWord) {
    const DoubleDouble one(1.0);
    const DoubleDouble tiny(1e-20);
    const DoubleDouble sum = one + tiny;
    EXPECT_EQ(sum.hi, 1.0);
    EXPECT_DOUBLE_EQ(sum.lo, 1e-20);
    EXPECT_DOUBLE_EQ(static_cast<double>((sum - one) / tiny), 1.0);
}

TEST(DoubleDouble, DivisionAndSqrt) {
    const DoubleDouble third = DoubleDouble(1.0) / DoubleDouble(3.0);
    EXPECT_LT(std::abs(static_cast<double>(third * DoubleDouble(3.0) - DoubleDouble(1.0))), 1e-31);
    const DoubleDouble r = sqrt(DoubleDouble(2.0));
    EXPECT_LT(std::abs(static_cast<double>(r * r - DoubleDouble(2.0))), 1e-31);
    EXPECT_EQ(sqrt(DoubleDouble(0.0)), DoubleDouble(0.0));
}

TEST(DoubleDouble, PiToThirtyDigits) {
    const DoubleDouble reference = parse_double_double("3.14159265358979323846264338327950288");
    EXPECT_LT(std::abs(static_cast<double>(DoubleDouble::pi() - reference)), 1e-31);
}

TEST(DoubleDouble, ParseAndFormatRoundTrip) {
    const DoubleDouble x = parse_double_double("0.37490347747000593278192029505");
    EXPECT_EQ(to_string(x, 25), "0.3749034774700059327819203");
    EXPECT_EQ(parse_double_double("-0.0025").hi, -0.0025);
    EXPECT_EQ(to_string(DoubleDouble(-1.5), 2), "-1.50");
    EXPECT_THROW(parse_double_double("abc"), std::invalid_argument);
    EXPECT_THROW(parse_double_double("1.2.3"), std::invalid_argument);
}

TEST(DoubleDouble, Comparisons) {
    const DoubleDouble a(1.0), b = DoubleDouble(1.0) + DoubleDouble(1e-25);
    EXPECT_LT(a, b);
    EXPECT_GT(b, a);
    EXPECT_EQ(abs(-b), b);
    EXPECT_EQ(floor(DoubleDouble(2.75)), DoubleDouble(2.0));
    EXPECT_TRUE(isfinite(a));
}
