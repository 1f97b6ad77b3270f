#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "skeleton/double_double.hpp"
#include "skeleton/kernels.hpp"
#include "skeleton/quadrature.hpp"

using namespace skeleton;

namespace {
const double kRational = std::numbers::pi / (8.0 * std::numbers::sqrt2);  // int (p^2+2)^-2
}

TEST(Quadrature, GaussLegendreExactness) {
    const auto rule = gauss_legendre<double>(10);
    double sum = 0.0, x8 = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i];
        x8 += rule.weights[i] * std::pow(rule.nodes[i], 8);
    }
    EXPECT_NEAR(sum, 2.0, 1e-15);
    EXPECT_NEAR(x8, 2.0 / 9.0, 1e-15);
}

TEST(Quadrature, GridIntegratesExponential) {
    const auto grid = build_grid({100, 2.0});
    EXPECT_NEAR(grid.integrate([](double p) { return std::exp(-p); }), 1.0, 1e-8);
}

TEST(Quadrature, GridIntegratesRational) {
    const auto grid = build_grid({200, 2.0});
    EXPECT_NEAR(grid.integrate([](double p) { return 1.0 / ((p * p + 2.0) * (p * p + 2.0)); }), kRational, 1e-10);
}

TEST(Quadrature, GridStructure) {
    for (MapKind map : {MapKind::algebraic, MapKind::tangent}) {
        const auto grid = build_grid({64, 1.5, map});
        ASSERT_EQ(grid.size(), 64u);
        EXPECT_GT(grid.nodes.front(), 0.0);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            EXPECT_GT(grid.weights[i], 0.0);
            if (i) EXPECT_GT(grid.nodes[i], grid.nodes[i - 1]);
        }
    }
}

TEST(Quadrature, TangentMapIntegrates) {
    const auto grid = build_grid({200, 2.0, MapKind::tangent});
    EXPECT_NEAR(grid.integrate([](double p) { return 1.0 / ((p * p + 2.0) * (p * p + 2.0)); }), kRational, 1e-9);
}

TEST(Quadrature, RejectsInvalidConfig) {
    EXPECT_THROW(build_grid({1, 2.0}), DomainError);
    EXPECT_THROW(build_grid({100, 0.0}), DomainError);
    EXPECT_THROW(build_grid({100, 2.0, MapKind::algebraic, -1.0}), DomainError);
}

TEST(Quadrature, AdaptiveRational) {
    const auto r = adaptive_integrate([](double p) { return 1.0 / ((p * p + 2.0) * (p * p + 2.0)); }, 1e-14);
    EXPECT_NEAR(r.value, kRational, 1e-12);
    EXPECT_LE(r.error, 1e-12);
}

TEST(Quadrature, AdaptiveGaussian) {
    const auto r = adaptive_integrate([](double p) { return std::exp(-p * p); }, 1e-14);
    EXPECT_NEAR(r.value, std::sqrt(std::numbers::pi) / 2.0, 1e-12);
}

TEST(Quadrature, AdaptiveSquaredKernel) {
    // Closed form: int_0^inf T_{3pi/4}(0,q)^2 dq = 0.03978873577297383394...
    const double theta = 3.0 * std::numbers::pi / 4.0;
    auto f = [&](double q) {
        const double t = t_theta(theta, 0.0, q);
        return t * t;
    };
    const double tight = adaptive_integrate(f, 1e-14).value;
    const double loose = adaptive_integrate(f, 1e-11).value;
    EXPECT_NEAR(tight, 0.03978873577297383394, 1e-14);
    EXPECT_NEAR(tight, loose, 1e-12);
    const auto grid = build_grid({2000, 2.0});
    EXPECT_NEAR(grid.integrate(f), tight, 1e-12);
}

TEST(Quadrature, AdaptiveIntervalAndLimit) {
    const auto r = adaptive_integrate_interval([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, 1e-13);
    EXPECT_NEAR(r.value, 2.0, 1e-13);
    EXPECT_THROW(adaptive_integrate_interval([](double x) { return 1.0 / std::sqrt(std::abs(x - 0.3)); }, 0.0, 1.0, 1e-15, 3),
                 ConvergenceError);
}

TEST(Quadrature, ExtendedPrecisionPanels) {
    const auto rule = gauss_legendre<DoubleDouble>(24);
    const auto value = panel_integrate_half_line<DoubleDouble>(
        [](const DoubleDouble& p) {
            const DoubleDouble d = p * p + DoubleDouble(2.0);
            return DoubleDouble(1.0) / (d * d);
        },
        96, rule, 1.0);
    const DoubleDouble reference = parse_double_double("0.27768018363489789044");
    EXPECT_LT(std::abs(static_cast<double>(value - reference)), 1e-19);
}
