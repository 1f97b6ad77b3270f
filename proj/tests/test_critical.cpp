#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "skeleton/critical.hpp"

using namespace skeleton;

// Reference values computed independently with 30-digit arbitrary-precision quadrature.
namespace ref {
constexpr double z_static = 0.374903477470005932781920295053;
constexpr double z_equal = 0.163472286811117663836381410789;
constexpr double z_mu2 = 0.26020526999736304752774;
constexpr double z_mu06 = 0.05503750248393737385537;
constexpr double mu_star = 0.48453405918618381216;
constexpr double k00_static_half = 0.0358078307915029167338;
constexpr double schur_static_one = 0.19524499044506279653;
constexpr double limit_static_schur = 0.520952253468466214425526;
constexpr double limit_equal_direct = 0.367552596947861366341;
constexpr double limit_equal_schur = 0.447677431916583120448;
} // namespace ref

TEST(Critical, DirectTerm) {
    EXPECT_NEAR(k00_at(kInfiniteMass, 1.0, 1e-13).direct_term, 1.0 / std::numbers::pi, 1e-16);
    EXPECT_NEAR(k00_at(1.0, 1.0, 1e-13).direct_term, ref::limit_equal_direct, 1e-15);
}

TEST(Critical, K00Values) {
    const auto half = k00(derive_geometry({kInfiniteMass, 0.5}));
    EXPECT_NEAR(half.value, ref::k00_static_half, 1e-13);
    EXPECT_GT(half.value, 0.0);
    EXPECT_NEAR(k00(derive_geometry({kInfiniteMass, 1.0})).schur_term, ref::schur_static_one, 1e-13);
    EXPECT_NEAR(k00(derive_geometry({kInfiniteMass, ref::z_static})).value, 0.0, 1e-12);
}

TEST(Critical, ZeroChargeLimit) {
    const auto s = k00_zero_charge_limit(kInfiniteMass);
    EXPECT_NEAR(s.schur_term, ref::limit_static_schur, 1e-13);
    EXPECT_LT(s.value, 0.0);
    const auto e = k00_zero_charge_limit(1.0);
    EXPECT_NEAR(e.schur_term, ref::limit_equal_schur, 1e-13);
    // The limit is approached continuously.
    EXPECT_NEAR(k00_at(1.0, 1e-9, 1e-13).value, e.value, 1e-8);
}

TEST(Critical, FixedGridAgreesWithAdaptive) {
    const auto grid = build_grid({2000, 1.0});
    for (double mu : {kInfiniteMass, 1.0, 0.6}) {
        EXPECT_NEAR(k00_fixed_grid(mu, 0.3, grid).value, k00_at(mu, 0.3, 1e-13).value, 1e-11);
    }
}

TEST(Critical, RosenthalConstant) {
    const auto cp = z_critical_ub(kInfiniteMass);
    EXPECT_NEAR(cp.z_c_ub, ref::z_static, 1e-14);
    EXPECT_NEAR(cp.theta12, std::numbers::pi / 2.0, 1e-16);
    EXPECT_LT(std::abs(cp.k00_at_root), 1e-12);
    const auto by_angle = z_critical_ub_theta(std::numbers::pi / 2.0);
    EXPECT_NEAR(by_angle.z_c_ub, ref::z_static, 1e-14);
}

TEST(Critical, OtherMassRatios) {
    EXPECT_NEAR(z_critical_ub(1.0).z_c_ub, ref::z_equal, 1e-13);
    EXPECT_NEAR(z_critical_ub(2.0).z_c_ub, ref::z_mu2, 1e-13);
    EXPECT_NEAR(z_critical_ub(0.6).z_c_ub, ref::z_mu06, 1e-13);
    EXPECT_NEAR(z_critical_ub_theta(2.0 * std::numbers::pi / 3.0).z_c_ub, ref::z_equal, 1e-12);
    EXPECT_EQ(z_critical_ub(0.46).z_c_ub, 0.0);
    EXPECT_GT(z_critical_ub(0.46).k00_at_root, 0.0);
}

TEST(Critical, StableAcrossTolerances) {
    EXPECT_NEAR(z_critical_ub(1.0, 1e-10).z_c_ub, z_critical_ub(1.0, 1e-14).z_c_ub, 1e-9);
}

TEST(Critical, ExtendedPrecision) {
    const auto ext = z_critical_ub_extended(kInfiniteMass);
    const DoubleDouble reference = parse_double_double("0.374903477470005932781920295053");
    EXPECT_LT(std::abs(static_cast<double>(ext.z_c_ub - reference)), 1e-24);
    EXPECT_LT(ext.refinement_change, 1e-24);
    const auto ext1 = z_critical_ub_extended(1.0);
    EXPECT_LT(std::abs(static_cast<double>(ext1.z_c_ub - parse_double_double("0.163472286811117663836381410789"))), 1e-24);
}

TEST(Critical, ZeroChargeMassThreshold) {
    const double mu = zero_charge_mass_threshold();
    EXPECT_NEAR(mu, ref::mu_star, 1e-10);
    EXPECT_GT(z_critical_ub(mu + 0.05).z_c_ub, 0.0);
    EXPECT_GT(k00_zero_charge_limit(mu - 0.05).value, 0.0);
}

TEST(Critical, CurveShape) {
    const double theta_star = derive_geometry({ref::mu_star, 1.0}).theta12();
    const auto curve = critical_curve(std::numbers::pi / 2.0, 2.9, 30);
    ASSERT_EQ(curve.size(), 30u);
    EXPECT_NEAR(curve.front().point.z_c_ub, ref::z_static, 1e-13);
    double prev_theta = 0.0;
    for (const auto& c : curve) {
        ASSERT_FALSE(c.error.has_value()) << *c.error;
        EXPECT_GT(c.point.theta12, prev_theta);
        prev_theta = c.point.theta12;
        EXPECT_TRUE(std::isfinite(c.point.z_c_ub));
        EXPECT_GE(c.point.z_c_ub, 0.0);
        if (c.point.theta12 > theta_star + 1e-9) EXPECT_EQ(c.point.z_c_ub, 0.0);
        if (c.point.theta12 < theta_star - 1e-3) EXPECT_GT(c.point.z_c_ub, 0.0);
    }
    for (std::size_t i = 1; i < curve.size(); ++i) EXPECT_LE(curve[i].point.z_c_ub, curve[i - 1].point.z_c_ub);
}

TEST(Critical, CurveIsThreadCountIndependent) {
    const auto a = critical_curve(1.7, 2.5, 9, 1e-13, 1);
    const auto b = critical_curve(1.7, 2.5, 9, 1e-13, 4);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].point.z_c_ub, b[i].point.z_c_ub);
}

TEST(Critical, RejectsBadInput) {
    EXPECT_THROW(k00_at(-1.0, 1.0, 1e-13), DomainError);
    EXPECT_THROW(k00_at(1.0, -1.0, 1e-13), DomainError);
    EXPECT_THROW(critical_curve(1.0, 2.0, 10), DomainError);
    EXPECT_THROW(critical_curve(2.0, 1.9, 10), DomainError);
    EXPECT_THROW(critical_curve(1.6, 2.0, 1), DomainError);
}
