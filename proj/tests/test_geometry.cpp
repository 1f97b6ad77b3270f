#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "skeleton/geometry.hpp"

using namespace skeleton;

TEST(Geometry, EqualMassAngles) {
    const Geometry g = derive_geometry({1.0, 1.0});
    EXPECT_NEAR(g.theta12(), 2.0 * std::numbers::pi / 3.0, 1e-15);
    EXPECT_NEAR(g.theta23(), 2.0 * std::numbers::pi / 3.0, 1e-15);
    EXPECT_DOUBLE_EQ(g.alpha_sq(), 0.75);
    EXPECT_DOUBLE_EQ(g.nu(), 1.0);
}

TEST(Geometry, StaticThirdParticleAngles) {
    const Geometry g = derive_geometry({kInfiniteMass, 1.0});
    EXPECT_EQ(g.alpha_sq(), 0.25);
    EXPECT_NEAR(g.theta12(), std::numbers::pi / 2.0, 4e-16);
    EXPECT_NEAR(g.theta23(), 3.0 * std::numbers::pi / 4.0, 1e-15);
    EXPECT_NEAR(g.nu(), 1.0 / std::numbers::sqrt2, 2e-16);
    EXPECT_NEAR(g.lambda(), 1.0 / std::numbers::sqrt2, 2e-16);
}

TEST(Geometry, AlphaSquaredFormula) {
    for (double mu : {0.1, 0.48, 1.0, 3.0, 1e6}) {
        const Geometry g = derive_geometry({mu, 1.0});
        EXPECT_NEAR(g.alpha_sq(), (mu + 2.0) / (4.0 * mu), 1e-14 * g.alpha_sq());
        EXPECT_NEAR(g.nu(), std::sqrt(0.25 + g.alpha_sq()), 1e-15);
        EXPECT_GE(g.theta12(), std::numbers::pi / 2.0);
        EXPECT_LT(g.theta12(), std::numbers::pi);
        EXPECT_DOUBLE_EQ(g.theta13(), g.theta23());
    }
}

TEST(Geometry, UnitVectorsAndAngles) {
    for (double mu : {0.3, 1.0, 7.0, kInfiniteMass}) {
        const Geometry g = derive_geometry({mu, 2.0});
        const auto& a = g.unit_vectors();
        for (const auto& v : a) EXPECT_NEAR(std::hypot(v.x, v.y), 1.0, 1e-15);
        EXPECT_NEAR(std::acos(dot(a[0], a[1])), g.theta12(), 1e-12);
        EXPECT_NEAR(std::acos(dot(a[1], a[2])), g.theta23(), 1e-12);
        EXPECT_NEAR(std::acos(dot(a[0], a[2])), g.theta13(), 1e-12);
    }
}

TEST(Geometry, Lambda) { EXPECT_DOUBLE_EQ(derive_geometry({1.0, 2.0}).lambda(), 0.5); }

TEST(Geometry, RejectsInvalidParameters) {
    EXPECT_THROW(derive_geometry({-1.0, 1.0}), DomainError);
    EXPECT_THROW(derive_geometry({0.0, 1.0}), DomainError);
    EXPECT_THROW(derive_geometry({1.0, 0.0}), DomainError);
    EXPECT_THROW(derive_geometry({1.0, -2.0}), DomainError);
    EXPECT_THROW(derive_geometry({std::nan(""), 1.0}), DomainError);
}

TEST(Geometry, InverseMap) {
    EXPECT_TRUE(std::isinf(mass_ratio_from_theta12(std::numbers::pi / 2.0)));
    EXPECT_NEAR(mass_ratio_from_theta12(2.0 * std::numbers::pi / 3.0), 1.0, 1e-14);
    for (double f : {0.55, 0.6, 0.7, 0.8, 0.9, 0.95}) {
        const double theta = f * std::numbers::pi;
        const double mu = mass_ratio_from_theta12(theta);
        EXPECT_NEAR(derive_geometry({mu, 1.0}).theta12(), theta, 1e-12);
    }
    EXPECT_THROW(mass_ratio_from_theta12(1.0), DomainError);
    EXPECT_THROW(mass_ratio_from_theta12(std::numbers::pi), DomainError);
}

TEST(Geometry, EnergyScale) {
    EXPECT_DOUBLE_EQ(energy_scale(derive_geometry({1.0, 1.0})).factor, 0.5);
    EXPECT_NEAR(energy_scale(derive_geometry({kInfiniteMass, 1.0})).factor, 1.0, 1e-15);
    EXPECT_DOUBLE_EQ(energy_scale(derive_geometry({1.0, 2.0})).factor, 2.0);
    EXPECT_DOUBLE_EQ(energy_scale(derive_geometry({1.0, 2.0})).to_physical(-0.25), -0.5);
    EXPECT_THROW(energy_scale(derive_geometry({1.0, 1.0}), UnitSystem{0.0, 1.0, 1.0}), DomainError);
}
