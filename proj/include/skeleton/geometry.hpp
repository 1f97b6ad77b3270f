#pragma once

// Reduced two-dimensional geometry of the three-particle problem.
//
// Two particles of mass m and charge -1, a third of mass M and charge Z > 0.
// After removing the centre of mass and rescaling, the relative motion is a
// free 2-D Hamiltonian perturbed by delta potentials supported on the three
// lines span(A_1), span(A_2), span(A_3):
//
//     H = -1/2 Laplacian - delta_{A_1} - delta_{A_2} + lambda delta_{A_3}
//
// with alpha^2 = (M + 2m) / 4M, nu = sqrt(1/4 + alpha^2), lambda = nu / Z and
//     A_1 = (alpha, -1/2)/nu,  A_2 = (-alpha, -1/2)/nu,  A_3 = (0, 1).

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "skeleton/error.hpp"
#include "skeleton/numeric.hpp"

namespace skeleton {

inline constexpr double kInfiniteMass = std::numeric_limits<double>::infinity();

/// Physical inputs. mass_ratio = M/m may be +infinity (static third particle).
struct ModelParams {
    double mass_ratio = kInfiniteMass;
    double charge = 1.0;
};

inline void validate(const ModelParams& params) {
    if (!(params.mass_ratio > 0.0) || std::isnan(params.mass_ratio)) {
        throw DomainError("mass ratio must be positive (got " + std::to_string(params.mass_ratio) + ")");
    }
    if (!(params.charge > 0.0) || !std::isfinite(params.charge)) {
        throw DomainError("charge must be positive and finite (got " + std::to_string(params.charge) + ")");
    }
}

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

/// Angle data of the reduced problem in an arbitrary scalar type.
/// The sines come from closed forms (sin theta_12 = alpha/nu^2,
/// sin theta_23 = alpha/nu), which stay accurate as theta_12 -> pi.
template <class Real>
struct ReducedAngles {
    Real alpha_sq;
    Real nu;
    Real cos12;
    Real sin12;
    Real cos23;
    Real sin23;
};

template <class Real>
ReducedAngles<Real> reduced_angles(double mass_ratio) {
    const Real quarter = Real(0.25);
    // alpha^2 = 1/4 + 1/(2 mu); exact 1/4 for the static third particle.
    const Real alpha_sq = std::isinf(mass_ratio) ? quarter : quarter + Real(1.0) / (Real(2.0) * Real(mass_ratio));
    const Real nu_sq = quarter + alpha_sq;
    const Real nu = real_sqrt(nu_sq);
    const Real alpha = real_sqrt(alpha_sq);
    return ReducedAngles<Real>{
        alpha_sq,
        nu,
        (quarter - alpha_sq) / nu_sq,
        alpha / nu_sq,
        Real(-1.0) / (Real(2.0) * nu),
        alpha / nu,
    };
}

/// Derived geometry. Only constructible through derive_geometry so the
/// angles can never drift from the mass ratio they came from.
class Geometry {
public:
    const ModelParams& params() const { return params_; }
    double mass_ratio() const { return params_.mass_ratio; }
    double charge() const { return params_.charge; }

    double alpha_sq() const { return angles_.alpha_sq; }
    double nu() const { return angles_.nu; }
    /// Repulsive coupling of the third line, lambda = nu / Z.
    double lambda() const { return angles_.nu / params_.charge; }

    double theta12() const { return std::atan2(angles_.sin12, angles_.cos12); }
    double theta23() const { return std::atan2(angles_.sin23, angles_.cos23); }
    double theta13() const { return theta23(); }

    double cos12() const { return angles_.cos12; }
    double sin12() const { return angles_.sin12; }
    double cos23() const { return angles_.cos23; }
    double sin23() const { return angles_.sin23; }

    const std::array<Vec2, 3>& unit_vectors() const { return unit_vectors_; }

private:
    friend Geometry derive_geometry(const ModelParams& params);

    Geometry(const ModelParams& params, const ReducedAngles<double>& angles)
        : params_(params), angles_(angles) {
        const double alpha = std::sqrt(angles.alpha_sq);
        unit_vectors_ = {Vec2{alpha / angles.nu, -0.5 / angles.nu},
                         Vec2{-alpha / angles.nu, -0.5 / angles.nu},
                         Vec2{0.0, 1.0}};
    }

    ModelParams params_;
    ReducedAngles<double> angles_;
    std::array<Vec2, 3> unit_vectors_;
};

inline Geometry derive_geometry(const ModelParams& params) {
    validate(params);
    return Geometry(params, reduced_angles<double>(params.mass_ratio));
}

/// Inverse of theta_12(mu): cos theta_12 = (1/4 - alpha^2)/nu^2 gives
/// mu = -(1 + cos theta_12) / cos theta_12. Returns +infinity at pi/2.
inline double mass_ratio_from_theta12(double theta12) {
    constexpr double half_pi = std::numbers::pi / 2.0;
    // Accept the double nearest to pi/2, which lies just below it.
    if (!(theta12 >= half_pi * (1.0 - 4.0 * std::numeric_limits<double>::epsilon())) ||
        !(theta12 < std::numbers::pi)) {
        throw DomainError("theta12 must lie in [pi/2, pi) (got " + std::to_string(theta12) + ")");
    }
    const double c = std::cos(theta12);
    if (c >= 0.0) return kInfiniteMass;
    return -(1.0 + c) / c;
}

struct UnitSystem {
    double hbar = 1.0;
    double mass = 1.0;        ///< electron mass m
    double elementary = 1.0;  ///< charge unit e
};

/// Factor converting eigenvalues of the dimensionless H into energies:
/// m Z^2 e^4 / (2 hbar^2 nu^2).
struct EnergyScale {
    double factor = 1.0;

    double to_physical(double dimensionless_energy) const { return factor * dimensionless_energy; }
};

inline EnergyScale energy_scale(const Geometry& geometry, const UnitSystem& units = {}) {
    if (!(units.hbar > 0.0) || !(units.mass > 0.0) || !(units.elementary > 0.0)) {
        throw DomainError("unit system entries must be positive");
    }
    const double z = geometry.charge();
    const double e2 = units.elementary * units.elementary;
    const double nu = geometry.nu();
    return EnergyScale{units.mass * z * z * e2 * e2 / (2.0 * units.hbar * units.hbar * nu * nu)};
}

} // namespace skeleton
