#pragma once

// Momentum-space kernels of the trace operators tau_A R_0(-1) tau_B^*.
//
//   T_0(p, q)     = delta(p - q) / sqrt(p^2 + 2)                 (multiplication)
//   T_theta(p, q) = 1 / (2 pi |sin theta|) / ((p^2 - 2 cos theta p q + q^2) / (2 sin^2 theta) + 1)
//
// T_theta commutes with parity, and its even/odd parts are represented on
// L^2(0, inf) with plain Lebesgue measure by
//
//   T_theta^{+/-}(p, q) = T_theta(p, q) +/- T_theta(p, -q),   p, q >= 0.

#include <cmath>
#include <numbers>
#include <string>

#include "skeleton/error.hpp"
#include "skeleton/numeric.hpp"

namespace skeleton {

enum class Parity { even, odd };

inline int sign_of(Parity parity) { return parity == Parity::even ? 1 : -1; }

inline std::string to_string(Parity parity) { return parity == Parity::even ? "even" : "odd"; }

/// cos and |sin| of a line angle. The kernels only depend on these two numbers.
template <class Real>
struct KernelAngle {
    Real cos;
    Real sin_abs;
};

inline KernelAngle<double> kernel_angle(double theta) {
    const double s = std::abs(std::sin(theta));
    // sin(pi) in double is ~1.2e-16, not zero.
    if (!std::isfinite(theta) || s < 1e-12) {
        throw DomainError("kernel angle must avoid multiples of pi (got " + std::to_string(theta) + ")");
    }
    return {std::cos(theta), s};
}

struct KernelSpec {
    double theta = std::numbers::pi / 2.0;
    Parity parity = Parity::even;
};

/// Symbol of T_0: 1/sqrt(p^2 + 2), in (0, 1/sqrt(2)].
template <class Real = double>
Real t0_symbol(const Real& p) {
    return Real(1.0) / real_sqrt(p * p + Real(2.0));
}

/// 1/sqrt(2) - t0(p) written without cancellation:
///   p^2 / (sqrt(2) sqrt(p^2+2) (sqrt(p^2+2) + sqrt(2))).
template <class Real = double>
Real threshold_gap(const Real& p) {
    const Real r = real_sqrt(p * p + Real(2.0));
    const Real s2 = real_sqrt(Real(2.0));
    return p * p / (s2 * r * (r + s2));
}

template <class Real>
Real t_theta(const KernelAngle<Real>& angle, const Real& p, const Real& q) {
    const Real s2 = angle.sin_abs * angle.sin_abs;
    const Real quad = (p * p - Real(2.0) * angle.cos * p * q + q * q) / (Real(2.0) * s2);
    return Real(1.0) / (Real(2.0) * pi_v<Real>() * angle.sin_abs) / (quad + Real(1.0));
}

inline double t_theta(double theta, double p, double q) {
    return t_theta(kernel_angle(theta), p, q);
}

/// Half-line parity block T^{+/-}(p, q) = T(p, q) +/- T(p, -q).
/// Evaluated through the common denominator so the odd part keeps full
/// relative accuracy as p q -> 0:
///   T(p,q) - T(p,-q) = C (2 cos theta p q / sin^2 theta) / ((1 + a)(1 + b)).
template <class Real>
Real t_theta_parity(const KernelAngle<Real>& angle, Parity parity, const Real& p, const Real& q) {
    const Real s2 = angle.sin_abs * angle.sin_abs;
    const Real radial = (p * p + q * q) / (Real(2.0) * s2);
    const Real cross = angle.cos * p * q / s2;
    const Real a = radial - cross;  // argument at (p, q)
    const Real b = radial + cross;  // argument at (p, -q)
    const Real prefactor = Real(1.0) / (Real(2.0) * pi_v<Real>() * angle.sin_abs);
    const Real denom = (Real(1.0) + a) * (Real(1.0) + b);
    if (parity == Parity::even) return prefactor * (Real(2.0) + a + b) / denom;
    return prefactor * (Real(2.0) * cross) / denom;
}

inline double t_theta_parity(const KernelSpec& spec, double p, double q) {
    if (p < 0.0 || q < 0.0) throw DomainError("parity kernels are defined for p, q >= 0");
    return t_theta_parity(kernel_angle(spec.theta), spec.parity, p, q);
}

/// Odd block conjugated by (1/sqrt(2) - T_0)^{-1/2} on both sides, at the
/// threshold k = 1/sqrt(2):
///   (1/sqrt(2) - t0(p))^{-1/2} T^-(p, q) (1/sqrt(2) - t0(q))^{-1/2}.
/// Both numerator and the gap vanish like p q near the origin; cancelling the
/// common factor analytically gives a form that is smooth up to p = 0 or q = 0.
template <class Real>
Real tilde_kernel_odd(const KernelAngle<Real>& angle, const Real& p, const Real& q) {
    const Real s2 = angle.sin_abs * angle.sin_abs;
    const Real radial = (p * p + q * q) / (Real(2.0) * s2);
    const Real cross = angle.cos * p * q / s2;
    const Real prefactor = Real(1.0) / (Real(2.0) * pi_v<Real>() * angle.sin_abs);
    const Real denom = (Real(1.0) + radial - cross) * (Real(1.0) + radial + cross);
    // gap(p) = p^2 / g(p) with g(p) = sqrt(2) sqrt(p^2+2) (sqrt(p^2+2) + sqrt(2)).
    const Real s2root = real_sqrt(Real(2.0));
    const Real rp = real_sqrt(p * p + Real(2.0));
    const Real rq = real_sqrt(q * q + Real(2.0));
    const Real gp = s2root * rp * (rp + s2root);
    const Real gq = s2root * rq * (rq + s2root);
    return prefactor * (Real(2.0) * angle.cos / s2) * real_sqrt(gp * gq) / denom;
}

/// The conjugated odd block for theta_12 = 2 pi/3 (equal masses), whose
/// value at the origin is -16 sqrt(2) / (3 sqrt(3) pi).
inline double tilde_kernel_mm(double p, double q) {
    if (p < 0.0 || q < 0.0) throw DomainError("tilde kernel is defined for p, q >= 0");
    const KernelAngle<double> angle{-0.5, std::sqrt(3.0) / 2.0};
    return tilde_kernel_odd(angle, p, q);
}

/// Origin value of tilde_kernel_mm.
inline double tilde_origin_constant() {
    return -16.0 * std::numbers::sqrt2 / (3.0 * std::numbers::sqrt3 * std::numbers::pi);
}

} // namespace skeleton
