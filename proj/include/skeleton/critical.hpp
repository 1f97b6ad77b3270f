#pragma once

// Sufficient binding condition in the fully symmetric sector and the
// critical-charge upper bound.
//
// At the threshold k = 1/sqrt(2) the PP skeleton reads k - T_0 - K with
//   K = T+_12 - 2 T+_23 (T_0 + k/lambda)^{-1} T+_23.
// If the kernel of K is positive at the origin, a trial function concentrated
// near p = 0 makes the skeleton negative and a bound state exists. Since T_0
// is a multiplication operator, the origin value is a one-dimensional integral:
//
//   K(0,0) = T+_12(0,0) - 2 int_0^inf T+_23(0,q)^2 / (t0(q) + k Z / nu) dq,
//   T+(0,q) = 2 T(0,q).
//
// K(0,0) increases with Z; Z_c^ub is its zero (or 0 when it stays positive
// as Z -> 0+).

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "skeleton/double_double.hpp"
#include "skeleton/error.hpp"
#include "skeleton/geometry.hpp"
#include "skeleton/kernels.hpp"
#include "skeleton/numeric.hpp"
#include "skeleton/parallel.hpp"
#include "skeleton/quadrature.hpp"

namespace skeleton {

struct K00Evaluation {
    double value = 0.0;
    double direct_term = 0.0;  ///< T+_12(0,0)
    double schur_term = 0.0;   ///< the subtracted integral, >= 0
    double tol = 0.0;
    double error_estimate = 0.0;
};

/// Integrand of the subtracted term. charge = 0 gives the Z -> 0+ limit,
/// where the bracket (t0 + k Z/nu)^{-1} becomes sqrt(q^2 + 2).
template <class Real>
Real k00_schur_integrand(const ReducedAngles<Real>& angles, const Real& k_over_lambda, const Real& q) {
    const KernelAngle<Real> a23{angles.cos23, angles.sin23};
    const Real t = t_theta(a23, Real(0.0), q);
    return Real(8.0) * t * t / (t0_symbol(q) + k_over_lambda);
}

template <class Real>
Real k00_direct_term(const ReducedAngles<Real>& angles) {
    // T+_12(0,0) = 2 T_12(0,0) = 1 / (pi |sin theta_12|).
    return Real(1.0) / (pi_v<Real>() * angles.sin12);
}

namespace detail {

inline double k_over_lambda(const ReducedAngles<double>& angles, double charge) {
    return threshold_k<double>() * charge / angles.nu;
}

} // namespace detail

/// K(0,0) for a mass ratio and charge >= 0 (0 meaning the Z -> 0+ limit), by
/// adaptive Gauss-Kronrod to absolute tolerance tol.
inline K00Evaluation k00_at(double mass_ratio, double charge, double tol) {
    if (!(mass_ratio > 0.0)) throw DomainError("mass ratio must be positive");
    if (!(charge >= 0.0) || !std::isfinite(charge)) throw DomainError("charge must be non-negative and finite");
    const auto angles = reduced_angles<double>(mass_ratio);
    const double kl = detail::k_over_lambda(angles, charge);
    auto integrand = [&](double q) { return k00_schur_integrand(angles, kl, q); };
    const auto integral = adaptive_integrate(integrand, tol);
    K00Evaluation out;
    out.direct_term = k00_direct_term(angles);
    out.schur_term = integral.value;
    out.value = out.direct_term - out.schur_term;
    out.tol = tol;
    out.error_estimate = integral.error;
    return out;
}

inline K00Evaluation k00(const Geometry& geometry, double tol = 1e-13) {
    return k00_at(geometry.mass_ratio(), geometry.charge(), tol);
}

/// Z -> 0+ limit of K(0,0) at fixed geometry.
inline K00Evaluation k00_zero_charge_limit(double mass_ratio, double tol = 1e-13) {
    return k00_at(mass_ratio, 0.0, tol);
}

/// Same quantity on a fixed HalfLineGrid; an independent route for cross-checks.
inline K00Evaluation k00_fixed_grid(double mass_ratio, double charge, const HalfLineGrid& grid) {
    const auto angles = reduced_angles<double>(mass_ratio);
    const double kl = detail::k_over_lambda(angles, charge);
    K00Evaluation out;
    out.direct_term = k00_direct_term(angles);
    out.schur_term = grid.integrate([&](double q) { return k00_schur_integrand(angles, kl, q); });
    out.value = out.direct_term - out.schur_term;
    return out;
}

/// Extended-precision K(0,0): composite Gauss-Legendre in double-double.
struct ExtendedK00Options {
    int panels = 48;
    int order = 24;
};

inline DoubleDouble k00_extended(double mass_ratio, const DoubleDouble& charge, const GaussRule<DoubleDouble>& rule,
                                 int panels) {
    const auto angles = reduced_angles<DoubleDouble>(mass_ratio);
    const DoubleDouble kl = threshold_k<DoubleDouble>() * charge / angles.nu;
    auto integrand = [&](const DoubleDouble& q) { return k00_schur_integrand(angles, kl, q); };
    const DoubleDouble schur = panel_integrate_half_line<DoubleDouble>(integrand, panels, rule, 1.0);
    return k00_direct_term(angles) - schur;
}

struct CriticalPoint {
    double theta12 = std::numbers::pi / 2.0;
    double mass_ratio = kInfiniteMass;
    double z_c_ub = 0.0;
    double k00_at_root = 0.0;  ///< K(0,0) at z_c_ub (or the Z -> 0+ limit when z_c_ub = 0)
    double quad_tol = 0.0;
};

namespace detail {

// Illinois regula falsi on a sign-changing bracket of an increasing function.
template <class Real, class F>
Real illinois_root(F&& f, Real lo, Real f_lo, Real hi, Real f_hi, double rel_width, int max_iter = 400) {
    int side = 0;
    for (int iter = 0; iter < max_iter; ++iter) {
        Real c = (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
        if (!(c > lo && c < hi)) c = (lo + hi) / Real(2.0);
        const Real fc = f(c);
        if (fc == Real(0.0)) return c;
        if ((fc < Real(0.0)) == (f_lo < Real(0.0))) {
            lo = c;
            f_lo = fc;
            if (side == -1) f_hi = f_hi / Real(2.0);
            side = -1;
        } else {
            hi = c;
            f_hi = fc;
            if (side == 1) f_lo = f_lo / Real(2.0);
            side = 1;
        }
        if (to_double(hi - lo) <= rel_width * to_double(real_abs(hi))) break;
    }
    // Secant polish inside the final bracket.
    const Real c = (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
    return (c > lo && c < hi) ? c : (lo + hi) / Real(2.0);
}

} // namespace detail

/// Z_c^ub for a mass ratio (+inf allowed). tol is the absolute quadrature
/// tolerance on K(0,0); the root is iterated to a relative bracket of a few ulps.
inline CriticalPoint z_critical_ub(double mass_ratio, double tol = 1e-13) {
    if (!(mass_ratio > 0.0)) throw DomainError("mass ratio must be positive");
    CriticalPoint point;
    point.mass_ratio = mass_ratio;
    point.theta12 = derive_geometry({mass_ratio, 1.0}).theta12();
    point.quad_tol = tol;

    const auto limit = k00_zero_charge_limit(mass_ratio, tol);
    if (limit.value > 0.0) {
        point.z_c_ub = 0.0;
        point.k00_at_root = limit.value;
        return point;
    }
    auto f = [&](double z) { return k00_at(mass_ratio, z, tol).value; };
    double lo = 0.0;
    double f_lo = limit.value;
    double hi = 1.0;
    double f_hi = f(hi);
    int doublings = 0;
    while (!(f_hi > 0.0)) {
        if (++doublings > 60) {
            throw ConvergenceError("z_critical_ub: no sign change of K(0,0) up to Z = " + std::to_string(hi) +
                                       " (K(0,0) = " + std::to_string(f_hi) + ")",
                                   hi, f_hi);
        }
        lo = hi;
        f_lo = f_hi;
        hi *= 2.0;
        f_hi = f(hi);
    }
    point.z_c_ub = detail::illinois_root<double>(f, lo, f_lo, hi, f_hi, 4.0 * std::numeric_limits<double>::epsilon());
    point.k00_at_root = f(point.z_c_ub);
    return point;
}

inline CriticalPoint z_critical_ub_theta(double theta12, double tol = 1e-13) {
    CriticalPoint point = z_critical_ub(mass_ratio_from_theta12(theta12), tol);
    point.theta12 = theta12;
    return point;
}

struct ExtendedCriticalPoint {
    DoubleDouble z_c_ub;
    DoubleDouble k00_at_root;
    /// |Z(panels) - Z(2 panels)|, a self-consistency estimate of the quadrature error.
    double refinement_change = 0.0;
};

/// Z_c^ub in double-double arithmetic. The result is computed at `panels`
/// and 2 `panels`; the finer value is returned.
inline ExtendedCriticalPoint z_critical_ub_extended(double mass_ratio, const ExtendedK00Options& options = {}) {
    if (!(mass_ratio > 0.0)) throw DomainError("mass ratio must be positive");
    const auto rule = gauss_legendre<DoubleDouble>(options.order);
    // Start from the double-precision root; K(0,0) is smooth and increasing in Z.
    const CriticalPoint seed = z_critical_ub(mass_ratio);
    if (seed.z_c_ub == 0.0) return ExtendedCriticalPoint{DoubleDouble(0.0), DoubleDouble(seed.k00_at_root), 0.0};

    auto solve = [&](int panels) {
        auto f = [&](const DoubleDouble& z) { return k00_extended(mass_ratio, z, rule, panels); };
        DoubleDouble lo(seed.z_c_ub * (1.0 - 1e-9));
        DoubleDouble hi(seed.z_c_ub * (1.0 + 1e-9));
        DoubleDouble f_lo = f(lo);
        DoubleDouble f_hi = f(hi);
        for (int widen = 0; widen < 40 && !(f_lo < DoubleDouble(0.0) && f_hi > DoubleDouble(0.0)); ++widen) {
            lo = lo * DoubleDouble(0.5);
            hi = hi * DoubleDouble(2.0);
            f_lo = f(lo);
            f_hi = f(hi);
        }
        if (!(f_lo < DoubleDouble(0.0) && f_hi > DoubleDouble(0.0))) {
            throw ConvergenceError("z_critical_ub_extended: bracket failure", seed.z_c_ub, 0.0);
        }
        const DoubleDouble root = detail::illinois_root<DoubleDouble>(f, lo, f_lo, hi, f_hi, 1e-30);
        return std::pair{root, f(root)};
    };
    const auto coarse = solve(options.panels);
    const auto fine = solve(2 * options.panels);
    return ExtendedCriticalPoint{fine.first, fine.second, std::abs(static_cast<double>(fine.first - coarse.first))};
}

/// Mass ratio below which K(0,0) stays positive as Z -> 0+ (so Z_c^ub = 0).
inline double zero_charge_mass_threshold(double tol = 1e-12, double quad_tol = 1e-13) {
    auto f = [&](double mu) { return k00_zero_charge_limit(mu, quad_tol).value; };
    // Limit K(0,0) is positive for light third particles and negative at equal masses.
    double lo = 0.05;
    double hi = 1.0;
    double f_lo = f(lo);
    double f_hi = f(hi);
    if (!(f_lo > 0.0 && f_hi < 0.0)) {
        throw ConvergenceError("zero_charge_mass_threshold: limit K(0,0) does not change sign on [0.05, 1]", 0.0, 0.0);
    }
    // Decreasing in mu: flip the sign for the increasing-function root finder.
    auto g = [&](double mu) { return -f(mu); };
    const double rel = std::max(tol, 4.0 * std::numeric_limits<double>::epsilon());
    return detail::illinois_root<double>(g, lo, -f_lo, hi, -f_hi, rel);
}

struct CurvePoint {
    CriticalPoint point;
    std::optional<std::string> error;
};

/// Z_c^ub on `steps` uniformly spaced theta_12 values in [theta_min, theta_max],
/// ordered by theta. Failures are recorded per point.
inline std::vector<CurvePoint> critical_curve(double theta_min, double theta_max, int steps, double tol = 1e-13,
                                              unsigned threads = default_thread_count()) {
    constexpr double half_pi = std::numbers::pi / 2.0;
    if (!(theta_min >= half_pi * (1.0 - 4.0 * std::numeric_limits<double>::epsilon())) || !(theta_min < theta_max) ||
        !(theta_max < std::numbers::pi)) {
        throw DomainError("critical curve needs pi/2 <= theta_min < theta_max < pi");
    }
    if (steps < 2) throw DomainError("critical curve needs at least 2 steps");
    std::vector<CurvePoint> curve(static_cast<std::size_t>(steps));
    parallel_for(
        curve.size(),
        [&](std::size_t i) {
            const double theta = theta_min + (theta_max - theta_min) * static_cast<double>(i) / (steps - 1);
            CurvePoint& out = curve[i];
            out.point.theta12 = theta;
            out.point.quad_tol = tol;
            try {
                out.point.mass_ratio = mass_ratio_from_theta12(theta);
                out.point = z_critical_ub_theta(theta, tol);
            } catch (const std::exception& e) {
                out.error = e.what();
            }
        },
        threads);
    return curve;
}

} // namespace skeleton
