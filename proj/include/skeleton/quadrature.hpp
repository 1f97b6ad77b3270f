#pragma once

// Quadrature on the half-line (0, inf).
//
// Fixed rules: Gauss-Legendre on (0, 1) pushed forward by
//   algebraic  p = L t / (1 - t)
//   tangent    p = L tan(pi t / 2)
// with the Jacobian folded into the weights. Neither map puts a node at 0 or inf.
//
// Adaptive: globally adaptive Gauss-Kronrod 10/21 on the algebraically mapped
// variable, QUADPACK-style error estimates.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <numbers>
#include <queue>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "skeleton/error.hpp"
#include "skeleton/numeric.hpp"

namespace skeleton {

enum class MapKind { algebraic, tangent };

inline std::string to_string(MapKind kind) { return kind == MapKind::algebraic ? "algebraic" : "tangent"; }

struct QuadratureConfig {
    int n_points = 200;
    double map_scale = 2.0;
    MapKind map_kind = MapKind::algebraic;
    double adaptive_tol = 1e-13;
};

inline void validate(const QuadratureConfig& config) {
    if (config.n_points < 2) throw DomainError("quadrature needs at least 2 points");
    if (!(config.map_scale > 0.0) || !std::isfinite(config.map_scale)) {
        throw DomainError("quadrature map scale must be positive and finite");
    }
    if (!(config.adaptive_tol > 0.0)) throw DomainError("adaptive tolerance must be positive");
}

template <class Real>
struct GaussRule {
    std::vector<Real> nodes;    ///< ascending, in (-1, 1)
    std::vector<Real> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1]. Newton iteration on the three-term
/// recurrence; for double-double the double roots are refined in Real.
template <class Real = double>
GaussRule<Real> gauss_legendre(int n) {
    if (n < 1) throw DomainError("Gauss-Legendre order must be positive");
    GaussRule<Real> rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));

    auto legendre = [n](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        T p1(1.0), p0(0.0);
        for (int j = 1; j <= n; ++j) {
            T p2 = p0;
            p0 = p1;
            p1 = (T(2.0 * j - 1.0) * x * p0 - T(j - 1.0) * p2) / T(static_cast<double>(j));
        }
        // p1 = P_n(x), p0 = P_{n-1}(x); derivative from the standard identity.
        T dp = T(static_cast<double>(n)) * (x * p1 - p0) / (x * x - T(1.0));
        return std::pair<T, T>{p1, dp};
    };

    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            const auto [p, dp] = legendre(z);
            const double dz = p / dp;
            z -= dz;
            if (std::abs(dz) <= 1e-16) break;
        }
        Real x(z);
        Real dp{};
        for (int iter = 0; iter < (std::is_same_v<Real, double> ? 1 : 3); ++iter) {
            auto [p, d] = legendre(x);
            x = x - p / d;
            dp = d;
        }
        {
            auto [p, d] = legendre(x);
            dp = d;
        }
        const Real w = Real(2.0) / ((Real(1.0) - x * x) * dp * dp);
        const std::size_t lo = static_cast<std::size_t>(i);
        const std::size_t hi = static_cast<std::size_t>(n - 1 - i);
        rule.nodes[lo] = -x;
        rule.nodes[hi] = x;
        rule.weights[lo] = w;
        rule.weights[hi] = w;
    }
    if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = Real(0.0);
    return rule;
}

/// Quadrature nodes and weights on (0, inf): sum_i w_i f(p_i) ~ int_0^inf f(p) dp.
struct HalfLineGrid {
    std::vector<double> nodes;
    std::vector<double> weights;
    double map_scale = 2.0;
    MapKind map_kind = MapKind::algebraic;

    std::size_t size() const { return nodes.size(); }

    template <class F>
    double integrate(F&& f) const {
        double sum = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
        return sum;
    }
};

inline HalfLineGrid build_grid(const QuadratureConfig& config) {
    validate(config);
    const auto rule = gauss_legendre<double>(config.n_points);
    HalfLineGrid grid;
    grid.map_scale = config.map_scale;
    grid.map_kind = config.map_kind;
    grid.nodes.reserve(rule.nodes.size());
    grid.weights.reserve(rule.nodes.size());
    const double scale = config.map_scale;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
        const double t = 0.5 * (rule.nodes[j] + 1.0);
        const double wt = 0.5 * rule.weights[j];
        if (config.map_kind == MapKind::algebraic) {
            const double u = 1.0 - t;
            grid.nodes.push_back(scale * t / u);
            grid.weights.push_back(wt * scale / (u * u));
        } else {
            const double arg = 0.5 * std::numbers::pi * t;
            const double c = std::cos(arg);
            grid.nodes.push_back(scale * std::tan(arg));
            grid.weights.push_back(wt * scale * 0.5 * std::numbers::pi / (c * c));
        }
    }
    return grid;
}

struct IntegrationResult {
    double value = 0.0;
    double error = 0.0;
    int intervals = 0;
    int evaluations = 0;
};

struct AdaptiveOptions {
    double map_scale = 1.0;       ///< scale L of the algebraic map for (0, inf)
    int max_subdivisions = 4000;
};

namespace detail {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
inline constexpr double kXgk[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
inline constexpr double kWg[5] = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};
inline constexpr double kWgk[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

struct Segment {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

template <class F>
Segment gauss_kronrod_21(F& f, double a, double b) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double fv1[10], fv2[10];
    const double fc = f(centre);
    double resg = 0.0;
    double resk = kWgk[10] * fc;
    double resabs = std::abs(resk);
    for (int j = 0; j < 5; ++j) {
        const int jtw = 2 * j + 1;
        const double dx = half * kXgk[jtw];
        const double f1 = f(centre - dx);
        const double f2 = f(centre + dx);
        fv1[jtw] = f1;
        fv2[jtw] = f2;
        resg += kWg[j] * (f1 + f2);
        resk += kWgk[jtw] * (f1 + f2);
        resabs += kWgk[jtw] * (std::abs(f1) + std::abs(f2));
    }
    for (int j = 0; j < 5; ++j) {
        const int jtwm1 = 2 * j;
        const double dx = half * kXgk[jtwm1];
        const double f1 = f(centre - dx);
        const double f2 = f(centre + dx);
        fv1[jtwm1] = f1;
        fv2[jtwm1] = f2;
        resk += kWgk[jtwm1] * (f1 + f2);
        resabs += kWgk[jtwm1] * (std::abs(f1) + std::abs(f2));
    }
    const double reskh = 0.5 * resk;
    double resasc = kWgk[10] * std::abs(fc - reskh);
    for (int j = 0; j < 10; ++j) {
        resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
    }
    const double value = resk * half;
    resabs *= std::abs(half);
    resasc *= std::abs(half);
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) err = std::max(50.0 * eps * resabs, err);
    return Segment{a, b, value, err};
}

} // namespace detail

/// Globally adaptive integration of f over [a, b] to absolute tolerance tol.
template <class F>
IntegrationResult adaptive_integrate_interval(F&& f, double a, double b, double tol,
                                              int max_subdivisions = 4000) {
    if (!(tol > 0.0)) throw DomainError("adaptive tolerance must be positive");
    constexpr double eps = std::numeric_limits<double>::epsilon();
    std::priority_queue<detail::Segment> heap;
    auto first = detail::gauss_kronrod_21(f, a, b);
    double total = first.value;
    double total_err = first.error;
    heap.push(first);
    int evaluations = 21;
    while (total_err > tol) {
        if (static_cast<int>(heap.size()) >= max_subdivisions) {
            throw ConvergenceError("adaptive integration: subdivision limit reached (estimate " +
                                       std::to_string(total) + ", error " + std::to_string(total_err) + ")",
                                   total, total_err);
        }
        const auto worst = heap.top();
        // Stop refining once segments are at rounding level; report the honest estimate.
        if (worst.error <= 50.0 * eps * std::abs(worst.value) + std::numeric_limits<double>::min() ||
            std::abs(worst.b - worst.a) <= 1e3 * eps * std::max(std::abs(worst.a), std::abs(worst.b))) {
            break;
        }
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        auto left = detail::gauss_kronrod_21(f, worst.a, mid);
        auto right = detail::gauss_kronrod_21(f, mid, worst.b);
        evaluations += 42;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    // Re-sum to remove drift from the running updates.
    double value = 0.0;
    double error = 0.0;
    const int intervals = static_cast<int>(heap.size());
    while (!heap.empty()) {
        value += heap.top().value;
        error += heap.top().error;
        heap.pop();
    }
    if (!std::isfinite(value)) throw ConvergenceError("adaptive integration: non-finite integrand", value, error);
    return IntegrationResult{value, error, intervals, evaluations};
}

/// Adaptive integration over (0, inf) through p = L t / (1 - t).
/// Requires algebraic decay of at least p^-2 for the mapped integrand to stay bounded.
template <class F>
IntegrationResult adaptive_integrate(F&& f, double tol, const AdaptiveOptions& options = {}) {
    const double scale = options.map_scale;
    if (!(scale > 0.0)) throw DomainError("adaptive map scale must be positive");
    auto mapped = [&f, scale](double t) {
        const double u = 1.0 - t;
        if (u <= 0.0) return 0.0;
        return f(scale * t / u) * scale / (u * u);
    };
    return adaptive_integrate_interval(mapped, 0.0, 1.0, tol, options.max_subdivisions);
}

/// Composite Gauss-Legendre on the algebraically mapped half-line, in any
/// scalar type. Used for the extended-precision route where the integrand is
/// smooth in the mapped variable and panel refinement converges geometrically.
template <class Real, class F>
Real panel_integrate_half_line(F&& f, int panels, const GaussRule<Real>& rule, double map_scale = 1.0) {
    const Real scale(map_scale);
    const Real width = Real(1.0) / Real(static_cast<double>(panels));
    Real sum(0.0);
    for (int k = 0; k < panels; ++k) {
        const Real a = width * Real(static_cast<double>(k));
        Real panel(0.0);
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
            const Real t = a + width * (rule.nodes[j] + Real(1.0)) / Real(2.0);
            const Real u = Real(1.0) - t;
            panel += rule.weights[j] * f(scale * t / u) * scale / (u * u);
        }
        sum += panel * width / Real(2.0);
    }
    return sum;
}

} // namespace skeleton
