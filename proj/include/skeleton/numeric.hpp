#pragma once

#include <cmath>
#include <concepts>
#include <numbers>
#include <type_traits>

#include "skeleton/double_double.hpp"

namespace skeleton {

/// Scalar types the kernel and critical-charge templates are instantiated with.
template <class Real>
concept RealScalar = requires(Real a, Real b) {
    { a + b } -> std::convertible_to<Real>;
    { a * b } -> std::convertible_to<Real>;
    { a / b } -> std::convertible_to<Real>;
    { a < b } -> std::convertible_to<bool>;
};

template <class Real>
inline Real pi_v() {
    if constexpr (std::is_same_v<Real, DoubleDouble>) {
        return DoubleDouble::pi();
    } else {
        return std::numbers::pi_v<Real>;
    }
}

template <class Real>
inline Real real_sqrt(const Real& x) {
    using std::sqrt;
    return sqrt(x);
}

template <class Real>
inline Real real_abs(const Real& x) {
    using std::abs;
    return abs(x);
}

template <class Real>
inline double to_double(const Real& x) {
    return static_cast<double>(x);
}

/// 1/sqrt(2): the bottom of the essential spectrum sits at E = -k^2 with k = 1/sqrt(2).
template <class Real>
inline Real threshold_k() {
    return Real(1.0) / real_sqrt(Real(2.0));
}

} // namespace skeleton
