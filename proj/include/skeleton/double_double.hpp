#pragma once

// Unevaluated-sum double-double arithmetic (about 32 significant digits).
// Only the operations needed by the extended-precision critical-charge path
// are provided: + - * /, sqrt, comparisons, decimal parse and print.

#include <cmath>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace skeleton {

struct DoubleDouble {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DoubleDouble() = default;
    constexpr DoubleDouble(double x) : hi(x), lo(0.0) {}  // NOLINT: implicit by design of a numeric type
    constexpr DoubleDouble(double h, double l) : hi(h), lo(l) {}

    explicit operator double() const { return hi + lo; }

    static DoubleDouble pi() { return {3.141592653589793116, 1.2246467991473532072e-16}; }
};

namespace dd_detail {

inline DoubleDouble two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    const double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline DoubleDouble quick_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

inline DoubleDouble two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

} // namespace dd_detail

inline DoubleDouble operator-(const DoubleDouble& a) { return {-a.hi, -a.lo}; }

inline DoubleDouble operator+(const DoubleDouble& a, const DoubleDouble& b) {
    DoubleDouble s = dd_detail::two_sum(a.hi, b.hi);
    DoubleDouble t = dd_detail::two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = dd_detail::quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return dd_detail::quick_two_sum(s.hi, s.lo);
}

inline DoubleDouble operator-(const DoubleDouble& a, const DoubleDouble& b) { return a + (-b); }

inline DoubleDouble operator*(const DoubleDouble& a, const DoubleDouble& b) {
    DoubleDouble p = dd_detail::two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return dd_detail::quick_two_sum(p.hi, p.lo);
}

inline DoubleDouble operator/(const DoubleDouble& a, const DoubleDouble& b) {
    // Long division with two correction steps.
    const double q1 = a.hi / b.hi;
    DoubleDouble r = a - b * DoubleDouble(q1);
    const double q2 = r.hi / b.hi;
    r = r - b * DoubleDouble(q2);
    const double q3 = r.hi / b.hi;
    DoubleDouble q = dd_detail::quick_two_sum(q1, q2);
    return q + DoubleDouble(q3);
}

inline DoubleDouble& operator+=(DoubleDouble& a, const DoubleDouble& b) { return a = a + b; }
inline DoubleDouble& operator-=(DoubleDouble& a, const DoubleDouble& b) { return a = a - b; }
inline DoubleDouble& operator*=(DoubleDouble& a, const DoubleDouble& b) { return a = a * b; }
inline DoubleDouble& operator/=(DoubleDouble& a, const DoubleDouble& b) { return a = a / b; }

inline bool operator==(const DoubleDouble& a, const DoubleDouble& b) { return a.hi == b.hi && a.lo == b.lo; }
inline std::partial_ordering operator<=>(const DoubleDouble& a, const DoubleDouble& b) {
    if (auto c = a.hi <=> b.hi; c != 0) return c;
    return a.lo <=> b.lo;
}

inline DoubleDouble abs(const DoubleDouble& a) { return a.hi < 0.0 ? -a : a; }

inline DoubleDouble sqrt(const DoubleDouble& a) {
    if (a.hi < 0.0) throw std::domain_error("sqrt of negative double-double");
    if (a.hi == 0.0) return {};
    // One Newton step on the double approximation doubles the digits.
    const double x = std::sqrt(a.hi);
    const DoubleDouble xx = dd_detail::two_prod(x, x);
    const DoubleDouble corr = (a - xx) / DoubleDouble(2.0 * x);
    return DoubleDouble(x) + corr;
}

inline DoubleDouble floor(const DoubleDouble& a) {
    const double h = std::floor(a.hi);
    if (h != a.hi) return {h, 0.0};
    return dd_detail::quick_two_sum(h, std::floor(a.lo));
}

inline bool isfinite(const DoubleDouble& a) { return std::isfinite(a.hi) && std::isfinite(a.lo); }

/// Parses a plain decimal literal such as "0.37490347747000593278".
inline DoubleDouble parse_double_double(std::string_view text) {
    DoubleDouble value;
    bool negative = false;
    bool seen_point = false;
    bool seen_digit = false;
    int fraction_digits = 0;
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '.') {
            if (seen_point) throw std::invalid_argument("malformed decimal: " + std::string(text));
            seen_point = true;
        } else if (c >= '0' && c <= '9') {
            value = value * DoubleDouble(10.0) + DoubleDouble(static_cast<double>(c - '0'));
            seen_digit = true;
            if (seen_point) ++fraction_digits;
        } else {
            throw std::invalid_argument("malformed decimal: " + std::string(text));
        }
    }
    if (!seen_digit) throw std::invalid_argument("malformed decimal: " + std::string(text));
    DoubleDouble scale(1.0);
    for (int k = 0; k < fraction_digits; ++k) scale *= DoubleDouble(10.0);
    value = value / scale;
    return negative ? -value : value;
}

/// Fixed-point decimal rendering with `digits` digits after the point.
inline std::string to_string(DoubleDouble x, int digits) {
    std::string out;
    if (x.hi < 0.0) {
        out.push_back('-');
        x = -x;
    }
    // Round at the last requested digit.
    DoubleDouble half(0.5);
    for (int k = 0; k < digits; ++k) half /= DoubleDouble(10.0);
    x += half;
    DoubleDouble int_part = floor(x);
    out += std::to_string(static_cast<std::int64_t>(static_cast<double>(int_part)));
    x -= int_part;
    if (digits > 0) out.push_back('.');
    for (int k = 0; k < digits; ++k) {
        x *= DoubleDouble(10.0);
        DoubleDouble d = floor(x);
        int digit = static_cast<int>(static_cast<double>(d));
        if (digit < 0) digit = 0;
        if (digit > 9) digit = 9;
        out.push_back(static_cast<char>('0' + digit));
        x -= DoubleDouble(static_cast<double>(digit));
    }
    return out;
}

} // namespace skeleton
