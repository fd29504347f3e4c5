#pragma once

#include <array>
#include <cmath>
#include <string>

#include "regulus/errors.hpp"
#include "regulus/quat.hpp"

namespace regulus {

// First-order forward-mode number over R^4: a value together with its four
// partial derivatives at the evaluation point. Arithmetic propagates exact
// product/chain rules (up to rounding), which is what lets the residual
// checks run without truncation error. First order only; nothing here needs
// second derivatives.
struct Jet4 {
    double val = 0.0;
    std::array<double, 4> d{0.0, 0.0, 0.0, 0.0};

    constexpr Jet4() = default;
    // Conversions lift constants: zero derivative.
    constexpr Jet4(double v) : val(v) {}
    constexpr Jet4(double v, const std::array<double, 4>& grad) : val(v), d(grad) {}

    static constexpr Jet4 constant(double c) { return Jet4(c); }

    // Lift of the i-th coordinate (1-based) at `point`: unit derivative
    // along its own axis.
    static Jet4 coord(int i, const Vec4& point) {
        if (i < 1 || i > 4)
            throw UsageError("coordinate index must be in 1..4, got " + std::to_string(i));
        Jet4 j(point[static_cast<std::size_t>(i - 1)]);
        j.d[static_cast<std::size_t>(i - 1)] = 1.0;
        return j;
    }
};

using JetVec4 = std::array<Jet4, 4>;

// Lift all four coordinates at once.
inline JetVec4 jet_point(const Vec4& p) {
    return {Jet4::coord(1, p), Jet4::coord(2, p), Jet4::coord(3, p), Jet4::coord(4, p)};
}

constexpr Jet4 operator+(const Jet4& a, const Jet4& b) {
    return {a.val + b.val, {a.d[0] + b.d[0], a.d[1] + b.d[1], a.d[2] + b.d[2], a.d[3] + b.d[3]}};
}

constexpr Jet4 operator-(const Jet4& a, const Jet4& b) {
    return {a.val - b.val, {a.d[0] - b.d[0], a.d[1] - b.d[1], a.d[2] - b.d[2], a.d[3] - b.d[3]}};
}

constexpr Jet4 operator-(const Jet4& a) {
    return {-a.val, {-a.d[0], -a.d[1], -a.d[2], -a.d[3]}};
}

constexpr Jet4 operator*(const Jet4& a, const Jet4& b) {
    return {a.val * b.val,
            {a.val * b.d[0] + a.d[0] * b.val, a.val * b.d[1] + a.d[1] * b.val,
             a.val * b.d[2] + a.d[2] * b.val, a.val * b.d[3] + a.d[3] * b.val}};
}

inline Jet4 operator/(const Jet4& a, const Jet4& b) {
    if (b.val == 0.0)
        throw DomainError("jet division by zero (numerator value " + format_double(a.val) + ")");
    const double inv_b = 1.0 / b.val;
    const double v = a.val * inv_b;
    return {v,
            {(a.d[0] - v * b.d[0]) * inv_b, (a.d[1] - v * b.d[1]) * inv_b,
             (a.d[2] - v * b.d[2]) * inv_b, (a.d[3] - v * b.d[3]) * inv_b}};
}

constexpr Jet4 operator*(double s, const Jet4& a) {
    return {s * a.val, {s * a.d[0], s * a.d[1], s * a.d[2], s * a.d[3]}};
}
constexpr Jet4 operator*(const Jet4& a, double s) { return s * a; }
constexpr Jet4 operator+(double s, const Jet4& a) { return Jet4(s) + a; }
constexpr Jet4 operator+(const Jet4& a, double s) { return a + Jet4(s); }
constexpr Jet4 operator-(double s, const Jet4& a) { return Jet4(s) - a; }
constexpr Jet4 operator-(const Jet4& a, double s) { return a - Jet4(s); }
inline Jet4 operator/(const Jet4& a, double s) { return a / Jet4(s); }
inline Jet4 operator/(double s, const Jet4& a) { return Jet4(s) / a; }

namespace detail {
// Apply value f(x) and scalar derivative f'(x) through the chain rule.
constexpr Jet4 chain(const Jet4& a, double value, double deriv) {
    return {value, {deriv * a.d[0], deriv * a.d[1], deriv * a.d[2], deriv * a.d[3]}};
}
}  // namespace detail

inline Jet4 exp(const Jet4& a) {
    const double e = std::exp(a.val);
    return detail::chain(a, e, e);
}

inline Jet4 sin(const Jet4& a) { return detail::chain(a, std::sin(a.val), std::cos(a.val)); }

inline Jet4 cos(const Jet4& a) { return detail::chain(a, std::cos(a.val), -std::sin(a.val)); }

inline Jet4 sqrt(const Jet4& a) {
    if (!(a.val > 0.0))
        throw DomainError("jet sqrt requires a positive value, got " + format_double(a.val));
    const double r = std::sqrt(a.val);
    return detail::chain(a, r, 0.5 / r);
}

// sin(x)/x extended through x = 0. Below the switch point the series
// 1 - x^2/6 + x^4/120 (derivative -x/3 + x^3/30) keeps both value and
// derivative finite and accurate to well under one ulp.
inline constexpr double kSincSeriesThreshold = 1e-4;

inline double sinc_like(double x) {
    if (x < 0.0)
        throw DomainError("sinc_like requires x >= 0, got " + format_double(x));
    if (x < kSincSeriesThreshold)
        return 1.0 - x * x / 6.0 + x * x * x * x / 120.0;
    return std::sin(x) / x;
}

inline Jet4 sinc_like(const Jet4& a) {
    const double x = a.val;
    if (x < 0.0)
        throw DomainError("sinc_like requires x >= 0, got " + format_double(x));
    if (x < kSincSeriesThreshold) {
        const double value = 1.0 - x * x / 6.0 + x * x * x * x / 120.0;
        const double deriv = -x / 3.0 + x * x * x / 30.0;
        return detail::chain(a, value, deriv);
    }
    const double s = std::sin(x);
    const double c = std::cos(x);
    return detail::chain(a, s / x, (c * x - s) / (x * x));
}

inline bool is_finite(const Jet4& a) {
    return std::isfinite(a.val) && std::isfinite(a.d[0]) && std::isfinite(a.d[1]) &&
           std::isfinite(a.d[2]) && std::isfinite(a.d[3]);
}

// Scalar value of either evaluation carrier; lets generic code guard
// domains without knowing whether it is running on doubles or jets.
constexpr double scalar_value(double x) { return x; }
constexpr double scalar_value(const Jet4& x) { return x.val; }

}  // namespace regulus
