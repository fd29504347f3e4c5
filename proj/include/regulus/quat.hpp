#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <string>

#include "regulus/errors.hpp"

namespace regulus {

using Vec4 = std::array<double, 4>;

// Shortest decimal representation that parses back to the same double.
inline std::string format_double(double x) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

// Quaternion over the basis {e1, e2, e3, e4} with e1 the identity and
//   e2^2 = e3^2 = e4^2 = -e1,   e2 e3 = e4,  e3 e4 = e2,  e4 e2 = e3
// (anticommuted otherwise). Components are stored in basis order
// (c1, c2, c3, c4); c1 is the real part. Values are immutable in spirit:
// every operation returns a fresh quaternion. The algebra admits only
// finite components; `is_finite` is checked wherever values cross an API
// boundary (evaluation results, report records).
struct Quaternion {
    std::array<double, 4> c{0.0, 0.0, 0.0, 0.0};

    constexpr Quaternion() = default;
    constexpr Quaternion(double c1, double c2, double c3, double c4) : c{c1, c2, c3, c4} {}

    // Real scalars embed on the identity axis.
    static constexpr Quaternion real(double x) { return Quaternion(x, 0.0, 0.0, 0.0); }

    // 1-based basis element e_i.
    static constexpr Quaternion basis(int i) {
        Quaternion q;
        q.c[static_cast<std::size_t>(i - 1)] = 1.0;
        return q;
    }

    static Quaternion from_vec(const Vec4& v) { return Quaternion(v[0], v[1], v[2], v[3]); }
    constexpr const Vec4& to_vec() const { return c; }

    constexpr double c1() const { return c[0]; }
    constexpr double c2() const { return c[1]; }
    constexpr double c3() const { return c[2]; }
    constexpr double c4() const { return c[3]; }

    friend constexpr bool operator==(const Quaternion& a, const Quaternion& b) = default;
};

inline constexpr Quaternion kOne = Quaternion::basis(1);

constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]};
}

constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2], a.c[3] - b.c[3]};
}

constexpr Quaternion operator-(const Quaternion& a) {
    return {-a.c[0], -a.c[1], -a.c[2], -a.c[3]};
}

constexpr Quaternion operator*(double s, const Quaternion& a) {
    return {s * a.c[0], s * a.c[1], s * a.c[2], s * a.c[3]};
}

constexpr Quaternion operator*(const Quaternion& a, double s) { return s * a; }

// Bilinear product expanded from the basis table above.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {
        a.c[0] * b.c[0] - a.c[1] * b.c[1] - a.c[2] * b.c[2] - a.c[3] * b.c[3],
        a.c[0] * b.c[1] + a.c[1] * b.c[0] + a.c[2] * b.c[3] - a.c[3] * b.c[2],
        a.c[0] * b.c[2] - a.c[1] * b.c[3] + a.c[2] * b.c[0] + a.c[3] * b.c[1],
        a.c[0] * b.c[3] + a.c[1] * b.c[2] - a.c[2] * b.c[1] + a.c[3] * b.c[0],
    };
}

constexpr Quaternion conj(const Quaternion& a) {
    return {a.c[0], -a.c[1], -a.c[2], -a.c[3]};
}

constexpr double norm_sq(const Quaternion& a) {
    return a.c[0] * a.c[0] + a.c[1] * a.c[1] + a.c[2] * a.c[2] + a.c[3] * a.c[3];
}

inline double norm(const Quaternion& a) { return std::sqrt(norm_sq(a)); }

inline Quaternion inv(const Quaternion& a) {
    const double n = norm_sq(a);
    if (n == 0.0)
        throw DomainError("zero quaternion has no inverse");
    return (1.0 / n) * conj(a);
}

// Imaginary part q2 e2 + q3 e3 + q4 e4.
constexpr Quaternion imag(const Quaternion& a) { return {0.0, a.c[1], a.c[2], a.c[3]}; }

// q2^2 + q3^2 + q4^2: squared distance from the real axis.
constexpr double rho_of(const Vec4& v) { return v[1] * v[1] + v[2] * v[2] + v[3] * v[3]; }
constexpr double rho_of(const Quaternion& a) { return rho_of(a.c); }

inline bool is_finite(const Quaternion& a) {
    return std::isfinite(a.c[0]) && std::isfinite(a.c[1]) && std::isfinite(a.c[2]) &&
           std::isfinite(a.c[3]);
}

constexpr double max_abs(const Quaternion& a) {
    double m = 0.0;
    for (double x : a.c) {
        const double ax = x < 0 ? -x : x;
        if (ax > m) m = ax;
    }
    return m;
}

constexpr double max_abs_diff(const Quaternion& a, const Quaternion& b) {
    return max_abs(a - b);
}

// Report form "a + b i + c j + d k" with i, j, k standing for e2, e3, e4.
// All four terms are always printed; the matching parser lives with the
// expression parser.
inline std::string to_string(const Quaternion& q) {
    std::string out = format_double(q.c[0]);
    const char* units[3] = {"i", "j", "k"};
    for (int i = 0; i < 3; ++i) {
        const double v = q.c[static_cast<std::size_t>(i) + 1];
        if (std::signbit(v)) {
            out += " - " + format_double(-v);
        } else {
            out += " + " + format_double(v);
        }
        out += " ";
        out += units[i];
    }
    return out;
}

}  // namespace regulus
