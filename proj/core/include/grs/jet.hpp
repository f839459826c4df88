#pragma once

#include <cmath>
#include <cstdint>

#include "grs/errors.hpp"

namespace grs {

/// Second-order forward-mode jet: value plus first and second u-derivative.
///
/// Arithmetic follows the truncated Taylor rules; composition with a scalar
/// function phi uses
///   d1 -> phi'(v) d1,   d2 -> phi''(v) d1^2 + phi'(v) d2.
struct Jet2 {
    double val = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;

    static constexpr Jet2 variable(double u) { return {u, 1.0, 0.0}; }
    static constexpr Jet2 constant(double c) { return {c, 0.0, 0.0}; }

    friend constexpr Jet2 operator+(const Jet2& a, const Jet2& b) {
        return {a.val + b.val, a.d1 + b.d1, a.d2 + b.d2};
    }
    friend constexpr Jet2 operator-(const Jet2& a, const Jet2& b) {
        return {a.val - b.val, a.d1 - b.d1, a.d2 - b.d2};
    }
    friend constexpr Jet2 operator-(const Jet2& a) { return {-a.val, -a.d1, -a.d2}; }

    // (ab)'' = a''b + 2a'b' + ab''
    friend constexpr Jet2 operator*(const Jet2& a, const Jet2& b) {
        return {a.val * b.val,
                a.d1 * b.val + a.val * b.d1,
                a.d2 * b.val + 2.0 * a.d1 * b.d1 + a.val * b.d2};
    }

    // from a = qb: a'' = q''b + 2q'b' + qb''
    friend Jet2 operator/(const Jet2& a, const Jet2& b) {
        if (b.val == 0.0) throw DomainError("division by zero");
        const double q = a.val / b.val;
        const double q1 = (a.d1 - q * b.d1) / b.val;
        const double q2 = (a.d2 - 2.0 * q1 * b.d1 - q * b.d2) / b.val;
        return {q, q1, q2};
    }

    friend constexpr Jet2 operator+(const Jet2& a, double s) { return {a.val + s, a.d1, a.d2}; }
    friend constexpr Jet2 operator+(double s, const Jet2& a) { return a + s; }
    friend constexpr Jet2 operator-(const Jet2& a, double s) { return {a.val - s, a.d1, a.d2}; }
    friend constexpr Jet2 operator-(double s, const Jet2& a) { return {s - a.val, -a.d1, -a.d2}; }
    friend constexpr Jet2 operator*(const Jet2& a, double s) { return {a.val * s, a.d1 * s, a.d2 * s}; }
    friend constexpr Jet2 operator*(double s, const Jet2& a) { return a * s; }
    friend constexpr Jet2 operator/(const Jet2& a, double s) { return a * (1.0 / s); }
    friend Jet2 operator/(double s, const Jet2& a) { return Jet2::constant(s) / a; }
};

inline bool is_finite(const Jet2& j) {
    return std::isfinite(j.val) && std::isfinite(j.d1) && std::isfinite(j.d2);
}

namespace detail {
// phi(x) with phi', phi'' evaluated at x.val
inline constexpr Jet2 compose(const Jet2& x, double f0, double f1, double f2) {
    return {f0, f1 * x.d1, f2 * x.d1 * x.d1 + f1 * x.d2};
}
} // namespace detail

inline Jet2 sin(const Jet2& x) {
    const double s = std::sin(x.val), c = std::cos(x.val);
    return detail::compose(x, s, c, -s);
}

inline Jet2 cos(const Jet2& x) {
    const double s = std::sin(x.val), c = std::cos(x.val);
    return detail::compose(x, c, -s, -c);
}

inline Jet2 tan(const Jet2& x) {
    const double t = std::tan(x.val);
    const double sec2 = 1.0 + t * t;
    return detail::compose(x, t, sec2, 2.0 * sec2 * t);
}

inline Jet2 asin(const Jet2& x) {
    if (std::abs(x.val) >= 1.0) throw DomainError("asin argument outside (-1, 1)");
    const double w = 1.0 - x.val * x.val;
    const double r = 1.0 / std::sqrt(w);
    return detail::compose(x, std::asin(x.val), r, x.val * r / w);
}

inline Jet2 atan(const Jet2& x) {
    const double w = 1.0 + x.val * x.val;
    return detail::compose(x, std::atan(x.val), 1.0 / w, -2.0 * x.val / (w * w));
}

inline Jet2 sinh(const Jet2& x) {
    const double s = std::sinh(x.val), c = std::cosh(x.val);
    return detail::compose(x, s, c, s);
}

inline Jet2 cosh(const Jet2& x) {
    const double s = std::sinh(x.val), c = std::cosh(x.val);
    return detail::compose(x, c, s, c);
}

inline Jet2 ln(const Jet2& x) {
    if (x.val <= 0.0) throw DomainError("ln argument not positive");
    const double r = 1.0 / x.val;
    return detail::compose(x, std::log(x.val), r, -r * r);
}

inline Jet2 exp(const Jet2& x) {
    const double e = std::exp(x.val);
    return detail::compose(x, e, e, e);
}

inline Jet2 sqrt(const Jet2& x) {
    if (x.val <= 0.0) throw DomainError("sqrt argument not positive");
    const double r = std::sqrt(x.val);
    return detail::compose(x, r, 0.5 / r, -0.25 / (r * x.val));
}

// sgn(0) taken as +1; the kink itself is not flagged
inline Jet2 abs(const Jet2& x) {
    const double s = std::copysign(1.0, x.val);
    return {std::abs(x.val), s * x.d1, s * x.d2};
}

/// x^n by the power rule; n may be negative, x may have any sign.
inline Jet2 powi(const Jet2& x, std::int64_t n) {
    if (n == 0) return Jet2::constant(1.0);
    if (x.val == 0.0 && n < 0) throw DomainError("zero base with negative exponent");
    const double p2 = std::pow(x.val, static_cast<double>(n - 2));
    const double p1 = p2 * x.val;
    const double p0 = p1 * x.val;
    const double dn = static_cast<double>(n);
    return detail::compose(x, p0, dn * p1, dn * (dn - 1.0) * p2);
}

/// x^r for real r; requires x > 0.
inline Jet2 pow(const Jet2& x, double r) {
    if (x.val <= 0.0) throw DomainError("pow base not positive for real exponent");
    const double p2 = std::pow(x.val, r - 2.0);
    const double p1 = p2 * x.val;
    const double p0 = p1 * x.val;
    return detail::compose(x, p0, r * p1, r * (r - 1.0) * p2);
}

/// General x^y via exp(y ln x); constant integral exponents fall back to powi.
inline Jet2 pow(const Jet2& x, const Jet2& y) {
    if (y.d1 == 0.0 && y.d2 == 0.0) {
        const double n = y.val;
        if (n == std::floor(n) && std::abs(n) < 1e15) return powi(x, static_cast<std::int64_t>(n));
        return pow(x, n);
    }
    return exp(y * ln(x));
}

} // namespace grs
