#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace grs {

/// Point/vector of R^4_1 in the fixed orthonormal basis; e4 is the timelike direction.
struct Vec4 {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;
    double x4 = 0.0;

    friend constexpr Vec4 operator+(const Vec4& a, const Vec4& b) {
        return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3, a.x4 + b.x4};
    }
    friend constexpr Vec4 operator-(const Vec4& a, const Vec4& b) {
        return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3, a.x4 - b.x4};
    }
    friend constexpr Vec4 operator-(const Vec4& a) { return {-a.x1, -a.x2, -a.x3, -a.x4}; }
    friend constexpr Vec4 operator*(double s, const Vec4& a) {
        return {s * a.x1, s * a.x2, s * a.x3, s * a.x4};
    }
    friend constexpr Vec4 operator*(const Vec4& a, double s) { return s * a; }
    friend constexpr Vec4 operator/(const Vec4& a, double s) { return (1.0 / s) * a; }
};

/// Indefinite inner product of signature (+,+,+,-).
constexpr double minkowski_inner(const Vec4& a, const Vec4& b) {
    return a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3 - a.x4 * b.x4;
}

inline bool is_finite(const Vec4& v) {
    return std::isfinite(v.x1) && std::isfinite(v.x2) && std::isfinite(v.x3) && std::isfinite(v.x4);
}

enum class CausalCharacter { Spacelike, Timelike, Lightlike };

/// Classification by the sign of <v,v>; |<v,v>| <= tol counts as lightlike.
inline CausalCharacter causal_character(const Vec4& v, double tol = 1e-12) {
    const double q = minkowski_inner(v, v);
    if (std::abs(q) <= tol) return CausalCharacter::Lightlike;
    return q > 0.0 ? CausalCharacter::Spacelike : CausalCharacter::Timelike;
}

/// Dense symmetric matrix of pairwise inner products.
class GramMatrix {
public:
    explicit GramMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

    std::size_t size() const noexcept { return n_; }
    double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

private:
    std::size_t n_;
    std::vector<double> a_;
};

inline GramMatrix gram_matrix(std::span<const Vec4> vs) {
    GramMatrix g(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < vs.size(); ++j)
            g(i, j) = minkowski_inner(vs[i], vs[j]);
    return g;
}

} // namespace grs
