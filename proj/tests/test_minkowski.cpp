#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "grs/meridian.hpp"
#include "grs/minkowski.hpp"
#include "grs/surface.hpp"

using namespace grs;

namespace {
Vec4 random_vec(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(-5.0, 5.0);
    return {d(rng), d(rng), d(rng), d(rng)};
}
} // namespace

TEST_CASE("minkowski inner product on basis and simple vectors") {
    CHECK(minkowski_inner({1, 0, 0, 0}, {1, 0, 0, 0}) == 1.0);
    CHECK(minkowski_inner({0, 0, 0, 1}, {0, 0, 0, 1}) == -1.0);
    CHECK(minkowski_inner({1, 1, 1, 1}, {1, 1, 1, 1}) == 2.0);
}

TEST_CASE("inner product is symmetric and bilinear") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> d(-3.0, 3.0);
    for (int i = 0; i < 200; ++i) {
        const Vec4 a = random_vec(rng), b = random_vec(rng), c = random_vec(rng);
        const double s = d(rng), t = d(rng);
        CHECK(minkowski_inner(a, b) == doctest::Approx(minkowski_inner(b, a)).epsilon(1e-14));
        const double lhs = minkowski_inner(s * a + t * b, c);
        const double rhs = s * minkowski_inner(a, c) + t * minkowski_inner(b, c);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("causal character classification") {
    CHECK(causal_character({0, 0, 1, 1}) == CausalCharacter::Lightlike);
    CHECK(causal_character({0, 0, 0, 2}) == CausalCharacter::Timelike);
    CHECK(causal_character({3, 0, 0, 1}) == CausalCharacter::Spacelike);
    // tolerance widens the lightlike band
    CHECK(causal_character({1.0, 0, 0, 1.0000001}, 1e-3) == CausalCharacter::Lightlike);
    CHECK(causal_character({1.0, 0, 0, 1.0000001}, 0.0) == CausalCharacter::Timelike);
}

TEST_CASE("normalizing a spacelike vector keeps it spacelike") {
    std::mt19937_64 rng(11);
    int found = 0;
    while (found < 100) {
        const Vec4 v = random_vec(rng);
        const double q = minkowski_inner(v, v);
        if (q <= 1e-6) continue;
        ++found;
        const Vec4 n = v / std::sqrt(q);
        CHECK(causal_character(n) == CausalCharacter::Spacelike);
        CHECK(minkowski_inner(n, n) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("gram matrix of the standard basis") {
    const std::array<Vec4, 4> basis{Vec4{1, 0, 0, 0}, Vec4{0, 1, 0, 0}, Vec4{0, 0, 1, 0},
                                    Vec4{0, 0, 0, 1}};
    const GramMatrix g = gram_matrix(basis);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(g(i, j) == (i == j ? (i == 3 ? -1.0 : 1.0) : 0.0));
}

TEST_CASE("gram matrix of a repeated vector") {
    const std::array<Vec4, 2> vs{Vec4{1, 0, 0, 0}, Vec4{1, 0, 0, 0}};
    const GramMatrix g = gram_matrix(vs);
    CHECK(g.size() == 2);
    CHECK(g(0, 0) == 1.0);
    CHECK(g(0, 1) == 1.0);
    CHECK(g(1, 0) == 1.0);
    CHECK(g(1, 1) == 1.0);
}

TEST_CASE("gram matrix agrees entrywise with pairwise inner products") {
    std::mt19937_64 rng(13);
    std::vector<Vec4> vs;
    for (int i = 0; i < 5; ++i) vs.push_back(random_vec(rng));
    const GramMatrix g = gram_matrix(vs);
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < vs.size(); ++j) {
            CHECK(g(i, j) == minkowski_inner(vs[i], vs[j]));
            CHECK(g(i, j) == g(j, i));
        }
}

TEST_CASE("frame of the reference type I surface has Gram diag(-1,1,1,1)") {
    const SurfaceSpec spec{SurfaceType::TypeI, 1.0, 1.0,
                           Meridian::from_strings("1", "u", Interval::all())};
    const Frame fr = frame(spec, 0.0, 0.0);
    const std::array<Vec4, 4> vs{fr.x, fr.y, fr.n1, fr.n2};
    const GramMatrix g = gram_matrix(vs);
    const std::array<double, 4> want{-1.0, 1.0, 1.0, 1.0};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(g(i, j) == doctest::Approx(i == j ? want[i] : 0.0).epsilon(0).scale(1));
}
