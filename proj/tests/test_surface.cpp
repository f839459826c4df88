#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "grs/surface.hpp"

using namespace grs;

namespace {

SurfaceSpec cylinder1() {
    return {SurfaceType::TypeI, 1.0, 1.0, Meridian::from_strings("1", "u", Interval::all())};
}

SurfaceSpec cylinder2() {
    return {SurfaceType::TypeII, 1.0, 2.0, Meridian::from_strings("1", "u", Interval::all())};
}

double vec_diff(const Vec4& a, const Vec4& b) {
    return std::max({std::abs(a.x1 - b.x1), std::abs(a.x2 - b.x2), std::abs(a.x3 - b.x3),
                     std::abs(a.x4 - b.x4)});
}

} // namespace

TEST_CASE("rotation rates must be positive") {
    CHECK_THROWS_AS(SurfaceSpec(SurfaceType::TypeI, 0.0, 1.0,
                                Meridian::from_strings("1", "u", Interval::all())),
                    Error);
    CHECK_THROWS_AS(SurfaceSpec(SurfaceType::TypeI, 1.0, -2.0,
                                Meridian::from_strings("1", "u", Interval::all())),
                    Error);
}

TEST_CASE("validity implements the strict type inequalities") {
    CHECK(validity(cylinder1(), 0.0));

    // lightlike meridian: f' = g' everywhere
    const SurfaceSpec light{SurfaceType::TypeI, 1.0, 1.0,
                            Meridian::from_strings("u", "u", Interval::all())};
    CHECK_FALSE(validity(light, 0.0));

    CHECK_FALSE(validity(cylinder2(), 0.25));  // a^2 f^2 - b^2 g^2 = 0.75 > 0
    CHECK(validity(cylinder2(), 1.0));
    CHECK_FALSE(validity(cylinder2(), 0.5));   // exactly on the cone, inside the guard band
}

TEST_CASE("position evaluates the immersion") {
    CHECK(vec_diff(position(cylinder1(), 0.0, 0.0), {1, 0, 0, 0}) == 0.0);
    CHECK(vec_diff(position(cylinder2(), 0.0, 0.0), {1, 0, 0, 0}) == 0.0);
    CHECK(vec_diff(position(cylinder1(), 1.0, 0.0), {1, 0, 0, 1}) == 0.0);

    const Vec4 z = position(cylinder1(), 0.5, 0.7);
    CHECK(z.x1 * z.x1 + z.x2 * z.x2 == doctest::Approx(1.0));            // f^2
    CHECK(z.x4 * z.x4 - z.x3 * z.x3 == doctest::Approx(0.25));           // g^2
}

TEST_CASE("first fundamental form of both types") {
    const FirstForm a = first_form(cylinder1(), 0.0);
    CHECK(a.E == doctest::Approx(-1.0));
    CHECK(a.F == 0.0);
    CHECK(a.G == doctest::Approx(1.0));

    const FirstForm b = first_form(cylinder1(), 0.5);
    CHECK(b.G == doctest::Approx(1.25));

    const FirstForm c = first_form(cylinder2(), 1.0);
    CHECK(c.E == doctest::Approx(1.0));
    CHECK(c.F == 0.0);
    CHECK(c.G == doctest::Approx(-3.0));

    CHECK_THROWS_AS(first_form(cylinder2(), 0.25), InvalidPointError);
}

TEST_CASE("frame spot values at the reference point") {
    const Frame fr = frame(cylinder1(), 0.0, 0.0);
    CHECK(vec_diff(fr.x, {0, 0, 0, 1}) < 1e-15);
    CHECK(vec_diff(fr.y, {0, 1, 0, 0}) < 1e-15);
    CHECK(vec_diff(fr.n1, {0, 0, 1, 0}) < 1e-15);
    CHECK(vec_diff(fr.n2, {1, 0, 0, 0}) < 1e-15);
}

TEST_CASE("frame Gram matrix matches the type signature at random points") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> uu(-1.5, 1.5), u2(0.8, 2.5), vv(0.0, 1.2);
    for (int i = 0; i < 50; ++i) {
        const bool t1 = i % 2 == 0;
        const SurfaceSpec spec = t1 ? cylinder1() : cylinder2();
        const double u = t1 ? uu(rng) : u2(rng);
        const double v = vv(rng);
        const Frame fr = frame(spec, u, v);
        const std::array<Vec4, 4> vs{fr.x, fr.y, fr.n1, fr.n2};
        const GramMatrix g = gram_matrix(vs);
        const std::array<double, 4> want{t1 ? -1.0 : 1.0, t1 ? 1.0 : -1.0, 1.0, 1.0};
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c)
                CHECK(std::abs(g(r, c) - (r == c ? want[r] : 0.0)) < 1e-10);
    }
}

TEST_CASE("frame construction fails loudly on invalid points") {
    CHECK_THROWS_AS(frame(cylinder2(), 0.25, 0.0), InvalidPointError);
}

TEST_CASE("position_jets spot values") {
    const PositionJets p = position_jets(cylinder1(), 0.0, 0.0);
    CHECK(vec_diff(p.zuu, {0, 0, 0, 0}) == 0.0);
    CHECK(vec_diff(p.zvv, {-1, 0, 0, 0}) == 0.0);
    CHECK(vec_diff(p.zu, {0, 0, 0, 1}) == 0.0);
    CHECK(vec_diff(p.zv, {0, 1, 0, 0}) == 0.0);
}

TEST_CASE("position_jets agree with finite differences of position") {
    const SurfaceSpec specs[] = {
        {SurfaceType::TypeI, 1.3, 0.7, Meridian::from_strings("2+0.3*sin(u)", "u", Interval::all())},
        {SurfaceType::TypeII, 1.0, 1.0,
         Meridian::from_strings("sqrt(2+u^2)", "2*u", Interval::all())},
    };
    const double us[] = {0.9, 1.4};
    const double h = 1e-5;
    for (int k = 0; k < 2; ++k) {
        const SurfaceSpec& s = specs[k];
        const double u = us[k], v = 0.6;
        const PositionJets p = position_jets(s, u, v);
        const auto at = [&](double du, double dv) { return position(s, u + du, v + dv); };
        const Vec4 zu_fd = (at(h, 0) - at(-h, 0)) / (2 * h);
        const Vec4 zv_fd = (at(0, h) - at(0, -h)) / (2 * h);
        const Vec4 zuu_fd = (at(h, 0) - 2.0 * at(0, 0) + at(-h, 0)) / (h * h);
        const Vec4 zvv_fd = (at(0, h) - 2.0 * at(0, 0) + at(0, -h)) / (h * h);
        const Vec4 zuv_fd = (at(h, h) - at(h, -h) - at(-h, h) + at(-h, -h)) / (4 * h * h);
        CHECK(vec_diff(p.zu, zu_fd) < 1e-8);
        CHECK(vec_diff(p.zv, zv_fd) < 1e-8);
        CHECK(vec_diff(p.zuu, zuu_fd) < 1e-5);
        CHECK(vec_diff(p.zvv, zvv_fd) < 1e-5);
        CHECK(vec_diff(p.zuv, zuv_fd) < 1e-5);
    }
}

TEST_CASE("normals are orthogonal to the tangent plane") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> uu(0.9, 2.4), vv(0.0, 1.2);
    const SurfaceSpec s{SurfaceType::TypeII, 1.0, 1.0,
                        Meridian::from_strings("sqrt(2+u^2)", "2*u", Interval::all())};
    for (int i = 0; i < 30; ++i) {
        const double u = uu(rng), v = vv(rng);
        const PositionJets p = position_jets(s, u, v);
        const Frame fr = frame(s, u, v);
        for (const Vec4* nk : {&fr.n1, &fr.n2}) {
            CHECK(std::abs(minkowski_inner(p.zu, *nk)) < 1e-10);
            CHECK(std::abs(minkowski_inner(p.zv, *nk)) < 1e-10);
        }
        const FirstForm ff = first_form(s, u);
        CHECK(minkowski_inner(p.zu, p.zu) == doctest::Approx(ff.E).epsilon(1e-12));
        CHECK(minkowski_inner(p.zv, p.zv) == doctest::Approx(ff.G).epsilon(1e-12));
        CHECK(std::abs(minkowski_inner(p.zu, p.zv)) < 1e-12);
    }
}
