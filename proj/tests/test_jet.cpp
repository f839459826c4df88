#include <doctest.h>

#include <cmath>

#include "grs/jet.hpp"

using namespace grs;

namespace {
// central differences of a plain double function
template <typename F>
Jet2 fd_jet(F f, double u, double h) {
    const double ym = f(u - h), y0 = f(u), yp = f(u + h);
    return {y0, (yp - ym) / (2 * h), (yp - 2 * y0 + ym) / (h * h)};
}
} // namespace

TEST_CASE("arithmetic obeys product and quotient rules") {
    const Jet2 u = Jet2::variable(1.5);
    const Jet2 sq = u * u;
    CHECK(sq.val == 2.25);
    CHECK(sq.d1 == 3.0);
    CHECK(sq.d2 == 2.0);

    const Jet2 inv = 1.0 / u;  // 1/u: d1 = -1/u^2, d2 = 2/u^3
    CHECK(inv.val == doctest::Approx(1 / 1.5));
    CHECK(inv.d1 == doctest::Approx(-1 / 2.25));
    CHECK(inv.d2 == doctest::Approx(2 / 3.375));

    const Jet2 mixed = (u * u - 2.0) / (u + 3.0);
    const auto ref = [](double x) { return (x * x - 2) / (x + 3); };
    const Jet2 fd = fd_jet(ref, 1.5, 1e-5);
    CHECK(mixed.val == doctest::Approx(fd.val));
    CHECK(mixed.d1 == doctest::Approx(fd.d1).epsilon(1e-8));
    CHECK(mixed.d2 == doctest::Approx(fd.d2).epsilon(1e-5));
}

TEST_CASE("every primitive matches finite differences at O(h^2)") {
    struct Case {
        Jet2 (*fn)(const Jet2&);
        double (*ref)(double);
        double at;
    };
    const Case cases[] = {
        {grs::sin, std::sin, 0.7},   {grs::cos, std::cos, 0.7},   {grs::tan, std::tan, 0.6},
        {grs::asin, std::asin, 0.4}, {grs::atan, std::atan, 0.8}, {grs::sinh, std::sinh, 0.7},
        {grs::cosh, std::cosh, 0.7}, {grs::ln, std::log, 1.3},    {grs::exp, std::exp, 0.7},
        {grs::sqrt, std::sqrt, 1.7},
    };
    for (const Case& c : cases) {
        const Jet2 ad = c.fn(Jet2::variable(c.at));
        const double h = 1e-3;
        const Jet2 fd1 = fd_jet(c.ref, c.at, h);
        const Jet2 fd2 = fd_jet(c.ref, c.at, h / 2);
        const double e1 = std::abs(ad.d1 - fd1.d1) + std::abs(ad.d2 - fd1.d2);
        const double e2 = std::abs(ad.d1 - fd2.d1) + std::abs(ad.d2 - fd2.d2);
        INFO("case at u = ", c.at, " e1 = ", e1, " e2 = ", e2);
        CHECK(e1 / e2 > 3.5);
        CHECK(e1 / e2 < 4.5);
    }
}

TEST_CASE("abs uses the sign of the argument") {
    const Jet2 m = abs(Jet2{-2.0, 1.0, 3.0});
    CHECK(m.val == 2.0);
    CHECK(m.d1 == -1.0);
    CHECK(m.d2 == -3.0);
    const Jet2 p = abs(Jet2{2.0, 1.0, 3.0});
    CHECK(p.d1 == 1.0);
}

TEST_CASE("integer powers handle negative bases and exponents") {
    const Jet2 u = Jet2::variable(-1.5);
    const Jet2 cube = powi(u, 3);
    CHECK(cube.val == doctest::Approx(-3.375));
    CHECK(cube.d1 == doctest::Approx(3 * 2.25));
    CHECK(cube.d2 == doctest::Approx(6 * -1.5));
    const Jet2 invsq = powi(Jet2::variable(2.0), -2);
    CHECK(invsq.val == doctest::Approx(0.25));
    CHECK(invsq.d1 == doctest::Approx(-2.0 / 8.0));
    CHECK(invsq.d2 == doctest::Approx(6.0 / 16.0));
}

TEST_CASE("real and jet exponents") {
    const Jet2 u = Jet2::variable(2.0);
    const Jet2 p = pow(u, 0.5);
    const Jet2 s = sqrt(u);
    CHECK(p.val == doctest::Approx(s.val));
    CHECK(p.d1 == doctest::Approx(s.d1));
    CHECK(p.d2 == doctest::Approx(s.d2));

    // u^u = exp(u ln u)
    const Jet2 uu = pow(u, u);
    const Jet2 ref = exp(u * ln(u));
    CHECK(uu.val == doctest::Approx(ref.val));
    CHECK(uu.d1 == doctest::Approx(ref.d1));
    CHECK(uu.d2 == doctest::Approx(ref.d2));
}

TEST_CASE("domain violations throw instead of propagating NaN") {
    CHECK_THROWS_AS(sqrt(Jet2::variable(-1.0)), DomainError);
    CHECK_THROWS_AS(sqrt(Jet2::variable(0.0)), DomainError);
    CHECK_THROWS_AS(ln(Jet2::variable(0.0)), DomainError);
    CHECK_THROWS_AS(ln(Jet2::variable(-2.0)), DomainError);
    CHECK_THROWS_AS(asin(Jet2::variable(1.5)), DomainError);
    CHECK_THROWS_AS(asin(Jet2::variable(1.0)), DomainError);
    CHECK_THROWS_AS(Jet2::variable(1.0) / Jet2::constant(0.0), DomainError);
    CHECK_THROWS_AS(pow(Jet2::variable(-1.0), 0.5), DomainError);
    CHECK_THROWS_AS(powi(Jet2::constant(0.0), -1), DomainError);
}
