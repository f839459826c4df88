#include <doctest.h>

#include <cmath>
#include <sstream>

#include "grs/meridian.hpp"

using namespace grs;

TEST_CASE("closed-form meridian evaluates AD jets, identity g by default") {
    const Meridian m = Meridian::from_strings("sqrt(u^2+1)", "u", Interval::all());
    const MeridianJets j = m.eval(0.0);
    CHECK(j.f.val == doctest::Approx(1.0));
    CHECK(j.f.d1 == doctest::Approx(0.0));
    CHECK(j.f.d2 == doctest::Approx(1.0));
    CHECK(j.g.val == 0.0);
    CHECK(j.g.d1 == 1.0);
    CHECK(j.g.d2 == 0.0);

    const MeridianJets j2 = m.eval(1.7);
    CHECK(j2.g.val == 1.7);
    CHECK(j2.g.d1 == 1.0);
}

TEST_CASE("out-of-domain evaluation is rejected") {
    const Meridian m = Meridian::from_strings("u^2", "u", {-1.0, 1.0});
    CHECK_NOTHROW(m.eval(1.0));
    CHECK_THROWS_AS(m.eval(1.0001), OutOfDomainError);
    CHECK_THROWS_AS(m.fd_oracle(1.0, 1e-3), OutOfDomainError);
}

TEST_CASE("fd oracle spot checks") {
    const Meridian msin = Meridian::from_strings("sin(u)", "u", Interval::all());
    const MeridianJets fd = msin.fd_oracle(0.0, 1e-4);
    CHECK(std::abs(fd.f.d1 - 1.0) < 1e-8);

    const Meridian mconst = Meridian::from_strings("3.5", "u", Interval::all());
    const MeridianJets fdc = mconst.fd_oracle(0.3, 1e-3);
    CHECK(fdc.f.d1 == 0.0);
    CHECK(fdc.f.d2 == 0.0);

    const Meridian msq = Meridian::from_strings("u^2", "u", Interval::all());
    const MeridianJets fdq = msq.fd_oracle(0.7, 1e-3);
    CHECK(std::abs(fdq.f.d2 - 2.0) < 1e-6);
}

TEST_CASE("AD jets match the fd oracle at O(h^2) for every primitive") {
    const char* exprs[] = {"sin(u)", "cos(u)",  "tan(u)",     "asin(u)", "atan(u)", "sinh(u)",
                           "cosh(u)", "ln(u+2)", "exp(u)",     "sqrt(u+2)", "abs(u+2)*u^3"};
    for (const char* src : exprs) {
        const Meridian m = Meridian::from_strings(src, "u", Interval::all());
        const double u0 = 0.37;
        const MeridianJets ad = m.eval(u0);
        const double h = 1e-3;
        const MeridianJets f1 = m.fd_oracle(u0, h);
        const MeridianJets f2 = m.fd_oracle(u0, h / 2);
        const double e1 = std::abs(ad.f.d1 - f1.f.d1) + std::abs(ad.f.d2 - f1.f.d2);
        const double e2 = std::abs(ad.f.d1 - f2.f.d1) + std::abs(ad.f.d2 - f2.f.d2);
        CAPTURE(src);
        if (e1 < 1e-11) continue;  // polynomial-exact stencil, nothing to fit
        CHECK(e1 / e2 > 3.5);
        CHECK(e1 / e2 < 4.5);
    }
}

TEST_CASE("sampled meridian reproduces nodes exactly and is C1 in between") {
    const Meridian closed = Meridian::from_strings("sin(u)", "u", Interval::all());
    std::vector<double> grid;
    for (int i = 0; i <= 40; ++i) grid.push_back(-1.0 + i * 0.05);
    const Meridian samp = closed.resampled(grid);
    REQUIRE(samp.kind() == MeridianKind::Sampled);

    // exact at nodes, including the second derivative
    for (const MeridianNode& n : samp.nodes()) {
        const MeridianJets j = samp.eval(n.u);
        CHECK(j.f.val == n.f);
        CHECK(j.f.d1 == n.fp);
        CHECK(j.f.d2 == n.fpp);
    }

    // one-sided limits at a node agree with the stored value and slope
    const MeridianNode& node = samp.nodes()[13];
    const MeridianJets left = samp.eval(node.u - 1e-9);
    const MeridianJets right = samp.eval(node.u + 1e-9);
    CHECK(std::abs(left.f.val - node.f) < 1e-8);
    CHECK(std::abs(right.f.val - node.f) < 1e-8);
    CHECK(std::abs(left.f.d1 - node.fp) < 1e-6);
    CHECK(std::abs(right.f.d1 - node.fp) < 1e-6);

    // interpolation error of the cubic is O(h^4) in value
    const double mid = -1.0 + 13.5 * 0.05;
    CHECK(std::abs(samp.eval(mid).f.val - std::sin(mid)) < 1e-7);
}

TEST_CASE("sampled meridian rejects non-increasing grids") {
    std::vector<MeridianNode> nodes{{0, 0, 1, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 1, 0}};
    CHECK_THROWS_AS(Meridian::sampled(std::move(nodes)), Error);
    std::vector<MeridianNode> single{{0, 0, 1, 0, 0, 1, 0}};
    CHECK_THROWS_AS(Meridian::sampled(std::move(single)), Error);
}

TEST_CASE("CSV round trip is bit-exact") {
    const Meridian closed = Meridian::from_strings("0.1+sin(u)*0.25", "u", Interval::all());
    std::vector<double> grid;
    for (int i = 0; i <= 20; ++i) grid.push_back(0.05 * i + 1.0 / 3.0);
    const Meridian samp = closed.resampled(grid);

    std::ostringstream os;
    write_meridian_csv(os, samp);
    std::istringstream is(os.str());
    const Meridian back = read_meridian_csv(is);

    REQUIRE(back.nodes().size() == samp.nodes().size());
    for (std::size_t i = 0; i < samp.nodes().size(); ++i) {
        const MeridianNode& a = samp.nodes()[i];
        const MeridianNode& b = back.nodes()[i];
        CHECK(a.u == b.u);
        CHECK(a.f == b.f);
        CHECK(a.fp == b.fp);
        CHECK(a.fpp == b.fpp);
        CHECK(a.g == b.g);
        CHECK(a.gp == b.gp);
        CHECK(a.gpp == b.gpp);
    }

    // writing the re-read meridian reproduces the bytes
    std::ostringstream os2;
    write_meridian_csv(os2, back);
    CHECK(os.str() == os2.str());
}

TEST_CASE("CSV reader rejects malformed input") {
    {
        std::istringstream is("wrong,header\n");
        CHECK_THROWS_AS(read_meridian_csv(is), Error);
    }
    {
        std::istringstream is("u,f,fp,fpp,g,gp,gpp\n1,2,3\n");
        CHECK_THROWS_AS(read_meridian_csv(is), Error);
    }
    {
        std::istringstream is("u,f,fp,fpp,g,gp,gpp\n0,a,0,0,0,1,0\n1,0,0,0,1,1,0\n");
        CHECK_THROWS_AS(read_meridian_csv(is), Error);
    }
    {
        std::istringstream is("");
        CHECK_THROWS_AS(read_meridian_csv(is), Error);
    }
}
