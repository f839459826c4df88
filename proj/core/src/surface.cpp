#include "grs/surface.hpp"

#include <array>
#include <cmath>

#include "grs/errors.hpp"
#include "grs/numfmt.hpp"

namespace grs {

namespace {

constexpr double kValidityBand = 1e-12;
constexpr double kGramTolerance = 1e-8;

struct Trig {
    double cos_av, sin_av, cosh_bv, sinh_bv;
};

Trig trig(const SurfaceSpec& s, double v) {
    return {std::cos(s.alpha * v), std::sin(s.alpha * v), std::cosh(s.beta * v),
            std::sinh(s.beta * v)};
}

struct Scalars {
    double f, fp, fpp, g, gp, gpp;
};

Scalars jets(const SurfaceSpec& s, double u) {
    const MeridianJets j = s.meridian.eval(u);
    return {j.f.val, j.f.d1, j.f.d2, j.g.val, j.g.d1, j.g.d2};
}

void require_valid(const SurfaceSpec& s, double u) {
    if (!validity(s, u))
        throw InvalidPointError("surface inequalities fail at u = " + format_shortest(u));
}

} // namespace

SurfaceSpec::SurfaceSpec(SurfaceType t, double a, double b, Meridian m)
    : type(t), alpha(a), beta(b), meridian(std::move(m)) {
    if (!(alpha > 0.0) || !(beta > 0.0)) throw Error("rotation rates alpha, beta must be positive");
}

bool validity(const SurfaceSpec& spec, double u) {
    const Scalars s = jets(spec, u);
    const double a2 = spec.alpha * spec.alpha, b2 = spec.beta * spec.beta;
    if (spec.type == SurfaceType::TypeI) {
        return s.fp * s.fp - s.gp * s.gp < -kValidityBand &&
               a2 * s.f * s.f + b2 * s.g * s.g > kValidityBand;
    }
    return a2 * s.f * s.f - b2 * s.g * s.g < -kValidityBand &&
           s.fp * s.fp + s.gp * s.gp > kValidityBand;
}

Vec4 position(const SurfaceSpec& spec, double u, double v) {
    const Scalars s = jets(spec, u);
    const Trig t = trig(spec, v);
    Vec4 z;
    if (spec.type == SurfaceType::TypeI)
        z = {s.f * t.cos_av, s.f * t.sin_av, s.g * t.sinh_bv, s.g * t.cosh_bv};
    else
        z = {s.f * t.cos_av, s.f * t.sin_av, s.g * t.cosh_bv, s.g * t.sinh_bv};
    if (!is_finite(z)) throw DomainError("non-finite surface point");
    return z;
}

FirstForm first_form(const SurfaceSpec& spec, double u) {
    require_valid(spec, u);
    const Scalars s = jets(spec, u);
    const double a2 = spec.alpha * spec.alpha, b2 = spec.beta * spec.beta;
    if (spec.type == SurfaceType::TypeI)
        return {s.fp * s.fp - s.gp * s.gp, 0.0, a2 * s.f * s.f + b2 * s.g * s.g};
    return {s.fp * s.fp + s.gp * s.gp, 0.0, a2 * s.f * s.f - b2 * s.g * s.g};
}

PositionJets position_jets(const SurfaceSpec& spec, double u, double v) {
    const Scalars s = jets(spec, u);
    const Trig t = trig(spec, v);
    const double a = spec.alpha, b = spec.beta;
    PositionJets p;
    if (spec.type == SurfaceType::TypeI) {
        p.zu = {s.fp * t.cos_av, s.fp * t.sin_av, s.gp * t.sinh_bv, s.gp * t.cosh_bv};
        p.zv = {-a * s.f * t.sin_av, a * s.f * t.cos_av, b * s.g * t.cosh_bv, b * s.g * t.sinh_bv};
        p.zuu = {s.fpp * t.cos_av, s.fpp * t.sin_av, s.gpp * t.sinh_bv, s.gpp * t.cosh_bv};
        p.zuv = {-a * s.fp * t.sin_av, a * s.fp * t.cos_av, b * s.gp * t.cosh_bv,
                 b * s.gp * t.sinh_bv};
        p.zvv = {-a * a * s.f * t.cos_av, -a * a * s.f * t.sin_av, b * b * s.g * t.sinh_bv,
                 b * b * s.g * t.cosh_bv};
    } else {
        p.zu = {s.fp * t.cos_av, s.fp * t.sin_av, s.gp * t.cosh_bv, s.gp * t.sinh_bv};
        p.zv = {-a * s.f * t.sin_av, a * s.f * t.cos_av, b * s.g * t.sinh_bv, b * s.g * t.cosh_bv};
        p.zuu = {s.fpp * t.cos_av, s.fpp * t.sin_av, s.gpp * t.cosh_bv, s.gpp * t.sinh_bv};
        p.zuv = {-a * s.fp * t.sin_av, a * s.fp * t.cos_av, b * s.gp * t.sinh_bv,
                 b * s.gp * t.cosh_bv};
        p.zvv = {-a * a * s.f * t.cos_av, -a * a * s.f * t.sin_av, b * b * s.g * t.cosh_bv,
                 b * b * s.g * t.sinh_bv};
    }
    return p;
}

Frame frame(const SurfaceSpec& spec, double u, double v) {
    require_valid(spec, u);
    const Scalars s = jets(spec, u);
    const Trig t = trig(spec, v);
    const double a = spec.alpha, b = spec.beta;
    const PositionJets p = position_jets(spec, u, v);

    Frame fr;
    if (spec.type == SurfaceType::TypeI) {
        const double wu = std::sqrt(s.gp * s.gp - s.fp * s.fp);
        const double wv = std::sqrt(a * a * s.f * s.f + b * b * s.g * s.g);
        fr.x = p.zu / wu;
        fr.y = p.zv / wv;
        fr.n1 = Vec4{b * s.g * t.sin_av, -b * s.g * t.cos_av, a * s.f * t.cosh_bv,
                     a * s.f * t.sinh_bv} /
                wv;
        fr.n2 = Vec4{s.gp * t.cos_av, s.gp * t.sin_av, s.fp * t.sinh_bv, s.fp * t.cosh_bv} / wu;
    } else {
        const double wu = std::sqrt(s.fp * s.fp + s.gp * s.gp);
        const double wv = std::sqrt(b * b * s.g * s.g - a * a * s.f * s.f);
        fr.x = p.zu / wu;
        fr.y = p.zv / wv;
        fr.n1 = Vec4{s.gp * t.cos_av, s.gp * t.sin_av, -s.fp * t.cosh_bv, -s.fp * t.sinh_bv} / wu;
        fr.n2 = Vec4{-b * s.g * t.sin_av, b * s.g * t.cos_av, a * s.f * t.sinh_bv,
                     a * s.f * t.cosh_bv} /
                wv;
    }

    if (!is_finite(fr.x) || !is_finite(fr.y) || !is_finite(fr.n1) || !is_finite(fr.n2))
        throw DomainError("non-finite frame");

    const std::array<Vec4, 4> vs{fr.x, fr.y, fr.n1, fr.n2};
    const GramMatrix gm = gram_matrix(vs);
    const double ex = tangent_sign(spec.type);
    const std::array<double, 4> diag{ex, -ex, 1.0, 1.0};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            const double want = i == j ? diag[i] : 0.0;
            if (std::abs(gm(i, j) - want) > kGramTolerance)
                throw Error("frame Gram check failed at u = " + format_shortest(u) +
                            " (entry " + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
    return fr;
}

} // namespace grs
