#include "grs/invariants.hpp"

#include <cmath>

#include "grs/errors.hpp"
#include "grs/numfmt.hpp"

namespace grs {

namespace {

struct Scalars {
    double f, fp, fpp, g, gp, gpp;
    double a, b, a2, b2;
};

Scalars load(const SurfaceSpec& spec, double u) {
    const MeridianJets j = spec.meridian.eval(u);
    return {j.f.val, j.f.d1,          j.f.d2,         j.g.val,
            j.g.d1,  j.g.d2,          spec.alpha,     spec.beta,
            spec.alpha * spec.alpha,  spec.beta * spec.beta};
}

void require_valid(const SurfaceSpec& spec, double u) {
    if (!validity(spec, u))
        throw InvalidPointError("surface inequalities fail at u = " + format_shortest(u));
}

// W = |z_u| normalization: sqrt(g'^2 - f'^2) for type I, sqrt(f'^2 + g'^2) for type II
double meridian_norm(const SurfaceSpec& spec, const Scalars& s) {
    return spec.type == SurfaceType::TypeI ? std::sqrt(s.gp * s.gp - s.fp * s.fp)
                                           : std::sqrt(s.fp * s.fp + s.gp * s.gp);
}

} // namespace

SecondFormCoeffs second_form_coeffs(const SurfaceSpec& spec, double u, double v) {
    require_valid(spec, u);
    const PositionJets p = position_jets(spec, u, v);
    const Frame fr = frame(spec, u, v);
    return {minkowski_inner(p.zuu, fr.n1), minkowski_inner(p.zuv, fr.n1),
            minkowski_inner(p.zvv, fr.n1), minkowski_inner(p.zuu, fr.n2),
            minkowski_inner(p.zuv, fr.n2), minkowski_inner(p.zvv, fr.n2)};
}

SecondFormCoeffs second_form_coeffs_closed(const SurfaceSpec& spec, double u) {
    if (spec.type != SurfaceType::TypeI)
        throw Error("closed-form second-form coefficients are provided for type I only");
    require_valid(spec, u);
    const Scalars s = load(spec, u);
    const double W = meridian_norm(spec, s);
    const double sqrtG = std::sqrt(s.a2 * s.f * s.f + s.b2 * s.g * s.g);
    return {0.0,
            s.a * s.b * (s.f * s.gp - s.fp * s.g) / sqrtG,
            0.0,
            (s.fpp * s.gp - s.fp * s.gpp) / W,
            0.0,
            -(s.a2 * s.f * s.gp + s.b2 * s.fp * s.g) / W};
}

double gauss_curvature(const SurfaceSpec& spec, double u) {
    require_valid(spec, u);
    const Scalars s = load(spec, u);
    const double curv = s.fpp * s.gp - s.fp * s.gpp;
    const double mixed = s.a2 * s.f * s.gp + s.b2 * s.fp * s.g;
    const double rot = s.f * s.gp - s.fp * s.g;
    if (spec.type == SurfaceType::TypeI) {
        const double w2 = s.gp * s.gp - s.fp * s.fp;
        const double G = s.a2 * s.f * s.f + s.b2 * s.g * s.g;
        return (curv * mixed * G + s.a2 * s.b2 * rot * rot * w2) / (w2 * w2 * G * G);
    }
    const double e = s.fp * s.fp + s.gp * s.gp;
    const double G = s.a2 * s.f * s.f - s.b2 * s.g * s.g;
    return (s.a2 * s.b2 * rot * rot * e - curv * G * mixed) / (e * e * G * G);
}

double gauss_curvature_gauss_equation(const SurfaceSpec& spec, double u, double v) {
    require_valid(spec, u);
    const PositionJets p = position_jets(spec, u, v);
    const double E = minkowski_inner(p.zu, p.zu);
    const double G = minkowski_inner(p.zv, p.zv);
    const double ex = tangent_sign(spec.type), ey = -ex;
    const Vec4 x = p.zu / std::sqrt(std::abs(E));
    const Vec4 y = p.zv / std::sqrt(std::abs(G));
    // normal projection: w - <w,x>/<x,x> x - <w,y>/<y,y> y
    const auto normal_part = [&](const Vec4& w) {
        return w - (minkowski_inner(w, x) / ex) * x - (minkowski_inner(w, y) / ey) * y;
    };
    const Vec4 sxx = normal_part(p.zuu) / std::abs(E);
    const Vec4 sxy = normal_part(p.zuv) / std::sqrt(std::abs(E) * std::abs(G));
    const Vec4 syy = normal_part(p.zvv) / std::abs(G);
    return (minkowski_inner(sxx, syy) - minkowski_inner(sxy, sxy)) / (ex * ey);
}

MeanCurvature mean_curvature(const SurfaceSpec& spec, double u) {
    const SecondFormCoeffs c = second_form_coeffs(spec, u, 0.0);
    const FirstForm ff = first_form(spec, u);
    const double det = ff.E * ff.G - ff.F * ff.F;
    const double h1 = (ff.G * c.c11_1 + ff.E * c.c22_1 - 2.0 * ff.F * c.c12_1) / (2.0 * det);
    const double h2 = (ff.G * c.c11_2 + ff.E * c.c22_2 - 2.0 * ff.F * c.c12_2) / (2.0 * det);
    return {h1, h2, h1 * h1 + h2 * h2};
}

double mean_curvature_display(const SurfaceSpec& spec, double u) {
    require_valid(spec, u);
    const Scalars s = load(spec, u);
    const double curv = s.fp * s.gpp - s.fpp * s.gp;
    const double mixed = s.a2 * s.f * s.gp + s.b2 * s.fp * s.g;
    if (spec.type == SurfaceType::TypeI) {
        const double w2 = s.gp * s.gp - s.fp * s.fp;
        const double G = s.a2 * s.f * s.f + s.b2 * s.g * s.g;
        return (curv * G - mixed * w2) / (2.0 * G * std::pow(w2, 1.5));
    }
    const double e = s.fp * s.fp + s.gp * s.gp;
    const double G = s.a2 * s.f * s.f - s.b2 * s.g * s.g;
    return (curv * G + mixed * e) / (2.0 * G * std::pow(e, 1.5));
}

Vec4 mean_curvature_vector(const SurfaceSpec& spec, double u, double v) {
    const MeanCurvature h = mean_curvature(spec, u);
    const Frame fr = frame(spec, u, v);
    return h.H1 * fr.n1 + h.H2 * fr.n2;
}

NormalConnection normal_connection_coeffs(const SurfaceSpec& spec, double u) {
    require_valid(spec, u);
    const Scalars s = load(spec, u);
    const double W = meridian_norm(spec, s);
    if (spec.type == SurfaceType::TypeI) {
        const double G = s.a2 * s.f * s.f + s.b2 * s.g * s.g;
        return {0.0, s.a * s.b * (s.g * s.gp - s.f * s.fp) / (W * G)};
    }
    const double mG = s.b2 * s.g * s.g - s.a2 * s.f * s.f;
    return {0.0, s.a * s.b * (s.f * s.fp + s.g * s.gp) / (W * mG)};
}

double normal_curvature(const SurfaceSpec& spec, double u) {
    require_valid(spec, u);
    const Scalars s = load(spec, u);
    const double rot = s.f * s.gp - s.fp * s.g;
    const double curv = s.fpp * s.gp - s.fp * s.gpp;
    const double mixed = s.a2 * s.f * s.gp + s.b2 * s.fp * s.g;
    if (spec.type == SurfaceType::TypeI) {
        const double e = s.fp * s.fp - s.gp * s.gp;
        const double G = s.a2 * s.f * s.f + s.b2 * s.g * s.g;
        return s.a * s.b * rot * (e * mixed + curv * G) / (e * e * G * G);
    }
    const double e = s.fp * s.fp + s.gp * s.gp;
    const double G = s.a2 * s.f * s.f - s.b2 * s.g * s.g;
    return s.a * s.b * rot * (e * mixed + curv * G) / (e * e * G * G);
}

double normal_curvature_fd(const SurfaceSpec& spec, double u, double h) {
    require_valid(spec, u);
    const Scalars s = load(spec, u);
    const double W = meridian_norm(spec, s);
    const double phi_p = frenet_coeffs(spec, u + h).phi;
    const double phi_m = frenet_coeffs(spec, u - h).phi;
    const double x_phi = (phi_p - phi_m) / (2.0 * h) / W;
    const double lambda = commutator_coefficient(spec, u);
    const double phi = frenet_coeffs(spec, u).phi;
    // kappa = <R_D(x,y,n1), n2> / (<x,x><y,y>) with R_D = (x(phi) - lambda phi) n2
    return lambda * phi - x_phi;
}

FrenetCoeffs frenet_coeffs(const SurfaceSpec& spec, double u) {
    require_valid(spec, u);
    const Scalars s = load(spec, u);
    const double W = meridian_norm(spec, s);
    const double curv = s.fpp * s.gp - s.fp * s.gpp;
    const double mixed = s.a2 * s.f * s.gp + s.b2 * s.g * s.fp;
    const double rot = s.a * s.b * (s.f * s.gp - s.g * s.fp);
    if (spec.type == SurfaceType::TypeI) {
        const double G = s.a2 * s.f * s.f + s.b2 * s.g * s.g;
        const double WG = W * G;
        return {-(s.a2 * s.f * s.fp + s.b2 * s.g * s.gp) / WG, rot / WG, curv / (W * W * W),
                -mixed / WG, s.a * s.b * (s.g * s.gp - s.f * s.fp) / WG};
    }
    const double G = s.a2 * s.f * s.f - s.b2 * s.g * s.g;
    const double WG = W * G;
    return {(s.a2 * s.f * s.fp - s.b2 * s.g * s.gp) / WG, rot / WG, curv / (W * W * W),
            mixed / WG, -s.a * s.b * (s.g * s.gp + s.f * s.fp) / WG};
}

DeltaInvariants delta_invariants(const SurfaceSpec& spec, double u, double tol) {
    const SecondFormCoeffs c = second_form_coeffs(spec, u, 0.0);
    const double d1 = c.c11_1 * c.c12_2 - c.c12_1 * c.c11_2;
    const double d2 = c.c11_1 * c.c22_2 - c.c22_1 * c.c11_2;
    const double d3 = c.c12_1 * c.c22_2 - c.c22_1 * c.c12_2;
    const bool infl = std::abs(d1) <= tol && std::abs(d2) <= tol && std::abs(d3) <= tol;
    return {d1, d2, d3, infl};
}

double commutator_coefficient(const SurfaceSpec& spec, double u) {
    const FrenetCoeffs fc = frenet_coeffs(spec, u);
    return spec.type == SurfaceType::TypeI ? fc.gamma : -fc.gamma;
}

InvariantSample invariant_sample(const SurfaceSpec& spec, double u) {
    InvariantSample s;
    s.u = u;
    try {
        if (!validity(spec, u)) return s;
        const FirstForm ff = first_form(spec, u);
        const MeanCurvature h = mean_curvature(spec, u);
        const FrenetCoeffs fc = frenet_coeffs(spec, u);
        const DeltaInvariants d = delta_invariants(spec, u);
        s.E = ff.E;
        s.F = ff.F;
        s.G = ff.G;
        s.K = gauss_curvature(spec, u);
        s.H1 = h.H1;
        s.H2 = h.H2;
        s.Hnorm2 = h.Hnorm2;
        s.kappa = normal_curvature(spec, u);
        s.gamma = fc.gamma;
        s.mu = fc.mu;
        s.nu1 = fc.nu1;
        s.nu2 = fc.nu2;
        s.phi = fc.phi;
        s.D1 = d.D1;
        s.D2 = d.D2;
        s.D3 = d.D3;
        s.valid = true;
    } catch (const Error&) {
        s = InvariantSample{};
        s.u = u;
    }
    return s;
}

StructuralResiduals structural_residuals(const SurfaceSpec& spec, double u, double h) {
    if (spec.type != SurfaceType::TypeI)
        throw Error("structural identities are checked in their type I form");
    const Scalars s = load(spec, u);
    const double W = meridian_norm(spec, s);
    const FrenetCoeffs c0 = frenet_coeffs(spec, u);
    const FrenetCoeffs cp = frenet_coeffs(spec, u + h);
    const FrenetCoeffs cm = frenet_coeffs(spec, u - h);
    const auto x_of = [&](double plus, double minus) { return (plus - minus) / (2.0 * h) / W; };
    return {
        x_of(cp.mu, cm.mu) - (2.0 * c0.mu * c0.gamma - c0.nu1 * c0.phi),
        x_of(cp.nu2, cm.nu2) - (c0.gamma * (c0.nu1 + c0.nu2) + c0.mu * c0.phi),
        x_of(cp.gamma, cm.gamma) - (c0.nu1 * c0.nu2 - c0.mu * c0.mu + c0.gamma * c0.gamma),
    };
}

} // namespace grs
