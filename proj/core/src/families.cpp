#include "grs/families.hpp"

#include <cmath>
#include <utility>

#include "grs/errors.hpp"
#include "grs/numfmt.hpp"

namespace grs {

namespace {

constexpr double kTangentGuard = 1e-10;  // |1 - f'^2| for type I
constexpr double kFactorGuard = 1e-12;   // flat denominator and type II G

} // namespace

SpecialClass SpecialClass::cmc(double c) {
    if (c == 0.0) throw Error("constant mean curvature class needs c != 0");
    return {SpecialClassKind::Cmc, c};
}

SpecialClass SpecialClass::pnmc(double C) {
    if (C == 0.0) throw Error("parallel-normalized class needs C != 0");
    return {SpecialClassKind::Pnmc, C};
}

Meridian minimal_meridian(SurfaceType type, const MinimalParams& p) {
    if (!(p.A > 0.0)) throw Error("minimal meridian needs A > 0");
    if (p.eps != 1 && p.eps != -1) throw Error("minimal meridian eps must be +1 or -1");
    if (!(p.alpha > 0.0) || !(p.beta > 0.0)) throw Error("minimal meridian needs alpha, beta > 0");
    const double A = p.A, C = p.C, alpha = p.alpha, beta = p.beta;
    const double eps = static_cast<double>(p.eps);
    const double amp = std::sqrt(A) / alpha;

    if (type == SurfaceType::TypeI) {
        auto f = [=](double u) {
            const Jet2 uj = Jet2::variable(u);
            const Jet2 root = sqrt(A + beta * beta * uj * uj);
            const Jet2 phase = eps * (alpha / beta) * ln(abs(beta * uj + root)) + C;
            return amp * sin(phase);
        };
        return Meridian::closed_form(std::move(f), Meridian::identity_fn(), Interval::all());
    }

    const double lo = std::sqrt(A) / beta;
    auto f = [=](double u) {
        const Jet2 uj = Jet2::variable(u);
        const Jet2 root = sqrt(beta * beta * uj * uj - A);
        const Jet2 phase = eps * (alpha / beta) * ln(abs(beta * uj + root)) + C;
        return amp * sin(phase);
    };
    // open lower endpoint: the jet blows up where beta^2 u^2 = A
    return Meridian::closed_form(std::move(f), Meridian::identity_fn(),
                                 {lo, std::numeric_limits<double>::infinity()});
}

Interval pnmc_type2_domain(double C, double alpha, double beta) {
    const double c = std::abs(C);
    return {alpha * c / std::sqrt(alpha * alpha + beta * beta), c};
}

Meridian pnmc_meridian(SurfaceType type, double C, double alpha, double beta, int sign) {
    if (C == 0.0) throw Error("pnmc meridian needs C != 0");
    if (sign != 1 && sign != -1) throw Error("pnmc meridian sign must be +1 or -1");
    const double C2 = C * C;
    const double s = static_cast<double>(sign);

    if (type == SurfaceType::TypeI) {
        auto f = [=](double u) {
            const Jet2 uj = Jet2::variable(u);
            return s * sqrt(uj * uj + C2);
        };
        return Meridian::closed_form(std::move(f), Meridian::identity_fn(), Interval::all());
    }

    const Interval dom = pnmc_type2_domain(C, alpha, beta);
    if (!(dom.lo < dom.hi)) throw Error("pnmc type II validity clip is empty");
    auto f = [=](double u) {
        const Jet2 uj = Jet2::variable(u);
        return s * sqrt(C2 - uj * uj);
    };
    return Meridian::closed_form(std::move(f), Meridian::identity_fn(), dom);
}

double ode_rhs(const SpecialClass& cls, SurfaceType type, double alpha, double beta, double u,
               double f, double fp) {
    const double a2 = alpha * alpha, b2 = beta * beta;
    const double mixed = a2 * f + b2 * u * fp;  // a^2 f g' + b^2 f' g with g = u
    const double rot = f - u * fp;              // f g' - f' g

    if (type == SurfaceType::TypeI) {
        const double w2 = 1.0 - fp * fp;
        if (std::abs(w2) <= kTangentGuard || w2 < 0.0)
            throw SingularityError("1 - f'^2 vanished at u = " + format_shortest(u));
        const double G = a2 * f * f + b2 * u * u;
        switch (cls.kind) {
        case SpecialClassKind::Flat:
            if (std::abs(mixed) <= kFactorGuard)
                throw SingularityError("a^2 f + b^2 u f' vanished at u = " + format_shortest(u));
            return -w2 * a2 * b2 * rot * rot / (mixed * G);
        case SpecialClassKind::FlatNormal:
            return w2 * mixed / G;
        case SpecialClassKind::Cmc:
            return w2 * (-mixed / G + cls.constant * std::sqrt(w2));
        case SpecialClassKind::Minimal:
            return -w2 * mixed / G;
        case SpecialClassKind::Pnmc:
            break;
        }
        throw Error("no ODE form for this class");
    }

    const double G = a2 * f * f - b2 * u * u;
    if (std::abs(G) <= kFactorGuard)
        throw SingularityError("a^2 f^2 - b^2 u^2 vanished at u = " + format_shortest(u));
    const double e = 1.0 + fp * fp;
    switch (cls.kind) {
    case SpecialClassKind::Flat:
        if (std::abs(mixed) <= kFactorGuard)
            throw SingularityError("a^2 f + b^2 u f' vanished at u = " + format_shortest(u));
        return e * a2 * b2 * rot * rot / (G * mixed);
    case SpecialClassKind::FlatNormal:
        return e * mixed / (-G);
    case SpecialClassKind::Cmc:
        return e * (mixed / G + cls.constant * std::sqrt(e));
    case SpecialClassKind::Minimal:
        return e * mixed / G;
    case SpecialClassKind::Pnmc:
        break;
    }
    throw Error("no ODE form for this class");
}

Meridian integrate_special(const SpecialClass& cls, SurfaceType type, double alpha, double beta,
                           const IvpConfig& cfg) {
    if (!(cfg.h > 0.0)) throw Error("integration step must be positive");
    if (cfg.u_end == cfg.u0) throw Error("degenerate integration span");
    const double span = cfg.u_end - cfg.u0;
    const double dir = span > 0.0 ? 1.0 : -1.0;
    const double step = dir * cfg.h;
    const long n_full = static_cast<long>(std::floor(std::abs(span) / cfg.h + 1e-9));
    const double remainder = std::abs(span) - static_cast<double>(n_full) * cfg.h;

    auto rhs = [&](double u, double f, double fp) {
        return ode_rhs(cls, type, alpha, beta, u, f, fp);
    };

    const double a2 = alpha * alpha, b2 = beta * beta;
    auto flat_factor = [&](double u, double f, double fp) { return a2 * f + b2 * u * fp; };

    auto node_ok = [&](double u, double f, double fp) {
        if (!std::isfinite(f) || !std::isfinite(fp)) return false;
        if (type == SurfaceType::TypeI)
            return 1.0 - fp * fp > kTangentGuard && a2 * f * f + b2 * u * u > kFactorGuard;
        return a2 * f * f - b2 * u * u < -kFactorGuard;
    };

    std::vector<MeridianNode> nodes;
    double u = cfg.u0, f = cfg.f0, fp = cfg.fp0;
    // fails loudly when the very first point is singular or invalid
    double fpp = rhs(u, f, fp);
    if (!node_ok(u, f, fp))
        throw InvalidPointError("initial point violates the surface inequalities");
    nodes.push_back({u, f, fp, fpp, u, 1.0, 0.0});

    bool truncated = false;
    const long n_steps = n_full + (remainder > 1e-9 * cfg.h ? 1 : 0);
    for (long i = 0; i < n_steps; ++i) {
        const double hi = (i < n_full) ? step : dir * remainder;
        const double un = (i + 1 <= n_full) ? cfg.u0 + static_cast<double>(i + 1) * step : cfg.u_end;
        double fn, fpn, fppn;
        try {
            const double k1f = fp, k1p = rhs(u, f, fp);
            const double k2f = fp + 0.5 * hi * k1p,
                         k2p = rhs(u + 0.5 * hi, f + 0.5 * hi * k1f, fp + 0.5 * hi * k1p);
            const double k3f = fp + 0.5 * hi * k2p,
                         k3p = rhs(u + 0.5 * hi, f + 0.5 * hi * k2f, fp + 0.5 * hi * k2p);
            const double k4f = fp + hi * k3p, k4p = rhs(u + hi, f + hi * k3f, fp + hi * k3p);
            fn = f + hi / 6.0 * (k1f + 2.0 * k2f + 2.0 * k3f + k4f);
            fpn = fp + hi / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
            if (!node_ok(un, fn, fpn)) {
                truncated = true;
                break;
            }
            fppn = rhs(un, fn, fpn);
        } catch (const SingularityError&) {
            truncated = true;
            break;
        }
        // a sign flip of the guarded flat factor means it vanished inside the step
        if (cls.kind == SpecialClassKind::Flat &&
            flat_factor(un, fn, fpn) * flat_factor(u, f, fp) < 0.0) {
            truncated = true;
            break;
        }
        u = un;
        f = fn;
        fp = fpn;
        nodes.push_back({u, f, fp, fppn, u, 1.0, 0.0});
    }

    if (nodes.size() < 2)
        throw SingularityError("integration stopped immediately after the initial point");
    const bool reversed = dir < 0.0;
    if (reversed) std::reverse(nodes.begin(), nodes.end());
    return Meridian::sampled(std::move(nodes), truncated);
}

double class_residual(const SpecialClass& cls, const SurfaceSpec& spec, double u) {
    if (!validity(spec, u))
        throw InvalidPointError("surface inequalities fail at u = " + format_shortest(u));
    const MeridianJets j = spec.meridian.eval(u);
    const double f = j.f.val, fp = j.f.d1, fpp = j.f.d2;
    const double g = j.g.val, gp = j.g.d1, gpp = j.g.d2;
    const double a2 = spec.alpha * spec.alpha, b2 = spec.beta * spec.beta;
    const double curv = fpp * gp - fp * gpp;
    const double mixed = a2 * f * gp + b2 * fp * g;
    const double rot = f * gp - fp * g;
    const bool type1 = spec.type == SurfaceType::TypeI;
    const double e = type1 ? fp * fp - gp * gp : fp * fp + gp * gp;  // E of the matching type
    const double G = type1 ? a2 * f * f + b2 * g * g : a2 * f * f - b2 * g * g;

    switch (cls.kind) {
    case SpecialClassKind::Flat:
        if (type1) return a2 * b2 * rot * rot * e - curv * mixed * G;
        return a2 * b2 * rot * rot * e - curv * G * mixed;
    case SpecialClassKind::FlatNormal:
        if (type1) return curv / (gp * gp - fp * fp) - mixed / G;
        return curv / e - mixed / (-G);
    case SpecialClassKind::Minimal:
        if (type1) return curv / (gp * gp - fp * fp) + mixed / G;
        return curv / e - mixed / G;
    case SpecialClassKind::Cmc: {
        const FrenetCoeffs fc = frenet_coeffs(spec, u);
        return fc.nu1 - fc.nu2 - cls.constant;
    }
    case SpecialClassKind::Pnmc:
        return type1 ? f * fp - g * gp : f * fp + g * gp;
    }
    throw Error("unknown special class");
}

} // namespace grs
