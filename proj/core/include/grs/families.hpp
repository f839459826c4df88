#pragma once

#include "grs/invariants.hpp"
#include "grs/meridian.hpp"
#include "grs/surface.hpp"

namespace grs {

enum class SpecialClassKind { Flat, FlatNormal, Minimal, Cmc, Pnmc };

/// The special class together with its constant where one is carried
/// (c for constant mean curvature, C for the parallel-normalized family).
struct SpecialClass {
    SpecialClassKind kind;
    double constant = 0.0;

    static SpecialClass flat() { return {SpecialClassKind::Flat}; }
    static SpecialClass flat_normal() { return {SpecialClassKind::FlatNormal}; }
    static SpecialClass minimal() { return {SpecialClassKind::Minimal}; }
    static SpecialClass cmc(double c);
    static SpecialClass pnmc(double C);
};

struct MinimalParams {
    double A;        // > 0
    double C;        // integration constant in the phase
    int eps = +1;    // +1 or -1 branch
    double alpha = 1.0;
    double beta = 1.0;
};

/// Initial data for the second-order ODE generators; the theorems pin the
/// equations but say nothing about initial conditions or spans, so the choice
/// stays with the caller.
struct IvpConfig {
    double u0;
    double f0;
    double fp0;
    double u_end;
    double h;  // > 0
};

/// Minimal-surface meridian:
///   f(u) = (sqrt(A)/alpha) sin(eps (alpha/beta) ln|beta u + sqrt(A + beta^2 u^2)| + C)
/// for type I, with A + beta^2 u^2 replaced by beta^2 u^2 - A for type II
/// (domain beta^2 u^2 > A, positive branch). g(u) = u in both cases.
Meridian minimal_meridian(SurfaceType type, const MinimalParams& p);

/// Parallel-normalized-mean-curvature meridian: f = sign*sqrt(u^2 + C^2) for
/// type I (any u), f = sign*sqrt(C^2 - u^2) on the validity-clipped positive
/// branch (alpha |C| / sqrt(alpha^2 + beta^2), |C|) for type II. g(u) = u.
Meridian pnmc_meridian(SurfaceType type, double C, double alpha, double beta, int sign = +1);

/// Endpoints of the type II pnmc validity clip for the positive branch.
Interval pnmc_type2_domain(double C, double alpha, double beta);

/// f'' solving the characterizing ODE of the class in the reduced
/// parametrization g = u. Throws SingularityError when a guarded denominator
/// factor vanishes (|1 - f'^2| <= 1e-10 for type I, |a^2 f^2 - b^2 u^2| <=
/// 1e-12 for type II, |a^2 f + b^2 u f'| <= 1e-12 for the flat class).
double ode_rhs(const SpecialClass& cls, SurfaceType type, double alpha, double beta, double u,
               double f, double fp);

/// Classic fixed-step RK4 on (f, f'). Every emitted node stores the exact
/// jet (f, f', f'' = ode_rhs). Integration truncates (flag on the returned
/// meridian) when a guard trips, a node goes non-finite or invalid, or a
/// guarded factor changes sign across a step.
Meridian integrate_special(const SpecialClass& cls, SurfaceType type, double alpha, double beta,
                           const IvpConfig& cfg);

/// Left-minus-right of the class's characterizing identity in its
/// pre-reduction form (valid for a general g), evaluated from jets at u.
double class_residual(const SpecialClass& cls, const SurfaceSpec& spec, double u);

} // namespace grs
