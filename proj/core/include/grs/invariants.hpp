#pragma once

#include "grs/surface.hpp"

namespace grs {

/// Coefficients c^k_ij = <z_ij, n_k> of the second fundamental tensor.
struct SecondFormCoeffs {
    double c11_1, c12_1, c22_1;
    double c11_2, c12_2, c22_2;
};

struct MeanCurvature {
    double H1, H2;  // components along n1, n2
    double Hnorm2;  // <H, H> = H1^2 + H2^2 (both normals spacelike)
};

struct NormalConnection {
    double dxn;  // n2-coefficient of D_x n1, identically zero
    double dyn;  // n2-coefficient of D_y n1
};

struct FrenetCoeffs {
    double gamma, mu, nu1, nu2, phi;
};

struct DeltaInvariants {
    double D1, D2, D3;
    bool is_inflection;
};

struct InvariantSample {
    double u = 0.0;
    double E = 0.0, F = 0.0, G = 0.0;
    double K = 0.0;
    double H1 = 0.0, H2 = 0.0, Hnorm2 = 0.0;
    double kappa = 0.0;
    double gamma = 0.0, mu = 0.0, nu1 = 0.0, nu2 = 0.0, phi = 0.0;
    double D1 = 0.0, D2 = 0.0, D3 = 0.0;
    bool valid = false;
};

/// Generic route via position_jets and the moving frame; for type I this
/// reproduces the closed forms below to roundoff.
SecondFormCoeffs second_form_coeffs(const SurfaceSpec& spec, double u, double v = 0.0);

/// Type I closed forms (c11_1 = c22_1 = c12_2 = 0 structurally). Type I only.
SecondFormCoeffs second_form_coeffs_closed(const SurfaceSpec& spec, double u);

/// Gauss curvature, closed form of the matching type.
double gauss_curvature(const SurfaceSpec& spec, double u);

/// Independent route: K from the Gauss equation with the second fundamental
/// tensor obtained by projecting z_ij off the tangent plane (no use of the
/// n1/n2 closed forms).
double gauss_curvature_gauss_equation(const SurfaceSpec& spec, double u, double v = 0.0);

/// Normative mean curvature: the metric half-trace per normal direction,
///   H^k = (G c11_k + E c22_k - 2F c12_k) / (2(EG - F^2)).
MeanCurvature mean_curvature(const SurfaceSpec& spec, double u);

/// The single displayed H coefficient (along n2 for type I, n1 for type II),
/// used as a cross-check; for type II it differs from the trace route by an
/// overall sign.
double mean_curvature_display(const SurfaceSpec& spec, double u);

/// H1 n1 + H2 n2 as an ambient vector at (u, v).
Vec4 mean_curvature_vector(const SurfaceSpec& spec, double u, double v = 0.0);

NormalConnection normal_connection_coeffs(const SurfaceSpec& spec, double u);

/// Curvature of the normal connection, closed form.
double normal_curvature(const SurfaceSpec& spec, double u);

/// Independent route: kappa = lambda*phi - x(phi) from the normal-connection
/// coefficient, its grid derivative (central difference with step h), and the
/// commutator coefficient. O(h^2) accurate.
double normal_curvature_fd(const SurfaceSpec& spec, double u, double h);

FrenetCoeffs frenet_coeffs(const SurfaceSpec& spec, double u);

DeltaInvariants delta_invariants(const SurfaceSpec& spec, double u, double tol = 1e-10);

/// lambda with [x, y] = lambda y. Equals gamma for type I and -gamma for
/// type II (the published type I display carries the opposite sign; the value
/// here is the one consistent with the Frenet formulas and with a direct
/// difference-quotient commutator).
double commutator_coefficient(const SurfaceSpec& spec, double u);

/// All scalar invariants at one u (evaluated at v = 0). Never throws: points
/// that are invalid or fail to evaluate come back with valid = false.
InvariantSample invariant_sample(const SurfaceSpec& spec, double u);

/// Residuals of the three flat-ambient structural identities (type I),
///   x(mu) - (2 mu gamma - nu1 phi),
///   x(nu2) - (gamma (nu1 + nu2) + mu phi),
///   x(gamma) - (nu1 nu2 - mu^2 + gamma^2),
/// with x(h) the tangential derivative along the unit meridian direction,
/// approximated by a central difference with step h.
struct StructuralResiduals {
    double mu_eq, nu2_eq, gamma_eq;
};
StructuralResiduals structural_residuals(const SurfaceSpec& spec, double u, double h);

} // namespace grs
