#pragma once

#include "grs/meridian.hpp"
#include "grs/minkowski.hpp"

namespace grs {

/// I: timelike meridian, immersion (f cos av, f sin av, g sinh bv, g cosh bv).
/// II: spacelike meridian, immersion (f cos av, f sin av, g cosh bv, g sinh bv).
enum class SurfaceType { TypeI, TypeII };

struct SurfaceSpec {
    SurfaceType type;
    double alpha;
    double beta;
    Meridian meridian;

    SurfaceSpec(SurfaceType t, double a, double b, Meridian m);
};

struct FirstForm {
    double E, F, G;
};

struct Frame {
    Vec4 x, y, n1, n2;
};

struct PositionJets {
    Vec4 zu, zv, zuu, zuv, zvv;
};

/// sign of <x,x> for the unit tangent along the meridian: -1 for type I, +1 for type II
inline double tangent_sign(SurfaceType t) { return t == SurfaceType::TypeI ? -1.0 : 1.0; }

/// Both strict surface inequalities of the matching type, with a guard band of
/// 1e-12 against numerically degenerate points.
bool validity(const SurfaceSpec& spec, double u);

Vec4 position(const SurfaceSpec& spec, double u, double v);

/// (E, F, G) with F identically zero; E<0, G>0 for type I and E>0, G<0 for type II.
FirstForm first_form(const SurfaceSpec& spec, double u);

/// Orthonormal moving frame {x, y, n1, n2}. Fails loudly when the Gram matrix
/// strays more than 1e-8 from diag(ex, ey, 1, 1).
Frame frame(const SurfaceSpec& spec, double u, double v);

/// First and second partial derivatives of the immersion at (u, v).
PositionJets position_jets(const SurfaceSpec& spec, double u, double v);

} // namespace grs
