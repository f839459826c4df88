#pragma once

#include <optional>
#include <string>

#include "grs/families.hpp"
#include "grs/surface.hpp"
#include "grs/verify.hpp"

namespace grs {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitTruncated = 3;

/// "start:end:count" sampling range. User ranges are inclusive; the default
/// v-range [0, 2pi) is half-open so a full turn is not double-counted.
struct Range {
    double start = 0.0;
    double end = 1.0;
    int count = 2;
    bool half_open = false;

    std::vector<double> nodes() const;
    static Range parse(std::string_view text);  // throws Error on bad syntax
    static Range default_v_range();
};

/// Meridian input: a pair of expressions, or a sampled-meridian CSV path.
struct MeridianSource {
    std::string f_src = "";
    std::string g_src = "u";
    std::string csv_path = "";  // non-empty wins over the expressions

    Meridian load(const Interval& domain) const;
};

struct InvariantsConfig {
    SurfaceType type = SurfaceType::TypeI;
    double alpha = 1.0;
    double beta = 1.0;
    MeridianSource source;
    Range u_range;
    std::string out_path;
};

struct GenerateConfig {
    std::string family;  // minimal | pnmc | flat | flat_normal | cmc
    SurfaceType type = SurfaceType::TypeI;
    double alpha = 1.0;
    double beta = 1.0;
    // minimal / pnmc
    double A = 1.0;
    double C = 1.0;
    int eps = +1;
    int sign = +1;
    std::optional<Range> u_range;  // closed-form families; defaulted per family
    // ODE families
    IvpConfig ivp{1.0, 0.5, 0.0, 2.0, 1e-3};
    double c = 1.0;  // CMC constant
    std::string out_path;
};

struct VerifyConfig {
    std::string suite = "all";
    double ode_step = 1e-3;
    std::string out_path;  // optional JSON destination
    bool json_to_stdout = false;
};

struct MeshConfig {
    SurfaceType type = SurfaceType::TypeI;
    double alpha = 1.0;
    double beta = 1.0;
    MeridianSource source;
    Range u_range;
    Range v_range = Range::default_v_range();
    std::string out_path;
    std::string format = "obj";          // obj | csv
    std::string projection = "drop-x4";  // drop-x4 | drop-x3 | drop-x1
};

/// CSV of all scalar invariants over the u-grid. Exit 0, or 2 when the
/// meridian cannot be built or no grid point is valid.
int cmd_invariants(const InvariantsConfig& cfg, std::ostream& err);

/// Sampled-meridian CSV for the requested family. Exit 0 on the full span,
/// 3 when an ODE run truncated at a guard, 2 on bad parameters.
int cmd_generate(const GenerateConfig& cfg, std::ostream& err);

/// Human-readable table to `out`; JSON array to the configured destination.
/// Exit 0 when every check passed, 1 otherwise, 2 for an unknown suite.
int cmd_verify(const VerifyConfig& cfg, std::ostream& out, std::ostream& err);

/// OBJ (projected to 3 of the 4 coordinates) or lossless CSV point cloud.
int cmd_mesh(const MeshConfig& cfg, std::ostream& err);

} // namespace grs
