#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grs/surface.hpp"

namespace grs {

struct CheckReport {
    std::string check_name;
    std::size_t n_points = 0;
    double max_abs_residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;  // max_abs_residual <= tolerance
    std::string notes;
};

struct VerifyOptions {
    double ode_step = 1e-3;  // RK4 step for the ODE-backed suites
};

/// Suite names: frames, oracles, flat, flat_normal, minimal, cmc, pnmc,
/// structural, conservation, all. Deterministic: random points come from a
/// fixed seed. Throws Error for an unknown suite.
std::vector<CheckReport> run_suite(std::string_view suite_name, const VerifyOptions& opts = {});

bool all_passed(const std::vector<CheckReport>& reports);

/// Residual-vs-step study with a fitted log-log convergence order. The fit is
/// skipped (nullopt) when the residuals sit at the roundoff floor. Known
/// checks: "ad-vs-fd:<expr>" and "structural:mu" / "structural:nu2" /
/// "structural:gamma".
struct FdConvergencePoint {
    double h;
    double residual;
};
struct FdConvergence {
    std::vector<FdConvergencePoint> points;
    std::optional<double> order;
};
FdConvergence fd_convergence(std::string_view check, std::span<const double> hs);

/// The fixed corpus used by the random-point checks: six surfaces (three per
/// type) with their declared valid u-intervals.
struct TestSurface {
    std::string name;
    SurfaceSpec spec;
    Interval range;
};
const std::vector<TestSurface>& fixed_test_surfaces();

std::string reports_to_json(const std::vector<CheckReport>& reports);
void print_reports(std::ostream& os, const std::vector<CheckReport>& reports);

} // namespace grs
