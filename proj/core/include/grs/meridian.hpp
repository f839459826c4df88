#pragma once

#include <functional>
#include <iosfwd>
#include <limits>
#include <vector>

#include "grs/expr.hpp"
#include "grs/jet.hpp"

namespace grs {

struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    bool contains(double u) const { return u >= lo && u <= hi; }
    static Interval all() { return {}; }
};

/// One node of a tabulated meridian; fp/fpp are u-derivatives.
struct MeridianNode {
    double u, f, fp, fpp, g, gp, gpp;
};

struct MeridianJets {
    Jet2 f, g;
};

enum class MeridianKind { ClosedForm, Sampled };

/// Profile curve (f(u), g(u)) with exact second-order derivative access.
///
/// Closed-form meridians evaluate a jet function (usually a parsed expression
/// run through forward AD). Sampled meridians hold a strictly increasing
/// u-grid of jets and interpolate with the cubic Hermite of (value, d1);
/// between nodes the second derivative is that of the Hermite cubic, at a
/// node the stored jet is returned untouched.
class Meridian {
public:
    using JetFn = std::function<Jet2(double)>;

    static Meridian closed_form(JetFn f, JetFn g, Interval domain);
    static Meridian from_exprs(const Expr& f, const Expr& g, Interval domain);
    static Meridian from_strings(std::string_view f_src, std::string_view g_src, Interval domain);
    /// identity second component, the reduced parametrization g(u) = u
    static JetFn identity_fn();

    static Meridian sampled(std::vector<MeridianNode> nodes, bool truncated = false);

    MeridianKind kind() const noexcept { return kind_; }
    const Interval& domain() const noexcept { return domain_; }
    bool truncated() const noexcept { return truncated_; }
    const std::vector<MeridianNode>& nodes() const;

    /// Throws OutOfDomainError outside the domain, DomainError on evaluation
    /// failures of the underlying expressions.
    MeridianJets eval(double u) const;

    /// Central-difference jets from values only; the independent cross-check
    /// for the AD path. Requires [u-h, u+h] inside the domain.
    MeridianJets fd_oracle(double u, double h) const;

    /// Tabulate a closed-form meridian at the given (sorted) grid.
    Meridian resampled(const std::vector<double>& grid) const;

private:
    Meridian() = default;

    MeridianKind kind_ = MeridianKind::ClosedForm;
    Interval domain_;
    bool truncated_ = false;
    JetFn f_, g_;
    std::vector<MeridianNode> nodes_;
};

/// CSV schema: header `u,f,fp,fpp,g,gp,gpp`, one row per node, 17 significant digits.
void write_meridian_csv(std::ostream& os, const Meridian& m);
Meridian read_meridian_csv(std::istream& is);

} // namespace grs
