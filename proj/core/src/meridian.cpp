#include "grs/meridian.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include "grs/errors.hpp"
#include "grs/numfmt.hpp"

namespace grs {

namespace {

// Hermite basis of (value, slope) data on [0,1], with first and second
// t-derivatives; scaled by the segment width at the call site.
struct HermiteWeights {
    double v, d1, d2;
};

HermiteWeights hermite(double t, double h, double y0, double m0, double y1, double m1) {
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
    const double d00 = 6 * t2 - 6 * t, d10 = 3 * t2 - 4 * t + 1;
    const double d01 = -6 * t2 + 6 * t, d11 = 3 * t2 - 2 * t;
    const double s00 = 12 * t - 6, s10 = 6 * t - 4;
    const double s01 = -12 * t + 6, s11 = 6 * t - 2;
    return {
        h00 * y0 + h10 * h * m0 + h01 * y1 + h11 * h * m1,
        (d00 * y0 + d01 * y1) / h + d10 * m0 + d11 * m1,
        (s00 * y0 + s01 * y1) / (h * h) + (s10 * m0 + s11 * m1) / h,
    };
}

} // namespace

Meridian Meridian::closed_form(JetFn f, JetFn g, Interval domain) {
    Meridian m;
    m.kind_ = MeridianKind::ClosedForm;
    m.domain_ = domain;
    m.f_ = std::move(f);
    m.g_ = std::move(g);
    return m;
}

Meridian Meridian::from_exprs(const Expr& f, const Expr& g, Interval domain) {
    return closed_form([f](double u) { return f.eval_at(u); },
                       [g](double u) { return g.eval_at(u); }, domain);
}

Meridian Meridian::from_strings(std::string_view f_src, std::string_view g_src, Interval domain) {
    return from_exprs(Expr::parse(f_src), Expr::parse(g_src), domain);
}

Meridian::JetFn Meridian::identity_fn() {
    return [](double u) { return Jet2::variable(u); };
}

Meridian Meridian::sampled(std::vector<MeridianNode> nodes, bool truncated) {
    if (nodes.size() < 2) throw Error("sampled meridian needs at least two nodes");
    for (std::size_t i = 1; i < nodes.size(); ++i)
        if (!(nodes[i].u > nodes[i - 1].u))
            throw Error("sampled meridian grid must be strictly increasing");
    Meridian m;
    m.kind_ = MeridianKind::Sampled;
    m.domain_ = {nodes.front().u, nodes.back().u};
    m.truncated_ = truncated;
    m.nodes_ = std::move(nodes);
    return m;
}

const std::vector<MeridianNode>& Meridian::nodes() const {
    if (kind_ != MeridianKind::Sampled) throw Error("nodes() requires a sampled meridian");
    return nodes_;
}

MeridianJets Meridian::eval(double u) const {
    if (!domain_.contains(u))
        throw OutOfDomainError("u = " + format_shortest(u) + " outside meridian domain [" +
                               format_shortest(domain_.lo) + ", " + format_shortest(domain_.hi) + "]");
    if (kind_ == MeridianKind::ClosedForm) {
        MeridianJets j{f_(u), g_(u)};
        if (!is_finite(j.f) || !is_finite(j.g)) throw DomainError("meridian jet is non-finite");
        return j;
    }

    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), u,
                               [](const MeridianNode& n, double x) { return n.u < x; });
    if (it != nodes_.end() && it->u == u) {
        return {{it->f, it->fp, it->fpp}, {it->g, it->gp, it->gpp}};
    }
    const std::size_t hi = static_cast<std::size_t>(it - nodes_.begin());
    const std::size_t lo = hi - 1; // u > nodes_.front().u here since u != node and u >= lo bound
    const MeridianNode& a = nodes_[lo];
    const MeridianNode& b = nodes_[hi];
    const double h = b.u - a.u;
    const double t = (u - a.u) / h;
    const auto f = hermite(t, h, a.f, a.fp, b.f, b.fp);
    const auto g = hermite(t, h, a.g, a.gp, b.g, b.gp);
    return {{f.v, f.d1, f.d2}, {g.v, g.d1, g.d2}};
}

MeridianJets Meridian::fd_oracle(double u, double h) const {
    if (h <= 0.0) throw Error("fd_oracle step must be positive");
    if (!domain_.contains(u - h) || !domain_.contains(u + h))
        throw OutOfDomainError("stencil [u-h, u+h] outside meridian domain");
    const MeridianJets jm = eval(u - h);
    const MeridianJets j0 = eval(u);
    const MeridianJets jp = eval(u + h);
    auto stencil = [h](double ym, double y0, double yp) {
        return Jet2{y0, (yp - ym) / (2.0 * h), (yp - 2.0 * y0 + ym) / (h * h)};
    };
    return {stencil(jm.f.val, j0.f.val, jp.f.val), stencil(jm.g.val, j0.g.val, jp.g.val)};
}

Meridian Meridian::resampled(const std::vector<double>& grid) const {
    std::vector<MeridianNode> nodes;
    nodes.reserve(grid.size());
    for (double u : grid) {
        const MeridianJets j = eval(u);
        nodes.push_back({u, j.f.val, j.f.d1, j.f.d2, j.g.val, j.g.d1, j.g.d2});
    }
    return sampled(std::move(nodes));
}

void write_meridian_csv(std::ostream& os, const Meridian& m) {
    os << "u,f,fp,fpp,g,gp,gpp\n";
    for (const MeridianNode& n : m.nodes()) {
        os << format_full(n.u) << ',' << format_full(n.f) << ',' << format_full(n.fp) << ','
           << format_full(n.fpp) << ',' << format_full(n.g) << ',' << format_full(n.gp) << ','
           << format_full(n.gpp) << '\n';
    }
}

Meridian read_meridian_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw Error("empty meridian CSV");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "u,f,fp,fpp,g,gp,gpp")
        throw Error("bad meridian CSV header: '" + line + "'");

    std::vector<MeridianNode> nodes;
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        double v[7];
        std::size_t start = 0;
        for (int k = 0; k < 7; ++k) {
            const std::size_t comma = line.find(',', start);
            const bool last = (k == 6);
            if (last != (comma == std::string::npos))
                throw Error("meridian CSV line " + std::to_string(lineno) + ": expected 7 fields");
            const std::string_view field = std::string_view(line).substr(
                start, last ? std::string::npos : comma - start);
            const auto parsed = parse_double(field);
            if (!parsed) throw Error("meridian CSV line " + std::to_string(lineno) + ": bad number '" +
                                     std::string(field) + "'");
            v[k] = *parsed;
            start = comma + 1;
        }
        nodes.push_back({v[0], v[1], v[2], v[3], v[4], v[5], v[6]});
    }
    return Meridian::sampled(std::move(nodes));
}

} // namespace grs
