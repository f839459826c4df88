#include "grs/commands.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "grs/errors.hpp"
#include "grs/invariants.hpp"
#include "grs/numfmt.hpp"

namespace grs {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path, std::ios::binary);  // binary keeps line endings byte-stable
    if (!os) throw Error("cannot open output file '" + path + "'");
    return os;
}

void append_cell(std::string& row, double v) {
    row += ',';
    row += format_full(v);
}

} // namespace

std::vector<double> Range::nodes() const {
    std::vector<double> xs;
    xs.reserve(static_cast<std::size_t>(count));
    const double denom = half_open ? static_cast<double>(count) : static_cast<double>(count - 1);
    for (int i = 0; i < count; ++i)
        xs.push_back(start + (end - start) * static_cast<double>(i) / denom);
    return xs;
}

Range Range::parse(std::string_view text) {
    const std::size_t c1 = text.find(':');
    const std::size_t c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
    if (c1 == std::string_view::npos || c2 == std::string_view::npos)
        throw Error("range must have the form start:end:count");
    const auto start = parse_double(text.substr(0, c1));
    const auto end = parse_double(text.substr(c1 + 1, c2 - c1 - 1));
    const auto countv = parse_double(text.substr(c2 + 1));
    if (!start || !end || !countv || *countv != std::floor(*countv))
        throw Error("range must have the form start:end:count");
    const int count = static_cast<int>(*countv);
    if (count < 2) throw Error("range count must be at least 2");
    if (!(*start < *end)) throw Error("range start must be below end");
    return {*start, *end, count, false};
}

Range Range::default_v_range() { return {0.0, 2.0 * std::numbers::pi, 64, true}; }

Meridian MeridianSource::load(const Interval& domain) const {
    if (!csv_path.empty()) {
        std::ifstream is(csv_path, std::ios::binary);
        if (!is) throw Error("cannot open meridian CSV '" + csv_path + "'");
        return read_meridian_csv(is);
    }
    if (f_src.empty()) throw Error("no meridian given: need --f or --meridian-csv");
    return Meridian::from_strings(f_src, g_src.empty() ? "u" : g_src, domain);
}

int cmd_invariants(const InvariantsConfig& cfg, std::ostream& err) try {
    SurfaceSpec spec = [&] {
        Interval dom{cfg.u_range.start, cfg.u_range.end};
        return SurfaceSpec(cfg.type, cfg.alpha, cfg.beta, cfg.source.load(dom));
    }();

    std::string body = "u,valid,E,F,G,K,H1,H2,Hnorm2,kappa,gamma,mu,nu1,nu2,phi,D1,D2,D3\n";
    std::size_t n_valid = 0;
    for (double u : cfg.u_range.nodes()) {
        const InvariantSample s = invariant_sample(spec, u);
        std::string row = format_full(u);
        if (!s.valid) {
            row += ",0";
            row.append(16, ',');
        } else {
            ++n_valid;
            row += ",1";
            for (double v : {s.E, s.F, s.G, s.K, s.H1, s.H2, s.Hnorm2, s.kappa, s.gamma, s.mu,
                             s.nu1, s.nu2, s.phi, s.D1, s.D2, s.D3})
                append_cell(row, v);
        }
        body += row;
        body += '\n';
    }
    if (n_valid == 0) {
        err << "error: no valid point in the requested u-range\n";
        return kExitUsage;
    }
    auto os = open_out(cfg.out_path);
    os << body;
    return kExitOk;
} catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
}

int cmd_generate(const GenerateConfig& cfg, std::ostream& err) try {
    Meridian result = [&]() -> Meridian {
        if (cfg.family == "minimal") {
            const MinimalParams p{cfg.A, cfg.C, cfg.eps, cfg.alpha, cfg.beta};
            const Meridian m = minimal_meridian(cfg.type, p);
            Range r;
            if (cfg.u_range) {
                r = *cfg.u_range;
            } else if (cfg.type == SurfaceType::TypeI) {
                r = Range{-2.0, 2.0, 201};
            } else {
                const double lo = m.domain().lo;
                const double margin = 0.05 * (1.0 + lo);
                r = Range{lo + margin, lo + margin + 2.0, 201};
            }
            return m.resampled(r.nodes());
        }
        if (cfg.family == "pnmc") {
            const Meridian m = pnmc_meridian(cfg.type, cfg.C, cfg.alpha, cfg.beta, cfg.sign);
            Range r;
            if (cfg.u_range) {
                r = *cfg.u_range;
            } else if (cfg.type == SurfaceType::TypeI) {
                r = Range{-2.0, 2.0, 201};
            } else {
                const double margin = 0.02 * (m.domain().hi - m.domain().lo);
                r = Range{m.domain().lo + margin, m.domain().hi - margin, 201};
            }
            return m.resampled(r.nodes());
        }
        SpecialClass cls = SpecialClass::flat();
        if (cfg.family == "flat") cls = SpecialClass::flat();
        else if (cfg.family == "flat_normal") cls = SpecialClass::flat_normal();
        else if (cfg.family == "cmc") cls = SpecialClass::cmc(cfg.c);
        else throw Error("unknown family '" + cfg.family + "'");
        return integrate_special(cls, cfg.type, cfg.alpha, cfg.beta, cfg.ivp);
    }();

    auto os = open_out(cfg.out_path);
    write_meridian_csv(os, result);
    if (result.truncated()) {
        err << "warning: integration truncated at u = " << format_shortest(result.nodes().back().u)
            << " before reaching the requested endpoint\n";
        return kExitTruncated;
    }
    return kExitOk;
} catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
}

int cmd_verify(const VerifyConfig& cfg, std::ostream& out, std::ostream& err) {
    std::vector<CheckReport> reports;
    try {
        reports = run_suite(cfg.suite, VerifyOptions{cfg.ode_step});
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    const std::string json = reports_to_json(reports);
    if (cfg.json_to_stdout) {
        out << json;
    } else {
        out << "suite '" << cfg.suite << "' (seed 0x5EED)\n";
        print_reports(out, reports);
    }
    if (!cfg.out_path.empty()) {
        auto os = open_out(cfg.out_path);
        os << json;
    }
    return all_passed(reports) ? kExitOk : kExitVerifyFailed;
}

int cmd_mesh(const MeshConfig& cfg, std::ostream& err) try {
    SurfaceSpec spec = [&] {
        Interval dom{cfg.u_range.start, cfg.u_range.end};
        return SurfaceSpec(cfg.type, cfg.alpha, cfg.beta, cfg.source.load(dom));
    }();

    const std::vector<double> us = cfg.u_range.nodes();
    const std::vector<double> vs = cfg.v_range.nodes();

    std::size_t n_valid = 0;
    for (double u : us)
        if (validity(spec, u)) ++n_valid;
    if (n_valid == 0) {
        err << "error: empty valid grid\n";
        return kExitUsage;
    }
    if (n_valid != us.size()) {
        err << "error: grid contains invalid u rows; shrink --u-range\n";
        return kExitUsage;
    }

    std::vector<Vec4> points;
    points.reserve(us.size() * vs.size());
    for (double u : us)
        for (double v : vs) points.push_back(position(spec, u, v));

    auto os = open_out(cfg.out_path);
    if (cfg.format == "csv") {
        os << "u,v,x1,x2,x3,x4\n";
        std::size_t idx = 0;
        for (double u : us)
            for (double v : vs) {
                const Vec4& z = points[idx++];
                os << format_full(u) << ',' << format_full(v) << ',' << format_full(z.x1) << ','
                   << format_full(z.x2) << ',' << format_full(z.x3) << ',' << format_full(z.x4)
                   << '\n';
            }
        return kExitOk;
    }
    if (cfg.format != "obj") {
        err << "error: mesh format must be obj or csv\n";
        return kExitUsage;
    }

    // project away one coordinate; the CSV point cloud is the lossless form
    int drop;
    if (cfg.projection == "drop-x4") drop = 3;
    else if (cfg.projection == "drop-x3") drop = 2;
    else if (cfg.projection == "drop-x1") drop = 0;
    else {
        err << "error: projection must be drop-x4, drop-x3, or drop-x1\n";
        return kExitUsage;
    }

    for (const Vec4& z : points) {
        const double c[4] = {z.x1, z.x2, z.x3, z.x4};
        os << 'v';
        for (int k = 0; k < 4; ++k)
            if (k != drop) os << ' ' << format_full(c[k]);
        os << '\n';
    }
    // row-major vertex order: index(iu, iv) = iu * nv + iv, quads split into two triangles
    const long nv = static_cast<long>(vs.size());
    for (long iu = 0; iu + 1 < static_cast<long>(us.size()); ++iu) {
        for (long iv = 0; iv + 1 < nv; ++iv) {
            const long a = iu * nv + iv + 1;
            const long b = iu * nv + iv + 2;
            const long c = (iu + 1) * nv + iv + 2;
            const long d = (iu + 1) * nv + iv + 1;
            os << "f " << a << ' ' << b << ' ' << c << '\n';
            os << "f " << a << ' ' << c << ' ' << d << '\n';
        }
    }
    return kExitOk;
} catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
}

} // namespace grs
