// Command-line front end for timelike general rotational surfaces in R^4_1:
// tabulate invariants, generate special-class meridians, run verification
// suites, and export meshes.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "grs/commands.hpp"
#include "grs/errors.hpp"

namespace {

grs::SurfaceType parse_type(const std::string& s) {
    if (s == "I" || s == "i" || s == "1") return grs::SurfaceType::TypeI;
    if (s == "II" || s == "ii" || s == "2") return grs::SurfaceType::TypeII;
    throw grs::Error("surface type must be I or II");
}

struct RangeOpt {
    std::string text;
    bool given() const { return !text.empty(); }
    grs::Range parse() const { return grs::Range::parse(text); }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"timelike general rotational surfaces in Minkowski 4-space"};
    app.require_subcommand(1);
    // --h is a real option on some subcommands, so help stays long-form only
    app.set_help_flag("--help", "print help");

    std::string type_str = "I";
    double alpha = 1.0, beta = 1.0;
    std::string f_src, g_src = "u", meridian_csv, out_path;
    RangeOpt u_range, v_range;

    auto add_surface_flags = [&](CLI::App* cmd, bool need_u_range) {
        cmd->add_option("--type", type_str, "surface type: I or II")->capture_default_str();
        cmd->add_option("--alpha", alpha, "rotation rate in the Euclidean plane")->capture_default_str();
        cmd->add_option("--beta", beta, "rotation rate in the hyperbolic plane")->capture_default_str();
        cmd->add_option("--f", f_src, "meridian f(u) expression");
        cmd->add_option("--g", g_src, "meridian g(u) expression")->capture_default_str();
        cmd->add_option("--meridian-csv", meridian_csv, "sampled meridian CSV (overrides --f/--g)");
        auto* u = cmd->add_option("--u-range", u_range.text, "u sampling range start:end:count");
        if (need_u_range) u->required();
    };

    // invariants
    auto* inv = app.add_subcommand("invariants", "tabulate all scalar invariants over a u-grid");
    inv->set_help_flag("--help", "print help");
    add_surface_flags(inv, true);
    inv->add_option("--out", out_path, "output CSV path")->required();

    // generate
    auto* gen = app.add_subcommand("generate", "generate a special-class meridian CSV");
    gen->set_help_flag("--help", "print help");
    std::string family;
    double A = 1.0, C = 1.0, cmc_c = 1.0;
    int eps = 1, sign = 1;
    double u0 = 1.0, f0 = 0.5, fp0 = 0.0, u_end = 2.0, step = 1e-3;
    gen->add_option("family", family, "minimal | pnmc | flat | flat_normal | cmc")->required();
    gen->add_option("--type", type_str, "surface type: I or II")->capture_default_str();
    gen->add_option("--alpha", alpha, "")->capture_default_str();
    gen->add_option("--beta", beta, "")->capture_default_str();
    gen->add_option("--A", A, "minimal family constant A > 0")->capture_default_str();
    gen->add_option("--C", C, "minimal phase constant / pnmc constant")->capture_default_str();
    gen->add_option("--eps", eps, "minimal branch, +1 or -1")->capture_default_str();
    gen->add_option("--sign", sign, "pnmc branch, +1 or -1")->capture_default_str();
    gen->add_option("--u-range", u_range.text, "sampling range for closed-form families");
    gen->add_option("--u0", u0, "ODE initial u")->capture_default_str();
    gen->add_option("--f0", f0, "ODE initial f")->capture_default_str();
    gen->add_option("--fp0", fp0, "ODE initial f'")->capture_default_str();
    gen->add_option("--u-end", u_end, "ODE final u")->capture_default_str();
    gen->add_option("--h", step, "RK4 step")->capture_default_str();
    gen->add_option("--c", cmc_c, "mean-curvature constant for the cmc family")->capture_default_str();
    gen->add_option("--out", out_path, "output CSV path")->required();

    // verify
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->set_help_flag("--help", "print help");
    std::string suite = "all";
    std::string ver_format = "table";
    double ode_step = 1e-3;
    ver->add_option("suite", suite,
                    "frames | oracles | flat | flat_normal | minimal | cmc | pnmc | structural | "
                    "conservation | all")
        ->capture_default_str();
    ver->add_option("--h", ode_step, "RK4 step for the ODE-backed checks")->capture_default_str();
    ver->add_option("--out", out_path, "write the JSON report here");
    ver->add_option("--format", ver_format, "table | json (json prints the report to stdout)")
        ->capture_default_str();

    // mesh
    auto* mesh = app.add_subcommand("mesh", "export the immersed surface as OBJ or CSV");
    mesh->set_help_flag("--help", "print help");
    std::string projection = "drop-x4";
    std::string mesh_format = "obj";
    add_surface_flags(mesh, true);
    mesh->add_option("--v-range", v_range.text, "v sampling range start:end:count (default [0, 2pi) x 64)");
    mesh->add_option("--format", mesh_format, "obj | csv")->capture_default_str();
    mesh->add_option("--projection", projection, "drop-x4 | drop-x3 | drop-x1")->capture_default_str();
    mesh->add_option("--out", out_path, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return grs::kExitUsage;
    }

    try {
        if (inv->parsed()) {
            grs::InvariantsConfig cfg;
            cfg.type = parse_type(type_str);
            cfg.alpha = alpha;
            cfg.beta = beta;
            cfg.source = {f_src, g_src, meridian_csv};
            cfg.u_range = u_range.parse();
            cfg.out_path = out_path;
            return grs::cmd_invariants(cfg, std::cerr);
        }
        if (gen->parsed()) {
            grs::GenerateConfig cfg;
            cfg.family = family;
            cfg.type = parse_type(type_str);
            cfg.alpha = alpha;
            cfg.beta = beta;
            cfg.A = A;
            cfg.C = C;
            cfg.eps = eps;
            cfg.sign = sign;
            if (u_range.given()) cfg.u_range = u_range.parse();
            cfg.ivp = {u0, f0, fp0, u_end, step};
            cfg.c = cmc_c;
            cfg.out_path = out_path;
            return grs::cmd_generate(cfg, std::cerr);
        }
        if (ver->parsed()) {
            grs::VerifyConfig cfg;
            cfg.suite = suite;
            cfg.ode_step = ode_step;
            cfg.out_path = out_path;
            cfg.json_to_stdout = ver_format == "json";
            return grs::cmd_verify(cfg, std::cout, std::cerr);
        }
        if (mesh->parsed()) {
            grs::MeshConfig cfg;
            cfg.type = parse_type(type_str);
            cfg.alpha = alpha;
            cfg.beta = beta;
            cfg.source = {f_src, g_src, meridian_csv};
            cfg.u_range = u_range.parse();
            if (v_range.given()) cfg.v_range = v_range.parse();
            cfg.format = mesh_format;
            cfg.projection = projection;
            cfg.out_path = out_path;
            return grs::cmd_mesh(cfg, std::cerr);
        }
    } catch (const grs::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return grs::kExitUsage;
    }
    return grs::kExitUsage;
}
