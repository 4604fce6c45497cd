// Command-line front-end: generate family meshes, run CAMC certificates,
// integrate the cyclic ODE system and dump cross-sections.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "camc/analysis.hpp"
#include "camc/energy.hpp"
#include "camc/families.hpp"
#include "camc/mesh.hpp"
#include "camc/odes.hpp"

namespace {

using namespace camc;

struct CommonFlags {
    std::string family;
    double lambda = 1.0, mu = 0.0, c = 1.0;
    double c1 = 1.0, c2 = 0.0;
    std::optional<double> lambda0;
    double rmin = 0.1, rmax = 2.0;
    double curve_radius = 5.0, tube_radius = 0.5;
    std::optional<double> smin, smax;
    int ns = 101, ntheta = 64;
    double margin = 0.0;
    std::string jet_mode = "analytic";
    double fd_step = 1e-4;
    std::string energy = "dirichlet";
    std::string out;
    std::string format = "obj";
};

void add_grid_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--smin", f.smin, "lower end of the s-range (family default otherwise)");
    cmd->add_option("--smax", f.smax, "upper end of the s-range");
    cmd->add_option("--ns", f.ns, "samples along s")->capture_default_str();
    cmd->add_option("--ntheta", f.ntheta, "samples around the circle")->capture_default_str();
    cmd->add_option("--margin", f.margin, "inset from open domain endpoints")
        ->capture_default_str();
}

void add_family_flags(CLI::App* cmd, CommonFlags& f, bool with_rotational) {
    std::vector<std::string> fams{"type1", "type2", "type3"};
    if (with_rotational) {
        fams.insert(fams.end(), {"rotational", "paraboloid", "log", "tilted-arc"});
    }
    cmd->add_option("--family", f.family, "surface family")->check(CLI::IsMember(fams));
    cmd->add_option("--lambda", f.lambda, "family parameter lambda")->capture_default_str();
    cmd->add_option("--mu", f.mu, "family parameter mu")->capture_default_str();
    cmd->add_option("--c", f.c, "family parameter c")->capture_default_str();
    if (with_rotational) {
        cmd->add_option("--c1", f.c1, "rotational log coefficient")->capture_default_str();
        cmd->add_option("--c2", f.c2, "rotational height offset")->capture_default_str();
        cmd->add_option("--rmin", f.rmin, "rotational radial range start")->capture_default_str();
        cmd->add_option("--rmax", f.rmax, "rotational radial range end")->capture_default_str();
        cmd->add_option("--curve-radius", f.curve_radius, "tilted probe arc radius")
            ->capture_default_str();
        cmd->add_option("--tube-radius", f.tube_radius, "tilted probe circle radius")
            ->capture_default_str();
    }
}

FamilyKind parse_kind(const std::string& name) {
    if (name == "type1") return FamilyKind::TypeI;
    if (name == "type2") return FamilyKind::TypeII;
    if (name == "type3") return FamilyKind::TypeIII;
    throw DomainError("unknown cyclic family '" + name + "'");
}

CyclicFamilyParams cyclic_params(const CommonFlags& f) {
    return CyclicFamilyParams{parse_kind(f.family), f.lambda, f.mu, f.c};
}

AxiallySymmetricEnergy parse_energy(const std::string& name) {
    if (name == "dirichlet") return dirichlet_energy();
    if (name == "hyperboloid") return hyperboloid_energy();
    if (name == "isotropic") return isotropic_energy();
    throw DomainError("unknown energy '" + name + "'");
}

struct BuiltSurface {
    ParametricSurface surface;
    GridSpec grid;
    double default_lambda0 = 0.0;
    bool fd_native = false;
};

BuiltSurface build_surface(CommonFlags& f) {
    BuiltSurface out;
    if (f.family.empty()) throw DomainError("--family (or a preset) is required");
    if (f.family == "rotational" || f.family == "paraboloid" || f.family == "log") {
        RotationalProfile prof;
        if (f.family == "paraboloid")
            prof = rotational_solution(0.0, 0.0, 8.0);
        else if (f.family == "log")
            prof = rotational_solution(f.c1, f.c2, 0.0);
        else
            prof = rotational_solution(f.c1, f.c2, f.lambda0.value_or(0.0));
        out.surface = rotational_surface(prof, f.rmin, f.rmax);
        out.grid = GridSpec{f.rmin, f.rmax, f.ns, f.ntheta, f.margin};
        out.default_lambda0 = prof.lambda_camc;
    } else if (f.family == "tilted-arc") {
        const FrenetCurve arc = circular_arc_xz(f.curve_radius, -2.0, 2.0);
        const double r0 = f.tube_radius;
        out.surface = tilted_cyclic_surface(
            arc, [r0](double) { return r0; }, [](double) { return 0.0; },
            [](double) { return 0.0; }, f.fd_step);
        out.grid = GridSpec{-1.8, 1.8, f.ns, f.ntheta, f.margin};
        out.fd_native = true;
    } else {
        const CyclicFamilyParams params = cyclic_params(f);
        out.surface = cyclic_surface(params);
        out.grid = default_family_grid(params);
        out.grid.n_s = f.ns;
        out.grid.n_theta = f.ntheta;
        out.grid.margin = f.margin;
    }
    if (f.smin) out.grid.s_min = *f.smin;
    if (f.smax) out.grid.s_max = *f.smax;
    if (f.jet_mode == "fd" && !out.fd_native) {
        out.surface.jet_mode = JetMode::FiniteDifference;
        out.surface.fd_step = f.fd_step;
    }
    return out;
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw DomainError("cannot open output file '" + path + "'");
    return file;
}

void apply_generate_preset(const std::string& preset, CommonFlags& f) {
    if (preset == "fig1") {
        f.family = "type1";
        f.lambda = 2.0;
        f.mu = 0.0;
        f.c = 1.0;
        f.smin = -1.4;
        f.smax = 1.4;
    } else if (preset == "fig2") {
        f.family = "type2";
        f.lambda = 1.0;
        f.mu = 0.0;
        f.c = 0.0;
        f.smin = 0.2;
        f.smax = 2.2;
    } else if (preset == "fig3") {
        f.family = "type3";
        f.lambda = 1.0;
        f.mu = 0.0;
        f.c = 1.0;
        f.smin = 0.1;
        f.smax = 2.1;
    } else {
        throw DomainError("unknown preset '" + preset + "'");
    }
}

int run_generate(CommonFlags& f, const std::string& preset) {
    if (!preset.empty()) apply_generate_preset(preset, f);
    const BuiltSurface built = build_surface(f);
    const MeshExport mesh = tessellate(built.surface, built.grid);
    std::ofstream file;
    std::ostream& os = open_out(f.out, file);
    if (f.format == "obj")
        write_obj(os, mesh);
    else if (f.format == "json")
        write_mesh_json(os, mesh);
    else
        throw DomainError("generate supports --format obj|json");
    return 0;
}

int run_check(CommonFlags& f, double tol, std::optional<double> mode_tol,
              std::optional<double> nu3_guard) {
    const BuiltSurface built = build_surface(f);
    CertificateTolerances tols;
    tols.lambda_dev = tol;
    tols.mode = mode_tol.value_or(tol);
    const bool fd = f.jet_mode == "fd" || built.fd_native;
    tols.nu3_guard = nu3_guard.value_or(fd ? 0.2 : 0.01);
    const double lambda0 = f.lambda0.value_or(built.default_lambda0);
    const CertificateReport rep =
        camc_certificate(built.surface, parse_energy(f.energy), built.grid, lambda0, tols);
    std::ofstream file;
    std::ostream& os = open_out(f.out, file);
    os << certificate_to_json(rep).dump(2) << '\n';
    return rep.pass ? 0 : 1;
}

int run_integrate(const CommonFlags& f, const CyclicOdeState& initial, bool isotropic,
                  double s_end, double step) {
    const OdeTrajectory traj = integrate(
        initial, f.lambda, f.mu, isotropic ? OdeMode::Isotropic : OdeMode::Anisotropic, s_end,
        step);
    std::ofstream file;
    std::ostream& os = open_out(f.out, file);
    write_trajectory(os, traj);
    os << "# stop: " << stop_reason_name(traj.stop) << '\n';
    return 0;
}

int run_crosssection(CommonFlags& f, const std::string& preset, const std::string& plane,
                     int n_samples) {
    if (plane != "y=0")
        throw DomainError("crosssection: only the symmetry plane y=0 is supported");
    std::ofstream file;
    std::ostream& os = open_out(f.out, file);
    write_crosssection_header(os);
    if (preset == "fig4") {
        write_crosssection_csv(os, {FamilyKind::TypeI, 2.0, 0.0, 1.0}, -1.4, 1.4, n_samples);
        write_crosssection_csv(os, {FamilyKind::TypeII, 1.0, 0.0, 0.0}, 0.2, 2.2, n_samples);
        write_crosssection_csv(os, {FamilyKind::TypeIII, 1.0, 0.0, 1.0}, 0.1, 2.1, n_samples);
        return 0;
    }
    if (!preset.empty()) throw DomainError("unknown preset '" + preset + "'");
    const CyclicFamilyParams params = cyclic_params(f);
    GridSpec g = default_family_grid(params);
    const double lo = f.smin.value_or(g.s_min);
    const double hi = f.smax.value_or(g.s_max);
    write_crosssection_csv(os, params, lo, hi, n_samples);
    return 0;
}

int run_energy(CommonFlags& f) {
    const BuiltSurface built = build_surface(f);
    const double value =
        surface_energy_quadrature(built.surface, parse_energy(f.energy), built.grid);
    std::ofstream file;
    std::ostream& os = open_out(f.out, file);
    os << format_double(value) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"camc-kit: constant anisotropic mean curvature surface toolkit"};
    app.require_subcommand(1);

    CommonFlags f;
    std::string preset, plane = "y=0";
    double tol = 1e-6;
    std::optional<double> mode_tol, nu3_guard;
    CyclicOdeState initial;
    bool isotropic = false;
    double s_end = 1.0, step = 1e-3;
    int cs_samples = 401;

    auto* gen = app.add_subcommand("generate", "tessellate a surface and export the mesh");
    add_family_flags(gen, f, true);
    add_grid_flags(gen, f);
    gen->add_option("--preset", preset, "fig1 | fig2 | fig3 parameter presets");
    gen->add_option("--format", f.format, "obj | json")->capture_default_str();
    gen->add_option("--out", f.out, "output path (stdout otherwise)");

    auto* chk = app.add_subcommand("check", "run the CAMC certificate and report pass/fail");
    add_family_flags(chk, f, true);
    add_grid_flags(chk, f);
    chk->add_option("--energy", f.energy, "dirichlet | hyperboloid | isotropic")
        ->capture_default_str();
    chk->add_option("--lambda0", f.lambda0,
                    "target constant anisotropic mean curvature (family default otherwise)");
    chk->add_option("--mode", f.jet_mode, "analytic | fd jets")
        ->check(CLI::IsMember({"analytic", "fd"}))
        ->capture_default_str();
    chk->add_option("--fd-step", f.fd_step, "finite-difference step")->capture_default_str();
    chk->add_option("--tol", tol, "max |Lambda - lambda0| tolerance")->capture_default_str();
    chk->add_option("--mode-tol", mode_tol, "Fourier mode tolerance (defaults to --tol)");
    chk->add_option("--nu3-guard", nu3_guard,
                    "skip nodes with |nu3| inside this conditioning band");
    chk->add_option("--out", f.out, "report path (stdout otherwise)");

    auto* itg = app.add_subcommand("integrate", "integrate the cyclic ODE system (RK4)");
    itg->add_option("--lambda", f.lambda, "first-integral coefficient lambda")
        ->capture_default_str();
    itg->add_option("--mu", f.mu, "first-integral coefficient mu")->capture_default_str();
    itg->add_flag("--isotropic", isotropic, "use the isotropic system (area functional)");
    itg->add_option("--r0", initial.r, "initial radius")->required();
    itg->add_option("--rp0", initial.rp, "initial r'")->capture_default_str();
    itg->add_option("--a0", initial.a, "initial a")->capture_default_str();
    itg->add_option("--b0", initial.b, "initial b")->capture_default_str();
    itg->add_option("--s0", initial.s, "initial s")->capture_default_str();
    itg->add_option("--send", s_end, "integration endpoint")->required();
    itg->add_option("--step", step, "RK4 step")->required();
    itg->add_option("--out", f.out, "dump path (stdout otherwise)");

    auto* cs = app.add_subcommand("crosssection", "dump the y=0 cross-section polylines");
    add_family_flags(cs, f, false);
    cs->add_option("--preset", preset, "fig4 emits all three families");
    cs->add_option("--plane", plane, "cross-section plane (y=0 only)")->capture_default_str();
    cs->add_option("--smin", f.smin, "s-range start");
    cs->add_option("--smax", f.smax, "s-range end");
    cs->add_option("--ns", cs_samples, "polyline samples")->capture_default_str();
    cs->add_option("--out", f.out, "dump path (stdout otherwise)");

    auto* en = app.add_subcommand("energy", "surface energy by midpoint quadrature");
    add_family_flags(en, f, true);
    add_grid_flags(en, f);
    en->add_option("--energy", f.energy, "dirichlet | hyperboloid | isotropic")
        ->capture_default_str();
    en->add_option("--out", f.out, "output path (stdout otherwise)");

    try {
        app.parse(argc, argv);
        if (gen->parsed()) return run_generate(f, preset);
        if (chk->parsed()) return run_check(f, tol, mode_tol, nu3_guard);
        if (itg->parsed()) return run_integrate(f, initial, isotropic, s_end, step);
        if (cs->parsed()) return run_crosssection(f, preset, plane, cs_samples);
        if (en->parsed()) return run_energy(f);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const camc::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
