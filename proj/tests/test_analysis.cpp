#include <cmath>
#include <numbers>
#include <random>

#include "camc/analysis.hpp"
#include "camc/energy.hpp"
#include "camc/families.hpp"
#include "doctest.h"

using namespace camc;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> midpoint_thetas(int M) {
    std::vector<double> th(M);
    for (int j = 0; j < M; ++j) th[j] = 2.0 * kPi * (j + 0.5) / M;
    return th;
}

}  // namespace

TEST_CASE("lambda field") {
    const auto dir = dirichlet_energy();
    SUBCASE("Type I field vanishes away from the singular band") {
        const auto surf = cyclic_surface({FamilyKind::TypeI, 2.0, 0.0, 1.0});
        GridSpec grid{-1.4, 1.4, 101, 64, 0.0};
        const ResidualField field = lambda_field(surf, dir, grid, {{0.0}, 0.01, kEpsFrame});
        CHECK(field.max_abs_dev < 1e-6);
        CHECK(field.n_valid > 6000);  // a ~1% band around nu3 = 0 is masked
        CHECK(field.partial);
        CHECK(field.n_skipped_guard > 0);
    }
    SUBCASE("paraboloid field sits at its constant") {
        const auto surf = rotational_surface(rotational_solution(0.0, 0.0, 8.0), 0.1, 2.0);
        GridSpec grid{0.1, 2.0, 40, 32, 0.0};
        const ResidualField field = lambda_field(surf, dir, grid, {{8.0}, 0.01, kEpsFrame});
        CHECK(!field.partial);
        CHECK(field.max_abs_dev < 1e-6);
    }
    SUBCASE("default target is the field mean") {
        const auto surf = rotational_surface(rotational_solution(0.0, 0.0, 8.0), 0.1, 2.0);
        GridSpec grid{0.1, 2.0, 20, 16, 0.0};
        const ResidualField field = lambda_field(surf, dir, grid);
        CHECK(field.target == doctest::Approx(8.0).epsilon(1e-9));
    }
    SUBCASE("cylinder is fully singular for the Dirichlet energy") {
        ParametricSurface cyl;
        cyl.descriptor = "cylinder";
        cyl.eval = [](double u, double th) { return Vec3{std::cos(th), std::sin(th), u}; };
        cyl.jet_mode = JetMode::FiniteDifference;
        cyl.fd_step = 1e-4;
        cyl.theta_periodic = true;
        GridSpec grid{-1.0, 1.0, 10, 16, 0.0};
        const ResidualField field = lambda_field(cyl, dir, grid);
        CHECK(field.n_valid == 0);
        CHECK(field.partial);
    }
}

TEST_CASE("fourier projection") {
    SUBCASE("constant slice") {
        const auto th = midpoint_thetas(32);
        std::vector<double> vals(32, 4.25);
        const FourierSpectrum spectrum = fourier_project(vals, th, 6);
        CHECK(spectrum.A[0] == doctest::Approx(4.25).epsilon(1e-14));
        for (int n = 1; n <= 6; ++n) {
            CHECK(std::abs(spectrum.A[static_cast<size_t>(n)]) < 1e-12);
            CHECK(std::abs(spectrum.B[static_cast<size_t>(n)]) < 1e-12);
        }
    }
    SUBCASE("pure modes recovered") {
        const auto th = midpoint_thetas(64);
        std::vector<double> vals(64);
        for (int j = 0; j < 64; ++j)
            vals[static_cast<size_t>(j)] = 3.0 * std::cos(2.0 * th[static_cast<size_t>(j)]) -
                                           std::sin(5.0 * th[static_cast<size_t>(j)]);
        const FourierSpectrum spectrum = fourier_project(vals, th, 6);
        CHECK(spectrum.A[2] == doctest::Approx(3.0).epsilon(1e-13));
        CHECK(spectrum.B[5] == doctest::Approx(-1.0).epsilon(1e-13));
        double rest = 0.0;
        for (int n = 0; n <= 6; ++n) {
            if (n != 2) rest = std::max(rest, std::abs(spectrum.A[static_cast<size_t>(n)]));
            if (n != 5) rest = std::max(rest, std::abs(spectrum.B[static_cast<size_t>(n)]));
        }
        CHECK(rest < 1e-12);
    }
    SUBCASE("aliasing gate") {
        const auto th = midpoint_thetas(16);
        std::vector<double> vals(16, 1.0);
        CHECK_THROWS_AS(fourier_project(vals, th, 5), AliasingRisk);
        CHECK_NOTHROW(fourier_project(vals, th, 4));
    }
    SUBCASE("exact for trig polynomials at M >= 2N+1") {
        std::mt19937 rng(5150);
        std::uniform_real_distribution<double> coef(-2.0, 2.0);
        for (int trial = 0; trial < 20; ++trial) {
            const int N = 5;
            std::vector<double> A(N + 1), B(N + 1);
            for (int n = 0; n <= N; ++n) {
                A[static_cast<size_t>(n)] = coef(rng);
                B[static_cast<size_t>(n)] = n == 0 ? 0.0 : coef(rng);
            }
            const int M = 11 + trial;  // from 2N+1 upward
            const auto th = midpoint_thetas(M);
            std::vector<double> vals(static_cast<size_t>(M));
            for (int j = 0; j < M; ++j) {
                double v = A[0];
                for (int n = 1; n <= N; ++n)
                    v += A[static_cast<size_t>(n)] * std::cos(n * th[static_cast<size_t>(j)]) +
                         B[static_cast<size_t>(n)] * std::sin(n * th[static_cast<size_t>(j)]);
                vals[static_cast<size_t>(j)] = v;
            }
            const FourierSpectrum spectrum = fourier_project_raw(vals, th, N);
            for (int n = 0; n <= N; ++n) {
                CHECK(std::abs(spectrum.A[static_cast<size_t>(n)] - A[static_cast<size_t>(n)]) <
                      1e-12);
                CHECK(std::abs(spectrum.B[static_cast<size_t>(n)] - B[static_cast<size_t>(n)]) <
                      1e-12);
            }
        }
    }
    SUBCASE("reconstruction matches the samples for rapidly decaying spectra") {
        const int M = 64, N = 12;
        const auto th = midpoint_thetas(M);
        std::vector<double> vals(M);
        for (int j = 0; j < M; ++j)
            vals[static_cast<size_t>(j)] = std::exp(std::cos(th[static_cast<size_t>(j)]));
        const FourierSpectrum sp = fourier_project(vals, th, N);
        for (int j = 0; j < M; ++j) {
            double rec = sp.A[0];
            for (int n = 1; n <= N; ++n)
                rec += sp.A[static_cast<size_t>(n)] * std::cos(n * th[static_cast<size_t>(j)]) +
                       sp.B[static_cast<size_t>(n)] * std::sin(n * th[static_cast<size_t>(j)]);
            CHECK(std::abs(rec - vals[static_cast<size_t>(j)]) < 1e-10);
        }
    }
    SUBCASE("family lambda slices have vanishing modes") {
        const auto dir = dirichlet_energy();
        const auto th = midpoint_thetas(64);
        std::vector<double> vals(64);
        for (const auto params : {CyclicFamilyParams{FamilyKind::TypeI, 2.0, 0.0, 1.0},
                                  CyclicFamilyParams{FamilyKind::TypeIII, 1.0, 0.0, 1.0}}) {
            const auto surf = cyclic_surface(params);
            for (int j = 0; j < 64; ++j)
                vals[static_cast<size_t>(j)] =
                    camc_lambda(jet(surf, 0.5, th[static_cast<size_t>(j)]), dir);
            const FourierSpectrum spectrum = fourier_project(vals, th, 12);
            CHECK(spectrum.max_mode_abs() < 1e-6);
        }
    }
}

TEST_CASE("frenet machinery") {
    SUBCASE("analytic arc frame") {
        const FrenetCurve arc = circular_arc_xz(5.0, -2.0, 2.0);
        const FrenetFrame f = arc.frame(0.7);
        CHECK(std::abs(norm(f.t) - 1.0) < 1e-14);
        CHECK(std::abs(norm(f.n) - 1.0) < 1e-14);
        CHECK(std::abs(dot(f.t, f.n)) < 1e-14);
        CHECK(f.kappa == doctest::Approx(0.2));
        CHECK(f.tau == 0.0);
    }
    SUBCASE("supplied frames satisfy the Frenet equations under differencing") {
        const FrenetCurve helix = helix_curve(1.0, 0.5, -3.0, 3.0);
        const double h = 1e-4;
        for (double s : {-1.0, 0.3, 2.0}) {
            const FrenetFrame f = helix.frame(s);
            CHECK(std::abs(norm(f.t) - 1.0) < 1e-8);
            CHECK(std::abs(norm(f.n) - 1.0) < 1e-8);
            CHECK(std::abs(norm(f.b) - 1.0) < 1e-8);
            CHECK(std::abs(dot(f.t, f.n)) < 1e-8);
            CHECK(std::abs(dot(f.n, f.b)) < 1e-8);
            const Vec3 tprime = (helix.frame(s + h).t - helix.frame(s - h).t) / (2.0 * h);
            CHECK(norm(tprime - f.kappa * f.n) < 1e-5);
            const Vec3 nprime = (helix.frame(s + h).n - helix.frame(s - h).n) / (2.0 * h);
            CHECK(norm(nprime - (f.tau * f.b - f.kappa * f.t)) < 1e-5);
            const Vec3 bprime = (helix.frame(s + h).b - helix.frame(s - h).b) / (2.0 * h);
            CHECK(norm(bprime + f.tau * f.n) < 1e-5);
        }
    }
    SUBCASE("finite-difference frame recovers the helix data") {
        const FrenetCurve helix = helix_curve(1.0, 0.5, -3.0, 3.0);
        const FrenetCurve fd = frenet_from_gamma("helix fd", helix.gamma, -3.0, 3.0);
        for (double s : {-1.0, 0.3, 2.0}) {
            const FrenetFrame f = fd.frame(s);
            const FrenetFrame fa = helix.frame(s);
            CHECK(norm(f.t - fa.t) < 1e-6);
            CHECK(norm(f.n - fa.n) < 1e-6);
            CHECK(std::abs(f.kappa - fa.kappa) < 1e-5);
            CHECK(std::abs(f.tau - fa.tau) < 1e-5);
        }
    }
    SUBCASE("straight line has no frame") {
        const FrenetCurve line = frenet_from_gamma(
            "line", [](double s) { return Vec3{s, 0.0, 0.0}; }, -1.0, 1.0);
        CHECK_THROWS_AS(line.frame(0.0), FrameUndefined);
    }
    SUBCASE("e3 coordinates") {
        // planar curve in the xy-plane: binormal is +-e3
        const FrenetCurve flat = frenet_from_gamma(
            "xy circle", [](double s) { return Vec3{std::cos(s), std::sin(s), 0.0}; }, -2.0, 2.0);
        const Vec3 e = frenet_e3_coordinates(flat, 0.3);
        CHECK(std::abs(e.x) < 1e-6);
        CHECK(std::abs(e.y) < 1e-6);
        CHECK(std::abs(std::abs(e.z) - 1.0) < 1e-6);

        // xz-plane arc at its lowest point: e3 lands on the normal
        const FrenetCurve arc = circular_arc_xz(5.0, -2.0, 2.0);
        const Vec3 ea = frenet_e3_coordinates(arc, 0.0);
        CHECK(std::abs(ea.x) < 1e-14);
        CHECK(std::abs(std::abs(ea.y) - 1.0) < 1e-14);
        CHECK(std::abs(ea.z) < 1e-14);

        // unit sum at generic samples
        for (double s : {-1.5, -0.2, 1.1}) {
            const Vec3 c = frenet_e3_coordinates(arc, s);
            CHECK(norm2(c) == doctest::Approx(1.0).epsilon(1e-10));
        }
    }
}

TEST_CASE("tilted cyclic surfaces") {
    const auto dir = dirichlet_energy();
    SUBCASE("arc tube builds and its lambda field is far from constant") {
        const FrenetCurve arc = circular_arc_xz(5.0, -2.0, 2.0);
        const auto tube = tilted_cyclic_surface(
            arc, [](double) { return 0.5; }, [](double) { return 0.0; },
            [](double) { return 0.0; });
        GridSpec grid{-1.8, 1.8, 31, 32, 0.0};
        const ResidualField field = lambda_field(tube, dir, grid, {std::nullopt, 0.2, kEpsFrame});
        CHECK(field.n_valid > 300);
        CHECK(field.max_abs_dev > 1e-2);  // deviation from the best constant (the mean)
    }
    SUBCASE("helix tube builds with a nonconstant field") {
        const FrenetCurve helix = helix_curve(2.0, 0.8, -2.0, 2.0);
        const auto tube = tilted_cyclic_surface(
            helix, [](double) { return 0.4; }, [](double) { return 0.0; },
            [](double) { return 0.0; });
        GridSpec grid{-1.5, 1.5, 15, 16, 0.0};
        const ResidualField field = lambda_field(tube, dir, grid, {std::nullopt, 0.2, kEpsFrame});
        CHECK(field.n_valid > 50);
        CHECK(field.max_abs_dev > 1e-2);
    }
    SUBCASE("straight-line centers are rejected") {
        const FrenetCurve line = frenet_from_gamma(
            "line", [](double s) { return Vec3{0.0, 0.0, s}; }, -1.0, 1.0);
        const auto tube = tilted_cyclic_surface(
            line, [](double) { return 0.5; }, [](double) { return 0.0; },
            [](double) { return 0.0; });
        CHECK_THROWS_AS(tube.eval(0.0, 0.3), FrameUndefined);
    }
}

TEST_CASE("local graph laplace residual") {
    const auto dir = dirichlet_energy();
    SUBCASE("plane z = x") {
        const auto g = graph_surface(
            [](double x, double) { return x; }, [](double, double) { return 1.0; },
            [](double, double) { return 0.0; }, [](double, double) { return 0.0; },
            [](double, double) { return 0.0; }, [](double, double) { return 0.0; },
            ParamRect{-2, 2, -2, 2}, "plane z=x");
        CHECK(std::abs(local_graph_laplace_residual(g, 0.2, -0.1, 0.5, 1e-3, 0.0)) < 1e-9);
    }
    SUBCASE("Wulff paraboloid against its constant") {
        const auto surf = rotational_surface(rotational_solution(0.0, 0.0, 8.0), 0.1, 3.0);
        CHECK(std::abs(local_graph_laplace_residual(surf, 1.0, 0.8, 0.5, 1e-3, 8.0)) < 1e-6);
    }
    SUBCASE("Type I harmonic height") {
        const auto surf = cyclic_surface({FamilyKind::TypeI, 2.0, 0.0, 1.0});
        CHECK(std::abs(local_graph_laplace_residual(surf, 0.3, 0.7, 0.5, 1e-3, 0.0)) < 1e-3);
    }
    SUBCASE("second-order convergence in the stencil step") {
        const auto surf = cyclic_surface({FamilyKind::TypeI, 2.0, 0.0, 1.0});
        const double r1 = std::abs(local_graph_laplace_residual(surf, 0.6, 0.9, 0.5, 8e-3, 0.0));
        const double r2 = std::abs(local_graph_laplace_residual(surf, 0.6, 0.9, 0.5, 4e-3, 0.0));
        const double ratio = r1 / r2;
        CHECK(ratio > 2.5);
        CHECK(ratio < 6.0);
    }
    SUBCASE("vertical tangent plane is not a graph") {
        const auto surf = cyclic_surface({FamilyKind::TypeII, 1.0, 0.0, 1.0});
        // theta = 0 is the z-axis tangency: (X1, X2) is singular there
        CHECK_THROWS_AS(local_graph_laplace_residual(surf, 0.5, 0.0, 0.1, 1e-3, 0.0), NotAGraph);
    }
}

TEST_CASE("camc certificate") {
    const auto dir = dirichlet_energy();
    SUBCASE("Type II passes at lambda0 = 0") {
        const CyclicFamilyParams p{FamilyKind::TypeII, 1.0, 0.0, 1.0};
        const auto rep = camc_certificate(cyclic_surface(p), dir, default_family_grid(p), 0.0);
        CHECK(rep.pass);
        CHECK(rep.max_abs_dev < 1e-6);
        CHECK(rep.max_mode_abs < 1e-6);
        CHECK(rep.n_spectrum_slices == 101);
    }
    SUBCASE("rotational log surface passes") {
        const auto surf = rotational_surface(rotational_solution(1.0, 0.0, 0.0), 0.2, 4.0);
        GridSpec grid{0.2, 4.0, 41, 32, 0.0};
        const auto rep = camc_certificate(surf, dir, grid, 0.0);
        CHECK(rep.pass);
        CHECK(!rep.worst_slice.from_identity_residual);
    }
    SUBCASE("tilted probe fails with a recorded residual") {
        const FrenetCurve arc = circular_arc_xz(5.0, -2.0, 2.0);
        const auto tube = tilted_cyclic_surface(
            arc, [](double) { return 0.5; }, [](double) { return 0.0; },
            [](double) { return 0.0; });
        CertificateTolerances tol;
        tol.nu3_guard = 0.2;
        const auto rep = camc_certificate(tube, dir, GridSpec{-1.8, 1.8, 21, 32, 0.0}, 0.0, tol);
        CHECK(!rep.pass);
        CHECK(rep.max_abs_dev > 1e-2);
    }
    SUBCASE("certificate is equivariant under vertical rotations and translations") {
        const CyclicFamilyParams p{FamilyKind::TypeI, 2.0, 0.0, 1.0};
        const auto base = cyclic_surface(p);
        const GridSpec grid = default_family_grid(p);
        const auto rep0 = camc_certificate(base, dir, grid, 0.0);
        const auto moved = translated(rotated_z(base, 1.234), Vec3{0.7, -1.1, 2.5});
        const auto rep1 = camc_certificate(moved, dir, grid, 0.0);
        CHECK(rep0.pass == rep1.pass);
        CHECK(std::abs(rep0.max_abs_dev - rep1.max_abs_dev) < 1e-9);
        CHECK(rep0.node_coverage == doctest::Approx(rep1.node_coverage).epsilon(1e-12));
    }
    SUBCASE("catenoid passes under the area functional") {
        ParametricSurface cat;
        cat.descriptor = "catenoid";
        cat.eval = [](double u, double th) {
            return Vec3{std::cosh(u) * std::cos(th), std::cosh(u) * std::sin(th), u};
        };
        cat.jets = [](double u, double th) {
            const double ch = std::cosh(u), sh = std::sinh(u);
            const double ct = std::cos(th), st = std::sin(th);
            SurfaceJet j;
            j.X = {ch * ct, ch * st, u};
            j.Xs = {sh * ct, sh * st, 1.0};
            j.Xt = {-ch * st, ch * ct, 0.0};
            j.Xss = {ch * ct, ch * st, 0.0};
            j.Xst = {-sh * st, sh * ct, 0.0};
            j.Xtt = {-ch * ct, -ch * st, 0.0};
            return j;
        };
        cat.jet_mode = JetMode::Analytic;
        cat.theta_periodic = true;
        const auto rep = camc_certificate(cat, isotropic_energy(),
                                          GridSpec{-1.5, 1.5, 41, 48, 0.0}, 0.0);
        CHECK(rep.pass);
        CHECK(rep.node_coverage == 1.0);  // nu3 = 0 at the waist is no obstacle for F == 1
        CHECK(!rep.worst_slice.from_identity_residual);
    }
    SUBCASE("json schema carries the contract fields") {
        const CyclicFamilyParams p{FamilyKind::TypeIII, 1.0, 0.0, 1.0};
        const auto rep = camc_certificate(cyclic_surface(p), dir, default_family_grid(p), 0.0);
        const nlohmann::json j = certificate_to_json(rep);
        for (const char* key : {"surface_descriptor", "energy_label", "grid", "max_abs_dev",
                                "worst_slice", "pass", "tolerances"})
            CHECK(j.contains(key));
        CHECK(j["worst_slice"].contains("A"));
        CHECK(j["worst_slice"].contains("B"));
        CHECK(j["worst_slice"].contains("s"));
    }
}
