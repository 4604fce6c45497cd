#include "camc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace camc {

bool ResidualField::slice_fully_valid(std::size_t i) const {
    const auto& row = valid[i];
    return std::all_of(row.begin(), row.end(), [](std::uint8_t v) { return v != 0; });
}

ResidualField lambda_field(const ParametricSurface& surface, const AxiallySymmetricEnergy& energy,
                           const GridSpec& grid, const LambdaFieldOptions& options) {
    ResidualField field;
    field.s = grid.s_samples();
    field.theta = grid.theta_samples();
    field.values.assign(field.s.size(), std::vector<double>(field.theta.size(), 0.0));
    field.valid.assign(field.s.size(), std::vector<std::uint8_t>(field.theta.size(), 0));

    double sum = 0.0;
    for (std::size_t i = 0; i < field.s.size(); ++i) {
        for (std::size_t j = 0; j < field.theta.size(); ++j) {
            try {
                const FrameData f =
                    frame(jet(surface, field.s[i], field.theta[j]), options.eps_frame);
                const double margin = energy.curvature_margin(f.nu3);
                if (!(margin > 1e-14)) {
                    ++field.n_skipped_domain;
                    continue;
                }
                if (margin < options.nu3_guard) {
                    ++field.n_skipped_guard;
                    continue;
                }
                field.values[i][j] = camc_lambda(f, energy);
                field.valid[i][j] = 1;
                ++field.n_valid;
                sum += field.values[i][j];
            } catch (const VerticalNormalDegeneracy&) {
                ++field.n_skipped_degenerate;
            } catch (const DegenerateJet&) {
                ++field.n_skipped_degenerate;
            } catch (const DomainError&) {
                ++field.n_skipped_domain;
            }
        }
    }
    field.partial = field.n_valid < field.s.size() * field.theta.size();
    field.target = options.target.value_or(field.n_valid > 0 ? sum / static_cast<double>(field.n_valid) : 0.0);
    field.max_abs_dev = 0.0;
    for (std::size_t i = 0; i < field.s.size(); ++i)
        for (std::size_t j = 0; j < field.theta.size(); ++j)
            if (field.valid[i][j])
                field.max_abs_dev =
                    std::max(field.max_abs_dev, std::abs(field.values[i][j] - field.target));
    return field;
}

double FourierSpectrum::max_mode_abs() const {
    double m = 0.0;
    for (double a : A) m = std::max(m, std::abs(a));
    for (double b : B) m = std::max(m, std::abs(b));
    return m;
}

FourierSpectrum fourier_project_raw(std::span<const double> values, std::span<const double> theta,
                                    int N) {
    if (values.size() != theta.size() || values.empty())
        throw DomainError("fourier_project: values and theta must match and be nonempty");
    const double M = static_cast<double>(values.size());
    FourierSpectrum out;
    out.N = N;
    out.A.assign(static_cast<std::size_t>(N) + 1, 0.0);
    out.B.assign(static_cast<std::size_t>(N) + 1, 0.0);
    for (std::size_t j = 0; j < values.size(); ++j) out.A[0] += values[j];
    out.A[0] /= M;
    for (int n = 1; n <= N; ++n) {
        double ca = 0.0, cb = 0.0;
        for (std::size_t j = 0; j < values.size(); ++j) {
            ca += values[j] * std::cos(n * theta[j]);
            cb += values[j] * std::sin(n * theta[j]);
        }
        out.A[static_cast<std::size_t>(n)] = 2.0 * ca / M;
        out.B[static_cast<std::size_t>(n)] = 2.0 * cb / M;
    }
    return out;
}

FourierSpectrum fourier_project(std::span<const double> values, std::span<const double> theta,
                                int N) {
    if (static_cast<long>(values.size()) < 4L * N)
        throw AliasingRisk("fourier_project: need at least 4N samples per period");
    return fourier_project_raw(values, theta, N);
}

FrenetCurve circular_arc_xz(double radius, double s_lo, double s_hi) {
    if (!(radius > 0.0)) throw DomainError("circular_arc_xz: radius must be positive");
    FrenetCurve c;
    c.descriptor = "arc radius=" + format_double(radius);
    c.s_lo = s_lo;
    c.s_hi = s_hi;
    c.gamma = [radius](double s) {
        return Vec3{radius * std::sin(s / radius), 0.0, radius * (1.0 - std::cos(s / radius))};
    };
    c.frame = [radius](double s) {
        const double u = s / radius;
        FrenetFrame f;
        f.t = {std::cos(u), 0.0, std::sin(u)};
        f.n = {-std::sin(u), 0.0, std::cos(u)};
        f.b = {0.0, -1.0, 0.0};
        f.kappa = 1.0 / radius;
        f.tau = 0.0;
        return f;
    };
    return c;
}

FrenetCurve helix_curve(double radius, double pitch, double s_lo, double s_hi) {
    if (!(radius > 0.0)) throw DomainError("helix_curve: radius must be positive");
    const double c0 = std::hypot(radius, pitch);
    FrenetCurve c;
    c.descriptor = "helix radius=" + format_double(radius) + " pitch=" + format_double(pitch);
    c.s_lo = s_lo;
    c.s_hi = s_hi;
    c.gamma = [radius, pitch, c0](double s) {
        const double u = s / c0;
        return Vec3{radius * std::cos(u), radius * std::sin(u), pitch * u};
    };
    c.frame = [radius, pitch, c0](double s) {
        const double u = s / c0;
        FrenetFrame f;
        f.t = {-radius / c0 * std::sin(u), radius / c0 * std::cos(u), pitch / c0};
        f.n = {-std::cos(u), -std::sin(u), 0.0};
        f.b = {pitch / c0 * std::sin(u), -pitch / c0 * std::cos(u), radius / c0};
        f.kappa = radius / (c0 * c0);
        f.tau = pitch / (c0 * c0);
        return f;
    };
    return c;
}

FrenetCurve frenet_from_gamma(std::string descriptor, std::function<Vec3(double)> gamma,
                              double s_lo, double s_hi, double fd_step) {
    FrenetCurve c;
    c.descriptor = std::move(descriptor);
    c.s_lo = s_lo;
    c.s_hi = s_hi;
    c.gamma = gamma;
    const double h = fd_step;

    // kappa = |g' x g''| / |g'|^3, tau = <g' x g'', g'''> / |g' x g''|^2,
    // derivatives by central differences; n re-orthonormalized against t.
    c.frame = [gamma, h](double s) {
        const Vec3 gp = (gamma(s + h) - gamma(s - h)) / (2.0 * h);
        const Vec3 gpp = (gamma(s + h) - 2.0 * gamma(s) + gamma(s - h)) / (h * h);
        const Vec3 gppp = (gamma(s + 2.0 * h) - 2.0 * gamma(s + h) + 2.0 * gamma(s - h) -
                           gamma(s - 2.0 * h)) /
                          (2.0 * h * h * h);
        const double speed2 = norm2(gp);
        if (!(speed2 > 1e-20)) throw FrameUndefined("frenet frame: stationary curve point");
        const Vec3 t = gp / std::sqrt(speed2);
        const Vec3 cr = cross(gp, gpp);
        const double kappa = norm(cr) / (speed2 * std::sqrt(speed2));
        if (kappa < 1e-6)
            throw FrameUndefined("frenet frame: curvature below the finite-difference floor");
        FrenetFrame f;
        f.t = t;
        f.n = normalized(gpp - dot(gpp, t) * t);
        f.b = cross(f.t, f.n);
        f.kappa = kappa;
        f.tau = dot(cr, gppp) / norm2(cr);
        return f;
    };
    return c;
}

Vec3 frenet_e3_coordinates(const FrenetCurve& curve, double s) {
    const FrenetFrame f = curve.frame(s);
    const Vec3 e3{0.0, 0.0, 1.0};
    return {dot(e3, f.t), dot(e3, f.n), dot(e3, f.b)};
}

ParametricSurface tilted_cyclic_surface(const FrenetCurve& curve, std::function<double(double)> r,
                                        std::function<double(double)> beta,
                                        std::function<double(double)> gamma_off, double fd_step) {
    ParametricSurface s;
    s.descriptor = "tilted cyclic over " + curve.descriptor;
    const auto gamma = curve.gamma;
    const auto frame_fn = curve.frame;
    s.eval = [gamma, frame_fn, r, beta, gamma_off](double u, double th) {
        const FrenetFrame f = frame_fn(u);
        const Vec3 center = gamma(u) + beta(u) * f.n + gamma_off(u) * f.b;
        return center + r(u) * (std::cos(th) * f.n + std::sin(th) * f.b);
    };
    s.jet_mode = JetMode::FiniteDifference;
    s.fd_step = fd_step;
    s.param_domain = {curve.s_lo, curve.s_hi, -std::numeric_limits<double>::infinity(),
                      std::numeric_limits<double>::infinity()};
    s.theta_periodic = true;
    return s;
}

namespace {

struct GraphPoint {
    double s, theta, z;
};

GraphPoint invert_graph(const ParametricSurface& surface, double x, double y, double s0,
                        double theta0, double seed_s, double seed_theta, double patch_halfwidth) {
    double s = s0, theta = theta0;
    const double tol = 1e-12 * std::max({1.0, std::abs(x), std::abs(y)});
    double fn_prev = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 50; ++it) {
        const SurfaceJet j = jet(surface, s, theta);
        const double fx = j.X.x - x, fy = j.X.y - y;
        const double fn = std::max(std::abs(fx), std::abs(fy));
        // Iterate past the nominal tolerance down to the roundoff floor; the
        // stencil divides these position errors by fd_step^2.
        if (fn < 1e-3 * tol || (fn < tol && fn > 0.25 * fn_prev)) return {s, theta, j.X.z};
        fn_prev = fn;
        const double det = j.Xs.x * j.Xt.y - j.Xt.x * j.Xs.y;
        const double scale = std::max({1.0, std::abs(j.Xs.x * j.Xt.y), std::abs(j.Xt.x * j.Xs.y)});
        if (std::abs(det) < 1e-12 * scale)
            throw NotAGraph("local graph inversion: singular Jacobian of (X1, X2)");
        s -= (fx * j.Xt.y - fy * j.Xt.x) / det;
        theta -= (j.Xs.x * fy - j.Xs.y * fx) / det;
        if (std::abs(s - seed_s) > patch_halfwidth || std::abs(theta - seed_theta) > patch_halfwidth)
            throw NewtonDivergence("local graph inversion: iterate left the seed patch");
    }
    throw NewtonDivergence("local graph inversion: no convergence in 50 iterations");
}

}  // namespace

double local_graph_laplace_residual(const ParametricSurface& surface, double seed_s,
                                    double seed_theta, double patch_halfwidth, double fd_step,
                                    double lambda0) {
    const SurfaceJet center = jet(surface, seed_s, seed_theta);
    const double x0 = center.X.x, y0 = center.X.y, z0 = center.X.z;
    const double d = fd_step;
    double zsum = 0.0;
    for (const auto& [dx, dy] :
         {std::pair{d, 0.0}, std::pair{-d, 0.0}, std::pair{0.0, d}, std::pair{0.0, -d}}) {
        const GraphPoint gp = invert_graph(surface, x0 + dx, y0 + dy, seed_s, seed_theta, seed_s,
                                           seed_theta, patch_halfwidth);
        zsum += gp.z;
    }
    return (zsum - 4.0 * z0) / (d * d) - lambda0 / 2.0;
}

CertificateReport camc_certificate(const ParametricSurface& surface,
                                   const AxiallySymmetricEnergy& energy, const GridSpec& grid,
                                   double lambda0, const CertificateTolerances& tolerances) {
    CertificateReport rep;
    rep.surface_descriptor = surface.descriptor;
    rep.energy_label = energy.label;
    rep.grid = grid;
    rep.lambda0 = lambda0;
    rep.tolerances = tolerances;

    LambdaFieldOptions opts;
    opts.target = lambda0;
    opts.nu3_guard = tolerances.nu3_guard;
    const ResidualField field = lambda_field(surface, energy, grid, opts);
    rep.max_abs_dev = field.max_abs_dev;
    const double total = static_cast<double>(field.s.size() * field.theta.size());
    rep.node_coverage = static_cast<double>(field.n_valid) / total;

    rep.max_mode_abs = 0.0;
    std::vector<double> slice(field.theta.size());
    for (std::size_t i = 0; i < field.s.size(); ++i) {
        SliceSpectrum ss;
        ss.s = field.s[i];
        if (field.slice_fully_valid(i)) {
            for (std::size_t j = 0; j < slice.size(); ++j)
                slice[j] = field.values[i][j] - lambda0;
            ss.from_identity_residual = false;
        } else if (energy.label == "dirichlet") {
            // The deviation field is ill-conditioned across the nu3 = 0 locus;
            // project the identity residual there instead (same vanishing
            // content, no singular quotient).
            bool ok = true;
            for (std::size_t j = 0; j < slice.size(); ++j) {
                try {
                    const FrameData f = frame(jet(surface, field.s[i], field.theta[j]));
                    slice[j] = dirichlet_identity_residual(f, lambda0);
                } catch (const Error&) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            ss.from_identity_residual = true;
        } else {
            continue;
        }
        const int cutoff =
            std::min(tolerances.fourier_cutoff, static_cast<int>(field.theta.size()) / 4);
        ss.spectrum = fourier_project(slice, field.theta, cutoff);
        ss.spectrum.s = field.s[i];
        ++rep.n_spectrum_slices;
        const double m = ss.spectrum.max_mode_abs();
        if (m >= rep.max_mode_abs) {
            rep.max_mode_abs = m;
            rep.worst_slice = ss;
        }
    }

    rep.pass = field.n_valid > 0 && rep.n_spectrum_slices > 0 &&
               rep.max_abs_dev <= tolerances.lambda_dev && rep.max_mode_abs <= tolerances.mode;
    return rep;
}

nlohmann::json certificate_to_json(const CertificateReport& rep) {
    nlohmann::json j;
    j["surface_descriptor"] = rep.surface_descriptor;
    j["energy_label"] = rep.energy_label;
    j["grid"] = {{"s_min", rep.grid.s_min}, {"s_max", rep.grid.s_max}, {"n_s", rep.grid.n_s},
                 {"n_theta", rep.grid.n_theta}, {"margin", rep.grid.margin}};
    j["lambda0"] = rep.lambda0;
    j["max_abs_dev"] = rep.max_abs_dev;
    j["node_coverage"] = rep.node_coverage;
    j["max_mode_abs"] = rep.max_mode_abs;
    j["worst_slice"] = {{"s", rep.worst_slice.s},
                        {"source", rep.worst_slice.from_identity_residual ? "identity_residual"
                                                                          : "lambda"},
                        {"A", rep.worst_slice.spectrum.A},
                        {"B", rep.worst_slice.spectrum.B}};
    j["pass"] = rep.pass;
    j["tolerances"] = {{"lambda_dev", rep.tolerances.lambda_dev},
                       {"mode", rep.tolerances.mode},
                       {"nu3_guard", rep.tolerances.nu3_guard},
                       {"fourier_cutoff", rep.tolerances.fourier_cutoff}};
    return j;
}

}  // namespace camc
