#include "camc/surface.hpp"

#include <cmath>
#include <utility>

namespace camc {

namespace {

bool inside_open(double x, double lo, double hi, double inset) {
    return x > lo + inset && x < hi - inset;
}

}  // namespace

SurfaceJet jet(const ParametricSurface& surface, double s, double theta) {
    const ParamRect& d = surface.param_domain;
    const bool fd = surface.jet_mode == JetMode::FiniteDifference || !surface.jets;
    const double h = surface.fd_step;
    const double s_inset = fd ? 2.0 * h : 0.0;
    const double t_inset = surface.theta_periodic ? 0.0 : (fd ? 2.0 * h : 0.0);
    if (!inside_open(s, d.s_lo, d.s_hi, s_inset) || !inside_open(theta, d.t_lo, d.t_hi, t_inset))
        throw OutOfDomain("jet: (s,theta) outside the parameter domain of " + surface.descriptor);

    SurfaceJet j;
    if (!fd) {
        j = surface.jets(s, theta);
    } else {
        const auto& P = surface.eval;
        j.X = P(s, theta);
        j.Xs = (P(s + h, theta) - P(s - h, theta)) / (2.0 * h);
        j.Xt = (P(s, theta + h) - P(s, theta - h)) / (2.0 * h);
        j.Xss = (P(s + h, theta) - 2.0 * j.X + P(s - h, theta)) / (h * h);
        j.Xtt = (P(s, theta + h) - 2.0 * j.X + P(s, theta - h)) / (h * h);
        j.Xst = (P(s + h, theta + h) - P(s + h, theta - h) - P(s - h, theta + h) +
                 P(s - h, theta - h)) /
                (4.0 * h * h);
    }
    if (norm(cross(j.Xs, j.Xt)) < 1e-12)
        throw DegenerateJet("jet: |Xs x Xtheta| < 1e-12 at the sample");
    return j;
}

FrameData frame(const SurfaceJet& j, double eps_frame) {
    FrameData f;
    const Vec3 cr = cross(j.Xs, j.Xt);
    const double crn = norm(cr);
    if (crn < 1e-12) throw DegenerateJet("frame: degenerate jet");
    f.nu = cr / crn;
    f.nu3 = f.nu.z;

    f.g11 = dot(j.Xs, j.Xs);
    f.g12 = dot(j.Xs, j.Xt);
    f.g22 = dot(j.Xt, j.Xt);
    f.detg = f.g11 * f.g22 - f.g12 * f.g12;
    if (!(f.detg > 0.0)) throw DegenerateJet("frame: det(g) <= 0");
    f.W = f.g22 > 0.0 ? f.detg / f.g22 : 0.0;

    const double one_minus = 1.0 - f.nu3 * f.nu3;
    if (one_minus <= eps_frame)
        throw VerticalNormalDegeneracy("frame: 1 - nu3^2 <= eps (horizontal tangent plane)");

    f.hss = dot(cr, j.Xss);
    f.hst = dot(cr, j.Xst);
    f.htt = dot(cr, j.Xtt);

    const Vec3 e3{0.0, 0.0, 1.0};
    f.E1 = e3 - f.nu3 * f.nu;
    f.E2 = cross(f.nu, f.E1);

    // c_ij from the Gram system  g . c_i = (<E_i, Xs>, <E_i, Xtheta>).
    auto solve2 = [&](const Vec3& E, double& cs, double& ct) {
        const double b1 = dot(E, j.Xs), b2 = dot(E, j.Xt);
        cs = (b1 * f.g22 - b2 * f.g12) / f.detg;
        ct = (f.g11 * b2 - f.g12 * b1) / f.detg;
    };
    solve2(f.E1, f.c11, f.c12);
    solve2(f.E2, f.c21, f.c22);

    f.H = (f.htt * f.g11 - 2.0 * f.hst * f.g12 + f.hss * f.g22) /
          (2.0 * f.detg * std::sqrt(f.detg));
    return f;
}

namespace {

/// h(E_i, E_i) in true second-fundamental-form units.
std::pair<double, double> h_on_frame(const FrameData& f) {
    const double sq = std::sqrt(f.detg);
    const double h11 =
        (f.c11 * f.c11 * f.hss + 2.0 * f.c11 * f.c12 * f.hst + f.c12 * f.c12 * f.htt) / sq;
    const double h22 =
        (f.c21 * f.c21 * f.hss + 2.0 * f.c21 * f.c22 * f.hst + f.c22 * f.c22 * f.htt) / sq;
    return {h11, h22};
}

}  // namespace

double camc_lambda(const FrameData& f, const AxiallySymmetricEnergy& energy) {
    const WulffReciprocals w = wulff_reciprocals(energy, f.nu3);
    const auto [h11, h22] = h_on_frame(f);
    const double one_minus = 1.0 - f.nu3 * f.nu3;  // |E1|^2 = |E2|^2
    return (w.inv_mu1 * h11 + w.inv_mu2 * h22) / one_minus;
}

double camc_lambda(const SurfaceJet& j, const AxiallySymmetricEnergy& energy) {
    return camc_lambda(frame(j), energy);
}

double dirichlet_lambda_reduced(const FrameData& f) {
    const auto [h11, h22] = h_on_frame(f);
    const double n3 = f.nu3;
    return 2.0 * (h11 + n3 * n3 * h22) / (n3 * n3 * n3 * (1.0 - n3 * n3));
}

double dirichlet_identity_residual(const FrameData& f, double lambda0) {
    const double q1 = f.c11 * f.c11 * f.hss + 2.0 * f.c11 * f.c12 * f.hst + f.c12 * f.c12 * f.htt;
    const double q2 = f.c21 * f.c21 * f.hss + 2.0 * f.c21 * f.c22 * f.hst + f.c22 * f.c22 * f.htt;
    const double n3 = f.nu3;
    return 2.0 * q1 + 2.0 * n3 * n3 * q2 -
           lambda0 * n3 * n3 * n3 * (1.0 - n3 * n3) * std::sqrt(f.detg);
}

OrientationRecord camc_residual_sign_convention(const SurfaceJet& j) {
    OrientationRecord rec;
    const Vec3 cr = cross(j.Xs, j.Xt);
    const double crn = norm(cr);
    if (crn < 1e-12) throw DegenerateJet("camc_residual_sign_convention: degenerate jet");
    rec.nu = cr / crn;
    rec.convention = "nu = Xs x Xtheta / |Xs x Xtheta|";
    return rec;
}

ParametricSurface transformed(const ParametricSurface& surface, const Mat3& rot,
                              const Vec3& shift) {
    ParametricSurface out = surface;
    out.descriptor = surface.descriptor + " (moved)";
    const auto eval = surface.eval;
    out.eval = [eval, rot, shift](double s, double t) { return rot * eval(s, t) + shift; };
    if (surface.jets) {
        const auto jets = surface.jets;
        out.jets = [jets, rot, shift](double s, double t) {
            SurfaceJet j = jets(s, t);
            j.X = rot * j.X + shift;
            j.Xs = rot * j.Xs;
            j.Xt = rot * j.Xt;
            j.Xss = rot * j.Xss;
            j.Xst = rot * j.Xst;
            j.Xtt = rot * j.Xtt;
            return j;
        };
    }
    return out;
}

ParametricSurface rotated_z(const ParametricSurface& surface, double phi) {
    return transformed(surface, Mat3::rotation_z(phi), Vec3{});
}

ParametricSurface translated(const ParametricSurface& surface, const Vec3& shift) {
    return transformed(surface, Mat3::identity(), shift);
}

ParametricSurface swapped_params(const ParametricSurface& surface) {
    ParametricSurface out;
    out.descriptor = surface.descriptor + " (params swapped)";
    const auto eval = surface.eval;
    out.eval = [eval](double s, double t) { return eval(t, s); };
    if (surface.jets) {
        const auto jets = surface.jets;
        out.jets = [jets](double s, double t) {
            const SurfaceJet j = jets(t, s);
            SurfaceJet o;
            o.X = j.X;
            o.Xs = j.Xt;
            o.Xt = j.Xs;
            o.Xss = j.Xtt;
            o.Xtt = j.Xss;
            o.Xst = j.Xst;
            return o;
        };
    }
    out.jet_mode = surface.jet_mode;
    out.fd_step = surface.fd_step;
    out.param_domain = {surface.param_domain.t_lo, surface.param_domain.t_hi,
                        surface.param_domain.s_lo, surface.param_domain.s_hi};
    out.theta_periodic = false;
    return out;
}

ParametricSurface graph_surface(std::function<double(double, double)> u,
                                std::function<double(double, double)> ux,
                                std::function<double(double, double)> uy,
                                std::function<double(double, double)> uxx,
                                std::function<double(double, double)> uxy,
                                std::function<double(double, double)> uyy, const ParamRect& rect,
                                std::string descriptor) {
    ParametricSurface s;
    s.descriptor = std::move(descriptor);
    s.eval = [u](double x, double y) { return Vec3{x, y, u(x, y)}; };
    s.jets = [u, ux, uy, uxx, uxy, uyy](double x, double y) {
        SurfaceJet j;
        j.X = {x, y, u(x, y)};
        j.Xs = {1.0, 0.0, ux(x, y)};
        j.Xt = {0.0, 1.0, uy(x, y)};
        j.Xss = {0.0, 0.0, uxx(x, y)};
        j.Xst = {0.0, 0.0, uxy(x, y)};
        j.Xtt = {0.0, 0.0, uyy(x, y)};
        return j;
    };
    s.jet_mode = JetMode::Analytic;
    s.param_domain = rect;
    s.theta_periodic = false;
    return s;
}

}  // namespace camc
