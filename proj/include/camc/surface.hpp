#pragma once

#include <functional>
#include <limits>
#include <string>

#include "camc/energy.hpp"
#include "camc/errors.hpp"
#include "camc/vec3.hpp"

namespace camc {

enum class JetMode { Analytic, FiniteDifference };

/// Parameter rectangle; endpoints may be +-infinity and are treated as open.
struct ParamRect {
    double s_lo = -std::numeric_limits<double>::infinity();
    double s_hi = std::numeric_limits<double>::infinity();
    double t_lo = -std::numeric_limits<double>::infinity();
    double t_hi = std::numeric_limits<double>::infinity();
};

/// Position and first/second partial derivatives of X(s,theta) at one point.
struct SurfaceJet {
    Vec3 X, Xs, Xt, Xss, Xst, Xtt;
};

struct ParametricSurface {
    std::string descriptor;
    std::function<Vec3(double, double)> eval;
    /// Closed-form jets; null in FiniteDifference mode.
    std::function<SurfaceJet(double, double)> jets;
    JetMode jet_mode = JetMode::FiniteDifference;
    double fd_step = 1e-4;
    ParamRect param_domain;
    bool theta_periodic = false;
};

/// Evaluate the full jet at (s,theta). FiniteDifference mode uses central
/// differences with the surface's step and needs a 2h margin to the
/// domain boundary. Throws OutOfDomain / DegenerateJet.
SurfaceJet jet(const ParametricSurface& surface, double s, double theta);

/// Gauss map, fundamental forms and the principal-direction frame of an
/// axially symmetric energy at one jet.
///
/// Conventions: nu = Xs x Xtheta / |Xs x Xtheta|; hss, hst, htt are the
/// scaled second-fundamental quantities <Xs x Xtheta, X..> (divide by
/// sqrt(detg) for the true second fundamental form); E1 = e3 - nu3 nu,
/// E2 = nu x E1, expressed as E_i = c_i1 Xs + c_i2 Xtheta.
struct FrameData {
    Vec3 nu;
    double nu3 = 0.0;
    double g11 = 0.0, g12 = 0.0, g22 = 0.0, detg = 0.0;
    double hss = 0.0, hst = 0.0, htt = 0.0;
    Vec3 E1, E2;
    double c11 = 0.0, c12 = 0.0, c21 = 0.0, c22 = 0.0;
    double W = 0.0;  ///< detg / g_thetatheta; equals 1 + (r'+a'cos+b'sin)^2 on cyclic charts
    double H = 0.0;  ///< isotropic mean curvature
};

constexpr double kEpsFrame = 1e-10;

/// Throws VerticalNormalDegeneracy when 1 - nu3^2 <= eps_frame and
/// DegenerateJet when the jet is not an immersion.
FrameData frame(const SurfaceJet& j, double eps_frame = kEpsFrame);

/// Anisotropic mean curvature via the principal-direction frame:
/// Lambda = inv_mu1 h(E1,E1)/|E1|^2 + inv_mu2 h(E2,E2)/|E2|^2.
double camc_lambda(const FrameData& f, const AxiallySymmetricEnergy& energy);
double camc_lambda(const SurfaceJet& j, const AxiallySymmetricEnergy& energy);

/// Dirichlet-only closed reduction
/// Lambda = 2 (h(E1,E1) + nu3^2 h(E2,E2)) / (nu3^3 (1 - nu3^2)).
double dirichlet_lambda_reduced(const FrameData& f);

/// Dirichlet identity residual in the scaled h units:
///   2 (c11^2 hss + 2 c11 c12 hst + c12^2 htt)
/// + 2 nu3^2 (c21^2 hss + 2 c21 c22 hst + c22^2 htt)
/// - lambda0 nu3^3 (1 - nu3^2) sqrt(detg).
/// Vanishes identically iff Lambda == lambda0 where the frame is defined,
/// and stays well-conditioned where Lambda itself divides by nu3^3.
double dirichlet_identity_residual(const FrameData& f, double lambda0);

/// Records the orientation convention behind the sign of Lambda.
/// Reversing parameter order flips nu; whether Lambda flips with it depends
/// on the parity of the Wulff reciprocals in nu3 (odd for the Dirichlet
/// density, which makes its Lambda orientation-invariant; even for F == 1,
/// where Lambda = 2H flips).
struct OrientationRecord {
    Vec3 nu;
    std::string convention;
};
OrientationRecord camc_residual_sign_convention(const SurfaceJet& j);

/// Rigid-motion and reparametrization wrappers (jets mapped exactly).
ParametricSurface transformed(const ParametricSurface& surface, const Mat3& rot, const Vec3& shift);
ParametricSurface rotated_z(const ParametricSurface& surface, double phi);
ParametricSurface translated(const ParametricSurface& surface, const Vec3& shift);
ParametricSurface swapped_params(const ParametricSurface& surface);

/// Analytic graph patch (x,y) -> (x, y, u(x,y)) given u and its derivatives.
ParametricSurface graph_surface(std::function<double(double, double)> u,
                                std::function<double(double, double)> ux,
                                std::function<double(double, double)> uy,
                                std::function<double(double, double)> uxx,
                                std::function<double(double, double)> uxy,
                                std::function<double(double, double)> uyy,
                                const ParamRect& rect, std::string descriptor);

}  // namespace camc
