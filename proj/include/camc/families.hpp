#pragma once

#include <utility>
#include <vector>

#include "camc/grid.hpp"
#include "camc/surface.hpp"

namespace camc {

/// The three non-rotational anisotropic-minimal families foliated by
/// horizontal circles, labelled by the sign of the first integral
/// c1 = (r'/r)^2 - (lambda^2+mu^2) r^2 (negative / zero / positive).
enum class FamilyKind { TypeI, TypeII, TypeIII };

const char* family_name(FamilyKind kind);

struct CyclicFamilyParams {
    FamilyKind kind = FamilyKind::TypeI;
    double lambda = 1.0;
    double mu = 0.0;
    double c = 1.0;

    void validate() const;  ///< lambda^2+mu^2 != 0; c != 0 for Types I and III
};

/// Circle radius, center coordinates and their s-derivatives at one s.
struct CyclicProfile {
    double r = 0.0, a = 0.0, b = 0.0;
    double rp = 0.0, ap = 0.0, bp = 0.0;
    double rpp = 0.0, app = 0.0, bpp = 0.0;
};

/// Closed-form profile of the family at s. Throws DomainError at poles of
/// the defining functions or where the radius of the branch is <= 0.
CyclicProfile family_profile(const CyclicFamilyParams& params, double s);

/// Maximal open s-interval around the canonical branch where r > 0 and all
/// denominators are nonzero:
/// Type I -> (-pi/(2|c|), pi/(2|c|)), Type II -> (-c/k, inf), Type III -> (0, inf),
/// with k = sqrt(lambda^2 + mu^2).
Interval domain_interval(const CyclicFamilyParams& params);

/// Analytic-mode surface X(s,theta) = (a,b,s) + r (cos theta, sin theta, 0).
ParametricSurface cyclic_surface(const CyclicFamilyParams& params);

/// Rotational solution u(r) = c1 log r + (lambda/8) r^2 + c2 of the
/// axially symmetric equation u'' + u'/r = lambda/2.
struct RotationalProfile {
    double c1 = 0.0, c2 = 0.0, lambda_camc = 0.0;

    double u(double r) const;
    double up(double r) const;
    double upp(double r) const;
};

RotationalProfile rotational_solution(double c1, double c2, double lambda_camc);

/// Surface of revolution (r, theta) -> (r cos, r sin, u(r)) over r in (r_lo, r_hi).
ParametricSurface rotational_surface(const RotationalProfile& profile, double r_lo, double r_hi);

/// Rotate the center curve into the plane y = 0: returns params with
/// lambda' = sqrt(lambda^2+mu^2), mu' = 0 and the z-rotation angle
/// phi = atan2(mu, lambda) with X(s,theta) = Rz(phi) X_norm(s, theta - phi).
std::pair<CyclicFamilyParams, double> normalize_by_rotation(const CyclicFamilyParams& params);

/// True iff the xy-projections of the foliation circles at s1 and s2 overlap:
/// dist of centers < r(s1) + r(s2).
bool overlap_predicate(const CyclicFamilyParams& params, double s1, double s2);

/// || R(X(s,theta)) - X(-s, pi - theta) || with R(x,y,z) = (-x,y,-z), for
/// mu = 0 normalized parameters (Type I carries the s <-> -s part).
double symmetry_check(const CyclicFamilyParams& params, double s, double theta);

/// || M(X(s,theta)) - X(s, -theta) || with M(x,y,z) = (x,-y,z) (mirror in y=0).
double mirror_symmetry_check(const CyclicFamilyParams& params, double s, double theta);

/// Straight line contained in the closure of an extended surface,
/// returned as metadata (the circle parametrization degenerates there).
struct LimitLine {
    Vec3 point;
    Vec3 direction;
};

struct PiecewiseSurface {
    std::vector<ParametricSurface> pieces;
    std::vector<LimitLine> limit_lines;
};

/// Schwarz-type extension. `copies` counts total pieces. Type I stacks
/// vertical translates z -> z + k pi/|c| (any copies >= 1); Types II and III
/// support copies in {1, 2}, the second piece being the 180-degree rotation
/// about the boundary line (L of Type II, the y-axis for Type III).
PiecewiseSurface schwarz_extend(const CyclicFamilyParams& params, int copies);

enum class BoundaryEnd { Lower, Upper };

/// Limiting affine object of X(s, theta) as s runs to a domain endpoint.
struct AsymptoteReport {
    enum class LimitKind { HorizontalPlane, VerticalLine } kind;
    double plane_z = 0.0;          ///< HorizontalPlane target
    Vec3 line_point, line_dir;     ///< VerticalLine target
    std::vector<std::pair<double, double>> s_and_distance;
    bool monotone_decreasing = false;
    double final_distance = 0.0;
    bool diverges_in_plane = false;  ///< |(x,y)| -> infinity along the approach
};

/// Probes X along fixed theta with s marching to the requested end and
/// measures distances to the family's claimed limit object.
AsymptoteReport asymptote_probe(const CyclicFamilyParams& params, BoundaryEnd end, double theta);

/// Polynomial-form CAMC residual of a horizontal-circle foliation in profile
/// data, a trigonometric polynomial of degree three in theta:
///   lambda0 r Q^3 - 2 [ (a' sin - b' cos)^2 + Q^2 - r (r'' + a'' cos + b'' sin) ],
/// Q = r' + a' cos theta + b' sin theta. Identically zero iff the profile
/// solves the constant-Lambda equation with Lambda = lambda0.
double cyclic_camc_residual(const CyclicProfile& p, double lambda0, double theta);

/// Default verification grid used by the CLI: the family's domain inset to a
/// tame range where the closed forms are well-scaled.
GridSpec default_family_grid(const CyclicFamilyParams& params);

}  // namespace camc
