#pragma once

#include <iosfwd>
#include <vector>

#include "camc/families.hpp"

namespace camc {

enum class OdeMode { Anisotropic, Isotropic };

struct CyclicOdeState {
    double s = 0.0;
    double r = 1.0;
    double rp = 0.0;
    double a = 0.0;
    double b = 0.0;
};

struct OdeDerivatives {
    double rp = 0.0, rpp = 0.0, ap = 0.0, bp = 0.0;
};

/// Right-hand side of the cyclic system: a' = lambda r^2, b' = mu r^2 and
///   r'' = ((lambda^2+mu^2) r^4 + r'^2) / r          (Anisotropic)
///   r'' = (1 + (lambda r^2)^2 + (mu r^2)^2 + r'^2) / r   (Isotropic).
OdeDerivatives rhs(const CyclicOdeState& state, double lambda, double mu, OdeMode mode);

enum class StopReason { ReachedEnd, RadiusCollapse, BlowUp, StepTooLarge };

const char* stop_reason_name(StopReason reason);

struct OdeTrajectory {
    std::vector<CyclicOdeState> states;
    double step = 0.0;
    OdeMode mode = OdeMode::Anisotropic;
    double lambda = 0.0, mu = 0.0;
    StopReason stop = StopReason::ReachedEnd;
};

/// Fixed-step classical RK4 on the first-order reduction (r, r', a, b).
/// Deterministic; the trajectory is truncated (with the matching stop
/// reason) if r falls to <= 1e-9, if |r| or |r'| exceeds 1e8, or if one
/// step moves the mode's conserved quantity by more than 1% of its scale
/// (reported as StepTooLarge at moderate state, BlowUp when the state has
/// already left the 1e3 range). Integrates in either s direction; throws
/// DomainError for step <= 0.
OdeTrajectory integrate(const CyclicOdeState& initial, double lambda, double mu,
                        OdeMode mode, double s_end, double step);

/// First integral c1 = (r'/r)^2 - (lambda^2+mu^2) r^2 of the anisotropic system.
double first_integral(const CyclicOdeState& state, double lambda, double mu);

/// Sign of c1 selects the family: c1 < -tol -> Type I, |c1| <= tol -> Type II,
/// c1 > tol -> Type III.
FamilyKind classify_by_first_integral(double c1, double tolerance);

/// Classification tolerance 1e-8 scaled by (lambda^2+mu^2) max r^2 along the
/// trajectory (c1 is dimensionally coupled to r).
double classification_tolerance(const OdeTrajectory& trajectory);

/// u''(r) + u'(r)/r - lambda_target/2 for a rotational profile; the
/// single-argument form measures against the profile's own lambda.
double rotational_residual(const RotationalProfile& profile, double r);
double rotational_residual(const RotationalProfile& profile, double r, double lambda_target);

/// Dump format consumed by the CLI report writer: header row then one
/// record per state with columns s, r, rp, a, b, c1.
void write_trajectory(std::ostream& os, const OdeTrajectory& trajectory);

}  // namespace camc
