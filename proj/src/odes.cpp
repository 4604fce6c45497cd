#include "camc/odes.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "camc/format.hpp"

namespace camc {

namespace {

constexpr double kRadiusFloor = 1e-9;
constexpr double kBlowUpGuard = 1e8;
// A single RK4 step that moves the conserved quantity by this fraction of its
// scale is a step-size failure; with huge state it is blow-up in progress.
constexpr double kStepJumpFraction = 1e-2;
constexpr double kModerateState = 1e3;

/// Conserved quantity of the mode: the anisotropic first integral, or
/// K = (r'^2 + 1)/r^2 - (lambda^2+mu^2) r^2 in the isotropic case.
double invariant(const CyclicOdeState& st, double lambda, double mu, OdeMode mode) {
    const double k2 = lambda * lambda + mu * mu;
    if (mode == OdeMode::Anisotropic) return (st.rp / st.r) * (st.rp / st.r) - k2 * st.r * st.r;
    return (st.rp * st.rp + 1.0) / (st.r * st.r) - k2 * st.r * st.r;
}

struct State4 {
    double r, rp, a, b;
};

State4 eval_rhs(const State4& y, double lambda, double mu, OdeMode mode) {
    const double k2 = lambda * lambda + mu * mu;
    const double r2 = y.r * y.r;
    double rpp;
    if (mode == OdeMode::Anisotropic) {
        rpp = (k2 * r2 * r2 + y.rp * y.rp) / y.r;
    } else {
        const double ap = lambda * r2, bp = mu * r2;
        rpp = (1.0 + ap * ap + bp * bp + y.rp * y.rp) / y.r;
    }
    return {y.rp, rpp, lambda * r2, mu * r2};
}

State4 axpy(const State4& y, double h, const State4& d) {
    return {y.r + h * d.r, y.rp + h * d.rp, y.a + h * d.a, y.b + h * d.b};
}

}  // namespace

OdeDerivatives rhs(const CyclicOdeState& state, double lambda, double mu, OdeMode mode) {
    if (!(state.r > 0.0)) throw DegenerateRadius("rhs: r must be positive");
    const State4 d = eval_rhs({state.r, state.rp, state.a, state.b}, lambda, mu, mode);
    return {d.r, d.rp, d.a, d.b};
}

const char* stop_reason_name(StopReason reason) {
    switch (reason) {
        case StopReason::ReachedEnd: return "reached_end";
        case StopReason::RadiusCollapse: return "radius_collapse";
        case StopReason::BlowUp: return "blow_up";
        default: return "step_too_large";
    }
}

OdeTrajectory integrate(const CyclicOdeState& initial, double lambda, double mu, OdeMode mode,
                        double s_end, double step) {
    if (!(step > 0.0)) throw DomainError("integrate: step must be positive");
    if (!(initial.r > 0.0)) throw DegenerateRadius("integrate: initial r must be positive");

    OdeTrajectory traj;
    traj.step = step;
    traj.mode = mode;
    traj.lambda = lambda;
    traj.mu = mu;
    traj.states.push_back(initial);

    const double dir = s_end >= initial.s ? 1.0 : -1.0;
    const double span = std::abs(s_end - initial.s);
    const long n_full = static_cast<long>(span / step);
    const double remainder = span - static_cast<double>(n_full) * step;
    const double inv_scale = std::max(1.0, std::abs(invariant(initial, lambda, mu, mode)));
    double inv_prev = invariant(initial, lambda, mu, mode);

    State4 y{initial.r, initial.rp, initial.a, initial.b};
    double s = initial.s;
    const long n_total = n_full + (remainder > 1e-14 * std::max(1.0, span) ? 1 : 0);
    for (long i = 0; i < n_total; ++i) {
        const double h = dir * (i < n_full ? step : remainder);
        const State4 k1 = eval_rhs(y, lambda, mu, mode);
        const State4 k2 = eval_rhs(axpy(y, h / 2.0, k1), lambda, mu, mode);
        const State4 k3 = eval_rhs(axpy(y, h / 2.0, k2), lambda, mu, mode);
        const State4 k4 = eval_rhs(axpy(y, h, k3), lambda, mu, mode);
        State4 next{y.r + h / 6.0 * (k1.r + 2.0 * k2.r + 2.0 * k3.r + k4.r),
                    y.rp + h / 6.0 * (k1.rp + 2.0 * k2.rp + 2.0 * k3.rp + k4.rp),
                    y.a + h / 6.0 * (k1.a + 2.0 * k2.a + 2.0 * k3.a + k4.a),
                    y.b + h / 6.0 * (k1.b + 2.0 * k2.b + 2.0 * k3.b + k4.b)};
        const double s_next = (i == n_total - 1) ? s_end : s + h;

        if (!std::isfinite(next.r) || !std::isfinite(next.rp) || std::abs(next.r) > kBlowUpGuard ||
            std::abs(next.rp) > kBlowUpGuard) {
            traj.stop = StopReason::BlowUp;
            return traj;
        }
        if (next.r <= kRadiusFloor) {
            traj.stop = StopReason::RadiusCollapse;
            return traj;
        }
        const CyclicOdeState st{s_next, next.r, next.rp, next.a, next.b};
        const double inv_now = invariant(st, lambda, mu, mode);
        if (std::abs(inv_now - inv_prev) > kStepJumpFraction * inv_scale) {
            traj.stop = std::max(std::abs(next.r), std::abs(next.rp)) > kModerateState
                            ? StopReason::BlowUp
                            : StopReason::StepTooLarge;
            return traj;
        }
        inv_prev = inv_now;
        traj.states.push_back(st);
        y = next;
        s = s_next;
    }
    traj.stop = StopReason::ReachedEnd;
    return traj;
}

double first_integral(const CyclicOdeState& state, double lambda, double mu) {
    if (!(state.r > 0.0)) throw DegenerateRadius("first_integral: r must be positive");
    const double k2 = lambda * lambda + mu * mu;
    const double ratio = state.rp / state.r;
    return ratio * ratio - k2 * state.r * state.r;
}

FamilyKind classify_by_first_integral(double c1, double tolerance) {
    if (c1 < -tolerance) return FamilyKind::TypeI;
    if (c1 > tolerance) return FamilyKind::TypeIII;
    return FamilyKind::TypeII;
}

double classification_tolerance(const OdeTrajectory& trajectory) {
    double rmax = 0.0;
    for (const auto& st : trajectory.states) rmax = std::max(rmax, st.r);
    const double k2 = trajectory.lambda * trajectory.lambda + trajectory.mu * trajectory.mu;
    return 1e-8 * std::max(1.0, k2 * rmax * rmax);
}

double rotational_residual(const RotationalProfile& profile, double r) {
    return rotational_residual(profile, r, profile.lambda_camc);
}

double rotational_residual(const RotationalProfile& profile, double r, double lambda_target) {
    if (!(r > 0.0)) throw DegenerateRadius("rotational_residual: r must be positive");
    return profile.upp(r) + profile.up(r) / r - lambda_target / 2.0;
}

void write_trajectory(std::ostream& os, const OdeTrajectory& trajectory) {
    os << "s,r,rp,a,b,c1\n";
    for (const auto& st : trajectory.states) {
        const double c1 = first_integral(st, trajectory.lambda, trajectory.mu);
        os << format_double(st.s) << ',' << format_double(st.r) << ',' << format_double(st.rp)
           << ',' << format_double(st.a) << ',' << format_double(st.b) << ','
           << format_double(c1) << '\n';
    }
}

}  // namespace camc
