#pragma once

#include <numbers>
#include <vector>

#include "camc/errors.hpp"

namespace camc {

/// Half-open/open interval with explicit endpoint closedness.
struct Interval {
    double lo = 0.0, hi = 0.0;
    bool lo_closed = false, hi_closed = false;

    bool contains(double x) const {
        if (x < lo || x > hi) return false;
        if (x == lo && !lo_closed) return false;
        if (x == hi && !hi_closed) return false;
        return true;
    }
    bool contains_interior(double x) const { return x > lo && x < hi; }
    double span() const { return hi - lo; }
};

/// Uniform midpoint-rule sampling of a parameter rectangle.
///
/// Samples sit at cell centers: s_i = lo + (i+1/2)*(hi-lo)/n_s with
/// lo = s_min + margin, hi = s_max - margin, and likewise in the second
/// axis (theta by default, one full period). Midpoint placement keeps
/// samples off open domain endpoints and doubles as the quadrature rule.
struct GridSpec {
    double s_min = 0.0, s_max = 1.0;
    int n_s = 2;
    int n_theta = 8;
    double margin = 0.0;
    double t_min = 0.0, t_max = 2.0 * std::numbers::pi;

    void validate() const {
        if (!(s_min < s_max)) throw DomainError("GridSpec: s_min must be < s_max");
        if (n_s < 2) throw DomainError("GridSpec: n_s must be >= 2");
        if (n_theta < 8) throw DomainError("GridSpec: n_theta must be >= 8");
        if (margin < 0) throw DomainError("GridSpec: margin must be >= 0");
        if (s_min + margin >= s_max - margin)
            throw DomainError("GridSpec: margin eats the whole s-range");
        if (!(t_min < t_max)) throw DomainError("GridSpec: t_min must be < t_max");
    }

    std::vector<double> s_samples() const {
        validate();
        const double lo = s_min + margin, hi = s_max - margin;
        const double ds = (hi - lo) / n_s;
        std::vector<double> out(static_cast<size_t>(n_s));
        for (int i = 0; i < n_s; ++i) out[static_cast<size_t>(i)] = lo + (i + 0.5) * ds;
        return out;
    }

    std::vector<double> theta_samples() const {
        validate();
        const double dt = (t_max - t_min) / n_theta;
        std::vector<double> out(static_cast<size_t>(n_theta));
        for (int j = 0; j < n_theta; ++j) out[static_cast<size_t>(j)] = t_min + (j + 0.5) * dt;
        return out;
    }

    double cell_area() const {
        return (s_max - 2 * margin - s_min) / n_s * (t_max - t_min) / n_theta;
    }
};

}  // namespace camc
