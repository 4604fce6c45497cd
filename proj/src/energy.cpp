#include "camc/energy.hpp"

#include <cmath>
#include <limits>

#include "camc/surface.hpp"

namespace camc {

AxiallySymmetricEnergy dirichlet_energy() {
    AxiallySymmetricEnergy e;
    e.label = "dirichlet";
    e.F = [](double t) { return 1.0 / t - t; };
    e.dF = [](double t) { return -1.0 / (t * t) - 1.0; };
    e.d2F = [](double t) { return 2.0 / (t * t * t); };
    e.domain = Interval{0.0, 1.0, false, true};
    // The closed forms are odd in nu3 and evaluate on both hemispheres;
    // nu3 = 0 is their only singularity.
    e.curvature_margin = [](double t) { return std::abs(t); };
    return e;
}

AxiallySymmetricEnergy hyperboloid_energy() {
    AxiallySymmetricEnergy e;
    e.label = "hyperboloid";
    e.F = [](double t) { return std::sqrt(2.0 * t * t - 1.0) / t; };
    e.dF = [](double t) { return 1.0 / (t * t * std::sqrt(2.0 * t * t - 1.0)); };
    e.d2F = [](double t) {
        const double q = 2.0 * t * t - 1.0;
        return -2.0 / (t * t * t * std::sqrt(q)) - 2.0 / (t * q * std::sqrt(q));
    };
    e.domain = Interval{1.0 / std::sqrt(2.0), 1.0, false, true};
    e.curvature_margin = [](double t) { return std::abs(t) - 1.0 / std::sqrt(2.0); };
    return e;
}

AxiallySymmetricEnergy isotropic_energy() {
    AxiallySymmetricEnergy e;
    e.label = "isotropic";
    e.F = [](double) { return 1.0; };
    e.dF = [](double) { return 0.0; };
    e.d2F = [](double) { return 0.0; };
    e.domain = Interval{-1.0, 1.0, true, true};
    e.curvature_margin = [](double) { return std::numeric_limits<double>::infinity(); };
    return e;
}

WulffReciprocals wulff_reciprocals(const AxiallySymmetricEnergy& energy, double nu3) {
    if (!(energy.curvature_margin(nu3) > 1e-14))
        throw DomainError("wulff_reciprocals: nu3 = " + std::to_string(nu3) +
                          " is singular for energy '" + energy.label + "'");
    WulffReciprocals w;
    w.inv_mu2 = energy.F(nu3) - nu3 * energy.dF(nu3);
    w.inv_mu1 = (1.0 - nu3 * nu3) * energy.d2F(nu3) + w.inv_mu2;
    return w;
}

double surface_energy_quadrature(const ParametricSurface& surface,
                                 const AxiallySymmetricEnergy& energy, const GridSpec& grid) {
    const auto ss = grid.s_samples();
    const auto tt = grid.theta_samples();
    const double cell = grid.cell_area();
    double total = 0.0;
    for (double s : ss) {
        for (double t : tt) {
            const SurfaceJet j = jet(surface, s, t);
            const Vec3 cr = cross(j.Xs, j.Xt);
            const double detg = norm2(cr);
            if (!(detg > 1e-24))
                throw DegenerateJet("surface_energy_quadrature: det(g) <= 0 at sample");
            const double area = std::sqrt(detg);
            const double nu3 = cr.z / area;
            if (!energy.domain.contains(nu3))
                throw DomainError("surface_energy_quadrature: nu3 = " + std::to_string(nu3) +
                                  " outside the domain of energy '" + energy.label + "'");
            total += energy.F(nu3) * area * cell;
        }
    }
    return total;
}

double discrete_graph_energy(const std::vector<std::vector<double>>& u, double dx, double dy,
                             double lambda) {
    const std::size_t nx = u.size();
    if (nx < 3) throw GridTooSmall("discrete_graph_energy: need at least 3 samples per axis");
    const std::size_t ny = u.front().size();
    if (ny < 3) throw GridTooSmall("discrete_graph_energy: need at least 3 samples per axis");
    for (const auto& row : u)
        if (row.size() != ny) throw DomainError("discrete_graph_energy: ragged sample grid");

    auto diff = [](double um, double u0, double up_, double h, int where) {
        switch (where) {
            case -1: return (-3.0 * u0 + 4.0 * um - up_) / (2.0 * h);  // forward, um = u1, up_ = u2
            case 1: return (3.0 * u0 - 4.0 * um + up_) / (2.0 * h);    // backward
            default: return (up_ - um) / (2.0 * h);
        }
    };

    double grad_sum = 0.0, u_sum = 0.0;
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < ny; ++j) {
            double ux, uy;
            if (i == 0)
                ux = diff(u[1][j], u[0][j], u[2][j], dx, -1);
            else if (i == nx - 1)
                ux = diff(u[i - 1][j], u[i][j], u[i - 2][j], dx, 1);
            else
                ux = diff(u[i - 1][j], u[i][j], u[i + 1][j], dx, 0);
            if (j == 0)
                uy = diff(u[i][1], u[i][0], u[i][2], dy, -1);
            else if (j == ny - 1)
                uy = diff(u[i][j - 1], u[i][j], u[i][j - 2], dy, 1);
            else
                uy = diff(u[i][j - 1], u[i][j], u[i][j + 1], dy, 0);
            grad_sum += ux * ux + uy * uy;
            u_sum += u[i][j];
        }
    }
    return (grad_sum + lambda * u_sum) * dx * dy;
}

}  // namespace camc
