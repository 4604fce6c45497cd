#pragma once

#include <functional>
#include <string>
#include <vector>

#include "camc/grid.hpp"

namespace camc {

struct ParametricSurface;

/// Axially symmetric anisotropic surface energy density F(nu3).
///
/// `domain` is the physical admissibility interval used when integrating
/// the energy over a surface ((0,1] for the Dirichlet density). The
/// curvature formulas 1/mu2 = F - nu3 F' and 1/mu1 = (1-nu3^2) F'' + 1/mu2
/// extend beyond it wherever the closed forms stay finite; that extension
/// is what the anisotropic mean curvature of a non-graph surface needs,
/// since the unit normal of a full cyclic surface sweeps both hemispheres.
/// `curvature_margin(nu3)` returns the distance from nu3 to the nearest
/// singularity of those closed forms (<= 0 means they do not evaluate).
struct AxiallySymmetricEnergy {
    std::string label;
    std::function<double(double)> F, dF, d2F;
    Interval domain;
    std::function<double(double)> curvature_margin;
};

/// F(nu3) = 1/nu3 - nu3 on (0,1]; the surface form of the Dirichlet energy.
AxiallySymmetricEnergy dirichlet_energy();

/// F(nu3) = sqrt(2 nu3^2 - 1)/nu3 on (1/sqrt2, 1]; Wulff shape a hyperboloid.
AxiallySymmetricEnergy hyperboloid_energy();

/// F == 1 (area functional); anisotropic mean curvature reduces to 2H.
AxiallySymmetricEnergy isotropic_energy();

/// Reciprocal principal curvatures of the Wulff shape at a given nu3.
struct WulffReciprocals {
    double inv_mu1 = 0.0;
    double inv_mu2 = 0.0;
};

/// inv_mu2 = F - nu3 F', inv_mu1 = (1-nu3^2) F'' + inv_mu2.
/// Throws DomainError when the closed forms are singular at nu3.
WulffReciprocals wulff_reciprocals(const AxiallySymmetricEnergy& energy, double nu3);

/// Midpoint-rule quadrature of  integral_Sigma F(nu3) dSigma  over the grid's
/// parameter rectangle. Every sample's nu3 must lie in energy.domain.
double surface_energy_quadrature(const ParametricSurface& surface,
                                 const AxiallySymmetricEnergy& energy,
                                 const GridSpec& grid);

/// Graph-form energy  integral |Du|^2 + lambda * integral u  from samples of u
/// at the cell centers of a uniform nx-by-ny grid with spacings (dx, dy).
/// Gradients use central differences inside and second-order one-sided
/// differences on the boundary rows/columns; the integrals are midpoint sums.
/// u[i][j] samples u(x_i, y_j), i indexing x.
double discrete_graph_energy(const std::vector<std::vector<double>>& u,
                             double dx, double dy, double lambda);

}  // namespace camc
