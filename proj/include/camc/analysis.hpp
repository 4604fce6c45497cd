#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "camc/format.hpp"
#include "camc/grid.hpp"
#include "camc/surface.hpp"
#include "json.hpp"

namespace camc {

/// Lambda (or residual) samples over a parameter grid.
///
/// Nodes where the frame or the energy's curvature formulas are undefined,
/// or where |nu3| falls inside the conditioning guard band around the
/// formulas' singularity, are masked out and counted; a field with masked
/// nodes is marked partial. max_abs_dev is taken over valid nodes.
struct ResidualField {
    std::vector<double> s;
    std::vector<double> theta;
    std::vector<std::vector<double>> values;   // [i_s][j_theta]
    std::vector<std::vector<std::uint8_t>> valid;
    double target = 0.0;
    double max_abs_dev = 0.0;
    std::size_t n_valid = 0;
    std::size_t n_skipped_degenerate = 0;  // VerticalNormalDegeneracy / DegenerateJet
    std::size_t n_skipped_domain = 0;      // energy curvature formulas singular
    std::size_t n_skipped_guard = 0;       // |nu3| inside the guard band
    bool partial = false;

    bool slice_fully_valid(std::size_t i) const;
};

struct LambdaFieldOptions {
    /// Deviation target; defaults to the mean over valid nodes.
    std::optional<double> target;
    /// Skip nodes whose energy curvature margin is below this (ill-conditioned
    /// band around the formulas' singularity; 0.01 keeps double-precision
    /// noise in Lambda below ~1e-7 for analytic jets).
    double nu3_guard = 0.01;
    double eps_frame = kEpsFrame;
};

ResidualField lambda_field(const ParametricSurface& surface, const AxiallySymmetricEnergy& energy,
                           const GridSpec& grid, const LambdaFieldOptions& options = {});

/// Discrete orthogonal projection of a theta-periodic slice:
/// A0 with the 1/(2pi) normalization, An, Bn (n >= 1) with the 1/pi one.
struct FourierSpectrum {
    double s = 0.0;
    std::vector<double> A;  ///< A[0..N]
    std::vector<double> B;  ///< B[0] = 0, B[1..N]
    int N = 0;

    double max_mode_abs() const;
};

/// Projection onto modes 0..N from M >= 4N uniform samples over one period
/// (the values' theta positions are taken from `theta`). Throws AliasingRisk
/// below the 4N sample floor.
FourierSpectrum fourier_project(std::span<const double> values, std::span<const double> theta,
                                int N);

/// Projection core without the sample-count gate; exact for trigonometric
/// polynomials of degree <= N whenever M >= 2N+1.
FourierSpectrum fourier_project_raw(std::span<const double> values, std::span<const double> theta,
                                    int N);

/// Orthonormal Frenet frame of an arc-length curve.
struct FrenetFrame {
    Vec3 t, n, b;
    double kappa = 0.0;
    double tau = 0.0;
};

struct FrenetCurve {
    std::string descriptor;
    std::function<Vec3(double)> gamma;                ///< arc-length parametrized
    std::function<FrenetFrame(double)> frame;         ///< analytic when supplied
    double s_lo = 0.0, s_hi = 1.0;
};

/// Circle of the given radius in the xz-plane through the origin,
/// arc-length parametrized, with its closed-form Frenet frame.
FrenetCurve circular_arc_xz(double radius, double s_lo, double s_hi);

/// Arc-length helix with constant curvature/torsion.
FrenetCurve helix_curve(double radius, double pitch, double s_lo, double s_hi);

/// Frenet data by central differences with Gram-Schmidt re-orthonormalization
/// per sample; throws FrameUndefined where the curvature vanishes (or sits
/// below the difference-noise floor).
FrenetCurve frenet_from_gamma(std::string descriptor, std::function<Vec3(double)> gamma,
                              double s_lo, double s_hi, double fd_step = 1e-3);

/// Coordinates (e11, e22, e33) of the fixed vector e3 = (0,0,1) in the
/// moving frame (t, n, b) at s.
Vec3 frenet_e3_coordinates(const FrenetCurve& curve, double s);

/// Cyclic surface with circles orthogonal to the curve's tangent:
/// X(s,theta) = c(s) + r(s)(cos theta n(s) + sin theta b(s)) with the center
/// offset c(s) = gamma(s) + beta(s) n(s) + gamma_off(s) b(s).
/// FiniteDifference-mode jets.
ParametricSurface tilted_cyclic_surface(const FrenetCurve& curve,
                                        std::function<double(double)> r,
                                        std::function<double(double)> beta,
                                        std::function<double(double)> gamma_off,
                                        double fd_step = 1e-4);

/// Reconstructs z(x,y) on the 5-point stencil of spacing fd_step around the
/// image of the seed by Newton-inverting (X1, X2), then returns the stencil
/// Laplacian of z minus lambda0/2. The Newton solves warm-start from the
/// seed and walk outward; iterates may wander at most patch_halfwidth from
/// the seed in parameter space. Throws NotAGraph / NewtonDivergence.
double local_graph_laplace_residual(const ParametricSurface& surface, double seed_s,
                                    double seed_theta, double patch_halfwidth, double fd_step,
                                    double lambda0);

struct CertificateTolerances {
    double lambda_dev = 1e-6;   ///< max |Lambda - lambda0| over valid nodes
    double mode = 1e-6;         ///< max Fourier mode magnitude over slices
    double nu3_guard = 0.01;
    int fourier_cutoff = 12;
};

/// Per-slice spectrum: the deviation field Lambda - lambda0 where the whole
/// slice is valid, else the Dirichlet identity residual (the trigonometric
/// object whose coefficients the mode-vanishing argument constrains), which
/// stays well-conditioned across the nu3 = 0 locus.
struct SliceSpectrum {
    double s = 0.0;
    bool from_identity_residual = false;
    FourierSpectrum spectrum;
};

struct CertificateReport {
    std::string surface_descriptor;
    std::string energy_label;
    GridSpec grid;
    double lambda0 = 0.0;
    double max_abs_dev = 0.0;
    double node_coverage = 0.0;  ///< valid / total
    double max_mode_abs = 0.0;
    SliceSpectrum worst_slice;
    bool pass = false;
    CertificateTolerances tolerances;
    std::size_t n_spectrum_slices = 0;
};

/// Bundles lambda_field with the per-slice Fourier projection and the
/// pass/fail verdict against the tolerances.
CertificateReport camc_certificate(const ParametricSurface& surface,
                                   const AxiallySymmetricEnergy& energy, const GridSpec& grid,
                                   double lambda0,
                                   const CertificateTolerances& tolerances = {});

nlohmann::json certificate_to_json(const CertificateReport& report);

}  // namespace camc
