#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "camc/families.hpp"
#include "camc/grid.hpp"
#include "camc/surface.hpp"

namespace camc {

/// Triangle mesh with faces wound counter-clockwise with respect to the
/// outward normal nu = Xs x Xtheta / |.|.
struct MeshExport {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> faces;  ///< 0-based here; OBJ writer emits 1-based
    std::string provenance;
};

/// Tessellates the surface over the grid samples; theta wraps (last column
/// stitched to the first) when the surface is theta-periodic. Triangles with
/// area below 1e-12 are dropped.
MeshExport tessellate(const ParametricSurface& surface, const GridSpec& grid);

/// ASCII OBJ: comment header `# camc-kit <version> <provenance>`, `v` records,
/// then 1-based `f` records. Floats in shortest round-trip form.
void write_obj(std::ostream& os, const MeshExport& mesh);

void write_mesh_json(std::ostream& os, const MeshExport& mesh);

/// Cross-section of a cyclic family with its symmetry plane, emitted as the
/// three polylines of the profile branches theta = 0, theta = pi and the
/// center curve. Columns: family, curve, s, x, z, where x is the in-plane
/// horizontal coordinate (the x-axis itself for mu = 0).
void write_crosssection_header(std::ostream& os);
void write_crosssection_csv(std::ostream& os, const CyclicFamilyParams& params, double s_lo,
                            double s_hi, int n_samples);

extern const char* const kToolkitVersion;

}  // namespace camc
