#include "camc/mesh.hpp"

#include <ostream>

#include "camc/format.hpp"
#include "json.hpp"

namespace camc {

const char* const kToolkitVersion = "0.1.0";

MeshExport tessellate(const ParametricSurface& surface, const GridSpec& grid) {
    const auto ss = grid.s_samples();
    const auto tt = grid.theta_samples();
    const int ns = static_cast<int>(ss.size());
    const int nt = static_cast<int>(tt.size());

    MeshExport mesh;
    mesh.provenance = surface.descriptor + " | s=[" + format_double(grid.s_min) + "," +
                      format_double(grid.s_max) + "] grid=" + std::to_string(grid.n_s) + "x" +
                      std::to_string(grid.n_theta);
    mesh.vertices.reserve(static_cast<std::size_t>(ns) * static_cast<std::size_t>(nt));
    for (int i = 0; i < ns; ++i)
        for (int j = 0; j < nt; ++j)
            mesh.vertices.push_back(
                surface.eval(ss[static_cast<std::size_t>(i)], tt[static_cast<std::size_t>(j)]));

    auto vid = [nt](int i, int j) { return i * nt + j; };
    auto push_face = [&mesh](int a, int b, int c) {
        const Vec3 area = cross(mesh.vertices[static_cast<std::size_t>(b)] -
                                    mesh.vertices[static_cast<std::size_t>(a)],
                                mesh.vertices[static_cast<std::size_t>(c)] -
                                    mesh.vertices[static_cast<std::size_t>(a)]);
        if (0.5 * norm(area) <= 1e-12) return;  // degenerate sliver
        mesh.faces.push_back({a, b, c});
    };

    const int j_count = surface.theta_periodic ? nt : nt - 1;
    for (int i = 0; i + 1 < ns; ++i) {
        for (int j = 0; j < j_count; ++j) {
            const int jn = (j + 1) % nt;
            // Quad split; winding keeps the face normal on the nu side.
            push_face(vid(i, j), vid(i + 1, j), vid(i + 1, jn));
            push_face(vid(i, j), vid(i + 1, jn), vid(i, jn));
        }
    }
    return mesh;
}

void write_obj(std::ostream& os, const MeshExport& mesh) {
    os << "# camc-kit " << kToolkitVersion << ' ' << mesh.provenance << '\n';
    for (const Vec3& v : mesh.vertices)
        os << "v " << format_double(v.x) << ' ' << format_double(v.y) << ' ' << format_double(v.z)
           << '\n';
    for (const auto& f : mesh.faces)
        os << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
}

void write_mesh_json(std::ostream& os, const MeshExport& mesh) {
    nlohmann::json j;
    j["provenance"] = mesh.provenance;
    j["version"] = kToolkitVersion;
    auto& verts = j["vertices"] = nlohmann::json::array();
    for (const Vec3& v : mesh.vertices) verts.push_back({v.x, v.y, v.z});
    auto& faces = j["faces"] = nlohmann::json::array();
    for (const auto& f : mesh.faces) faces.push_back({f[0], f[1], f[2]});
    os << j.dump(2) << '\n';
}

void write_crosssection_header(std::ostream& os) { os << "family,curve,s,x,z\n"; }

void write_crosssection_csv(std::ostream& os, const CyclicFamilyParams& params, double s_lo,
                            double s_hi, int n_samples) {
    if (n_samples < 2) throw DomainError("crosssection: need at least 2 samples");
    // the dump lives in the rotated symmetry plane
    const CyclicFamilyParams normalized = normalize_by_rotation(params).first;
    const char* fam = family_name(params.kind);
    auto dump = [&](const char* name, double offset_sign) {
        for (int i = 0; i < n_samples; ++i) {
            const double s = s_lo + (s_hi - s_lo) * i / (n_samples - 1);
            const CyclicProfile p = family_profile(normalized, s);
            const double x = p.a + offset_sign * p.r;
            os << fam << ',' << name << ',' << format_double(s) << ',' << format_double(x) << ','
               << format_double(s) << '\n';
        }
    };
    dump("theta0", 1.0);
    dump("theta_pi", -1.0);
    dump("centers", 0.0);
}

}  // namespace camc
