#pragma once
/**
 * @file mesh.hpp
 * @brief Quad meshes of product surfaces, projected stereographically, with
 *        per-vertex scalar sidecars.
 *
 * Vertices follow the surface grid row-major (i * nt + j); each grid cell
 * becomes one quad.  The OBJ writer emits `v` lines and 1-based `f` quads;
 * the sidecar CSV carries (s, t), the flat coordinates, and the curvature
 * scalars for every vertex in the same order.
 */

#include <array>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "s3surf/errors.hpp"
#include "s3surf/serialize.hpp"
#include "s3surf/stereo.hpp"
#include "s3surf/surface.hpp"

namespace s3surf {

struct MeshArtifact {
    std::string pole;             ///< resolved pole name (never "auto")
    std::size_t ns = 0, nt = 0;   ///< grid extents
    std::vector<Vec3> vertices;   ///< row-major, ns * nt
    std::vector<std::array<std::size_t, 4>> quads;  ///< 0-based vertex ids
    std::vector<double> s, t;     ///< per-vertex parameters
    std::vector<double> H, K;     ///< per-vertex curvatures
};

/**
 * @brief Project the surface grid and attach curvatures from its report.
 *
 * pole_choice is "auto" (pick the candidate axis farthest from the data) or
 * one of the eight signed axis names.  Throws PoleCollision if any vertex
 * ends up within the pole clearance.
 */
inline MeshArtifact make_mesh(const SurfaceGrid& grid, const GeometryReport& rep,
                              const std::string& pole_choice = "auto") {
    if (rep.ns != grid.ns || rep.nt != grid.nt)
        throw ConfigError("geometry report does not match the surface grid");
    MeshArtifact mesh;
    mesh.ns = grid.ns;
    mesh.nt = grid.nt;

    std::vector<Quat> points;
    points.reserve(grid.ns * grid.nt);
    for (std::size_t i = 0; i < grid.ns; ++i)
        for (std::size_t j = 0; j < grid.nt; ++j) points.push_back(grid.X(i, j));

    mesh.pole = (pole_choice == "auto") ? choose_auto_pole(points) : pole_choice;
    mesh.vertices = stereographic_project_all(points, pole_from_name(mesh.pole));

    const std::size_t n = points.size();
    mesh.s.resize(n);
    mesh.t.resize(n);
    mesh.H.resize(n);
    mesh.K.resize(n);
    for (std::size_t i = 0; i < grid.ns; ++i)
        for (std::size_t j = 0; j < grid.nt; ++j) {
            const std::size_t k = grid.idx(i, j);
            mesh.s[k] = grid.s(i);
            mesh.t[k] = grid.t(j);
            mesh.H[k] = rep.H[k];
            mesh.K[k] = rep.K[k];
        }

    mesh.quads.reserve((grid.ns - 1) * (grid.nt - 1));
    for (std::size_t i = 0; i + 1 < grid.ns; ++i)
        for (std::size_t j = 0; j + 1 < grid.nt; ++j)
            mesh.quads.push_back({grid.idx(i, j), grid.idx(i + 1, j), grid.idx(i + 1, j + 1),
                                  grid.idx(i, j + 1)});
    return mesh;
}

/// Wavefront OBJ: one `v` per vertex, one quad `f` per grid cell (1-based).
inline void write_obj(std::ostream& os, const MeshArtifact& mesh) {
    os << "# product surface mesh, stereographic pole " << mesh.pole << "\n";
    for (const auto& v : mesh.vertices)
        os << "v " << format_double(v.x) << ' ' << format_double(v.y) << ' '
           << format_double(v.z) << "\n";
    for (const auto& q : mesh.quads)
        os << "f " << q[0] + 1 << ' ' << q[1] + 1 << ' ' << q[2] + 1 << ' ' << q[3] + 1 << "\n";
}

/// Sidecar CSV with per-vertex parameters, coordinates, and curvatures.
inline void write_mesh_csv(std::ostream& os, const MeshArtifact& mesh) {
    os << "vertex,s,t,x,y,z,H,K\n";
    for (std::size_t k = 0; k < mesh.vertices.size(); ++k) {
        const auto& v = mesh.vertices[k];
        detail::csv_row(os, {static_cast<double>(k), mesh.s[k], mesh.t[k], v.x, v.y, v.z,
                             mesh.H[k], mesh.K[k]});
    }
}

} // namespace s3surf
