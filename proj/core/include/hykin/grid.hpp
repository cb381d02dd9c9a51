#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hykin/obstacle.hpp"

namespace hykin {

struct ScenarioConfig;

/// Uniform 2D cell-centered spatial grid. The outermost `ghost_depth` rows
/// and columns on every edge act as ghost cells that mirror the closest
/// physical cell.
struct SpatialGrid {
    static constexpr int ghost_depth = 4;

    int nx = 0;
    int ny = 0;
    double lx = 0.0;
    double ly = 0.0;
    double dx = 0.0;
    double dy = 0.0;
    double origin_x = 0.0;
    double origin_y = 0.0;
    double dt = 0.0; // global time step, 0.1 * dx

    int cell_count() const { return nx * ny; }
    int index(int i, int j) const { return j * nx + i; }
    double x_center(int i) const { return origin_x + (i + 0.5) * dx; }
    double y_center(int j) const { return origin_y + (j + 0.5) * dy; }

    bool in_ghost_frame(int i, int j) const {
        return i < ghost_depth || i >= nx - ghost_depth || j < ghost_depth ||
               j >= ny - ghost_depth;
    }
    /// Closest non-ghost cell (clamp into the physical interior).
    std::pair<int, int> clamp_interior(int i, int j) const;
};

/// Cartesian velocity cube [-vmax, vmax]^3 with cell-centered nodes,
/// v_k = -vmax + (k + 1/2) dv per axis. Symmetric under v -> -v and free of
/// a node at the origin.
struct VelocityGrid {
    int nv = 0;      // nodes per axis
    double vmax = 0; // half-width of the cube
    double dv1 = 0, dv2 = 0, dv3 = 0;
    double dvk = 0; // quadrature weight dv1*dv2*dv3

    std::vector<double> nodes; // shared 1D node coordinates (all axes equal)

    int size() const { return nv * nv * nv; }
    int index(int k1, int k2, int k3) const { return (k1 * nv + k2) * nv + k3; }
    double node(int k) const { return nodes[k]; }
};

VelocityGrid make_velocity_grid(int nv, double vmax);

/// Builds spatial and velocity grids from a scenario; stores dt = 0.1 dx.
std::pair<SpatialGrid, VelocityGrid> build_grids(const ScenarioConfig& config);

enum class CellKind : std::uint8_t { interior, obstacle, forced_ring, ghost };

/// Per-cell layer tags plus cell classification. Layer r is 0 (Euler),
/// 1 (ES-BGK) or 2 (Boltzmann); forced-ring cells always carry r = 2.
struct RegimeMap {
    int nx = 0;
    int ny = 0;
    std::vector<std::int8_t> r;
    std::vector<CellKind> kind;

    int index(int i, int j) const { return j * nx + i; }
    std::int8_t layer(int i, int j) const { return r[index(i, j)]; }
    CellKind kind_at(int i, int j) const { return kind[index(i, j)]; }
    /// Cells that are advanced by a solver and counted in regime statistics.
    bool is_updated(int c) const {
        return kind[c] == CellKind::interior || kind[c] == CellKind::forced_ring;
    }
};

/// Marks obstacle cells, the 2-cell forced-kinetic ring around them and the
/// ghost frame. Throws config_error when the obstacle (plus ring) does not
/// fit strictly inside the physical interior.
std::vector<CellKind> classify_cells(const SpatialGrid& grid, const ObstacleSpec& obstacle);

/// Footprint test used by classification and by the moving-obstacle update.
bool in_obstacle_footprint(const ObstacleSpec& spec, int i, int j);

} // namespace hykin
