#include "hykin/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hykin/errors.hpp"
#include "hykin/scenario.hpp"

namespace hykin {

std::pair<int, int> SpatialGrid::clamp_interior(int i, int j) const {
    const int ilo = ghost_depth, ihi = nx - ghost_depth - 1;
    const int jlo = ghost_depth, jhi = ny - ghost_depth - 1;
    return {std::clamp(i, ilo, ihi), std::clamp(j, jlo, jhi)};
}

VelocityGrid make_velocity_grid(int nv, double vmax) {
    if (nv < 2)
        throw config_error("velocity grid needs at least 2 nodes per axis, got " +
                           std::to_string(nv));
    if (vmax <= 0.0)
        throw config_error("velocity cutoff must be positive");
    VelocityGrid g;
    g.nv = nv;
    g.vmax = vmax;
    g.dv1 = g.dv2 = g.dv3 = 2.0 * vmax / nv;
    g.dvk = g.dv1 * g.dv2 * g.dv3;
    g.nodes.resize(nv);
    for (int k = 0; k < nv; ++k)
        g.nodes[k] = -vmax + (k + 0.5) * g.dv1;
    return g;
}

std::pair<SpatialGrid, VelocityGrid> build_grids(const ScenarioConfig& config) {
    if (config.nx <= 0 || config.ny <= 0)
        throw config_error("spatial cell counts must be positive");
    if (config.lx <= 0.0)
        throw config_error("domain extent lx must be positive");

    SpatialGrid s;
    s.nx = config.nx;
    s.ny = config.ny;
    s.lx = config.lx;
    s.dx = config.lx / config.nx;
    s.ly = config.ly > 0.0 ? config.ly : s.dx * config.ny;
    s.dy = s.ly / config.ny;
    s.origin_x = config.origin_x;
    s.origin_y = config.origin_y;
    s.dt = 0.1 * s.dx;

    if (s.nx <= 2 * SpatialGrid::ghost_depth || s.ny <= 2 * SpatialGrid::ghost_depth)
        throw config_error("grid too small: the 4-cell ghost frame leaves no interior");

    return {s, make_velocity_grid(config.nv, config.vmax)};
}

bool in_obstacle_footprint(const ObstacleSpec& spec, int i, int j) {
    switch (spec.shape) {
    case ObstacleSpec::Shape::none:
        return false;
    case ObstacleSpec::Shape::rectangle:
        return std::abs(i - spec.center_i) <= spec.half_i &&
               std::abs(j - spec.center_j) <= spec.half_j;
    case ObstacleSpec::Shape::disk: {
        const double di = i - spec.center_i;
        const double dj = j - spec.center_j;
        return di * di + dj * dj <= double(spec.radius) * spec.radius;
    }
    }
    return false;
}

std::vector<CellKind> classify_cells(const SpatialGrid& grid, const ObstacleSpec& obstacle) {
    std::vector<CellKind> kind(grid.cell_count(), CellKind::interior);

    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i)
            if (grid.in_ghost_frame(i, j))
                kind[grid.index(i, j)] = CellKind::ghost;

    if (!obstacle.enabled())
        return kind;

    constexpr int ring = 2;
    for (int j = 0; j < grid.ny; ++j) {
        for (int i = 0; i < grid.nx; ++i) {
            const int c = grid.index(i, j);
            if (in_obstacle_footprint(obstacle, i, j)) {
                if (kind[c] == CellKind::ghost)
                    throw config_error("obstacle overlaps the ghost frame at cell (" +
                                       std::to_string(i) + "," + std::to_string(j) + ")");
                kind[c] = CellKind::obstacle;
                continue;
            }
            // 2-cell kinetic ring: dilation of the footprint.
            bool near = false;
            for (int dj = -ring; dj <= ring && !near; ++dj)
                for (int di = -ring; di <= ring && !near; ++di)
                    near = in_obstacle_footprint(obstacle, i + di, j + dj);
            if (near) {
                if (kind[c] == CellKind::ghost)
                    throw config_error("forced-kinetic ring overlaps the ghost frame at cell (" +
                                       std::to_string(i) + "," + std::to_string(j) + ")");
                kind[c] = CellKind::forced_ring;
            }
        }
    }
    return kind;
}

} // namespace hykin
