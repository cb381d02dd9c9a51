#include "hykin/coupling.hpp"

#include "hykin/errors.hpp"

namespace hykin {

Moments moments_from_conserved(const ConservedState& u, double heat_ratio) {
    Moments m;
    m.rho = u.rho;
    m.u = Eigen::Vector3d(u.mx / u.rho, u.my / u.rho, 0.0);
    m.T = pressure(u, heat_ratio) / u.rho;
    return m;
}

ConservedState conserved_from_moments(const Moments& m, double heat_ratio) {
    ConservedState u;
    u.rho = m.rho;
    u.mx = m.rho * m.u.x();
    u.my = m.rho * m.u.y();
    u.E = m.rho * m.T / (heat_ratio - 1.0) + 0.5 * m.rho * m.u.squaredNorm();
    return u;
}

PrimMoments prim_from_conserved(const ConservedState& u, double heat_ratio) {
    PrimMoments p;
    p.rho = u.rho;
    p.ux = u.mx / u.rho;
    p.uy = u.my / u.rho;
    p.T = pressure(u, heat_ratio) / u.rho;
    return p;
}

PrimMoments prim_from_moments(const Moments& m) {
    return PrimMoments{m.rho, m.u.x(), m.u.y(), m.T};
}

namespace {

ConservedState obstacle_state(const ObstacleSpec& o, double heat_ratio) {
    Moments m;
    m.rho = o.rho;
    m.u = Eigen::Vector3d(o.ux, o.uy, 0.0);
    m.T = o.temperature();
    return conserved_from_moments(m, heat_ratio);
}

Moments obstacle_moments(const ObstacleSpec& o) {
    Moments m;
    m.rho = o.rho;
    m.u = Eigen::Vector3d(o.ux, o.uy, 0.0);
    m.T = o.temperature();
    return m;
}

} // namespace

ConservedState synthesize_hydro_state(const StageView& v, int i, int j) {
    const auto& g = *v.grid;
    if (g.in_ghost_frame(i, j)) {
        auto [pi, pj] = g.clamp_interior(i, j);
        i = pi;
        j = pj;
    }
    const int c = g.index(i, j);
    if (v.regime->kind[c] == CellKind::obstacle)
        return obstacle_state(*v.obstacle, v.heat_ratio);
    if (v.regime->r[c] == 0)
        return (*v.hydro)[c];
    return conserved_from_moments(moments_of((*v.f)[c], *v.vgrid), v.heat_ratio);
}

const double* synthesize_distribution(const StageView& v, int i, int j,
                                      std::vector<double>& scratch) {
    const auto& g = *v.grid;
    if (g.in_ghost_frame(i, j)) {
        auto [pi, pj] = g.clamp_interior(i, j);
        i = pi;
        j = pj;
    }
    const int c = g.index(i, j);
    if (v.regime->kind[c] == CellKind::obstacle) {
        scratch.resize(v.vgrid->size());
        maxwellian(obstacle_moments(*v.obstacle), *v.vgrid, scratch);
        return scratch.data();
    }
    if (v.regime->r[c] == 0) {
        scratch.resize(v.vgrid->size());
        maxwellian(moments_from_conserved((*v.hydro)[c], v.heat_ratio), *v.vgrid, scratch);
        return scratch.data();
    }
    // Kinetic neighbor of either layer: the stored distribution, verbatim.
    return (*v.f)[c].data();
}

ObstacleApplyResult apply_obstacle(const SpatialGrid& grid, const VelocityGrid& vgrid,
                                   ObstacleSpec& spec, RegimeMap& regime,
                                   ConservedField& hydro, DistributionField& f,
                                   double heat_ratio) {
    ObstacleApplyResult result;
    if (!spec.enabled())
        return result;

    const bool moving = spec.move_di != 0 || spec.move_dj != 0;
    spec.center_i += spec.move_di;
    spec.center_j += spec.move_dj;

    std::vector<CellKind> new_kind;
    try {
        new_kind = classify_cells(grid, spec);
    } catch (const config_error& e) {
        if (moving)
            throw scenario_end_error(std::string("moving obstacle left the domain: ") +
                                     e.what());
        throw;
    }

    const ConservedState fixed = obstacle_state(spec, heat_ratio);
    const Moments fixed_m = obstacle_moments(spec);

    for (int c = 0; c < grid.cell_count(); ++c) {
        const CellKind before = regime.kind[c];
        const CellKind after = new_kind[c];
        if (after == CellKind::obstacle) {
            if (before != CellKind::obstacle) {
                ++result.covered;
                f.release(c);
            }
            hydro[c] = fixed;
            regime.r[c] = 2;
        } else if (before == CellKind::obstacle) {
            // Vacated: short-lived Layer-2 cell holding the fixed state; the
            // recomputed ring covers it on the next classification.
            ++result.vacated;
            regime.r[c] = 2;
            hydro[c] = fixed;
            maxwellian(fixed_m, vgrid, f.ensure(c));
        }
        if (after == CellKind::forced_ring && regime.r[c] != 2) {
            if (regime.r[c] == 0)
                maxwellian(moments_from_conserved(hydro[c], heat_ratio), vgrid,
                           f.ensure(c));
            regime.r[c] = 2;
        }
        regime.kind[c] = after;
    }
    return result;
}

} // namespace hykin
