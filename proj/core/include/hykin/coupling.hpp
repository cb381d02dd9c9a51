#pragma once

#include <vector>

#include "hykin/euler.hpp"
#include "hykin/fields.hpp"
#include "hykin/indicators.hpp"
#include "hykin/moments.hpp"
#include "hykin/obstacle.hpp"

namespace hykin {

/// Conversions between the Layer-0 conserved state and kinetic moments.
/// With heat ratio 5/3 (monatomic, u_z = 0) the 2D Euler energy coincides
/// with the 3D-velocity kinetic energy E = 1/2 rho |u|^2 + 3/2 rho T, which
/// is what makes the layers exchangeable.
Moments moments_from_conserved(const ConservedState& u, double heat_ratio);
ConservedState conserved_from_moments(const Moments& m, double heat_ratio);
PrimMoments prim_from_conserved(const ConservedState& u, double heat_ratio);
PrimMoments prim_from_moments(const Moments& m);

/// Read-only view of one stage's fields, used to synthesize stencil data
/// across heterogeneous neighbors. `hydro` is authoritative for Layer-0
/// cells and holds the stage moment cache for kinetic cells.
struct StageView {
    const SpatialGrid* grid = nullptr;
    const VelocityGrid* vgrid = nullptr;
    const RegimeMap* regime = nullptr;
    const ConservedField* hydro = nullptr;
    const DistributionField* f = nullptr;
    const ObstacleSpec* obstacle = nullptr;
    double heat_ratio = 5.0 / 3.0;
};

/// Hydrodynamic state seen by a stencil at cell (i, j): stored U for fluid
/// cells, moments of the distribution for kinetic cells, the fixed interior
/// state for obstacle cells, and the closest physical cell for ghosts.
ConservedState synthesize_hydro_state(const StageView& v, int i, int j);

/// Distribution seen by a kinetic stencil at (i, j): the stored block for
/// kinetic cells (either layer), the Maxwellian of the hydro state for
/// fluid cells, the Maxwellian of the fixed state for obstacle cells.
/// Synthesized data lands in `scratch`; the returned pointer is either the
/// stored block or scratch.data().
const double* synthesize_distribution(const StageView& v, int i, int j,
                                      std::vector<double>& scratch);

/// Moves the obstacle by its per-step displacement, reclassifies the kind
/// map, overwrites obstacle cells with the fixed state, gives vacated cells
/// a Layer-2 Maxwellian of the fixed state and forces the recomputed ring
/// to Layer 2. Throws scenario_end_error when the displaced footprint (or
/// its ring) would leave the physical interior.
struct ObstacleApplyResult {
    int vacated = 0;
    int covered = 0;
};
ObstacleApplyResult apply_obstacle(const SpatialGrid& grid, const VelocityGrid& vgrid,
                                   ObstacleSpec& spec, RegimeMap& regime,
                                   ConservedField& hydro, DistributionField& f,
                                   double heat_ratio);

} // namespace hykin
