#pragma once

#include <array>
#include <span>

#include "hykin/fields.hpp"
#include "hykin/grid.hpp"

namespace hykin {

/// Free-transport residual -v . grad_x f of one cell. `fx` holds the
/// distribution blocks of cells (i-2 .. i+2) at fixed j, `fy` those of
/// (j-2 .. j+2) at fixed i (index 2 is the cell itself in both). Each
/// velocity node is upwinded by the sign of its velocity component and
/// reconstructed along the axis with CWENO3. The result is linear in f.
void kinetic_transport_rhs_cell(const std::array<const double*, 5>& fx,
                                const std::array<const double*, 5>& fy,
                                const VelocityGrid& vgrid, double dx, double dy,
                                double eps_weno, double* out);

/// Whole-field transport residual on a periodic torus. Every cell of `f`
/// must own a block; used by the standalone kinetic integrators and the
/// conservation/linearity tests.
void kinetic_transport_rhs_periodic(const DistributionField& f, int nx, int ny,
                                    const VelocityGrid& vgrid, double dx, double dy,
                                    DistributionField& out, double eps_weno = 1e-6);

} // namespace hykin
