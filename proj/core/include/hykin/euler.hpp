#pragma once

#include <functional>

#include "hykin/cweno.hpp"
#include "hykin/fields.hpp"
#include "hykin/grid.hpp"

namespace hykin {

struct PrimState {
    double rho = 0.0;
    double ux = 0.0;
    double uy = 0.0;
    double p = 0.0;
};

/// P = (xi - 1)(E - 1/2 rho |u|^2). Throws positivity_error when the state
/// has lost density or pressure positivity.
double pressure(const ConservedState& u, double xi);

PrimState to_primitive(const ConservedState& u, double xi);
ConservedState to_conserved(const PrimState& p, double xi);

double sound_speed(const PrimState& p, double xi);

/// Physical flux along axis (0 = x, 1 = y).
ConservedState euler_flux(const ConservedState& u, int axis, double xi);

/// Local Lax-Friedrichs bound max(|u_n| + c) over the two states.
double max_wave_speed(const PrimState& l, const PrimState& r, int axis, double xi);

/// F = 1/2 (F(UL) + F(UR)) - alpha/2 (UR - UL).
ConservedState lax_friedrichs_flux(const ConservedState& ul, const ConservedState& ur,
                                   int axis, double alpha, double xi);

using PrimAccessor = std::function<PrimState(int, int)>;

struct EulerScheme {
    double xi = 5.0 / 3.0;
    double eps_weno = 1e-6;
};

/// Finite-volume residual L(U) = -dF/dx - dG/dy of one cell. Primitive
/// variables are reconstructed dimension-by-dimension with CWENO3 and faces
/// use the local Lax-Friedrichs flux. `prim` must cover the radius-2
/// stencil around (i, j).
ConservedState euler_rhs_cell(const PrimAccessor& prim, int i, int j, double dx,
                              double dy, const EulerScheme& scheme);

/// Whole-field residual on a periodic torus (no ghost frame); used by the
/// standalone integrator and the conservation tests.
ConservedField euler_rhs_periodic(const ConservedField& u, int nx, int ny, double dx,
                                  double dy, const EulerScheme& scheme);

/// One TVD-RK2 (Heun) step on a periodic domain.
void tvd_rk2_step_periodic(ConservedField& u, int nx, int ny, double dx, double dy,
                           double dt, const EulerScheme& scheme);

} // namespace hykin
