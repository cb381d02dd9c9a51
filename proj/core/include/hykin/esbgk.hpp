#pragma once

#include <cmath>
#include <span>

#include "hykin/fields.hpp"
#include "hykin/grid.hpp"
#include "hykin/imex.hpp"
#include "hykin/moments.hpp"

namespace hykin {

/// ES-BGK collision frequency; all published runs use nu = (pi/2) rho,
/// independent of temperature.
inline double collision_frequency(double rho, double /*T*/) { return 0.5 * M_PI * rho; }

struct EsbgkParams {
    double beta = -0.5;          // Prandtl correction; -1/2 gives Pr = 2/3
    double nu_coeff = 0.5 * M_PI; // nu = nu_coeff * rho
    double eps_weno = 1e-6;

    double nu(double rho, double /*T*/) const { return nu_coeff * rho; }
};

struct EsbgkStageInfo {
    Moments m;              // moments of the explicit accumulation (conserved)
    bool gaussian_fallback = false;
};

/// Solves the nonlinearly implicit relaxation stage
///   f = f* + (a/eps) nu (G[f] - f)
/// in closed form: moments are those of f*, the raw second moment relaxes by
/// a convex blend toward the isotropic tensor, and the stage value is the
/// convex combination of f* with the moment-matched Gaussian built from the
/// relaxed tensor. `a` is the implicit tableau coefficient times dt.
EsbgkStageInfo esbgk_stage_solve(std::span<const double> f_star, double a, double eps,
                                 const EsbgkParams& params, const VelocityGrid& vgrid,
                                 std::span<double> out);

/// One IMEX step of the ES-BGK equation on a periodic all-kinetic field.
/// eps_cell holds the local Knudsen number per cell (size nx*ny).
void esbgk_imex_step(DistributionField& f, int nx, int ny, const VelocityGrid& vgrid,
                     double dx, double dy, double dt, std::span<const double> eps_cell,
                     const ImexTableau& tableau, const EsbgkParams& params);

} // namespace hykin
