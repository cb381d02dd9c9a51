#pragma once

#include <cmath>
#include <span>

#include "hykin/fields.hpp"
#include "hykin/imex.hpp"
#include "hykin/moments.hpp"
#include "hykin/spectral.hpp"

namespace hykin {

/// BGK penalization rate; the published runs use beta = 2 pi rho.
struct PenalizationRule {
    double coeff = 2.0 * M_PI;
    double rate(double rho) const { return coeff * rho; }
};

struct BoltzmannParams {
    PenalizationRule penalty;
    double eps_weno = 1e-6;
};

/// Explicit collision residual Q(f) - P(f) with P(f) = beta (M[f] - f).
/// The residual's discrete collision-invariant moments are projected out:
/// they vanish analytically, and the residual enters the update scaled by
/// dt/eps, which would otherwise amplify the spectral momentum/energy
/// defect at small Knudsen numbers.
void penalized_residual(std::span<const double> f, const SpectralKernel& kernel,
                        const VelocityGrid& vgrid, const PenalizationRule& rule,
                        std::span<double> out);

/// Closed-form implicit stage f = [eps f* + a beta M(U*)] / (eps + a beta);
/// the stage moments U* are those of the explicit accumulation f*. Returns
/// them. `a` is the implicit tableau coefficient times dt.
Moments penalized_stage_solve(std::span<const double> f_star, double a, double eps,
                              const PenalizationRule& rule, const VelocityGrid& vgrid,
                              std::span<double> out);

/// One penalized IMEX step of the Boltzmann equation on a periodic
/// all-kinetic field (transport explicit, penalization implicit).
void penalized_imex_step(DistributionField& f, int nx, int ny, const VelocityGrid& vgrid,
                         const SpectralKernel& kernel, double dx, double dy, double dt,
                         std::span<const double> eps_cell, const ImexTableau& tableau,
                         const BoltzmannParams& params);

} // namespace hykin
