#include "hykin/indicators.hpp"

#include <vector>

#include "hykin/errors.hpp"

namespace hykin {

void Thresholds::validate() const {
    if (!(eta0 > 0.0) || !(eta1 > 0.0) || !(delta0 > 0.0))
        throw config_error("regime thresholds eta0, eta1, delta0 must be positive");
}

DerivativeBundle spatial_derivatives(const PrimMoments& c, const PrimMoments& xm,
                                     const PrimMoments& xp, const PrimMoments& ym,
                                     const PrimMoments& yp, double dx, double dy) {
    DerivativeBundle d;
    d.drho_dx = (xp.rho - xm.rho) / (2.0 * dx);
    d.drho_dy = (yp.rho - ym.rho) / (2.0 * dy);
    d.dux_dx = (xp.ux - xm.ux) / (2.0 * dx);
    d.dux_dy = (yp.ux - ym.ux) / (2.0 * dy);
    d.duy_dx = (xp.uy - xm.uy) / (2.0 * dx);
    d.duy_dy = (yp.uy - ym.uy) / (2.0 * dy);
    d.dT_dx = (xp.T - xm.T) / (2.0 * dx);
    d.dT_dy = (yp.T - ym.T) / (2.0 * dy);

    const double inv_dxdy = 1.0 / (dx * dy);
    d.lap_rho = (xm.rho + xp.rho + ym.rho + yp.rho - 4.0 * c.rho) * inv_dxdy;
    d.lap_ux = (xm.ux + xp.ux + ym.ux + yp.ux - 4.0 * c.ux) * inv_dxdy;
    d.lap_uy = (xm.uy + xp.uy + ym.uy + yp.uy - 4.0 * c.uy) * inv_dxdy;
    return d;
}

VEps1Coefficients v_eps1_coefficients(const DerivativeBundle& d, const PrimMoments& m,
                                      double eps, const TransportCoefficients& coeffs) {
    VEps1Coefficients c;
    c.a1 = (4.0 / 3.0) * d.dux_dx - (2.0 / 3.0) * d.duy_dy;
    c.a2 = d.dT_dx * d.dT_dx;
    c.b1 = d.dux_dy + d.duy_dx;
    c.b2 = d.dT_dx * d.dT_dy;
    c.c1 = (4.0 / 3.0) * d.duy_dy - (2.0 / 3.0) * d.dux_dx;
    c.c2 = d.dT_dy * d.dT_dy;
    c.h1 = -(2.0 / 3.0) * (d.dux_dx + d.duy_dy);
    const double mu = coeffs.mu(m.T);
    const double kappa = coeffs.kappa(m.T);
    c.xi1 = eps * mu / (m.rho * m.T);
    c.xi2 = eps * eps * 2.0 * kappa * kappa / (3.0 * m.rho * m.rho * m.T * m.T * m.T);
    return c;
}

Eigen::Matrix3d v_eps1_matrix(const VEps1Coefficients& c) {
    Eigen::Matrix3d v = Eigen::Matrix3d::Zero();
    v(0, 0) = 1.0 - c.xi1 * c.a1 - c.xi2 * c.a2;
    v(0, 1) = v(1, 0) = -c.xi1 * c.b1 - c.xi2 * c.b2;
    v(1, 1) = 1.0 - c.xi1 * c.c1 - c.xi2 * c.c2;
    v(2, 2) = 1.0 - c.xi1 * c.h1;
    return v;
}

Eigenvalues v_eps1_eigenvalues(const DerivativeBundle& d, const PrimMoments& m,
                               double eps, const TransportCoefficients& coeffs) {
    const VEps1Coefficients c = v_eps1_coefficients(d, m, eps, coeffs);
    const double diag_gap = c.xi1 * (c.a1 - c.c1) + c.xi2 * (c.a2 - c.c2);
    const double dd = c.d();
    const double root = std::sqrt(diag_gap * diag_gap + 4.0 * dd * dd);
    const double trace_term =
        -c.a1 * c.xi1 - c.a2 * c.xi2 - c.c1 * c.xi1 - c.c2 * c.xi2 + 2.0;
    Eigenvalues lam;
    lam.a = 0.5 * (root + trace_term);
    lam.b = 0.5 * (-root + trace_term);
    lam.c = 1.0 - c.xi1 * c.h1;
    return lam;
}

double lambda_b_indicator(const DerivativeBundle& d, const PrimMoments& m, double eps,
                          LaplacianNorm norm) {
    const double grad_t2 = d.dT_dx * d.dT_dx + d.dT_dy * d.dT_dy;
    const double grad_u2 = d.dux_dx * d.dux_dx + d.dux_dy * d.dux_dy +
                           d.duy_dx * d.duy_dx + d.duy_dy * d.duy_dy;
    const double lap_u2 = norm == LaplacianNorm::squared_sum
                              ? d.lap_ux * d.lap_ux + d.lap_uy * d.lap_uy
                              : (d.lap_ux + d.lap_uy) * (d.lap_ux + d.lap_uy);
    const double lap_rho_rel = d.lap_rho / m.rho;
    return eps * eps *
           (grad_t2 / m.T + grad_u2 +
            std::sqrt((lap_u2 + lap_rho_rel * lap_rho_rel) * (1.0 + m.T * m.T)));
}

double l1_distance_to_maxwellian(std::span<const double> f, const VelocityGrid& vgrid) {
    const Moments m = moments_of(f, vgrid);
    thread_local std::vector<double> eq;
    eq.resize(f.size());
    maxwellian(m, vgrid, eq);
    double acc = 0.0;
    for (size_t k = 0; k < f.size(); ++k)
        acc += std::abs(f[k] - eq[k]);
    return acc * vgrid.dvk;
}

} // namespace hykin
