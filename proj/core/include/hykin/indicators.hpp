#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <optional>
#include <span>

#include "hykin/grid.hpp"
#include "hykin/moments.hpp"
#include "hykin/scenario.hpp"

namespace hykin {

/// Primitive moment state used by the indicator stencils.
struct PrimMoments {
    double rho = 0.0;
    double ux = 0.0;
    double uy = 0.0;
    double T = 0.0;
};

/// First and second spatial derivatives of (rho, u, T) from the 4-neighbor
/// stencil: centered first differences, 5-point Laplacians with the dx*dy
/// denominator convention.
struct DerivativeBundle {
    double drho_dx = 0, drho_dy = 0;
    double dux_dx = 0, dux_dy = 0;
    double duy_dx = 0, duy_dy = 0;
    double dT_dx = 0, dT_dy = 0;
    double lap_rho = 0;
    double lap_ux = 0;
    double lap_uy = 0;
};

DerivativeBundle spatial_derivatives(const PrimMoments& center, const PrimMoments& xm,
                                     const PrimMoments& xp, const PrimMoments& ym,
                                     const PrimMoments& yp, double dx, double dy);

/// Navier-Stokes transport coefficients mu = mu0 sqrt(T), kappa = kappa0 sqrt(T).
struct TransportCoefficients {
    double mu0 = 1.0;
    double kappa0 = 1.0;

    double mu(double T) const { return mu0 * std::sqrt(T); }
    double kappa(double T) const { return kappa0 * std::sqrt(T); }
};

/// Regime-switch thresholds.
struct Thresholds {
    double eta0 = 0.0;
    double eta1 = 0.0;
    double delta0 = 0.0;

    void validate() const;
};

struct Eigenvalues {
    double a = 0.0; // largest root of the 2x2 block
    double b = 0.0;
    double c = 0.0; // decoupled z-z entry
};

/// Entries of the first-order realizability matrix: the symmetric 2x2 block
/// (1 - xi1 a1 - xi2 a2, off-diagonal -d) and the decoupled 1 - xi1 h1.
struct VEps1Coefficients {
    double a1 = 0, a2 = 0, b1 = 0, b2 = 0, c1 = 0, c2 = 0, h1 = 0;
    double xi1 = 0, xi2 = 0;
    double d() const { return xi1 * b1 + xi2 * b2; }
};

VEps1Coefficients v_eps1_coefficients(const DerivativeBundle& d, const PrimMoments& m,
                                      double eps, const TransportCoefficients& coeffs);

/// Assembled 3x3 matrix (for diagnostics; the closed-form roots are the
/// production path).
Eigen::Matrix3d v_eps1_matrix(const VEps1Coefficients& c);

/// Closed-form eigenvalues of the first-order realizability matrix,
/// ordered a >= b.
Eigenvalues v_eps1_eigenvalues(const DerivativeBundle& d, const PrimMoments& m,
                               double eps, const TransportCoefficients& coeffs);

/// Second-order breakdown indicator
///   lambda_B = eps^2 (|grad T|^2 / T + |grad u|^2
///              + sqrt((|lap u|^2 + |lap rho / rho|^2)(1 + T^2))).
/// |grad u|^2 is the Frobenius sum of the four first derivatives; |lap u|^2
/// follows `norm` (component squared sum, or the square of the signed sum).
double lambda_b_indicator(const DerivativeBundle& d, const PrimMoments& m, double eps,
                          LaplacianNorm norm = LaplacianNorm::squared_sum);

/// L1 velocity-space distance of f to the Maxwellian sharing its moments.
double l1_distance_to_maxwellian(std::span<const double> f, const VelocityGrid& vgrid);

/// Per-cell indicator values feeding the regime update. Only the members
/// required by the cell's current layer are populated.
struct IndicatorSet {
    std::optional<Eigenvalues> eigenvalues;
    std::optional<double> lambda_b;
    std::optional<double> l1_distance;
};

} // namespace hykin
