#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "hykin/grid.hpp"

namespace hykin {

/// Macroscopic state of a cell: density, bulk velocity and temperature.
/// u_z stays zero in all scenarios but the velocity space is fully 3D.
struct Moments {
    double rho = 0.0;
    Eigen::Vector3d u = Eigen::Vector3d::Zero();
    double T = 0.0;

    /// Total energy per volume, E = 1/2 rho |u|^2 + 3/2 rho T.
    double energy() const { return 0.5 * rho * u.squaredNorm() + 1.5 * rho * T; }
};

using StressTensor = Eigen::Matrix3d;

/// Moment realizability data: traceless second moment A, reduced heat-flux
/// vector B and dimensionless fourth moment C of the normalized fluctuation
/// V = (v - u)/sqrt(T).
struct RealizabilityMatrix {
    Eigen::Matrix3d a_bar = Eigen::Matrix3d::Zero();
    Eigen::Vector3d b_bar = Eigen::Vector3d::Zero();
    double c_bar = 0.0;

    /// Assembles the full symmetric 5x5 matrix in the (1, V, energy) basis.
    Eigen::Matrix<double, 5, 5> matrix() const;
};

/// Discrete moments of a cell distribution. Throws degenerate_state_error
/// when density or temperature come out non-positive.
Moments moments_of(std::span<const double> f, const VelocityGrid& vgrid);

/// Central second moment Theta = (1/rho) sum (v-u)(x)(v-u) f dvK.
StressTensor stress_tensor(std::span<const double> f, const VelocityGrid& vgrid,
                           const Moments& m);

/// Raw second moment Sigma = sum v(x)v f dvK = rho (Theta + u(x)u).
Eigen::Matrix3d second_moment(std::span<const double> f, const VelocityGrid& vgrid);

/// Pointwise Maxwellian rho/(2 pi T)^{3/2} exp(-|v-u|^2 / 2T) on the nodes.
/// Evaluated separably per axis. Throws on non-positive rho or T.
void maxwellian(const Moments& m, const VelocityGrid& vgrid, std::span<double> out);
std::vector<double> maxwellian(const Moments& m, const VelocityGrid& vgrid);

/// Anisotropic Gaussian with corrected tensor Tc = (1-beta) T I + beta Theta.
/// When Tc loses positive definiteness the cell falls back to Tc = T I (the
/// plain Maxwellian); `fell_back`, if given, reports that.
void anisotropic_gaussian(const Moments& m, const StressTensor& theta, double beta,
                          const VelocityGrid& vgrid, std::span<double> out,
                          bool* fell_back = nullptr);

/// Rescales f by a quadratic-in-v factor so its discrete (rho, rho u, E)
/// match the targets exactly. Used on evaluated equilibria so that stage
/// solves conserve the collision invariants to round-off.
void match_moments(std::span<double> f, const VelocityGrid& vgrid, double rho,
                   const Eigen::Vector3d& momentum, double energy);

/// Subtracts from q a quadratic-in-(v - uc) multiple of `weight` so that the
/// discrete collision-invariant moments (mass, momentum, energy) of q vanish
/// exactly. Used to project spectral collision residuals.
void remove_invariant_moments(std::span<double> q, std::span<const double> weight,
                              const VelocityGrid& vgrid, const Eigen::Vector3d& uc);

/// Discrete realizability data of f given its moments.
RealizabilityMatrix realizability_matrix(std::span<const double> f,
                                         const VelocityGrid& vgrid, const Moments& m);

/// Worst negative undershoot of f relative to its maximum; spectral slices
/// are tolerated up to 1e-8 * max(f).
struct UndershootInfo {
    double min_value = 0.0;
    double max_value = 0.0;
    bool severe() const { return min_value < -1e-8 * max_value; }
};
UndershootInfo distribution_undershoot(std::span<const double> f);

} // namespace hykin
