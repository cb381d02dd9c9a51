#pragma once

#include <span>
#include <vector>

#include "hykin/grid.hpp"

namespace hykin {

/// Precomputed decoupled weight tables of the fast Fourier-Galerkin
/// hard-sphere collision kernel. The physical cube [-L, L]^3 maps onto the
/// normalized box [-pi, pi]^3; the collision magnitude is rescaled back by
/// `jacobian` = (L/pi)^4 (hard spheres). `r` is the support radius in
/// normalized units, r_phys in physical velocity units.
struct SpectralKernel {
    int n = 0;  // Fourier modes per axis (= velocity nodes per axis)
    int a1 = 0; // polar quadrature size
    int a2 = 0; // azimuthal quadrature size
    double r_phys = 0.0;
    double r = 0.0;
    double jacobian = 1.0;
    double weight = 0.0; // pi^2 / (a1 a2)

    // Per collision direction d = p*a2 + q: radial transform of the modes
    // (alpha) and planar transform of the perpendicular projection
    // (alpha_prime), both real and even. loss_diag(m) = sum_d w a_d(m) a'_d(m).
    std::vector<std::vector<double>> alpha;
    std::vector<std::vector<double>> alpha_prime;
    std::vector<double> loss_diag;

    int dirs() const { return a1 * a2; }
    int modes() const { return n * n * n; }
};

/// Radial transform of the hard-sphere Carleman kernel,
///   phi(s) = 2 amp \int_0^R rho cos(rho s) d rho,
/// evaluated by adaptive quadrature.
double hs_radial_transform(double s, double r, double amp);

/// Planar transform psi(s) = \int_0^pi sin(theta) phi(s cos theta) d theta;
/// the order of integration is exchanged so a single adaptive quadrature
///   psi(s) = 4 amp \int_0^R rho sinc(rho s) d rho
/// evaluates it.
double hs_planar_transform(double s, double r, double amp);

/// Builds the weight tables once per run. Throws aliasing_config_error when
/// the support radius violates the no-overlap bound r_phys <= 2 L / (3 + sqrt 2),
/// and config_error when n does not match the velocity grid.
SpectralKernel precompute_kernel(const VelocityGrid& vgrid, int n, int a1, int a2,
                                 double r_phys);

/// Evaluates Q(f) for one cell distribution: one forward transform, two
/// inverse transforms per direction for the gain term, one for the loss.
/// Throws numerical_consistency_error when the imaginary residue exceeds
/// 1e-10 of max |Q|.
void spectral_collision(std::span<const double> f, const SpectralKernel& kernel,
                        std::span<double> out);

/// 2D Maxwell-molecule kernel on the normalized box; exercises the same
/// convolution machinery with the closed-form radial transform
/// phi(s) = 2 R sinc(R s). Production scenarios use the 3D kernel only.
struct SpectralKernel2d {
    int n = 0;
    int a = 0;
    double r = 0.0;
    double weight = 0.0; // pi / a
    std::vector<std::vector<double>> alpha;
    std::vector<std::vector<double>> alpha_prime;
    std::vector<double> loss_diag;

    int modes() const { return n * n; }
};

SpectralKernel2d precompute_kernel_2d(int n, int a, double r);

void spectral_collision_2d(std::span<const double> f, const SpectralKernel2d& kernel,
                           std::span<double> out);

} // namespace hykin
