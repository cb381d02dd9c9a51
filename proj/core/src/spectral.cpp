#include "hykin/spectral.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "hykin/errors.hpp"
#include "hykin/fft.hpp"
#include "hykin/quadrature.hpp"

namespace hykin {

namespace {

inline double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

// The hard-sphere Carleman kernel is the constant 2^{d-1} = 4 on the
// orthogonality manifold; split it evenly between the two radial profiles.
constexpr double kRadialAmp = 2.0;
constexpr double kPlanarAmp = 2.0;

struct Scratch3d {
    std::vector<std::complex<double>> coeff, tmp, ga, gb, gain, loss;
    void resize(int total) {
        coeff.resize(total);
        tmp.resize(total);
        ga.resize(total);
        gb.resize(total);
        gain.resize(total);
        loss.resize(total);
    }
};

Scratch3d& scratch3d(int total) {
    thread_local Scratch3d s;
    s.resize(total);
    return s;
}

} // namespace

double hs_radial_transform(double s, double r, double amp) {
    return 2.0 * amp *
           adaptive_integrate([s](double rho) { return rho * std::cos(rho * s); }, 0.0, r);
}

double hs_planar_transform(double s, double r, double amp) {
    return 4.0 * amp *
           adaptive_integrate([s](double rho) { return rho * sinc(rho * s); }, 0.0, r);
}

SpectralKernel precompute_kernel(const VelocityGrid& vgrid, int n, int a1, int a2,
                                 double r_phys) {
    if (n != vgrid.nv)
        throw config_error("spectral mode count must match the velocity grid (" +
                           std::to_string(n) + " vs " + std::to_string(vgrid.nv) + ")");
    if (a1 < 1 || a2 < 1)
        throw config_error("spherical quadrature sizes must be positive");
    const double r_max = 2.0 * vgrid.vmax / (3.0 + std::sqrt(2.0));
    if (r_phys > r_max * (1.0 + 1e-12))
        throw aliasing_config_error(
            "support radius " + std::to_string(r_phys) +
            " exceeds the aliasing bound 2L/(3+sqrt(2)) = " + std::to_string(r_max));
    if (r_phys <= 0.0)
        throw config_error("support radius must be positive");

    SpectralKernel k;
    k.n = n;
    k.a1 = a1;
    k.a2 = a2;
    k.r_phys = r_phys;
    k.r = r_phys * M_PI / vgrid.vmax;
    const double s = vgrid.vmax / M_PI;
    k.jacobian = s * s * s * s; // hard spheres: velocity-scaling power d + gamma = 4
    k.weight = M_PI * M_PI / (a1 * a2);

    const int total = k.modes();
    k.alpha.assign(k.dirs(), std::vector<double>(total));
    k.alpha_prime.assign(k.dirs(), std::vector<double>(total));
    k.loss_diag.assign(total, 0.0);

    for (int p = 0; p < a1; ++p) {
        const double theta = p * M_PI / a1;
        for (int q = 0; q < a2; ++q) {
            const double phi = q * M_PI / a2;
            const int d = p * a2 + q;
            const std::array<double, 3> e = {std::sin(theta) * std::cos(phi),
                                             std::sin(theta) * std::sin(phi),
                                             std::cos(theta)};
            auto& a = k.alpha[d];
            auto& ap = k.alpha_prime[d];
            int idx = 0;
            for (int i1 = 0; i1 < n; ++i1) {
                const double l1 = fft_frequency(i1, n);
                for (int i2 = 0; i2 < n; ++i2) {
                    const double l2 = fft_frequency(i2, n);
                    for (int i3 = 0; i3 < n; ++i3, ++idx) {
                        const double l3 = fft_frequency(i3, n);
                        const double ldote = l1 * e[0] + l2 * e[1] + l3 * e[2];
                        const double l2norm = l1 * l1 + l2 * l2 + l3 * l3;
                        const double perp2 = std::max(0.0, l2norm - ldote * ldote);
                        a[idx] = hs_radial_transform(ldote, k.r, kRadialAmp);
                        ap[idx] = hs_planar_transform(std::sqrt(perp2), k.r, kPlanarAmp);
                        k.loss_diag[idx] += k.weight * a[idx] * ap[idx];
                    }
                }
            }
        }
    }
    return k;
}

void spectral_collision(std::span<const double> f, const SpectralKernel& kernel,
                        std::span<double> out) {
    const int total = kernel.modes();
    FftWorkspace3d& fft = FftWorkspace3d::local(kernel.n);
    Scratch3d& s = scratch3d(total);

    fft.to_spectral(f, s.coeff.data());

    // Loss term: f(v) * sum_m B(m,m) f_m exp(i m . v).
    for (int i = 0; i < total; ++i)
        s.tmp[i] = kernel.loss_diag[i] * s.coeff[i];
    fft.to_nodal(s.tmp.data(), s.loss.data());

    // Gain term: per direction a product of two inverse transforms.
    std::fill(s.gain.begin(), s.gain.end(), std::complex<double>(0.0, 0.0));
    for (int d = 0; d < kernel.dirs(); ++d) {
        const auto& a = kernel.alpha[d];
        const auto& ap = kernel.alpha_prime[d];
        for (int i = 0; i < total; ++i)
            s.tmp[i] = a[i] * s.coeff[i];
        fft.to_nodal(s.tmp.data(), s.ga.data());
        for (int i = 0; i < total; ++i)
            s.tmp[i] = ap[i] * s.coeff[i];
        fft.to_nodal(s.tmp.data(), s.gb.data());
        for (int i = 0; i < total; ++i)
            s.gain[i] += s.ga[i] * s.gb[i];
    }

    double max_re = 0.0, max_im = 0.0;
    for (int i = 0; i < total; ++i) {
        const std::complex<double> q =
            kernel.jacobian * (kernel.weight * s.gain[i] - f[i] * s.loss[i]);
        out[i] = q.real();
        max_re = std::max(max_re, std::abs(q.real()));
        max_im = std::max(max_im, std::abs(q.imag()));
    }
    if (max_im > 1e-10 * std::max(max_re, 1e-300))
        throw numerical_consistency_error(
            "spectral collision imaginary residue " + std::to_string(max_im) +
            " exceeds 1e-10 of max |Q| = " + std::to_string(max_re));
}

SpectralKernel2d precompute_kernel_2d(int n, int a, double r) {
    if (n < 2 || a < 1)
        throw config_error("invalid 2D spectral kernel sizes");
    const double r_max = 2.0 * M_PI / (3.0 + std::sqrt(2.0));
    if (r > r_max * (1.0 + 1e-12))
        throw aliasing_config_error("2D support radius exceeds the aliasing bound");

    SpectralKernel2d k;
    k.n = n;
    k.a = a;
    k.r = r;
    k.weight = M_PI / a;

    const int total = k.modes();
    k.alpha.assign(a, std::vector<double>(total));
    k.alpha_prime.assign(a, std::vector<double>(total));
    k.loss_diag.assign(total, 0.0);

    for (int p = 0; p < a; ++p) {
        const double theta = (p + 1) * M_PI / a;
        const double ex = std::cos(theta), ey = std::sin(theta);
        auto& al = k.alpha[p];
        auto& ap = k.alpha_prime[p];
        int idx = 0;
        for (int i1 = 0; i1 < n; ++i1) {
            const double l1 = fft_frequency(i1, n);
            for (int i2 = 0; i2 < n; ++i2, ++idx) {
                const double l2 = fft_frequency(i2, n);
                // e_{theta + pi/2} = (-ey, ex)
                const double le = l1 * ex + l2 * ey;
                const double lp = -l1 * ey + l2 * ex;
                al[idx] = 2.0 * k.r * sinc(k.r * le);
                ap[idx] = 2.0 * k.r * sinc(k.r * lp);
                k.loss_diag[idx] += k.weight * al[idx] * ap[idx];
            }
        }
    }
    return k;
}

void spectral_collision_2d(std::span<const double> f, const SpectralKernel2d& kernel,
                           std::span<double> out) {
    const int total = kernel.modes();
    FftWorkspace2d& fft = FftWorkspace2d::local(kernel.n);

    thread_local std::vector<std::complex<double>> coeff, tmp, ga, gb, gain, loss;
    coeff.resize(total);
    tmp.resize(total);
    ga.resize(total);
    gb.resize(total);
    gain.assign(total, std::complex<double>(0.0, 0.0));
    loss.resize(total);

    fft.to_spectral(f, coeff.data());
    for (int i = 0; i < total; ++i)
        tmp[i] = kernel.loss_diag[i] * coeff[i];
    fft.to_nodal(tmp.data(), loss.data());

    for (int d = 0; d < kernel.a; ++d) {
        for (int i = 0; i < total; ++i)
            tmp[i] = kernel.alpha[d][i] * coeff[i];
        fft.to_nodal(tmp.data(), ga.data());
        for (int i = 0; i < total; ++i)
            tmp[i] = kernel.alpha_prime[d][i] * coeff[i];
        fft.to_nodal(tmp.data(), gb.data());
        for (int i = 0; i < total; ++i)
            gain[i] += ga[i] * gb[i];
    }

    double max_re = 0.0, max_im = 0.0;
    for (int i = 0; i < total; ++i) {
        const std::complex<double> q = kernel.weight * gain[i] - f[i] * loss[i];
        out[i] = q.real();
        max_re = std::max(max_re, std::abs(q.real()));
        max_im = std::max(max_im, std::abs(q.imag()));
    }
    if (max_im > 1e-10 * std::max(max_re, 1e-300))
        throw numerical_consistency_error("2D spectral collision imaginary residue too large");
}

} // namespace hykin
