#include "hykin/boltzmann.hpp"

#include <vector>

#include "hykin/transport.hpp"

namespace hykin {

void penalized_residual(std::span<const double> f, const SpectralKernel& kernel,
                        const VelocityGrid& vgrid, const PenalizationRule& rule,
                        std::span<double> out) {
    spectral_collision(f, kernel, out);

    const Moments m = moments_of(f, vgrid);
    const double beta = rule.rate(m.rho);

    thread_local std::vector<double> eq;
    eq.resize(f.size());
    maxwellian(m, vgrid, eq);
    match_moments(eq, vgrid, m.rho, m.rho * m.u, m.energy());

    // Q(f) - P(f), P(f) = beta (M[f] - f).
    for (size_t k = 0; k < out.size(); ++k)
        out[k] += beta * (f[k] - eq[k]);

    remove_invariant_moments(out, eq, vgrid, m.u);
}

Moments penalized_stage_solve(std::span<const double> f_star, double a, double eps,
                              const PenalizationRule& rule, const VelocityGrid& vgrid,
                              std::span<double> out) {
    const Moments m = moments_of(f_star, vgrid);
    const double ab = a * rule.rate(m.rho);
    if (ab <= 0.0) {
        std::copy(f_star.begin(), f_star.end(), out.begin());
        return m;
    }
    maxwellian(m, vgrid, out);
    match_moments(out, vgrid, m.rho, m.rho * m.u, m.energy());
    const double wf = eps / (eps + ab);
    const double wm = ab / (eps + ab);
    for (size_t k = 0; k < out.size(); ++k)
        out[k] = wf * f_star[k] + wm * out[k];
    return m;
}

void penalized_imex_step(DistributionField& f, int nx, int ny, const VelocityGrid& vgrid,
                         const SpectralKernel& kernel, double dx, double dy, double dt,
                         std::span<const double> eps_cell, const ImexTableau& tableau,
                         const BoltzmannParams& params) {
    const int cells = nx * ny;
    const int nb = vgrid.size();
    const auto& tab = tableau;

    DistributionField stage(cells, nb);
    DistributionField q1(cells, nb);
    DistributionField k1(cells, nb);
    std::vector<double> f_acc(nb), res(nb), q2(nb);

    for (int c = 0; c < cells; ++c) {
        auto y = stage.ensure(c);
        penalized_stage_solve(f[c], tab.a_im[0][0] * dt, eps_cell[c], params.penalty,
                              vgrid, y);
        auto kk = k1.ensure(c);
        const double inv_a = 1.0 / tab.a_im[0][0];
        for (int k = 0; k < nb; ++k)
            kk[k] = (y[k] - f[c][k]) * inv_a;
    }
    kinetic_transport_rhs_periodic(stage, nx, ny, vgrid, dx, dy, q1, params.eps_weno);
    for (int c = 0; c < cells; ++c) {
        penalized_residual(stage[c], kernel, vgrid, params.penalty, res);
        auto qc = q1[c];
        const double inv_eps = 1.0 / eps_cell[c];
        for (int k = 0; k < nb; ++k)
            qc[k] += res[k] * inv_eps;
    }

    for (int c = 0; c < cells; ++c) {
        auto y = stage[c];
        for (int k = 0; k < nb; ++k)
            f_acc[k] = f[c][k] + dt * tab.a_ex[1][0] * q1[c][k] + tab.a_im[1][0] * k1[c][k];
        penalized_stage_solve(f_acc, tab.a_im[1][1] * dt, eps_cell[c], params.penalty,
                              vgrid, y);
    }

    // Second-stage transport/residual only touch the cell itself: stream the
    // final combination.
    std::array<const double*, 5> fx, fy;
    auto wrap = [](int k, int n) { return (k % n + n) % n; };
    const double inv_a2 = 1.0 / tab.a_im[1][1];
    for (int c = 0; c < cells; ++c) {
        const int i = c % nx, j = c / nx;
        for (int p = -2; p <= 2; ++p) {
            fx[p + 2] = stage[j * nx + wrap(i + p, nx)].data();
            fy[p + 2] = stage[wrap(j + p, ny) * nx + i].data();
        }
        kinetic_transport_rhs_cell(fx, fy, vgrid, dx, dy, params.eps_weno, q2.data());
        penalized_residual(stage[c], kernel, vgrid, params.penalty, res);
        const double inv_eps = 1.0 / eps_cell[c];
        auto fc = f[c];
        for (int k = 0; k < nb; ++k) {
            const double q2k = q2[k] + res[k] * inv_eps;
            const double facc =
                fc[k] + dt * tab.a_ex[1][0] * q1[c][k] + tab.a_im[1][0] * k1[c][k];
            const double k2 = (stage[c][k] - facc) * inv_a2;
            fc[k] += dt * (tab.w_ex[0] * q1[c][k] + tab.w_ex[1] * q2k) +
                     tab.w_im[0] * k1[c][k] + tab.w_im[1] * k2;
        }
    }
}

} // namespace hykin
