#include "hykin/esbgk.hpp"

#include <vector>

#include "hykin/transport.hpp"

namespace hykin {

EsbgkStageInfo esbgk_stage_solve(std::span<const double> f_star, double a, double eps,
                                 const EsbgkParams& params, const VelocityGrid& vgrid,
                                 std::span<double> out) {
    EsbgkStageInfo info;
    info.m = moments_of(f_star, vgrid);

    const double nu = params.nu(info.m.rho, info.m.T);
    const double A = a * nu;
    if (A <= 0.0) { // degenerate implicit coefficient: stage is the identity
        std::copy(f_star.begin(), f_star.end(), out.begin());
        return info;
    }

    // Closed-form relaxation of the raw second moment Sigma = rho(Theta + u u^T)
    // toward the isotropic rho(T I + u u^T).
    const double one_minus_beta = 1.0 - params.beta;
    const Eigen::Matrix3d sigma_star = second_moment(f_star, vgrid);
    const Eigen::Matrix3d sigma_iso =
        info.m.rho * (info.m.T * Eigen::Matrix3d::Identity() +
                      info.m.u * info.m.u.transpose());
    const double denom = eps + one_minus_beta * A;
    const Eigen::Matrix3d sigma_stage =
        (eps * sigma_star + one_minus_beta * A * sigma_iso) / denom;
    const Eigen::Matrix3d theta_stage =
        sigma_stage / info.m.rho - info.m.u * info.m.u.transpose();

    anisotropic_gaussian(info.m, theta_stage, params.beta, vgrid, out,
                         &info.gaussian_fallback);
    match_moments(out, vgrid, info.m.rho, info.m.rho * info.m.u, info.m.energy());

    // f = (eps f* + A G) / (eps + A)
    const double wf = eps / (eps + A);
    const double wg = A / (eps + A);
    for (size_t k = 0; k < out.size(); ++k)
        out[k] = wf * f_star[k] + wg * out[k];
    return info;
}

void esbgk_imex_step(DistributionField& f, int nx, int ny, const VelocityGrid& vgrid,
                     double dx, double dy, double dt, std::span<const double> eps_cell,
                     const ImexTableau& tableau, const EsbgkParams& params) {
    const int cells = nx * ny;
    const int nb = vgrid.size();
    const auto& tab = tableau;

    DistributionField stage(cells, nb); // Y_s
    DistributionField q1(cells, nb);    // first-stage transport residual
    DistributionField k1(cells, nb);    // (dt/eps) * first-stage relaxation
    std::vector<double> f_acc(nb), q2(nb);

    // Stage 1: no explicit contribution, per-cell implicit solve.
    for (int c = 0; c < cells; ++c) {
        auto y = stage.ensure(c);
        esbgk_stage_solve(f[c], tab.a_im[0][0] * dt, eps_cell[c], params, vgrid, y);
        auto kk = k1.ensure(c);
        const double inv_a = 1.0 / tab.a_im[0][0];
        for (int k = 0; k < nb; ++k)
            kk[k] = (y[k] - f[c][k]) * inv_a;
    }
    kinetic_transport_rhs_periodic(stage, nx, ny, vgrid, dx, dy, q1, params.eps_weno);

    // Stage 2: explicit accumulation, then implicit solve in place.
    for (int c = 0; c < cells; ++c) {
        auto y = stage[c];
        for (int k = 0; k < nb; ++k)
            f_acc[k] = f[c][k] + dt * tab.a_ex[1][0] * q1[c][k] + tab.a_im[1][0] * k1[c][k];
        esbgk_stage_solve(f_acc, tab.a_im[1][1] * dt, eps_cell[c], params, vgrid, y);
    }

    // Final combination; the second-stage transport and relaxation terms only
    // touch the cell itself, so they are folded in streaming.
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
        auto fc = f[c];
        for (int k = 0; k < nb; ++k) {
            const double facc =
                fc[k] + dt * tab.a_ex[1][0] * q1[c][k] + tab.a_im[1][0] * k1[c][k];
            const double k2 = (stage[c][k] - facc) * inv_a2;
            fc[k] += dt * (tab.w_ex[0] * q1[c][k] + tab.w_ex[1] * q2[k]) +
                     tab.w_im[0] * k1[c][k] + tab.w_im[1] * k2;
        }
    }
}

} // namespace hykin
