#include "hykin/transport.hpp"

#include "hykin/cweno.hpp"

namespace hykin {

namespace {

// Upwind CWENO flux difference for one node along one axis:
// (F_{+1/2} - F_{-1/2}) with F = v * f_face, faces reconstructed from the
// side the characteristic comes from. s[0..4] are the five stencil values.
inline double upwind_flux_diff(double v, const double s[5], double eps) {
    if (v > 0.0) {
        const double fp = cweno3(s[1], s[2], s[3], eps).right;
        const double fm = cweno3(s[0], s[1], s[2], eps).right;
        return v * (fp - fm);
    }
    const double fp = cweno3(s[2], s[3], s[4], eps).left;
    const double fm = cweno3(s[1], s[2], s[3], eps).left;
    return v * (fp - fm);
}

} // namespace

void kinetic_transport_rhs_cell(const std::array<const double*, 5>& fx,
                                const std::array<const double*, 5>& fy,
                                const VelocityGrid& vgrid, double dx, double dy,
                                double eps_weno, double* out) {
    const int n = vgrid.nv;
    const double inv_dx = 1.0 / dx;
    const double inv_dy = 1.0 / dy;

    int idx = 0;
    for (int k1 = 0; k1 < n; ++k1) {
        const double vx = vgrid.node(k1);
        for (int k2 = 0; k2 < n; ++k2) {
            const double vy = vgrid.node(k2);
            for (int k3 = 0; k3 < n; ++k3, ++idx) {
                double sx[5], sy[5];
                for (int p = 0; p < 5; ++p) {
                    sx[p] = fx[p][idx];
                    sy[p] = fy[p][idx];
                }
                out[idx] = -upwind_flux_diff(vx, sx, eps_weno) * inv_dx -
                           upwind_flux_diff(vy, sy, eps_weno) * inv_dy;
            }
        }
    }
}

void kinetic_transport_rhs_periodic(const DistributionField& f, int nx, int ny,
                                    const VelocityGrid& vgrid, double dx, double dy,
                                    DistributionField& out, double eps_weno) {
    auto wrap = [](int k, int n) { return (k % n + n) % n; };
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            std::array<const double*, 5> fx, fy;
            for (int p = -2; p <= 2; ++p) {
                fx[p + 2] = f[j * nx + wrap(i + p, nx)].data();
                fy[p + 2] = f[wrap(j + p, ny) * nx + i].data();
            }
            kinetic_transport_rhs_cell(fx, fy, vgrid, dx, dy, eps_weno,
                                       out.ensure(j * nx + i).data());
        }
    }
}

} // namespace hykin
