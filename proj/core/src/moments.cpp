#include "hykin/moments.hpp"

#include <cmath>

#include "hykin/errors.hpp"

namespace hykin {

Eigen::Matrix<double, 5, 5> RealizabilityMatrix::matrix() const {
    const double s = std::sqrt(2.0 / 5.0);
    Eigen::Matrix<double, 5, 5> m = Eigen::Matrix<double, 5, 5>::Zero();
    m(0, 0) = 1.0;
    m(0, 4) = m(4, 0) = -s;
    m.block<3, 3>(1, 1) = Eigen::Matrix3d::Identity() + a_bar;
    m.block<3, 1>(1, 4) = s * b_bar;
    m.block<1, 3>(4, 1) = s * b_bar.transpose();
    m(4, 4) = c_bar;
    return m;
}

Moments moments_of(std::span<const double> f, const VelocityGrid& vgrid) {
    const int n = vgrid.nv;
    double s0 = 0.0, sx = 0.0, sy = 0.0, sz = 0.0, s2 = 0.0;
    int idx = 0;
    for (int k1 = 0; k1 < n; ++k1) {
        const double vx = vgrid.node(k1);
        for (int k2 = 0; k2 < n; ++k2) {
            const double vy = vgrid.node(k2);
            double c0 = 0.0, cz = 0.0, c2 = 0.0;
            for (int k3 = 0; k3 < n; ++k3, ++idx) {
                const double vz = vgrid.node(k3);
                const double w = f[idx];
                c0 += w;
                cz += vz * w;
                c2 += vz * vz * w;
            }
            s0 += c0;
            sx += vx * c0;
            sy += vy * c0;
            sz += cz;
            s2 += (vx * vx + vy * vy) * c0 + c2;
        }
    }
    Moments m;
    m.rho = s0 * vgrid.dvk;
    if (!(m.rho > 0.0))
        throw degenerate_state_error("non-positive density in moment evaluation");
    m.u = Eigen::Vector3d(sx, sy, sz) / s0;
    m.T = (s2 / s0 - m.u.squaredNorm()) / 3.0;
    if (!(m.T > 0.0))
        throw degenerate_state_error("non-positive temperature in moment evaluation");
    return m;
}

Eigen::Matrix3d second_moment(std::span<const double> f, const VelocityGrid& vgrid) {
    const int n = vgrid.nv;
    double xx = 0, xy = 0, xz = 0, yy = 0, yz = 0, zz = 0;
    int idx = 0;
    for (int k1 = 0; k1 < n; ++k1) {
        const double vx = vgrid.node(k1);
        for (int k2 = 0; k2 < n; ++k2) {
            const double vy = vgrid.node(k2);
            double c0 = 0.0, cz = 0.0, c2 = 0.0;
            for (int k3 = 0; k3 < n; ++k3, ++idx) {
                const double vz = vgrid.node(k3);
                c0 += f[idx];
                cz += vz * f[idx];
                c2 += vz * vz * f[idx];
            }
            xx += vx * vx * c0;
            xy += vx * vy * c0;
            yy += vy * vy * c0;
            xz += vx * cz;
            yz += vy * cz;
            zz += c2;
        }
    }
    Eigen::Matrix3d s;
    s << xx, xy, xz, xy, yy, yz, xz, yz, zz;
    return s * vgrid.dvk;
}

StressTensor stress_tensor(std::span<const double> f, const VelocityGrid& vgrid,
                           const Moments& m) {
    return second_moment(f, vgrid) / m.rho - m.u * m.u.transpose();
}

void maxwellian(const Moments& m, const VelocityGrid& vgrid, std::span<double> out) {
    if (!(m.rho > 0.0) || !(m.T > 0.0))
        throw degenerate_state_error("maxwellian requires positive density and temperature");
    const int n = vgrid.nv;
    const double inv2T = 0.5 / m.T;
    const double pref = m.rho / std::pow(2.0 * M_PI * m.T, 1.5);

    // exp(-|v-u|^2/2T) factorizes over the three axes.
    std::vector<double> ex(n), ey(n), ez(n);
    for (int k = 0; k < n; ++k) {
        const double v = vgrid.node(k);
        ex[k] = std::exp(-(v - m.u.x()) * (v - m.u.x()) * inv2T);
        ey[k] = std::exp(-(v - m.u.y()) * (v - m.u.y()) * inv2T);
        ez[k] = std::exp(-(v - m.u.z()) * (v - m.u.z()) * inv2T);
    }
    int idx = 0;
    for (int k1 = 0; k1 < n; ++k1) {
        const double px = pref * ex[k1];
        for (int k2 = 0; k2 < n; ++k2) {
            const double pxy = px * ey[k2];
            for (int k3 = 0; k3 < n; ++k3, ++idx)
                out[idx] = pxy * ez[k3];
        }
    }
}

std::vector<double> maxwellian(const Moments& m, const VelocityGrid& vgrid) {
    std::vector<double> out(vgrid.size());
    maxwellian(m, vgrid, out);
    return out;
}

void anisotropic_gaussian(const Moments& m, const StressTensor& theta, double beta,
                          const VelocityGrid& vgrid, std::span<double> out,
                          bool* fell_back) {
    if (fell_back)
        *fell_back = false;
    Eigen::Matrix3d tc =
        (1.0 - beta) * m.T * Eigen::Matrix3d::Identity() + beta * theta;

    Eigen::LLT<Eigen::Matrix3d> llt(tc);
    if (llt.info() != Eigen::Success) {
        if (fell_back)
            *fell_back = true;
        maxwellian(m, vgrid, out);
        return;
    }

    const double det = tc.determinant();
    const Eigen::Matrix3d inv = tc.inverse();
    const double pref = m.rho / std::sqrt(std::pow(2.0 * M_PI, 3) * det);

    const int n = vgrid.nv;
    int idx = 0;
    for (int k1 = 0; k1 < n; ++k1) {
        const double dx = vgrid.node(k1) - m.u.x();
        for (int k2 = 0; k2 < n; ++k2) {
            const double dy = vgrid.node(k2) - m.u.y();
            // Hoist the (dx, dy) part of the quadratic form out of the z loop.
            const double qxy = inv(0, 0) * dx * dx + 2.0 * inv(0, 1) * dx * dy +
                               inv(1, 1) * dy * dy;
            const double lz = 2.0 * (inv(0, 2) * dx + inv(1, 2) * dy);
            for (int k3 = 0; k3 < n; ++k3, ++idx) {
                const double dz = vgrid.node(k3) - m.u.z();
                const double q = qxy + dz * (lz + inv(2, 2) * dz);
                out[idx] = pref * std::exp(-0.5 * q);
            }
        }
    }
}

namespace {

// Coupling matrix between the collision invariants phi = (1, v, |v|^2) and
// the correction basis psi = (1, v - uc, |v - uc|^2) weighted by w:
// A_ij = sum phi_i psi_j w dvK.
Eigen::Matrix<double, 5, 5> coupling_matrix(std::span<const double> w,
                                            const VelocityGrid& vgrid,
                                            const Eigen::Vector3d& uc) {
    const int n = vgrid.nv;
    Eigen::Matrix<double, 5, 5> a = Eigen::Matrix<double, 5, 5>::Zero();
    int idx = 0;
    for (int k1 = 0; k1 < n; ++k1) {
        const double vx = vgrid.node(k1);
        for (int k2 = 0; k2 < n; ++k2) {
            const double vy = vgrid.node(k2);
            for (int k3 = 0; k3 < n; ++k3, ++idx) {
                const double vz = vgrid.node(k3);
                const double cx = vx - uc.x(), cy = vy - uc.y(), cz = vz - uc.z();
                const double c2 = cx * cx + cy * cy + cz * cz;
                const double v2 = vx * vx + vy * vy + vz * vz;
                const double psi[5] = {1.0, cx, cy, cz, c2};
                const double phi[5] = {1.0, vx, vy, vz, v2};
                const double g = w[idx];
                for (int r = 0; r < 5; ++r)
                    for (int c = 0; c < 5; ++c)
                        a(r, c) += phi[r] * psi[c] * g;
            }
        }
    }
    return a * vgrid.dvk;
}

// (mass, momentum, sum |v|^2 g dvK) of an arbitrary (signed) grid function.
Eigen::Matrix<double, 5, 1> invariant_moments(std::span<const double> g,
                                              const VelocityGrid& vgrid) {
    const int n = vgrid.nv;
    Eigen::Matrix<double, 5, 1> m = Eigen::Matrix<double, 5, 1>::Zero();
    int idx = 0;
    for (int k1 = 0; k1 < n; ++k1) {
        const double vx = vgrid.node(k1);
        for (int k2 = 0; k2 < n; ++k2) {
            const double vy = vgrid.node(k2);
            for (int k3 = 0; k3 < n; ++k3, ++idx) {
                const double vz = vgrid.node(k3);
                const double w = g[idx];
                m(0) += w;
                m(1) += vx * w;
                m(2) += vy * w;
                m(3) += vz * w;
                m(4) += (vx * vx + vy * vy + vz * vz) * w;
            }
        }
    }
    return m * vgrid.dvk;
}

Eigen::Matrix<double, 5, 1> solve_coupling(const Eigen::Matrix<double, 5, 5>& a,
                                           const Eigen::Matrix<double, 5, 1>& rhs) {
    Eigen::FullPivLU<Eigen::Matrix<double, 5, 5>> lu(a);
    if (!lu.isInvertible())
        throw degenerate_state_error("moment-matching system is singular");
    return lu.solve(rhs);
}

} // namespace

void match_moments(std::span<double> f, const VelocityGrid& vgrid, double rho,
                   const Eigen::Vector3d& momentum, double energy) {
    const Eigen::Vector3d uc = momentum / rho;
    Eigen::Matrix<double, 5, 1> rhs;
    rhs << rho, momentum.x(), momentum.y(), momentum.z(), 2.0 * energy;
    const Eigen::Matrix<double, 5, 1> x = solve_coupling(coupling_matrix(f, vgrid, uc), rhs);

    const int n = vgrid.nv;
    int idx = 0;
    for (int k1 = 0; k1 < n; ++k1) {
        const double vx = vgrid.node(k1);
        for (int k2 = 0; k2 < n; ++k2) {
            const double vy = vgrid.node(k2);
            for (int k3 = 0; k3 < n; ++k3, ++idx) {
                const double cx = vx - uc.x(), cy = vy - uc.y();
                const double cz = vgrid.node(k3) - uc.z();
                const double c2 = cx * cx + cy * cy + cz * cz;
                f[idx] *= x(0) + x(1) * cx + x(2) * cy + x(3) * cz + x(4) * c2;
            }
        }
    }
}

void remove_invariant_moments(std::span<double> q, std::span<const double> weight,
                              const VelocityGrid& vgrid, const Eigen::Vector3d& uc) {
    const Eigen::Matrix<double, 5, 1> x =
        solve_coupling(coupling_matrix(weight, vgrid, uc), invariant_moments(q, vgrid));

    const int n = vgrid.nv;
    int idx = 0;
    for (int k1 = 0; k1 < n; ++k1) {
        const double vx = vgrid.node(k1);
        for (int k2 = 0; k2 < n; ++k2) {
            const double vy = vgrid.node(k2);
            for (int k3 = 0; k3 < n; ++k3, ++idx) {
                const double cx = vx - uc.x(), cy = vy - uc.y();
                const double cz = vgrid.node(k3) - uc.z();
                const double c2 = cx * cx + cy * cy + cz * cz;
                q[idx] -= (x(0) + x(1) * cx + x(2) * cy + x(3) * cz + x(4) * c2) * weight[idx];
            }
        }
    }
}

RealizabilityMatrix realizability_matrix(std::span<const double> f,
                                         const VelocityGrid& vgrid, const Moments& m) {
    const int n = vgrid.nv;
    const double inv_sqrt_t = 1.0 / std::sqrt(m.T);

    Eigen::Matrix3d s2 = Eigen::Matrix3d::Zero(); // sum V (x) V f
    Eigen::Vector3d b = Eigen::Vector3d::Zero();  // sum B(V) f
    double c4 = 0.0;                              // sum (|V|^2/2 - 5/2)^2 f
    int idx = 0;
    for (int k1 = 0; k1 < n; ++k1) {
        const double Vx = (vgrid.node(k1) - m.u.x()) * inv_sqrt_t;
        for (int k2 = 0; k2 < n; ++k2) {
            const double Vy = (vgrid.node(k2) - m.u.y()) * inv_sqrt_t;
            for (int k3 = 0; k3 < n; ++k3, ++idx) {
                const double Vz = (vgrid.node(k3) - m.u.z()) * inv_sqrt_t;
                const double w = f[idx];
                const double V2 = Vx * Vx + Vy * Vy + Vz * Vz;
                s2(0, 0) += Vx * Vx * w;
                s2(0, 1) += Vx * Vy * w;
                s2(0, 2) += Vx * Vz * w;
                s2(1, 1) += Vy * Vy * w;
                s2(1, 2) += Vy * Vz * w;
                s2(2, 2) += Vz * Vz * w;
                const double bw = 0.5 * (V2 - 5.0) * w;
                b.x() += bw * Vx;
                b.y() += bw * Vy;
                b.z() += bw * Vz;
                const double e = 0.5 * V2 - 2.5;
                c4 += e * e * w;
            }
        }
    }
    s2(1, 0) = s2(0, 1);
    s2(2, 0) = s2(0, 2);
    s2(2, 1) = s2(1, 2);

    const double scale = vgrid.dvk / m.rho;
    RealizabilityMatrix r;
    s2 *= scale;
    r.a_bar = s2 - (s2.trace() / 3.0) * Eigen::Matrix3d::Identity();
    r.b_bar = b * scale;
    r.c_bar = 0.4 * c4 * scale;
    return r;
}

UndershootInfo distribution_undershoot(std::span<const double> f) {
    UndershootInfo info{0.0, 0.0};
    for (double v : f) {
        if (v < info.min_value)
            info.min_value = v;
        if (v > info.max_value)
            info.max_value = v;
    }
    return info;
}

} // namespace hykin
