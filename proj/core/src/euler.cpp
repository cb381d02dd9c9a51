#include "hykin/euler.hpp"

#include <cmath>
#include <string>

#include "hykin/errors.hpp"

namespace hykin {

CwenoEdges cweno3(double um, double uc, double up, double eps) {
    const double sl = uc - um;
    const double sr = up - uc;
    const double b = 0.5 * (up - um);
    const double c = up - 2.0 * uc + um;

    const double is_l = sl * sl;
    const double is_r = sr * sr;
    const double is_c = (13.0 / 3.0) * c * c + b * b;

    double al = 0.25 / ((eps + is_l) * (eps + is_l));
    double ac = 0.50 / ((eps + is_c) * (eps + is_c));
    double ar = 0.25 / ((eps + is_r) * (eps + is_r));
    const double inv = 1.0 / (al + ac + ar);
    al *= inv;
    ac *= inv;
    ar *= inv;

    // Blended polynomial c0 + c1 x + c2 x^2 on the reference cell [-1/2, 1/2];
    // the central parabola keeps the optimal reconstruction exact for ideal
    // weights.
    const double pc_a = uc - c / 12.0; // central polynomial constant term
    const double c0 = al * uc + ar * uc + ac * pc_a;
    const double c1 = al * sl + ar * sr + ac * b;
    const double c2 = ac * c;

    CwenoEdges e;
    e.left = c0 - 0.5 * c1 + 0.25 * c2;
    e.right = c0 + 0.5 * c1 + 0.25 * c2;
    return e;
}

CwenoEdges cweno3_linear(double um, double uc, double up) {
    const double b = 0.5 * (up - um);
    const double c = up - 2.0 * uc + um;
    const double a = uc - c / 24.0;
    CwenoEdges e;
    e.left = a - 0.5 * b + 0.125 * c;
    e.right = a + 0.5 * b + 0.125 * c;
    return e;
}

std::vector<FaceStates> cweno_reconstruct(std::span<const double> line, double eps) {
    const int n = int(line.size()) - 4;
    std::vector<FaceStates> faces(n + 1);
    // Interior cell k corresponds to line[k + 2]; face k separates cells
    // k-1 and k. The minus state comes from below, the plus state from above.
    for (int k = -1; k <= n; ++k) {
        const CwenoEdges e = cweno3(line[k + 1], line[k + 2], line[k + 3], eps);
        if (k + 1 <= n)
            faces[k + 1].minus = e.right;
        if (k >= 0)
            faces[k].plus = e.left;
    }
    return faces;
}

double pressure(const ConservedState& u, double xi) {
    if (!(u.rho > 0.0))
        throw positivity_error("non-positive density");
    const double p = (xi - 1.0) * (u.E - 0.5 * (u.mx * u.mx + u.my * u.my) / u.rho);
    if (!(p > 0.0))
        throw positivity_error("non-positive pressure");
    return p;
}

PrimState to_primitive(const ConservedState& u, double xi) {
    PrimState p;
    p.rho = u.rho;
    p.p = pressure(u, xi);
    p.ux = u.mx / u.rho;
    p.uy = u.my / u.rho;
    return p;
}

ConservedState to_conserved(const PrimState& p, double xi) {
    ConservedState u;
    u.rho = p.rho;
    u.mx = p.rho * p.ux;
    u.my = p.rho * p.uy;
    u.E = p.p / (xi - 1.0) + 0.5 * p.rho * (p.ux * p.ux + p.uy * p.uy);
    return u;
}

double sound_speed(const PrimState& p, double xi) { return std::sqrt(xi * p.p / p.rho); }

ConservedState euler_flux(const ConservedState& u, int axis, double xi) {
    const double p = pressure(u, xi);
    const double un = (axis == 0 ? u.mx : u.my) / u.rho;
    ConservedState f;
    f.rho = u.rho * un;
    f.mx = u.mx * un;
    f.my = u.my * un;
    if (axis == 0)
        f.mx += p;
    else
        f.my += p;
    f.E = un * (u.E + p);
    return f;
}

double max_wave_speed(const PrimState& l, const PrimState& r, int axis, double xi) {
    const double ul = axis == 0 ? l.ux : l.uy;
    const double ur = axis == 0 ? r.ux : r.uy;
    return std::max(std::abs(ul) + sound_speed(l, xi), std::abs(ur) + sound_speed(r, xi));
}

ConservedState lax_friedrichs_flux(const ConservedState& ul, const ConservedState& ur,
                                   int axis, double alpha, double xi) {
    const ConservedState fl = euler_flux(ul, axis, xi);
    const ConservedState fr = euler_flux(ur, axis, xi);
    return 0.5 * (fl + fr) - (0.5 * alpha) * (ur - ul);
}

namespace {

// Flux through the face between stencil positions 1 and 2 of four
// consecutive primitive states along `axis`.
ConservedState face_flux(const PrimState& q0, const PrimState& q1, const PrimState& q2,
                         const PrimState& q3, int axis, const EulerScheme& s) {
    PrimState left, right;
    left.rho = cweno3(q0.rho, q1.rho, q2.rho, s.eps_weno).right;
    left.ux = cweno3(q0.ux, q1.ux, q2.ux, s.eps_weno).right;
    left.uy = cweno3(q0.uy, q1.uy, q2.uy, s.eps_weno).right;
    left.p = cweno3(q0.p, q1.p, q2.p, s.eps_weno).right;
    right.rho = cweno3(q1.rho, q2.rho, q3.rho, s.eps_weno).left;
    right.ux = cweno3(q1.ux, q2.ux, q3.ux, s.eps_weno).left;
    right.uy = cweno3(q1.uy, q2.uy, q3.uy, s.eps_weno).left;
    right.p = cweno3(q1.p, q2.p, q3.p, s.eps_weno).left;
    if (!(left.rho > 0.0) || !(left.p > 0.0) || !(right.rho > 0.0) || !(right.p > 0.0))
        throw positivity_error("reconstructed face state lost positivity");
    const double alpha = max_wave_speed(left, right, axis, s.xi);
    return lax_friedrichs_flux(to_conserved(left, s.xi), to_conserved(right, s.xi), axis,
                               alpha, s.xi);
}

} // namespace

ConservedState euler_rhs_cell(const PrimAccessor& prim, int i, int j, double dx,
                              double dy, const EulerScheme& scheme) {
    PrimState px[5], py[5];
    for (int k = -2; k <= 2; ++k) {
        px[k + 2] = prim(i + k, j);
        py[k + 2] = prim(i, j + k);
    }
    const ConservedState fxp = face_flux(px[1], px[2], px[3], px[4], 0, scheme);
    const ConservedState fxm = face_flux(px[0], px[1], px[2], px[3], 0, scheme);
    const ConservedState fyp = face_flux(py[1], py[2], py[3], py[4], 1, scheme);
    const ConservedState fym = face_flux(py[0], py[1], py[2], py[3], 1, scheme);

    ConservedState out;
    for (int k = 0; k < 4; ++k)
        out[k] = -(fxp[k] - fxm[k]) / dx - (fyp[k] - fym[k]) / dy;
    return out;
}

ConservedField euler_rhs_periodic(const ConservedField& u, int nx, int ny, double dx,
                                  double dy, const EulerScheme& scheme) {
    auto prim = [&](int i, int j) {
        const int ii = (i % nx + nx) % nx;
        const int jj = (j % ny + ny) % ny;
        return to_primitive(u[jj * nx + ii], scheme.xi);
    };
    ConservedField rhs(nx * ny);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
            rhs[j * nx + i] = euler_rhs_cell(prim, i, j, dx, dy, scheme);
    return rhs;
}

void tvd_rk2_step_periodic(ConservedField& u, int nx, int ny, double dx, double dy,
                           double dt, const EulerScheme& scheme) {
    const ConservedField l1 = euler_rhs_periodic(u, nx, ny, dx, dy, scheme);
    ConservedField u1(nx * ny);
    for (int c = 0; c < nx * ny; ++c)
        u1[c] = u[c] + dt * l1[c];
    const ConservedField l2 = euler_rhs_periodic(u1, nx, ny, dx, dy, scheme);
    for (int c = 0; c < nx * ny; ++c)
        u[c] = 0.5 * u[c] + 0.5 * u1[c] + (0.5 * dt) * l2[c];
}

} // namespace hykin
