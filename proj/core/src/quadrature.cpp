#include "hykin/quadrature.hpp"

#include <cmath>

namespace hykin {

namespace {

// Gauss-Kronrod 15-point nodes/weights on [-1, 1]; the embedded 7-point
// Gauss rule uses the odd-indexed nodes.
constexpr double kx[15] = {
    -0.991455371120813, -0.949107912342759, -0.864864423359769,
    -0.741531185599394, -0.586087235467691, -0.405845151377397,
    -0.207784955007898, 0.0,                0.207784955007898,
    0.405845151377397,  0.586087235467691,  0.741531185599394,
    0.864864423359769,  0.949107912342759,  0.991455371120813};
constexpr double kw[15] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728, 0.204432940075298,
    0.190350578064785, 0.169004726639267, 0.140653259715525,
    0.104790010322250, 0.063092092629979, 0.022935322010529};
constexpr double gw[7] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                          0.417959183673469, 0.381830050505119, 0.279705391489277,
                          0.129484966168870};

struct PanelResult {
    double integral;
    double error;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double ik = 0.0, ig = 0.0;
    for (int i = 0; i < 15; ++i) {
        const double v = f(c + h * kx[i]);
        ik += kw[i] * v;
        if (i % 2 == 1)
            ig += gw[i / 2] * v;
    }
    return {ik * h, std::abs((ik - ig) * h)};
}

double integrate_rec(const std::function<double(double)>& f, double a, double b,
                     const PanelResult& whole, double tol, int depth) {
    if (whole.error <= tol || depth >= 48)
        return whole.integral;
    const double c = 0.5 * (a + b);
    const PanelResult left = gk15(f, a, c);
    const PanelResult right = gk15(f, c, b);
    return integrate_rec(f, a, c, left, 0.5 * tol, depth + 1) +
           integrate_rec(f, c, b, right, 0.5 * tol, depth + 1);
}

} // namespace

double adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, double rel_tol) {
    const PanelResult whole = gk15(f, a, b);
    const double tol = abs_tol + rel_tol * std::abs(whole.integral);
    return integrate_rec(f, a, b, whole, tol, 0);
}

} // namespace hykin
