#pragma once

#include <functional>

namespace hykin {

/// Adaptive Gauss-Kronrod (G7, K15) integration of f over [a, b].
/// Panels are bisected until the local error estimate falls below
/// abs_tol + rel_tol * |integral|.
double adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                          double abs_tol = 1e-12, double rel_tol = 1e-10);

} // namespace hykin
