#pragma once

#include <span>
#include <vector>

namespace hykin {

/// Reconstructed boundary values of one cell: at its left face x_{i-1/2}
/// and its right face x_{i+1/2}.
struct CwenoEdges {
    double left = 0.0;
    double right = 0.0;
};

/// Third-order compact central WENO reconstruction from the cell averages
/// (u_{i-1}, u_i, u_{i+1}). Linear weights (1/4, 1/2, 1/4), smoothness
/// regularization eps, exponent 2.
CwenoEdges cweno3(double um, double uc, double up, double eps = 1e-6);

/// Ideal-weight blend; reproduces the optimal quadratic exactly and is the
/// smooth-limit target of cweno3.
CwenoEdges cweno3_linear(double um, double uc, double up);

/// Face states along a 1D line of cell averages. `line` carries two ghost
/// values on each side, so faces.size() == line.size() - 4 + 1. Face k sits
/// between cells k-1 and k (0-based over the interior cells) and stores the
/// reconstruction from below (minus) and from above (plus).
struct FaceStates {
    double minus = 0.0;
    double plus = 0.0;
};
std::vector<FaceStates> cweno_reconstruct(std::span<const double> line, double eps = 1e-6);

} // namespace hykin
