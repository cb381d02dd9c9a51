#pragma once

#include <array>
#include <cmath>

namespace hykin {

/// Double Butcher tableau of a 2-stage IMEX Runge-Kutta pair: transport is
/// advanced with the explicit part, the stiff relaxation with the
/// (diagonally) implicit one.
struct ImexTableau {
    static constexpr int stages = 2;

    std::array<std::array<double, stages>, stages> a_ex{}; // strictly lower triangular
    std::array<double, stages> c_ex{};
    std::array<double, stages> w_ex{};

    std::array<std::array<double, stages>, stages> a_im{}; // lower triangular
    std::array<double, stages> c_im{};
    std::array<double, stages> w_im{};

    /// Second-order PR(2,2,2) pair with C = 1/sqrt(2), delta = 1 - 1/(2C).
    static ImexTableau pr222() {
        const double C = 1.0 / std::sqrt(2.0);
        const double delta = 1.0 - 1.0 / (2.0 * C);
        ImexTableau t;
        t.a_ex = {{{0.0, 0.0}, {1.0, 0.0}}};
        t.c_ex = {0.0, 1.0};
        t.w_ex = {0.5, 0.5};
        t.a_im = {{{1.0 - C, 0.0}, {C - delta, delta}}};
        t.c_im = {1.0 - C, C};
        t.w_im = {0.5, 0.5};
        return t;
    }
};

} // namespace hykin
