#include "hykin/regime.hpp"

#include <cmath>
#include <string>

#include "hykin/coupling.hpp"
#include "hykin/errors.hpp"

namespace hykin {

namespace {

bool eigenvalues_near_one(const Eigenvalues& lam, double eta0) {
    return std::abs(lam.a - 1.0) <= eta0 && std::abs(lam.b - 1.0) <= eta0 &&
           std::abs(lam.c - 1.0) <= eta0;
}

[[noreturn]] void missing(const char* what, int r) {
    throw contract_violation(std::string("regime update for layer ") + std::to_string(r) +
                             " requires " + what);
}

} // namespace

int regime_update(int r, const IndicatorSet& ind, const Thresholds& th) {
    switch (r) {
    case 2:
        if (!ind.lambda_b)
            missing("lambda_B", r);
        return std::abs(*ind.lambda_b) > th.eta1 ? 2 : 1;
    case 1: {
        if (!ind.lambda_b)
            missing("lambda_B", r);
        if (!ind.eigenvalues)
            missing("the realizability eigenvalues", r);
        if (std::abs(*ind.lambda_b) > th.eta1)
            return 2;
        if (eigenvalues_near_one(*ind.eigenvalues, th.eta0)) {
            if (!ind.l1_distance)
                missing("the L1 distance to equilibrium", r);
            return *ind.l1_distance <= th.delta0 ? 0 : 1;
        }
        return 1;
    }
    case 0:
        if (!ind.eigenvalues)
            missing("the realizability eigenvalues", r);
        return eigenvalues_near_one(*ind.eigenvalues, th.eta0) ? 0 : 1;
    default:
        throw contract_violation("unknown layer " + std::to_string(r));
    }
}

void convert_on_transition(int old_layer, int new_layer, ConservedState& u,
                           DistributionField& f, int cell, const VelocityGrid& vgrid,
                           double heat_ratio) {
    if (std::abs(old_layer - new_layer) != 1)
        throw contract_violation("non-adjacent regime transition " +
                                 std::to_string(old_layer) + " -> " +
                                 std::to_string(new_layer));
    if (old_layer == 0 && new_layer == 1) {
        maxwellian(moments_from_conserved(u, heat_ratio), vgrid, f.ensure(cell));
        return;
    }
    if (old_layer == 1 && new_layer == 0) {
        u = conserved_from_moments(moments_of(f[cell], vgrid), heat_ratio);
        f.release(cell);
        return;
    }
    // 1 <-> 2: the stored distribution is reused unchanged.
}

} // namespace hykin
