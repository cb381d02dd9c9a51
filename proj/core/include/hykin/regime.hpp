#pragma once

#include <span>

#include "hykin/fields.hpp"
#include "hykin/indicators.hpp"

namespace hykin {

/// Per-cell regime decision. Exactly the published branch structure:
///  r=2: stay 2 iff |lambda_B| > eta1, else drop to 1;
///  r=1: 2 iff |lambda_B| > eta1; else 0 iff all |lambda - 1| <= eta0 AND
///       the L1 distance <= delta0; else 1;
///  r=0: 1 iff any |lambda - 1| > eta0, else 0.
/// Throws contract_violation when an indicator required by the branch is
/// missing (the L1 distance is only needed when the eigenvalue test passes).
int regime_update(int r, const IndicatorSet& ind, const Thresholds& th);

/// State conversion when a cell's layer changes between steps:
///  0->1: the distribution becomes the Maxwellian of the stored hydro state;
///  1->0: the hydro state becomes the moments of the distribution;
///  1<->2: the distribution is carried over unchanged.
/// Non-adjacent transitions are contract violations (the update never
/// produces them).
void convert_on_transition(int old_layer, int new_layer, ConservedState& u,
                           DistributionField& f, int cell, const VelocityGrid& vgrid,
                           double heat_ratio);

} // namespace hykin
