#pragma once

#include "impact/core.hpp"
#include "impact/strategy.hpp"

// Inverse problems: given one trader's strategy x, find the unit-boundary
// strategy y for which x is the best response,
//
//   y'' + kappa y' = -gain * x'',   y(0) = 0, y(1) = 1.
//
// Integrating once and applying the integrating factor e^{kappa t} gives
//
//   y(t) = -gain [x(t) - e^{-kappa t} x(0) - kappa J(t)] + C phi(t),
//   J(t) = int_0^t e^{-kappa (t - s)} x(s) ds,  phi(t) = (1 - e^{-kappa t}) / kappa,
//
// so only values of x are needed; C is fixed by y(1) = 1.
namespace impact {

/// Adversary shape b* for which the unit strategy `a` is A's best response
/// (gain 2 / lambda).
SampledStrategy inverse_for_b(const AnalyticStrategy& a, const ImpactParams& p,
                              const TimeGrid& grid = TimeGrid());
SampledStrategy inverse_for_b(const SampledStrategy& a, const ImpactParams& p);

/// Unit strategy a* that is the best response to the adversary shape `b`
/// (gain 2 lambda).
SampledStrategy inverse_for_a(const AnalyticStrategy& b, const ImpactParams& p,
                              const TimeGrid& grid = TimeGrid());
SampledStrategy inverse_for_a(const SampledStrategy& b, const ImpactParams& p);

}  // namespace impact
