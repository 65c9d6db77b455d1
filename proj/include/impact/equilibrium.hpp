#pragma once

#include <vector>

#include "impact/core.hpp"
#include "impact/strategy.hpp"

namespace impact {

/// Equilibrium strategies: `a` is the unit trader, `b` the unit shape of the
/// lambda-scaled trader (B trades lambda * b).
template <class S>
struct EquilibriumPair {
  S a;
  S b;
  ImpactParams params;
};

/// Closed-form two-trader equilibrium. Requires lambda > 0, kappa >= 0.
EquilibriumPair<AnalyticStrategy> two_trader(const ImpactParams& p);

/// Symmetric equilibrium among n_traders >= 2 unit traders:
/// (1 - e^{-ct}) / (1 - e^{-c}) with c = (n - 1) kappa / (n + 1).
AnalyticStrategy multi_trader(int n_traders, double kappa);

/// n_traders -> infinity: (1 - e^{-kappa t}) / (1 - e^{-kappa}).
AnalyticStrategy multi_trader_limit(double kappa);

/// Residual of the symmetric multi-trader equation
///   a'' + ((n - 1)/2)(a'' + kappa a')
/// on interior grid points, with exact derivatives.
std::vector<double> multi_trader_residual(const AnalyticStrategy& a, int n_traders, double kappa,
                                          const TimeGrid& grid = TimeGrid());

/// Two-trader equilibrium with risk aversion:
///   a'' = -(l/2)(b'' + k b') + xi_a sigma^2 a
///   b'' = -(1/(2l))(a'' + k a') + (xi_b / l^2) sigma^2 b
/// with unit boundary values, solved as a banded finite-difference BVP.
EquilibriumPair<SampledStrategy> risk_equilibrium(const ImpactParams& p,
                                                  const TimeGrid& grid = TimeGrid());

/// Residual of one of the two risk-equilibrium equations on interior grid
/// points, using sixth-order finite differences.
std::vector<double> risk_residual(const SampledStrategy& a, const SampledStrategy& b,
                                  const ImpactParams& p, Trader which);

}  // namespace impact
