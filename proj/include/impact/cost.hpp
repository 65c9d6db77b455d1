#pragma once

#include <vector>

#include "impact/core.hpp"
#include "impact/strategy.hpp"

// Cost functionals for a unit trader A with strategy a and an adversary B
// trading lambda * b. All functions take the unit shape b and apply lambda
// from the parameters.
namespace impact {

struct CostBreakdown {
  double temporary = 0.0;  ///< integral of (a' + l b') x'
  double permanent = 0.0;  ///< kappa * integral of (a + l b) x'
  double total = 0.0;
};

struct CostRates {
  double temporary = 0.0;
  double permanent = 0.0;
};

/// Instantaneous cost rates at time t. For A the traded rate x' is a'; for B
/// it is lambda * b'.
CostRates instantaneous_cost(const AnalyticStrategy& a, const AnalyticStrategy& b,
                             const ImpactParams& p, double t, Trader who = Trader::A);

/// Pointwise rates on the trajectory grid.
std::vector<CostRates> cost_rates(const Trajectory& a, const Trajectory& b, const ImpactParams& p,
                                  Trader who = Trader::A);

/// Composite Simpson quadrature of the instantaneous cost on the trajectory
/// grid. Throws std::invalid_argument when the grids differ.
CostBreakdown total_cost(const Trajectory& a, const Trajectory& b, const ImpactParams& p,
                         Trader who = Trader::A);

/// Five-point Gauss-Legendre on every interval of `grid` using exact
/// derivatives. Composite Simpson on the grid values alone changes by up to
/// 1e-3 under grid doubling at kappa = 100; this rule stays near 1e-11.
CostBreakdown total_cost(const AnalyticStrategy& a, const AnalyticStrategy& b,
                         const ImpactParams& p, Trader who = Trader::A,
                         const TimeGrid& grid = TimeGrid());

/// Sampled strategies are differentiated with sixth-order stencils.
CostBreakdown total_cost(const SampledStrategy& a, const SampledStrategy& b,
                         const ImpactParams& p, Trader who = Trader::A);

/// Running total cost at every grid point (cumulative Simpson); the last
/// entry equals total_cost(...).total.
std::vector<double> cumulative_cost_curve(const Trajectory& a, const Trajectory& b,
                                          const ImpactParams& p, Trader who = Trader::A);

/// Total cost accrued over [0, t]: Gauss-Legendre on `intervals` equal panels
/// of [0, t]. At t = 1 this is the same rule as total_cost.
double cumulative_cost(const AnalyticStrategy& a, const AnalyticStrategy& b,
                       const ImpactParams& p, double t, Trader who = Trader::A,
                       int intervals = kDefaultIntervals);

/// Equilibrium-equation residual on interior grid points (size n - 1):
///   A: a'' + (l/2)(b'' + k b')
///   B: b'' + (1/(2l))(a'' + k a')
/// Throws std::invalid_argument when the grids differ.
std::vector<double> el_residual(const Trajectory& a, const Trajectory& b, const ImpactParams& p,
                                Trader which);

/// Analytic strategies use exact derivatives on the grid.
std::vector<double> el_residual(const AnalyticStrategy& a, const AnalyticStrategy& b,
                                const ImpactParams& p, Trader which,
                                const TimeGrid& grid = TimeGrid());

/// Sampled strategies use sixth-order finite differences.
std::vector<double> el_residual(const SampledStrategy& a, const SampledStrategy& b,
                                const ImpactParams& p, Trader which);

/// Solution of the Euler-Lagrange equation of x'^2 + kappa x x' + sigma^2 x^2
/// with x(0) = 0, x(1) = 1, solved numerically on `grid`.
std::vector<double> permanent_impact_solution(double sigma, double kappa,
                                              const TimeGrid& grid = TimeGrid());

/// True when permanent_impact_solution matches AlmgrenChriss(sigma) within
/// `tol` in the sup norm.
bool perm_invariance_check(double sigma, double kappa, double tol = 1e-8);

}  // namespace impact
