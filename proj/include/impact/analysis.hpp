#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "impact/core.hpp"
#include "impact/cost.hpp"
#include "impact/strategy.hpp"

namespace impact {

/// Strategies of the two-case uncertainty setup. Case 1a: A and B both
/// believe there is a single adversary (two-trader equilibrium). Case 1b: A
/// believes there are lambda unit adversaries and trades the symmetric
/// multi-trader strategy; b1b is B's best response to it.
struct UncertaintyStrategies {
  AnalyticStrategy a1a;
  AnalyticStrategy b1a;
  AnalyticStrategy a1b;
  AnalyticStrategy b1b;
};

UncertaintyStrategies uncertainty_strategies(const ImpactParams& p);

/// B's total cost for every (A strategy, B strategy) combination.
/// Rows: a1a, a1b. Columns: b1a, b1b. Column statistics treat the two rows
/// as equally likely; col_std is the sample standard deviation (divisor 1).
struct SelectionReport {
  std::array<std::array<double, 2>, 2> matrix{};
  std::array<double, 2> col_mean{};
  std::array<double, 2> col_std{};
};

SelectionReport selection_matrix(const ImpactParams& p, const TimeGrid& grid = TimeGrid());

/// A's total cost in the two-trader equilibrium at (kappa, lambda).
double equilibrium_cost(double kappa, double lambda, const TimeGrid& grid = TimeGrid());

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
};

/// Gauss-Hermite nodes and weights for the weight e^{-u^2} (Golub-Welsch).
void gauss_hermite(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// Mean and variance of equilibrium_cost(kappa, lambda) for
/// lambda = exp(mu + sigma_ln Z), Z standard normal, by n_quad-point
/// Gauss-Hermite quadrature. Requires sigma_ln >= 0, n_quad >= 8.
Moments expected_cost_lognormal(double mu, double sigma_ln, double kappa, int n_quad = 32,
                                const TimeGrid& grid = TimeGrid());

struct MonteCarloEstimate {
  Moments moments;
  double mean_stderr = 0.0;
  double variance_stderr = 0.0;
};

/// Direct Monte Carlo of the same expectation with a seeded mt19937_64.
MonteCarloEstimate monte_carlo_cost_lognormal(double mu, double sigma_ln, double kappa,
                                              int draws, std::uint64_t seed,
                                              const TimeGrid& grid = TimeGrid());

/// How the adversary enters A's cost in the mis-estimation tables.
enum class Pricing {
  kShape,   ///< against the adversary's unit shape b
  kScaled,  ///< against the lambda-scaled trajectory lambda * b
};

struct MisestimationOptions {
  double shrink = 0.75;
  Pricing pricing = Pricing::kShape;
  /// Trade the strategy solved at shrink * kappa but price it at the true
  /// kappa.
  bool fixed_truth = false;
};

struct SensitivityReport {
  double lambda = 0.0;
  double kappa = 0.0;
  double shifted_kappa = 0.0;
  CostBreakdown base;
  CostBreakdown shifted;
  double rel_total_diff = 0.0;
  /// Central differences of the total cost (strategies re-solved at each
  /// point), steps 1e-4 kappa and 1e-4 lambda.
  double dcost_dkappa_a = 0.0;
  double dcost_dlambda_a = 0.0;
  double dcost_dkappa_b = 0.0;
  double dcost_dlambda_b = 0.0;
};

/// Cost of A's equilibrium strategy at kappa versus the strategy solved at
/// shrink * kappa. Requires kappa > 0.
SensitivityReport misestimation_row(double lambda, double kappa,
                                    const MisestimationOptions& opt = {},
                                    const TimeGrid& grid = TimeGrid());

/// Rows for kappa in {0.1, 0.5, 1, 5, 25, 100}.
std::vector<SensitivityReport> misestimation_table(double lambda,
                                                   const MisestimationOptions& opt = {},
                                                   const TimeGrid& grid = TimeGrid());

/// Costs of A's best response and of the risk-neutral strategy against a
/// lambda-scaled Eager(sigma) adversary.
struct TempPermRow {
  double lambda = 0.0;
  double kappa = 0.0;
  CostBreakdown best_response;
  CostBreakdown risk_neutral;
};

/// lambda in {1, 3, 10, 25} x kappa in {0.1, 0.25, 2.5, 10, 25}.
std::vector<TempPermRow> temp_perm_table(double sigma = 4.0, const TimeGrid& grid = TimeGrid());

}  // namespace impact
