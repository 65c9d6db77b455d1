#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "impact/core.hpp"
#include "impact/strategy.hpp"

// Reference computations for the test suite. Each one reaches its answer by
// a different route than the library does.
namespace oracle {

using impact::AnalyticStrategy;
using impact::ImpactParams;
using impact::TimeGrid;
using impact::Trajectory;

/// Tridiagonal solve (Thomas algorithm); sub[0] and sup[n-1] are ignored.
std::vector<double> thomas(std::vector<double> sub, std::vector<double> diag,
                           std::vector<double> sup, std::vector<double> rhs);

/// A's best response from the discrete Euler-Lagrange system
///   2 (a_{i+1} - 2 a_i + a_{i-1}) / h^2 = -lambda (b'' + kappa b')_i
/// with a_0 = 0, a_n = 1, on n intervals.
std::vector<double> brute_force_best_response(const AnalyticStrategy& adversary,
                                              const ImpactParams& p, int n);

// Closed forms in their unsimplified expanded form, evaluated term by term.
double unsimplified_two_trader_a(double kappa, double lambda, double t);
double unsimplified_two_trader_b(double kappa, double lambda, double t);
double unsimplified_two_trader_equal_size(double kappa, double t);
double unsimplified_b1b(double kappa, double lambda, double t);
double unsimplified_br_eager(double kappa, double lambda, double sigma, double t);
double unsimplified_br_risk_averse(double kappa, double lambda, double sigma, double t);
double unsimplified_multi_limit(double kappa, double t);

/// Risk-equilibrium BVP solved through the matrix exponential of the
/// first-order system (a, b, a', b'). Values of a and b on `grid`.
std::pair<std::vector<double>, std::vector<double>> risk_bvp_modal(const ImpactParams& p,
                                                                   const TimeGrid& grid);

/// y'' + kappa y' = -gain x'', y(0) = 0, y(1) = 1, by second-order central
/// differences with two levels of Richardson extrapolation. Values on the
/// grid with n intervals.
std::vector<double> inverse_fd(const std::function<double(double)>& x_second, double gain,
                               double kappa, int n);

/// t + sum_k c_k sin(k pi t) (or without the t when unit = false).
struct SineSeries {
  std::vector<double> coef;
  bool unit = true;

  double value(double t) const;
  double deriv(double t) const;
  double second_deriv(double t) const;
  Trajectory trajectory(const TimeGrid& grid) const;
};

/// Random smooth series with coefficients shrinking like 1/k^2.
SineSeries random_series(std::mt19937_64& rng, bool unit, double amplitude = 0.5, int terms = 6);

/// Exact mean and variance of the equilibrium cost under log-normal lambda.
/// A's equilibrium cost is a quadratic polynomial in lambda, so three
/// evaluations fix it and the log-normal moments E[lambda^k] finish the job.
std::pair<double, double> exact_lognormal_moments(double mu, double sigma_ln, double kappa);

struct McResult {
  double mean, variance, mean_se, variance_se;
};

/// Plain Monte Carlo over `draws` log-normal lambdas.
McResult lognormal_monte_carlo(double mu, double sigma_ln, double kappa, int draws,
                               std::uint64_t seed);

}  // namespace oracle
