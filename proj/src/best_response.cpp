#include "impact/best_response.hpp"

#include <cmath>

#include "impact/numerics.hpp"

namespace impact {
namespace {

double gain(const ImpactParams& p, Trader responder) {
  return responder == Trader::A ? 0.5 * p.lambda : 0.5 / p.lambda;
}

// y and its running integral Y on the grid, both for the adversary's shape.
SampledStrategy integrate_response(const TimeGrid& grid, const std::vector<double>& y,
                                   const std::vector<double>& big_y, double g, double kappa) {
  const std::size_t n = grid.size();
  const double z = g * y.front();
  const double w = 1.0 + g * (y.back() + kappa * big_y.back()) - z;
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = -g * (y[i] + kappa * big_y[i]) + w * grid[i] + z;
  }
  x.front() = 0.0;
  x.back() = 1.0;
  return SampledStrategy(grid, std::move(x));
}

}  // namespace

double QAux::value(double t) const {
  return (std::sinh(sigma * t) + kappa / sigma * std::cosh(sigma * t)) / std::sinh(sigma);
}

double QAux::deriv(double t) const {
  return (sigma * std::cosh(sigma * t) + kappa * std::sinh(sigma * t)) / std::sinh(sigma);
}

SampledStrategy best_response_generic(const AnalyticStrategy& adversary, const ImpactParams& p,
                                      Trader responder, const TimeGrid& grid) {
  p.validate();
  std::vector<double> y(grid.size());
  std::vector<double> big_y(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Jet j = adversary.jet(grid[i]);
    y[i] = j.value;
    big_y[i] = j.integral;
  }
  return integrate_response(grid, y, big_y, gain(p, responder), p.kappa);
}

SampledStrategy best_response_generic(const SampledStrategy& adversary, const ImpactParams& p,
                                      Trader responder) {
  p.validate();
  return integrate_response(adversary.grid(), adversary.values(), adversary.integral(),
                            gain(p, responder), p.kappa);
}

AnalyticStrategy br_to_risk_averse(const ImpactParams& p) {
  return AnalyticStrategy(family::BestResponseToRiskAverse{p.kappa, p.lambda, p.sigma});
}

AnalyticStrategy br_to_risk_neutral(const ImpactParams& p) {
  return AnalyticStrategy(family::BestResponseToRiskNeutral{p.kappa, p.lambda});
}

AnalyticStrategy br_to_eager(const ImpactParams& p) {
  return AnalyticStrategy(family::BestResponseToEager{p.kappa, p.lambda, p.sigma});
}

}  // namespace impact
