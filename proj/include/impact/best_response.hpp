#pragma once

#include "impact/core.hpp"
#include "impact/strategy.hpp"

namespace impact {

/// Auxiliary function of the best response to a risk-averse adversary:
///   q(t) = sinh(sigma t)/sinh(sigma) + (kappa/sigma) cosh(sigma t)/sinh(sigma)
struct QAux {
  double kappa;
  double sigma;

  double value(double t) const;
  double deriv(double t) const;
};

/// Best response of `responder` to a fixed adversary, from the twice
/// integrated best-response equation
///
///   x(t) = -g (y(t) + kappa * int_0^t y) + w t + z,   x(0) = 0, x(1) = 1,
///
/// where y is the adversary's unit shape, g = lambda/2 when A responds to b
/// and g = 1/(2 lambda) when B responds to a. For B the result is the unit
/// shape of B's lambda-scaled trajectory.
SampledStrategy best_response_generic(const AnalyticStrategy& adversary, const ImpactParams& p,
                                      Trader responder = Trader::A,
                                      const TimeGrid& grid = TimeGrid());

/// Same construction for a sampled adversary; its running integral comes from
/// cumulative Simpson.
SampledStrategy best_response_generic(const SampledStrategy& adversary, const ImpactParams& p,
                                      Trader responder = Trader::A);

/// Unit best response to a lambda-scaled RiskAverse(p.sigma) adversary.
/// Throws DomainError for sigma <= 0.
AnalyticStrategy br_to_risk_averse(const ImpactParams& p);

/// (1 + l k/4) t - (l k/4) t^2.
AnalyticStrategy br_to_risk_neutral(const ImpactParams& p);

/// Unit best response to a lambda-scaled Eager(p.sigma) adversary.
/// Throws DomainError for sigma <= 0.
AnalyticStrategy br_to_eager(const ImpactParams& p);

}  // namespace impact
