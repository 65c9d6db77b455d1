#pragma once

#include <string>
#include <variant>
#include <vector>

#include "impact/core.hpp"

namespace impact {

/// Value, first and second derivative, and running integral of a strategy
/// at one instant.
struct Jet {
  double value = 0.0;
  double deriv = 0.0;
  double second_deriv = 0.0;
  double integral = 0.0;
};

// Closed-form strategy families. Every family is a unit position-building
// strategy: x(0) = 0 and x(1) = 1.
namespace family {

struct RiskNeutral {};
/// sinh(sigma t) / sinh(sigma)
struct RiskAverse { double sigma; };
/// (e^{-sigma t} - 1) / (e^{-sigma} - 1)
struct Eager { double sigma; };
/// t (t - c) / (1 - c)
struct Parabolic { double c; };
/// Optimal solo execution for x'' = sigma^2 x; same trajectory as RiskAverse.
struct AlmgrenChriss { double sigma; };
struct BestResponseToRiskAverse { double kappa, lambda, sigma; };
struct BestResponseToRiskNeutral { double kappa, lambda; };
struct BestResponseToEager { double kappa, lambda, sigma; };
/// Unit trader's side of the two-trader equilibrium.
struct TwoTraderEqUnit { double kappa, lambda; };
/// Unit shape of the lambda-scaled trader's side of the two-trader equilibrium.
struct TwoTraderEqScaled { double kappa, lambda; };
/// Symmetric equilibrium among n_traders unit traders (total count).
/// Real-valued so that a non-integer "lambda adversaries" count is usable.
struct MultiTraderSym { double kappa, n_traders; };
/// n_traders -> infinity limit of MultiTraderSym.
struct MultiTraderLimit { double kappa; };
/// Lambda-scaled trader's best response to a unit trader who believes there
/// are lambda unit adversaries.
struct Case1bB { double kappa, lambda; };

}  // namespace family

using Family = std::variant<family::RiskNeutral, family::RiskAverse, family::Eager,
                            family::Parabolic, family::AlmgrenChriss,
                            family::BestResponseToRiskAverse, family::BestResponseToRiskNeutral,
                            family::BestResponseToEager, family::TwoTraderEqUnit,
                            family::TwoTraderEqScaled, family::MultiTraderSym,
                            family::MultiTraderLimit, family::Case1bB>;

/// Short kebab-case name of a family ("risk-neutral", "two-trader-a", ...).
std::string family_name(const Family& f);

/// Strategy values and derivatives sampled on a grid. This is the common
/// currency of the cost functionals and residual checks: analytic
/// strategies fill it with exact derivatives, sampled strategies with finite
/// differences.
struct Trajectory {
  TimeGrid grid;
  std::vector<double> value;
  std::vector<double> deriv;
  std::vector<double> second_deriv;

  Trajectory() = default;
  explicit Trajectory(TimeGrid g);

  Trajectory& operator+=(const Trajectory& other);
  Trajectory& operator*=(double s);
};

Trajectory operator+(Trajectory lhs, const Trajectory& rhs);
Trajectory operator*(double s, Trajectory t);

/// A closed-form strategy, optionally multiplied by a constant trajectory
/// scale (lambda). Immutable.
class AnalyticStrategy {
 public:
  /// Validates the family parameters; throws DomainError.
  explicit AnalyticStrategy(Family family);

  const Family& family() const { return family_; }
  std::string name() const { return family_name(family_); }
  double scale() const { return scale_; }

  Jet jet(double t) const;
  double value(double t) const { return jet(t).value; }
  double deriv(double t) const { return jet(t).deriv; }
  double second_deriv(double t) const { return jet(t).second_deriv; }
  /// Integral of value from 0 to t.
  double integral(double t) const { return jet(t).integral; }

  /// Exact values and derivatives at the grid points.
  Trajectory trajectory(const TimeGrid& grid) const;

  /// Same family, trajectory multiplied by lambda (> 0).
  AnalyticStrategy scaled(double lambda) const;

 private:
  Family family_;
  double scale_ = 1.0;
};

/// Differentiation stencil used when a sampled strategy is turned into a
/// Trajectory.
enum class Stencil { kSecondOrder, kSixthOrder };

/// A strategy known only at grid points. First and second derivatives are
/// second-order finite differences of the values; the second derivative is
/// the gradient of the first.
class SampledStrategy {
 public:
  SampledStrategy(TimeGrid grid, std::vector<double> values);

  const TimeGrid& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& first_deriv() const { return first_; }
  const std::vector<double>& second_deriv() const { return second_; }
  /// Running integral from 0 (cumulative Simpson).
  std::vector<double> integral() const;

  double value_at_index(std::size_t i) const { return values_[i]; }
  double operator[](std::size_t i) const { return values_[i]; }

  /// kSecondOrder returns the stored derivatives; kSixthOrder recomputes
  /// them with wide stencils (used for residual checks).
  Trajectory trajectory(Stencil stencil = Stencil::kSecondOrder) const;

  /// True when values start at 0 and end at 1 within tol.
  bool has_unit_boundary(double tol = 1e-8) const;

  SampledStrategy scaled(double lambda) const;

 private:
  TimeGrid grid_;
  std::vector<double> values_;
  std::vector<double> first_;
  std::vector<double> second_;
};

AnalyticStrategy make_analytic(const Family& family);

SampledStrategy sample(const AnalyticStrategy& s, const TimeGrid& grid);

AnalyticStrategy scale_trajectory(const AnalyticStrategy& s, double lambda);
SampledStrategy scale_trajectory(const SampledStrategy& s, double lambda);

}  // namespace impact
