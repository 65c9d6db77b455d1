#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace impact {

/// Default number of grid intervals used by every solver and quadrature.
inline constexpr int kDefaultIntervals = 2000;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Uniform grid on the trading horizon [0, 1] with an even number of
/// intervals (composite Simpson needs pairs).
class TimeGrid {
 public:
  explicit TimeGrid(int n_intervals = kDefaultIntervals);

  int intervals() const { return n_; }
  std::size_t size() const { return points_.size(); }
  double step() const { return h_; }
  double operator[](std::size_t i) const { return points_[i]; }
  std::span<const double> points() const { return points_; }

  bool operator==(const TimeGrid& other) const { return n_ == other.n_; }

 private:
  int n_;
  double h_;
  std::vector<double> points_;
};

/// Market-impact and risk parameters shared by the cost functionals and the
/// equilibrium solvers.
///
/// kappa   permanent-to-temporary impact ratio
/// lambda  adversary size in units of the unit trader's target
/// sigma   shape / volatility parameter
/// xi_a,b  risk-aversion weights of traders A and B
struct ImpactParams {
  double kappa = 0.0;
  double lambda = 1.0;
  double sigma = 0.0;
  double xi_a = 0.0;
  double xi_b = 0.0;

  /// Throws DomainError when any field is outside its domain.
  void validate() const;
};

enum class Trader { A, B };

std::string to_string(Trader t);

}  // namespace impact
