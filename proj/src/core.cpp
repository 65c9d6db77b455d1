#include "impact/core.hpp"

#include <cmath>

namespace impact {

TimeGrid::TimeGrid(int n_intervals) : n_(n_intervals) {
  if (n_intervals < 2 || n_intervals % 2 != 0) {
    throw DomainError("grid interval count must be even and >= 2, got " +
                      std::to_string(n_intervals));
  }
  h_ = 1.0 / n_intervals;
  points_.resize(static_cast<std::size_t>(n_intervals) + 1);
  for (int i = 0; i <= n_intervals; ++i) points_[i] = static_cast<double>(i) / n_intervals;
  points_.back() = 1.0;
}

void ImpactParams::validate() const {
  auto finite = [](double v) { return std::isfinite(v); };
  if (!finite(kappa) || kappa < 0.0) throw DomainError("kappa must be finite and >= 0");
  if (!finite(lambda) || lambda <= 0.0) throw DomainError("lambda must be finite and > 0");
  if (!finite(sigma) || sigma < 0.0) throw DomainError("sigma must be finite and >= 0");
  if (!finite(xi_a) || xi_a < 0.0) throw DomainError("xi_a must be finite and >= 0");
  if (!finite(xi_b) || xi_b < 0.0) throw DomainError("xi_b must be finite and >= 0");
}

std::string to_string(Trader t) { return t == Trader::A ? "A" : "B"; }

}  // namespace impact
