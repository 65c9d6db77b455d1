#include "impact/inverse.hpp"

#include <array>
#include <cmath>

namespace impact {
namespace {

double phi(double kappa, double t) {
  return kappa < 1e-12 ? t : -std::expm1(-kappa * t) / kappa;
}

SampledStrategy assemble(const TimeGrid& grid, const std::vector<double>& x,
                         const std::vector<double>& j, double gain, double kappa) {
  const std::size_t n = grid.size();
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = -gain * (x[i] - std::exp(-kappa * grid[i]) * x[0] - kappa * j[i]);
  }
  const double c = (1.0 - y.back()) / phi(kappa, 1.0);
  for (std::size_t i = 0; i < n; ++i) y[i] += c * phi(kappa, grid[i]);
  y.front() = 0.0;
  y.back() = 1.0;
  return SampledStrategy(grid, std::move(y));
}

// J on the grid for a sampled x: decay the previous value and add a
// one-interval quadratic panel of e^{-kappa (t_{i+1} - s)} x(s).
std::vector<double> damped_integral(const std::vector<double>& x, double h, double kappa) {
  const std::size_t n = x.size();
  const double e1 = std::exp(-kappa * h);
  const double e2 = e1 * e1;
  std::vector<double> j(n, 0.0);
  {
    // Forward panel on [t_0, t_1] through t_0, t_1, t_2 (weights relative to t_1).
    const double g0 = e1 * x[0];
    const double g1 = x[1];
    const double g2 = x[2] / e1;
    j[1] = h / 12.0 * (5.0 * g0 + 8.0 * g1 - g2);
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    j[i + 1] = e1 * j[i] + h / 12.0 * (-e2 * x[i - 1] + 8.0 * e1 * x[i] + 5.0 * x[i + 1]);
  }
  return j;
}

// J for an analytic x with 4-point Gauss-Legendre on each grid interval.
std::vector<double> damped_integral(const AnalyticStrategy& x, const TimeGrid& grid,
                                    double kappa) {
  static constexpr std::array<double, 4> kNodes = {-0.8611363115940526, -0.3399810435848563,
                                                   0.3399810435848563, 0.8611363115940526};
  static constexpr std::array<double, 4> kWeights = {0.3478548451374538, 0.6521451548625461,
                                                     0.6521451548625461, 0.3478548451374538};
  const double h = grid.step();
  const double e1 = std::exp(-kappa * h);
  std::vector<double> j(grid.size(), 0.0);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double mid = grid[i] + 0.5 * h;
    double panel = 0.0;
    for (std::size_t q = 0; q < kNodes.size(); ++q) {
      const double s = mid + 0.5 * h * kNodes[q];
      panel += kWeights[q] * std::exp(-kappa * (grid[i + 1] - s)) * x.value(s);
    }
    j[i + 1] = e1 * j[i] + 0.5 * h * panel;
  }
  return j;
}

SampledStrategy solve(const AnalyticStrategy& x, const TimeGrid& grid, double gain,
                      double kappa) {
  std::vector<double> xv(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) xv[i] = x.value(grid[i]);
  return assemble(grid, xv, damped_integral(x, grid, kappa), gain, kappa);
}

SampledStrategy solve(const SampledStrategy& x, double gain, double kappa) {
  return assemble(x.grid(), x.values(), damped_integral(x.values(), x.grid().step(), kappa), gain,
                  kappa);
}

}  // namespace

SampledStrategy inverse_for_b(const AnalyticStrategy& a, const ImpactParams& p,
                              const TimeGrid& grid) {
  p.validate();
  return solve(a, grid, 2.0 / p.lambda, p.kappa);
}

SampledStrategy inverse_for_b(const SampledStrategy& a, const ImpactParams& p) {
  p.validate();
  return solve(a, 2.0 / p.lambda, p.kappa);
}

SampledStrategy inverse_for_a(const AnalyticStrategy& b, const ImpactParams& p,
                              const TimeGrid& grid) {
  p.validate();
  return solve(b, grid, 2.0 * p.lambda, p.kappa);
}

SampledStrategy inverse_for_a(const SampledStrategy& b, const ImpactParams& p) {
  p.validate();
  return solve(b, 2.0 * p.lambda, p.kappa);
}

}  // namespace impact
