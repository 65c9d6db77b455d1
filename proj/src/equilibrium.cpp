#include "impact/equilibrium.hpp"

#include <stdexcept>

#include "impact/bvp.hpp"

namespace impact {

EquilibriumPair<AnalyticStrategy> two_trader(const ImpactParams& p) {
  p.validate();
  return {AnalyticStrategy(family::TwoTraderEqUnit{p.kappa, p.lambda}),
          AnalyticStrategy(family::TwoTraderEqScaled{p.kappa, p.lambda}), p};
}

AnalyticStrategy multi_trader(int n_traders, double kappa) {
  if (n_traders < 2) throw DomainError("multi-trader equilibrium needs at least 2 traders");
  return AnalyticStrategy(family::MultiTraderSym{kappa, static_cast<double>(n_traders)});
}

AnalyticStrategy multi_trader_limit(double kappa) {
  return AnalyticStrategy(family::MultiTraderLimit{kappa});
}

std::vector<double> multi_trader_residual(const AnalyticStrategy& a, int n_traders, double kappa,
                                          const TimeGrid& grid) {
  const double others = n_traders - 1.0;
  std::vector<double> r(grid.size() - 2);
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    const Jet j = a.jet(grid[i]);
    r[i - 1] = j.second_deriv + 0.5 * others * (j.second_deriv + kappa * j.deriv);
  }
  return r;
}

EquilibriumPair<SampledStrategy> risk_equilibrium(const ImpactParams& p, const TimeGrid& grid) {
  p.validate();
  const double k = p.kappa;
  const double l = p.lambda;
  const double s2 = p.sigma * p.sigma;
  // Multiply through to [[2, l], [1, 2l]] (a'', b'')^T = rhs and invert the
  // 2x2 matrix (determinant 3l).
  LinearBvp bvp;
  bvp.dim = 2;
  bvp.a1 = {k / 3.0, -2.0 * k * l / 3.0, -2.0 * k / (3.0 * l), k / 3.0};
  bvp.a0 = {4.0 * p.xi_a * s2 / 3.0, -2.0 * p.xi_b * s2 / (3.0 * l),
            -2.0 * p.xi_a * s2 / (3.0 * l), 4.0 * p.xi_b * s2 / (3.0 * l * l)};
  bvp.left = {0.0, 0.0};
  bvp.right = {1.0, 1.0};
  auto y = solve_linear_bvp(bvp, grid);
  return {SampledStrategy(grid, std::move(y[0])), SampledStrategy(grid, std::move(y[1])), p};
}

std::vector<double> risk_residual(const SampledStrategy& a, const SampledStrategy& b,
                                  const ImpactParams& p, Trader which) {
  if (!(a.grid() == b.grid())) throw std::invalid_argument("strategies are on different grids");
  const Trajectory ta = a.trajectory(Stencil::kSixthOrder);
  const Trajectory tb = b.trajectory(Stencil::kSixthOrder);
  const double s2 = p.sigma * p.sigma;
  const double l = p.lambda;
  std::vector<double> r(ta.value.size() - 2);
  for (std::size_t i = 1; i + 1 < ta.value.size(); ++i) {
    if (which == Trader::A) {
      r[i - 1] = ta.second_deriv[i] + 0.5 * l * (tb.second_deriv[i] + p.kappa * tb.deriv[i]) -
                 p.xi_a * s2 * ta.value[i];
    } else {
      r[i - 1] = tb.second_deriv[i] + (ta.second_deriv[i] + p.kappa * ta.deriv[i]) / (2.0 * l) -
                 p.xi_b / (l * l) * s2 * tb.value[i];
    }
  }
  return r;
}

}  // namespace impact
