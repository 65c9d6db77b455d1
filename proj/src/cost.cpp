#include "impact/cost.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "impact/bvp.hpp"
#include "impact/numerics.hpp"

namespace impact {
namespace {

void require_same_grid(const Trajectory& a, const Trajectory& b) {
  if (!(a.grid == b.grid)) throw std::invalid_argument("strategies are on different grids");
}

CostRates rates(double a, double da, double b, double db, const ImpactParams& p, Trader who) {
  const double flow = da + p.lambda * db;
  const double level = a + p.lambda * b;
  const double traded = who == Trader::A ? da : p.lambda * db;
  return {flow * traded, p.kappa * level * traded};
}

constexpr std::array<double, 5> kGaussNodes = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                               0.5384693101056831, 0.9061798459386640};
constexpr std::array<double, 5> kGaussWeights = {0.2369268850561891, 0.4786286704993665,
                                                 0.5688888888888889, 0.4786286704993665,
                                                 0.2369268850561891};

// Five-point Gauss-Legendre on each of `panels` equal panels of [0, t_end].
// Neumaier-compensated running sum.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double t = sum + x;
    carry += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + carry; }
};

CostBreakdown gauss_cost(const AnalyticStrategy& a, const AnalyticStrategy& b,
                         const ImpactParams& p, Trader who, double t_end, int panels) {
  const double h = t_end / panels;
  CompensatedSum temporary, permanent;
  for (int i = 0; i < panels; ++i) {
    const double mid = (i + 0.5) * h;
    double pt = 0.0, pp = 0.0;
    for (std::size_t q = 0; q < kGaussNodes.size(); ++q) {
      const Jet ja = a.jet(mid + 0.5 * h * kGaussNodes[q]);
      const Jet jb = b.jet(mid + 0.5 * h * kGaussNodes[q]);
      const CostRates r = rates(ja.value, ja.deriv, jb.value, jb.deriv, p, who);
      pt += kGaussWeights[q] * r.temporary;
      pp += kGaussWeights[q] * r.permanent;
    }
    temporary.add(0.5 * h * pt);
    permanent.add(0.5 * h * pp);
  }
  CostBreakdown c;
  c.temporary = temporary.value();
  c.permanent = permanent.value();
  c.total = c.temporary + c.permanent;
  return c;
}

}  // namespace

CostRates instantaneous_cost(const AnalyticStrategy& a, const AnalyticStrategy& b,
                             const ImpactParams& p, double t, Trader who) {
  const Jet ja = a.jet(t);
  const Jet jb = b.jet(t);
  return rates(ja.value, ja.deriv, jb.value, jb.deriv, p, who);
}

std::vector<CostRates> cost_rates(const Trajectory& a, const Trajectory& b, const ImpactParams& p,
                                  Trader who) {
  require_same_grid(a, b);
  std::vector<CostRates> out(a.value.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = rates(a.value[i], a.deriv[i], b.value[i], b.deriv[i], p, who);
  }
  return out;
}

CostBreakdown total_cost(const Trajectory& a, const Trajectory& b, const ImpactParams& p,
                         Trader who) {
  const auto r = cost_rates(a, b, p, who);
  std::vector<double> temp(r.size());
  std::vector<double> perm(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    temp[i] = r[i].temporary;
    perm[i] = r[i].permanent;
  }
  CostBreakdown c;
  c.temporary = numerics::simpson(temp, a.grid.step());
  c.permanent = numerics::simpson(perm, a.grid.step());
  c.total = c.temporary + c.permanent;
  return c;
}

CostBreakdown total_cost(const AnalyticStrategy& a, const AnalyticStrategy& b,
                         const ImpactParams& p, Trader who, const TimeGrid& grid) {
  return gauss_cost(a, b, p, who, 1.0, grid.intervals());
}

CostBreakdown total_cost(const SampledStrategy& a, const SampledStrategy& b,
                         const ImpactParams& p, Trader who) {
  return total_cost(a.trajectory(Stencil::kSixthOrder), b.trajectory(Stencil::kSixthOrder), p,
                    who);
}

std::vector<double> cumulative_cost_curve(const Trajectory& a, const Trajectory& b,
                                          const ImpactParams& p, Trader who) {
  const auto r = cost_rates(a, b, p, who);
  std::vector<double> total(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) total[i] = r[i].temporary + r[i].permanent;
  return numerics::cumulative_simpson(total, a.grid.step());
}

double cumulative_cost(const AnalyticStrategy& a, const AnalyticStrategy& b,
                       const ImpactParams& p, double t, Trader who, int intervals) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("cumulative_cost: t must lie in [0, 1]");
  if (intervals < 1) throw DomainError("cumulative_cost: need at least one panel");
  if (t == 0.0) return 0.0;
  return gauss_cost(a, b, p, who, t, intervals).total;
}

std::vector<double> el_residual(const Trajectory& a, const Trajectory& b, const ImpactParams& p,
                                Trader which) {
  require_same_grid(a, b);
  const std::size_t n = a.value.size();
  std::vector<double> r(n - 2);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (which == Trader::A) {
      r[i - 1] = a.second_deriv[i] + 0.5 * p.lambda * (b.second_deriv[i] + p.kappa * b.deriv[i]);
    } else {
      r[i - 1] = b.second_deriv[i] + (a.second_deriv[i] + p.kappa * a.deriv[i]) / (2.0 * p.lambda);
    }
  }
  return r;
}

std::vector<double> el_residual(const AnalyticStrategy& a, const AnalyticStrategy& b,
                                const ImpactParams& p, Trader which, const TimeGrid& grid) {
  return el_residual(a.trajectory(grid), b.trajectory(grid), p, which);
}

std::vector<double> el_residual(const SampledStrategy& a, const SampledStrategy& b,
                                const ImpactParams& p, Trader which) {
  return el_residual(a.trajectory(Stencil::kSixthOrder), b.trajectory(Stencil::kSixthOrder), p,
                     which);
}

std::vector<double> permanent_impact_solution(double sigma, double kappa, const TimeGrid& grid) {
  if (!(sigma >= 0.0) || !(kappa >= 0.0)) throw DomainError("sigma and kappa must be >= 0");
  // L = p x'^2 + q x x' + r x^2.
  const double p = 1.0;
  const double q = kappa;
  const double r = sigma * sigma;
  // dL/dx = q x' + 2 r x;  d/dt dL/dx' = 2 p x'' + q x'.
  const double dx_coeff_from_x = q;
  const double dx_coeff_from_t = q;
  LinearBvp bvp;
  bvp.dim = 1;
  bvp.a1 = {(dx_coeff_from_x - dx_coeff_from_t) / (2.0 * p)};
  bvp.a0 = {2.0 * r / (2.0 * p)};
  bvp.left = {0.0};
  bvp.right = {1.0};
  return solve_linear_bvp(bvp, grid).front();
}

bool perm_invariance_check(double sigma, double kappa, double tol) {
  const TimeGrid grid;
  const auto x = permanent_impact_solution(sigma, kappa, grid);
  const AnalyticStrategy ac(family::AlmgrenChriss{sigma});
  double err = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    err = std::max(err, std::abs(x[i] - ac.value(grid[i])));
  }
  return err <= tol;
}

}  // namespace impact
