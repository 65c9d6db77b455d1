#include "impact/analysis.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "impact/best_response.hpp"
#include "impact/equilibrium.hpp"

extern "C" {
void dstev_(const char* jobz, const int* n, double* d, double* e, double* z, const int* ldz,
            double* work, int* info);
}

namespace impact {
namespace {

CostBreakdown priced_cost(double kappa, double lambda, double price_kappa, Pricing pricing,
                          Trader who, const TimeGrid& grid) {
  const auto eq = two_trader({kappa, lambda, 0.0, 0.0, 0.0});
  ImpactParams price{price_kappa, pricing == Pricing::kShape ? 1.0 : lambda, 0.0, 0.0, 0.0};
  return total_cost(eq.a, eq.b, price, who, grid);
}

double central_difference(double x, double step, const auto& f) {
  return (f(x + step) - f(x - step)) / (2.0 * step);
}

}  // namespace

UncertaintyStrategies uncertainty_strategies(const ImpactParams& p) {
  p.validate();
  const auto eq = two_trader(p);
  return {eq.a, eq.b, AnalyticStrategy(family::MultiTraderSym{p.kappa, p.lambda + 1.0}),
          AnalyticStrategy(family::Case1bB{p.kappa, p.lambda})};
}

SelectionReport selection_matrix(const ImpactParams& p, const TimeGrid& grid) {
  const auto s = uncertainty_strategies(p);
  const AnalyticStrategy* rows[] = {&s.a1a, &s.a1b};
  const AnalyticStrategy* cols[] = {&s.b1a, &s.b1b};
  SelectionReport r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) r.matrix[i][j] = total_cost(*rows[i], *cols[j], p, Trader::B, grid).total;
  }
  for (int j = 0; j < 2; ++j) {
    const double x0 = r.matrix[0][j];
    const double x1 = r.matrix[1][j];
    r.col_mean[j] = 0.5 * (x0 + x1);
    r.col_std[j] = std::abs(x0 - x1) / std::numbers::sqrt2;
  }
  return r;
}

double equilibrium_cost(double kappa, double lambda, const TimeGrid& grid) {
  const ImpactParams p{kappa, lambda, 0.0, 0.0, 0.0};
  const auto eq = two_trader(p);
  return total_cost(eq.a, eq.b, p, Trader::A, grid).total;
}

void gauss_hermite(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw DomainError("gauss_hermite: need at least one node");
  std::vector<double> d(n, 0.0);
  std::vector<double> e(n > 1 ? n - 1 : 1, 0.0);
  for (int k = 1; k < n; ++k) e[k - 1] = std::sqrt(0.5 * k);
  std::vector<double> z(static_cast<std::size_t>(n) * n);
  std::vector<double> work(n > 1 ? 2 * n - 2 : 1);
  int info = 0;
  dstev_("V", &n, d.data(), e.data(), z.data(), &n, work.data(), &info);
  if (info != 0) throw std::runtime_error("dstev failed, info = " + std::to_string(info));
  nodes = d;
  weights.resize(n);
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  for (int k = 0; k < n; ++k) {
    const double v0 = z[static_cast<std::size_t>(k) * n];
    weights[k] = sqrt_pi * v0 * v0;
  }
}

Moments expected_cost_lognormal(double mu, double sigma_ln, double kappa, int n_quad,
                                const TimeGrid& grid) {
  if (!(sigma_ln >= 0.0) || !std::isfinite(mu)) throw DomainError("need finite mu, sigma_ln >= 0");
  if (n_quad < 8) throw DomainError("n_quad must be >= 8");
  if (sigma_ln == 0.0) return {equilibrium_cost(kappa, std::exp(mu), grid), 0.0};
  std::vector<double> u;
  std::vector<double> w;
  gauss_hermite(n_quad, u, w);
  double m1 = 0.0;
  double m2 = 0.0;
  for (int i = 0; i < n_quad; ++i) {
    const double lambda = std::exp(mu + std::numbers::sqrt2 * sigma_ln * u[i]);
    const double c = equilibrium_cost(kappa, lambda, grid);
    m1 += w[i] * c;
    m2 += w[i] * c * c;
  }
  const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
  m1 *= inv_sqrt_pi;
  m2 *= inv_sqrt_pi;
  return {m1, m2 - m1 * m1};
}

MonteCarloEstimate monte_carlo_cost_lognormal(double mu, double sigma_ln, double kappa,
                                              int draws, std::uint64_t seed,
                                              const TimeGrid& grid) {
  if (draws < 2) throw DomainError("need at least 2 draws");
  std::mt19937_64 rng(seed);
  std::lognormal_distribution<double> dist(mu, sigma_ln);
  std::vector<double> c(draws);
  double mean = 0.0;
  for (int i = 0; i < draws; ++i) {
    c[i] = equilibrium_cost(kappa, dist(rng), grid);
    mean += c[i];
  }
  mean /= draws;
  double m2 = 0.0;
  double m4 = 0.0;
  for (double x : c) {
    const double d2 = (x - mean) * (x - mean);
    m2 += d2;
    m4 += d2 * d2;
  }
  m4 /= draws;
  const double var = m2 / (draws - 1);
  MonteCarloEstimate out;
  out.moments = {mean, var};
  out.mean_stderr = std::sqrt(var / draws);
  out.variance_stderr = std::sqrt(std::max(0.0, m4 - var * var) / draws);
  return out;
}

SensitivityReport misestimation_row(double lambda, double kappa, const MisestimationOptions& opt,
                                    const TimeGrid& grid) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) throw DomainError("kappa must be > 0");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("lambda must be > 0");
  if (!(opt.shrink > 0.0)) throw DomainError("shrink must be > 0");
  SensitivityReport r;
  r.lambda = lambda;
  r.kappa = kappa;
  r.shifted_kappa = opt.shrink * kappa;
  r.base = priced_cost(kappa, lambda, kappa, opt.pricing, Trader::A, grid);
  r.shifted = priced_cost(r.shifted_kappa, lambda, opt.fixed_truth ? kappa : r.shifted_kappa,
                          opt.pricing, Trader::A, grid);
  r.rel_total_diff = r.shifted.total / r.base.total - 1.0;

  for (Trader who : {Trader::A, Trader::B}) {
    const double dk = central_difference(kappa, 1e-4 * kappa, [&](double k) {
      return priced_cost(k, lambda, k, opt.pricing, who, grid).total;
    });
    const double dl = central_difference(lambda, 1e-4 * lambda, [&](double l) {
      return priced_cost(kappa, l, kappa, opt.pricing, who, grid).total;
    });
    (who == Trader::A ? r.dcost_dkappa_a : r.dcost_dkappa_b) = dk;
    (who == Trader::A ? r.dcost_dlambda_a : r.dcost_dlambda_b) = dl;
  }
  return r;
}

std::vector<SensitivityReport> misestimation_table(double lambda, const MisestimationOptions& opt,
                                                   const TimeGrid& grid) {
  std::vector<SensitivityReport> rows;
  for (double kappa : {0.1, 0.5, 1.0, 5.0, 25.0, 100.0}) {
    rows.push_back(misestimation_row(lambda, kappa, opt, grid));
  }
  return rows;
}

std::vector<TempPermRow> temp_perm_table(double sigma, const TimeGrid& grid) {
  std::vector<TempPermRow> rows;
  const AnalyticStrategy adversary(family::Eager{sigma});
  const AnalyticStrategy neutral(family::RiskNeutral{});
  for (double lambda : {1.0, 3.0, 10.0, 25.0}) {
    for (double kappa : {0.1, 0.25, 2.5, 10.0, 25.0}) {
      const ImpactParams p{kappa, lambda, sigma, 0.0, 0.0};
      TempPermRow row;
      row.lambda = lambda;
      row.kappa = kappa;
      row.best_response = total_cost(br_to_eager(p), adversary, p, Trader::A, grid);
      row.risk_neutral = total_cost(neutral, adversary, p, Trader::A, grid);
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace impact
