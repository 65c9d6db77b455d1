#include "oracles.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>
#include <cmath>
#include <numbers>

#include "impact/analysis.hpp"

namespace oracle {

std::vector<double> thomas(std::vector<double> sub, std::vector<double> diag,
                           std::vector<double> sup, std::vector<double> rhs) {
  const std::size_t n = diag.size();
  for (std::size_t i = 1; i < n; ++i) {
    const double m = sub[i] / diag[i - 1];
    diag[i] -= m * sup[i - 1];
    rhs[i] -= m * rhs[i - 1];
  }
  std::vector<double> x(n);
  x[n - 1] = rhs[n - 1] / diag[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) x[i] = (rhs[i] - sup[i] * x[i + 1]) / diag[i];
  return x;
}

std::vector<double> brute_force_best_response(const AnalyticStrategy& adversary,
                                              const ImpactParams& p, int n) {
  const double h = 1.0 / n;
  const std::size_t m = n - 1;
  std::vector<double> sub(m, 2.0 / (h * h)), diag(m, -4.0 / (h * h)), sup(m, 2.0 / (h * h)),
      rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double t = (i + 1) * h;
    rhs[i] = -p.lambda * (adversary.second_deriv(t) + p.kappa * adversary.deriv(t));
  }
  rhs[m - 1] -= 2.0 / (h * h) * 1.0;
  const auto inner = thomas(sub, diag, sup, rhs);
  std::vector<double> a(n + 1, 0.0);
  for (std::size_t i = 0; i < m; ++i) a[i + 1] = inner[i];
  a[n] = 1.0;
  return a;
}

double unsimplified_two_trader_a(double k, double l, double t) {
  using std::exp;
  return -((1 - exp(-k * t / 3)) *
           (-exp(k / 3) * (exp(k / 3) + exp(2 * k / 3) + 1) * (l + 1) + (l - 1) * exp(k * t / 3) +
            (l - 1) * exp(2 * k * t / 3) + (l - 1) * exp(k * t))) /
         (2 * (exp(k) - 1));
}

double unsimplified_two_trader_b(double k, double l, double t) {
  using std::exp;
  return ((1 - exp(-k * t / 3)) *
          (exp(k / 3) * (exp(k / 3) + exp(2 * k / 3) + 1) * (l + 1) + (l - 1) * exp(k * t / 3) +
           (l - 1) * exp(2 * k * t / 3) + (l - 1) * exp(k * t))) /
         (2 * (exp(k) - 1) * l);
}

double unsimplified_two_trader_equal_size(double k, double t) {
  using std::exp;
  return (1 - exp(-k * t / 3)) * (exp(k / 3) + exp(2 * k / 3) + exp(k)) / (exp(k) - 1);
}

double unsimplified_b1b(double k, double l, double t) {
  using std::exp;
  const double c = k * l / (l + 2);
  return (exp(c) * ((l * l - 1) * t + 1) - exp(-c * (t - 1)) + l * l * (-t) + t) /
         (l * l * (exp(c) - 1));
}

double unsimplified_br_eager(double k, double l, double s, double t) {
  using std::exp;
  return exp(s * (-t)) *
         (l * exp(s) * (s - k) - t * exp(s * t) * ((l + 2) * s - k * l) +
          exp(s + s * t) * (-l * s + k * (l - l * t) + (l + 2) * s * t)) /
         (2 * (exp(s) - 1) * s);
}

double unsimplified_br_risk_averse(double k, double l, double s, double t) {
  auto q = [&](double u) { return std::sinh(s * u) / std::sinh(s) + k / s * std::cosh(s * u) / std::sinh(s); };
  return l / 2 * (q(0) - q(t)) + (1 + l / 2 * (q(1) - q(0))) * t;
}

double unsimplified_multi_limit(double k, double t) {
  return (std::exp(k) - std::exp(k * (1 - t))) / (std::exp(k) - 1);
}

std::pair<std::vector<double>, std::vector<double>> risk_bvp_modal(const ImpactParams& p,
                                                                   const TimeGrid& grid) {
  const double k = p.kappa, l = p.lambda, s2 = p.sigma * p.sigma;
  // Coefficients of the two equations as written, then solved for (a'', b'').
  Eigen::Matrix2d lhs;
  lhs << 1.0, l / 2, 1.0 / (2 * l), 1.0;
  Eigen::Matrix2d first, zeroth;  // rhs = first * (a', b') + zeroth * (a, b)
  first << 0.0, -l * k / 2, -k / (2 * l), 0.0;
  zeroth << p.xi_a * s2, 0.0, 0.0, p.xi_b / (l * l) * s2;
  const Eigen::Matrix2d a1 = lhs.inverse() * first;
  const Eigen::Matrix2d a0 = lhs.inverse() * zeroth;
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m.block<2, 2>(0, 2) = Eigen::Matrix2d::Identity();
  m.block<2, 2>(2, 0) = a0;
  m.block<2, 2>(2, 2) = a1;
  const Eigen::Matrix4d phi = m.exp();
  // (a, b)(1) = phi_12 * (a', b')(0) with zero initial values.
  const Eigen::Vector2d slope = phi.block<2, 2>(0, 2).lu().solve(Eigen::Vector2d(1.0, 1.0));
  Eigen::Vector4d z0;
  z0 << 0.0, 0.0, slope;
  std::vector<double> a(grid.size()), b(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Eigen::Vector4d z = (m * grid[i]).exp() * z0;
    a[i] = z(0);
    b[i] = z(1);
  }
  return {a, b};
}

namespace {

std::vector<double> inverse_fd2(const std::function<double(double)>& x_second, double gain,
                                double kappa, int n) {
  const double h = 1.0 / n;
  const std::size_t m = n - 1;
  std::vector<double> sub(m), diag(m), sup(m), rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    sub[i] = 1.0 / (h * h) - kappa / (2 * h);
    diag[i] = -2.0 / (h * h);
    sup[i] = 1.0 / (h * h) + kappa / (2 * h);
    rhs[i] = -gain * x_second((i + 1) * h);
  }
  rhs[m - 1] -= sup[m - 1] * 1.0;
  const auto inner = thomas(sub, diag, sup, rhs);
  std::vector<double> y(n + 1, 0.0);
  for (std::size_t i = 0; i < m; ++i) y[i + 1] = inner[i];
  y[n] = 1.0;
  return y;
}

}  // namespace

std::vector<double> inverse_fd(const std::function<double(double)>& x_second, double gain,
                               double kappa, int n) {
  const auto u1 = inverse_fd2(x_second, gain, kappa, n);
  const auto u2 = inverse_fd2(x_second, gain, kappa, 2 * n);
  const auto u4 = inverse_fd2(x_second, gain, kappa, 4 * n);
  std::vector<double> out(n + 1);
  for (int i = 0; i <= n; ++i) {
    const double r1 = (4 * u2[2 * i] - u1[i]) / 3;
    const double r2 = (4 * u4[4 * i] - u2[2 * i]) / 3;
    out[i] = (16 * r2 - r1) / 15;
  }
  return out;
}

double SineSeries::value(double t) const {
  double v = unit ? t : 0.0;
  for (std::size_t k = 0; k < coef.size(); ++k) v += coef[k] * std::sin((k + 1) * std::numbers::pi * t);
  return v;
}

double SineSeries::deriv(double t) const {
  double v = unit ? 1.0 : 0.0;
  for (std::size_t k = 0; k < coef.size(); ++k) {
    const double w = (k + 1) * std::numbers::pi;
    v += coef[k] * w * std::cos(w * t);
  }
  return v;
}

double SineSeries::second_deriv(double t) const {
  double v = 0.0;
  for (std::size_t k = 0; k < coef.size(); ++k) {
    const double w = (k + 1) * std::numbers::pi;
    v -= coef[k] * w * w * std::sin(w * t);
  }
  return v;
}

Trajectory SineSeries::trajectory(const TimeGrid& grid) const {
  Trajectory tr(grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    tr.value[i] = value(grid[i]);
    tr.deriv[i] = deriv(grid[i]);
    tr.second_deriv[i] = second_deriv(grid[i]);
  }
  tr.value.front() = 0.0;
  if (unit) tr.value.back() = 1.0;
  return tr;
}

SineSeries random_series(std::mt19937_64& rng, bool unit, double amplitude, int terms) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SineSeries s;
  s.unit = unit;
  for (int k = 1; k <= terms; ++k) s.coef.push_back(amplitude * u(rng) / (k * k));
  return s;
}

std::pair<double, double> exact_lognormal_moments(double mu, double sigma_ln, double kappa) {
  const double c1 = impact::equilibrium_cost(kappa, 1.0);
  const double c2 = impact::equilibrium_cost(kappa, 2.0);
  const double c3 = impact::equilibrium_cost(kappa, 3.0);
  // C(l) = q0 + q1 l + q2 l^2 through the three points.
  const double q2 = (c3 - 2 * c2 + c1) / 2;
  const double q1 = c2 - c1 - 3 * q2;
  const double q0 = c1 - q1 - q2;
  auto moment = [&](int k) { return std::exp(k * mu + 0.5 * k * k * sigma_ln * sigma_ln); };
  const double mean = q0 + q1 * moment(1) + q2 * moment(2);
  const double second = q0 * q0 + 2 * q0 * q1 * moment(1) + (q1 * q1 + 2 * q0 * q2) * moment(2) +
                        2 * q1 * q2 * moment(3) + q2 * q2 * moment(4);
  return {mean, second - mean * mean};
}

McResult lognormal_monte_carlo(double mu, double sigma_ln, double kappa, int draws,
                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> z(0.0, 1.0);
  double sum = 0.0, sum2 = 0.0, sum4 = 0.0;
  std::vector<double> c(draws);
  const TimeGrid coarse(20);  // 5-point Gauss per panel: exact to ~1e-12 for these smooth costs
  for (int i = 0; i < draws; ++i) {
    c[i] = impact::equilibrium_cost(kappa, std::exp(mu + sigma_ln * z(rng)), coarse);
    sum += c[i];
  }
  const double mean = sum / draws;
  for (double x : c) {
    const double d = x - mean;
    sum2 += d * d;
    sum4 += d * d * d * d;
  }
  const double var = sum2 / (draws - 1);
  const double m4 = sum4 / draws;
  return {mean, var, std::sqrt(var / draws), std::sqrt(std::max(0.0, m4 - var * var) / draws)};
}

}  // namespace oracle
