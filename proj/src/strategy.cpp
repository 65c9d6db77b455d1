#include "impact/strategy.hpp"

#include <cmath>
#include <stdexcept>
#include <type_traits>

#include "impact/numerics.hpp"

namespace impact {
namespace {

// Below this magnitude a shape parameter is treated as zero and the family
// collapses to its linear limit x(t) = t.
constexpr double kLimitEps = 1e-8;
// Below this sigma the q-form and eager best-response forms lose digits to
// cancellation; the equivalent twice-integrated form is used instead.
constexpr double kCancellationSigma = 1e-2;

Jet linear_jet(double t) { return {t, 1.0, 0.0, 0.5 * t * t}; }

Jet operator*(double s, Jet j) {
  return {s * j.value, s * j.deriv, s * j.second_deriv, s * j.integral};
}
Jet operator+(Jet a, Jet b) {
  return {a.value + b.value, a.deriv + b.deriv, a.second_deriv + b.second_deriv,
          a.integral + b.integral};
}

// e^x - 1 - x without cancellation near zero.
double expm1_minus_x(double x) {
  if (std::abs(x) < 1e-3) {
    return x * x * (0.5 + x * (1.0 / 6.0 + x * (1.0 / 24.0 + x / 120.0)));
  }
  return std::expm1(x) - x;
}

// sinh(x) - x without cancellation near zero.
double sinh_minus_x(double x) {
  if (std::abs(x) < 1e-2) {
    const double x2 = x * x;
    return x * x2 * (1.0 / 6.0 + x2 * (1.0 / 120.0 + x2 * (1.0 / 5040.0 + x2 / 362880.0)));
  }
  return std::sinh(x) - x;
}

// (1 - e^{-ct}) / (1 - e^{-c}), the saturating exponential shape. Positive c
// is eager (concave), negative c is convex; c -> 0 gives t.
Jet saturating_exp(double c, double t) {
  if (std::abs(c) < kLimitEps) return linear_jet(t);
  if (c > 0.0) {
    const double den = -std::expm1(-c);
    const double e = std::exp(-c * t);
    return {-std::expm1(-c * t) / den, c * e / den, -c * c * e / den,
            expm1_minus_x(-c * t) / (c * den)};
  }
  const double k = -c;
  const double den = -std::expm1(-k);
  const double g = std::exp(k * (t - 1.0));
  const double ek = std::exp(-k);
  Jet j{(g - ek) / den, k * g / den, k * k * g / den, 0.0};
  if (k > 1.0) {
    j.integral = (g - ek * (1.0 + k * t)) / (k * den);
  } else {
    j.integral = expm1_minus_x(k * t) / (k * std::expm1(k));
  }
  return j;
}

// sinh(sigma t)/sinh(sigma) and cosh(sigma t)/sinh(sigma), overflow-safe.
struct HyperRatio {
  double sinh_ratio;
  double cosh_ratio;
  double csch;  // 1 / sinh(sigma)
};

HyperRatio hyper_ratio(double sigma, double t) {
  if (sigma < 20.0) {
    const double s = std::sinh(sigma);
    return {std::sinh(sigma * t) / s, std::cosh(sigma * t) / s, 1.0 / s};
  }
  const double den = -std::expm1(-2.0 * sigma);
  const double g = std::exp(sigma * (t - 1.0));
  const double r = std::exp(-2.0 * sigma * t);
  return {g * (1.0 - r) / den, g * (1.0 + r) / den, 2.0 * std::exp(-sigma) / den};
}

Jet risk_averse_jet(double sigma, double t) {
  if (sigma < kLimitEps) return linear_jet(t);
  const auto h = hyper_ratio(sigma, t);
  double integral;
  if (sigma < 20.0) {
    const double sh = std::sinh(0.5 * sigma * t);
    integral = 2.0 * sh * sh / (sigma * std::sinh(sigma));
  } else {
    integral = (h.cosh_ratio - h.csch) / sigma;
  }
  return {h.sinh_ratio, sigma * h.cosh_ratio, sigma * sigma * h.sinh_ratio, integral};
}

// Second antiderivative of sinh(sigma t)/sinh(sigma).
double risk_averse_double_integral(double sigma, double t) {
  if (sigma < 20.0) return sinh_minus_x(sigma * t) / (sigma * sigma * std::sinh(sigma));
  const auto h = hyper_ratio(sigma, t);
  return h.sinh_ratio / (sigma * sigma) - t * h.csch / sigma;
}

// a = -g (b + kappa B) + w t with b(0) = B(0) = 0, where B is the running
// integral of the adversary shape b and BB its second antiderivative. This is
// the twice-integrated best-response equation with unit boundary values.
Jet integrated_best_response(double gain, double kappa, Jet b, double b1, double big_b1,
                             double bb, double t) {
  const double w = 1.0 + gain * (b1 + kappa * big_b1);
  return {-gain * (b.value + kappa * b.integral) + w * t,
          -gain * (b.deriv + kappa * b.value) + w,
          -gain * (b.second_deriv + kappa * b.deriv),
          -gain * (b.integral + kappa * bb) + 0.5 * w * t * t};
}

Jet br_risk_neutral_jet(double kappa, double lambda, double t) {
  const double m = lambda * kappa / 4.0;
  return {(1.0 + m) * t - m * t * t, 1.0 + m - 2.0 * m * t, -2.0 * m,
          0.5 * (1.0 + m) * t * t - m * t * t * t / 3.0};
}

Jet br_risk_averse_jet(const family::BestResponseToRiskAverse& f, double t) {
  const double g = 0.5 * f.lambda;
  const double s = f.sigma;
  if (s < kLimitEps) return br_risk_neutral_jet(f.kappa, f.lambda, t);
  if (s < kCancellationSigma) {
    const Jet b = risk_averse_jet(s, t);
    const Jet b1 = risk_averse_jet(s, 1.0);
    return integrated_best_response(g, f.kappa, b, b1.value, b1.integral,
                                    risk_averse_double_integral(s, t), t);
  }
  // Auxiliary q(t) = sinh(st)/sinh(s) + (kappa/s) cosh(st)/sinh(s).
  const double xi = f.kappa / s;
  auto q = [&](double u) {
    const auto h = hyper_ratio(s, u);
    return h.sinh_ratio + xi * h.cosh_ratio;
  };
  const auto h = hyper_ratio(s, t);
  const double q0 = q(0.0);
  const double qt = h.sinh_ratio + xi * h.cosh_ratio;
  const double q1 = q(1.0);
  const double dq = s * h.cosh_ratio + f.kappa * h.sinh_ratio;
  const double d2q = s * s * h.sinh_ratio + f.kappa * s * h.cosh_ratio;
  const double w = 1.0 + g * (q1 - q0);
  const double ra_integral = risk_averse_jet(s, t).integral;
  // q(0) t - int_0^t q = -(I_R(t) + kappa * II_R(t)).
  const double q_area = -(ra_integral + f.kappa * risk_averse_double_integral(s, t));
  return {g * (q0 - qt) + w * t, -g * dq + w, -g * d2q, g * q_area + 0.5 * w * t * t};
}

Jet br_eager_jet(const family::BestResponseToEager& f, double t) {
  const double s = f.sigma;
  const double k = f.kappa;
  const double l = f.lambda;
  if (s < kLimitEps) return br_risk_neutral_jet(k, l, t);
  if (s < kCancellationSigma) {
    const Jet b = saturating_exp(s, t);
    const Jet b1 = saturating_exp(s, 1.0);
    // Second antiderivative of the eager shape: (t^2/2 - (t + (e^{-st}-1)/s)/s)/(1-e^{-s}).
    const double bb =
        (0.5 * t * t - expm1_minus_x(-s * t) / (s * s)) / (-std::expm1(-s));
    return integrated_best_response(0.5 * l, k, b, b1.value, b1.integral, bb, t);
  }
  // Printed closed form with numerator and denominator divided by e^sigma:
  // a = [l(s-k)e^{-st} - e^{-s}((l+2)s - kl) t + (-ls + kl(1-t) + (l+2)s t)] / (2s(1-e^{-s})).
  const double den = 2.0 * s * (-std::expm1(-s));
  const double e = std::exp(-s * t);
  const double es = std::exp(-s);
  const double lin = (l + 2.0) * s - k * l;
  const double amp = l * (s - k);
  const double num = amp * e - es * lin * t + (-l * s + k * l * (1.0 - t) + (l + 2.0) * s * t);
  const double dnum = -s * amp * e - es * lin + lin;
  const double d2num = s * s * amp * e;
  const double inum =
      amp * (-std::expm1(-s * t)) / s - es * lin * 0.5 * t * t + (k * l - l * s) * t + lin * 0.5 * t * t;
  return {num / den, dnum / den, d2num / den, inum / den};
}

Jet two_trader_jet(double kappa, double lambda, double t, bool scaled_side) {
  const Jet e = saturating_exp(kappa / 3.0, t);
  const Jet f = saturating_exp(-kappa, t);
  if (!scaled_side) return 0.5 * ((lambda + 1.0) * e + (-(lambda - 1.0)) * f);
  return (0.5 / lambda) * ((lambda + 1.0) * e + (lambda - 1.0) * f);
}

double multi_trader_rate(double kappa, double n_traders) {
  return (n_traders - 1.0) * kappa / (n_traders + 1.0);
}

Jet family_jet(const Family& fam, double t) {
  return std::visit(
      [t](const auto& f) -> Jet {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, family::RiskNeutral>) {
          return linear_jet(t);
        } else if constexpr (std::is_same_v<F, family::RiskAverse> ||
                             std::is_same_v<F, family::AlmgrenChriss>) {
          return risk_averse_jet(f.sigma, t);
        } else if constexpr (std::is_same_v<F, family::Eager>) {
          return saturating_exp(f.sigma, t);
        } else if constexpr (std::is_same_v<F, family::Parabolic>) {
          const double d = 1.0 - f.c;
          return {t * (t - f.c) / d, (2.0 * t - f.c) / d, 2.0 / d,
                  (t * t * t / 3.0 - 0.5 * f.c * t * t) / d};
        } else if constexpr (std::is_same_v<F, family::BestResponseToRiskAverse>) {
          return br_risk_averse_jet(f, t);
        } else if constexpr (std::is_same_v<F, family::BestResponseToRiskNeutral>) {
          return br_risk_neutral_jet(f.kappa, f.lambda, t);
        } else if constexpr (std::is_same_v<F, family::BestResponseToEager>) {
          return br_eager_jet(f, t);
        } else if constexpr (std::is_same_v<F, family::TwoTraderEqUnit>) {
          return two_trader_jet(f.kappa, f.lambda, t, false);
        } else if constexpr (std::is_same_v<F, family::TwoTraderEqScaled>) {
          return two_trader_jet(f.kappa, f.lambda, t, true);
        } else if constexpr (std::is_same_v<F, family::MultiTraderSym>) {
          return saturating_exp(multi_trader_rate(f.kappa, f.n_traders), t);
        } else if constexpr (std::is_same_v<F, family::MultiTraderLimit>) {
          return saturating_exp(f.kappa, t);
        } else {
          static_assert(std::is_same_v<F, family::Case1bB>);
          const double inv_l2 = 1.0 / (f.lambda * f.lambda);
          const double c = f.kappa * f.lambda / (f.lambda + 2.0);
          return (1.0 - inv_l2) * linear_jet(t) + inv_l2 * saturating_exp(c, t);
        }
      },
      fam);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

void check_sigma(double sigma, const char* fam) {
  require(std::isfinite(sigma) && sigma >= 0.0, std::string(fam) + ": sigma must be >= 0");
}
void check_kappa(double kappa, const char* fam) {
  require(std::isfinite(kappa) && kappa >= 0.0, std::string(fam) + ": kappa must be >= 0");
}

void validate(const Family& fam) {
  std::visit(
      [](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, family::RiskAverse> || std::is_same_v<F, family::Eager> ||
                      std::is_same_v<F, family::AlmgrenChriss>) {
          check_sigma(f.sigma, "strategy");
        } else if constexpr (std::is_same_v<F, family::Parabolic>) {
          require(std::isfinite(f.c) && std::abs(1.0 - f.c) > 1e-12,
                  "parabolic: c must be finite and != 1");
        } else if constexpr (std::is_same_v<F, family::BestResponseToRiskAverse> ||
                             std::is_same_v<F, family::BestResponseToEager>) {
          check_kappa(f.kappa, "best response");
          require(std::isfinite(f.lambda) && f.lambda >= 0.0, "best response: lambda must be >= 0");
          require(std::isfinite(f.sigma) && f.sigma > 0.0,
                  "best response: sigma must be > 0 (use the risk-neutral response for sigma = 0)");
        } else if constexpr (std::is_same_v<F, family::BestResponseToRiskNeutral>) {
          check_kappa(f.kappa, "best response");
          require(std::isfinite(f.lambda) && f.lambda >= 0.0, "best response: lambda must be >= 0");
        } else if constexpr (std::is_same_v<F, family::TwoTraderEqUnit> ||
                             std::is_same_v<F, family::TwoTraderEqScaled> ||
                             std::is_same_v<F, family::Case1bB>) {
          check_kappa(f.kappa, "equilibrium");
          require(std::isfinite(f.lambda) && f.lambda > 0.0, "equilibrium: lambda must be > 0");
        } else if constexpr (std::is_same_v<F, family::MultiTraderSym>) {
          check_kappa(f.kappa, "multi-trader");
          require(std::isfinite(f.n_traders) && f.n_traders >= 1.0,
                  "multi-trader: need at least 1 trader");
        } else if constexpr (std::is_same_v<F, family::MultiTraderLimit>) {
          check_kappa(f.kappa, "multi-trader limit");
        }
      },
      fam);
}

}  // namespace

std::string family_name(const Family& f) {
  static constexpr const char* kNames[] = {
      "risk-neutral", "risk-averse",  "eager",        "parabolic",  "almgren-chriss",
      "br-risk-averse", "br-risk-neutral", "br-eager", "two-trader-a", "two-trader-b",
      "multi",        "multi-limit",  "case1b-b"};
  static_assert(std::size(kNames) == std::variant_size_v<Family>);
  return kNames[f.index()];
}

Trajectory::Trajectory(TimeGrid g)
    : grid(std::move(g)),
      value(grid.size()),
      deriv(grid.size()),
      second_deriv(grid.size()) {}

Trajectory& Trajectory::operator+=(const Trajectory& other) {
  if (!(grid == other.grid)) throw std::invalid_argument("trajectory grid mismatch");
  for (std::size_t i = 0; i < value.size(); ++i) {
    value[i] += other.value[i];
    deriv[i] += other.deriv[i];
    second_deriv[i] += other.second_deriv[i];
  }
  return *this;
}

Trajectory& Trajectory::operator*=(double s) {
  for (std::size_t i = 0; i < value.size(); ++i) {
    value[i] *= s;
    deriv[i] *= s;
    second_deriv[i] *= s;
  }
  return *this;
}

Trajectory operator+(Trajectory lhs, const Trajectory& rhs) { return lhs += rhs; }
Trajectory operator*(double s, Trajectory t) { return t *= s; }

AnalyticStrategy::AnalyticStrategy(Family family) : family_(std::move(family)) {
  validate(family_);
}

Jet AnalyticStrategy::jet(double t) const {
  const Jet j = family_jet(family_, t);
  return scale_ == 1.0 ? j : scale_ * j;
}

Trajectory AnalyticStrategy::trajectory(const TimeGrid& grid) const {
  Trajectory out(grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Jet j = jet(grid[i]);
    out.value[i] = j.value;
    out.deriv[i] = j.deriv;
    out.second_deriv[i] = j.second_deriv;
  }
  return out;
}

AnalyticStrategy AnalyticStrategy::scaled(double lambda) const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("scale must be > 0");
  AnalyticStrategy out = *this;
  out.scale_ *= lambda;
  return out;
}

SampledStrategy::SampledStrategy(TimeGrid grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw std::invalid_argument("sampled strategy: value count does not match grid");
  }
  first_ = numerics::gradient(values_, grid_.step());
  second_ = numerics::gradient(first_, grid_.step());
}

std::vector<double> SampledStrategy::integral() const {
  return numerics::cumulative_simpson(values_, grid_.step());
}

Trajectory SampledStrategy::trajectory(Stencil stencil) const {
  Trajectory out(grid_);
  out.value = values_;
  if (stencil == Stencil::kSecondOrder) {
    out.deriv = first_;
    out.second_deriv = second_;
  } else {
    out.deriv = numerics::high_order_derivative(values_, grid_.step(), 1);
    out.second_deriv = numerics::high_order_derivative(values_, grid_.step(), 2);
  }
  return out;
}

bool SampledStrategy::has_unit_boundary(double tol) const {
  return std::abs(values_.front()) <= tol && std::abs(values_.back() - 1.0) <= tol;
}

SampledStrategy SampledStrategy::scaled(double lambda) const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("scale must be > 0");
  std::vector<double> v = values_;
  for (double& x : v) x *= lambda;
  return SampledStrategy(grid_, std::move(v));
}

AnalyticStrategy make_analytic(const Family& family) { return AnalyticStrategy(family); }

SampledStrategy sample(const AnalyticStrategy& s, const TimeGrid& grid) {
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) v[i] = s.value(grid[i]);
  return SampledStrategy(grid, std::move(v));
}

AnalyticStrategy scale_trajectory(const AnalyticStrategy& s, double lambda) {
  return s.scaled(lambda);
}

SampledStrategy scale_trajectory(const SampledStrategy& s, double lambda) {
  return s.scaled(lambda);
}

}  // namespace impact
