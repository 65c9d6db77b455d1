#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "impact/cost.hpp"
#include "impact/equilibrium.hpp"
#include "impact/strategy.hpp"
#include "oracles.hpp"

using namespace impact;

namespace {

// Composite midpoint rule on exact jets, independent of the library quadrature.
CostBreakdown midpoint_cost(const AnalyticStrategy& a, const AnalyticStrategy& b, const ImpactParams& p,
                            Trader who, int n = 200000) {
  CostBreakdown c;
  const double h = 1.0 / n;
  for (int i = 0; i < n; ++i) {
    const double t = (i + 0.5) * h;
    const double ad = a.deriv(t), bd = b.deriv(t);
    const double xd = who == Trader::A ? ad : p.lambda * bd;
    c.temporary += (ad + p.lambda * bd) * xd * h;
    c.permanent += p.kappa * (a.value(t) + p.lambda * b.value(t)) * xd * h;
  }
  c.total = c.temporary + c.permanent;
  return c;
}

std::vector<AnalyticStrategy> unit_shapes() {
  return {AnalyticStrategy(family::RiskNeutral{}),      AnalyticStrategy(family::RiskAverse{3.0}),
          AnalyticStrategy(family::Eager{4.0}),         AnalyticStrategy(family::Parabolic{-4.0}),
          AnalyticStrategy(family::Parabolic{2.0}),     AnalyticStrategy(family::TwoTraderEqUnit{25.0, 5.0}),
          AnalyticStrategy(family::MultiTraderLimit{5.0}), AnalyticStrategy(family::Case1bB{25.0, 5.0})};
}

}  // namespace

TEST_CASE("risk-neutral pair costs in closed form") {
  const AnalyticStrategy rn(family::RiskNeutral{});
  const auto c = total_cost(rn, rn, ImpactParams{0.0, 1.0});
  CHECK(c.temporary == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(c.permanent == 0.0);
  CHECK(c.total == doctest::Approx(2.0).epsilon(1e-14));

  for (double kappa : {0.0, 1.0, 25.0}) {
    for (double lambda : {1.0, 5.0, 25.0}) {
      const ImpactParams p{kappa, lambda};
      const auto ca = total_cost(rn, rn, p, Trader::A);
      const auto cb = total_cost(rn, rn, p, Trader::B);
      CHECK(ca.temporary == doctest::Approx(1 + lambda).epsilon(1e-13));
      CHECK(ca.permanent == doctest::Approx(kappa * (1 + lambda) / 2).epsilon(1e-13));
      CHECK(cb.temporary == doctest::Approx(lambda * (1 + lambda)).epsilon(1e-13));
      CHECK(cb.permanent == doctest::Approx(kappa * lambda * (1 + lambda) / 2).epsilon(1e-13));
    }
  }
}

TEST_CASE("risk-neutral temporary cost is 1 + lambda against any unit shape") {
  const AnalyticStrategy rn(family::RiskNeutral{});
  for (double lambda : {1.0, 3.0, 10.0, 25.0}) {
    for (const auto& b : unit_shapes()) {
      INFO(b.name(), " lambda=", lambda);
      const auto c = total_cost(rn, b, ImpactParams{1.0, lambda});
      CHECK(std::abs(c.temporary - (1 + lambda)) < 1e-9);
    }
  }
}

TEST_CASE("analytic cost matches independent midpoint quadrature") {
  const auto shapes = unit_shapes();
  for (double kappa : {0.1, 5.0, 100.0}) {
    for (double lambda : {1.0, 25.0}) {
      const ImpactParams p{kappa, lambda};
      for (std::size_t i = 0; i < shapes.size(); i += 3) {
        for (std::size_t j = 1; j < shapes.size(); j += 3) {
          for (Trader who : {Trader::A, Trader::B}) {
            const auto lib = total_cost(shapes[i], shapes[j], p, who);
            const auto ref = midpoint_cost(shapes[i], shapes[j], p, who);
            INFO(shapes[i].name(), " vs ", shapes[j].name(), " kappa=", kappa, " lambda=", lambda);
            CHECK(std::abs(lib.total - ref.total) <= 1e-7 * (1 + std::abs(ref.total)));
            CHECK(std::abs(lib.temporary - ref.temporary) <= 1e-7 * (1 + std::abs(ref.temporary)));
          }
        }
      }
    }
  }
}

TEST_CASE("trajectory and sampled cost agree with analytic cost") {
  const AnalyticStrategy a(family::Eager{4.0});
  const AnalyticStrategy b(family::RiskAverse{2.0});
  const ImpactParams p{5.0, 3.0};
  const TimeGrid g(2000);
  const auto exact = total_cost(a, b, p, Trader::B, g);
  const auto traj = total_cost(a.trajectory(g), b.trajectory(g), p, Trader::B);
  const auto smp = total_cost(sample(a, g), sample(b, g), p, Trader::B);
  CHECK(traj.total == doctest::Approx(exact.total).epsilon(1e-10));
  CHECK(smp.total == doctest::Approx(exact.total).epsilon(1e-9));
}

TEST_CASE("B's cost at the two-trader equilibrium") {
  const auto eq = two_trader(ImpactParams{25.0, 5.0});
  const auto c = total_cost(eq.a, eq.b, eq.params, Trader::B);
  CHECK(std::abs(c.total - 600.0) / 600.0 < 0.01);
}

TEST_CASE("cumulative cost") {
  const AnalyticStrategy rn(family::RiskNeutral{});
  const ImpactParams p1{0.0, 1.0};
  CHECK(cumulative_cost(rn, rn, p1, 0.0) == 0.0);
  CHECK(cumulative_cost(rn, rn, p1, 1.0) == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(cumulative_cost(rn, rn, p1, 0.5) == doctest::Approx(1.0).epsilon(1e-13));

  const AnalyticStrategy par(family::Parabolic{-4.0});
  const ImpactParams p{1.0, 5.0};
  for (const auto& b : unit_shapes()) {
    CHECK(std::abs(cumulative_cost(par, b, p, 1.0) - total_cost(par, b, p).total) < 1e-10);
  }
  CHECK_THROWS(cumulative_cost(rn, rn, p, 1.5));

  // c=-4 buys monotonically against a buyer: every cost term is positive
  const TimeGrid g(1000);
  const auto rising = cumulative_cost_curve(par.trajectory(g), rn.trajectory(g), p);
  for (std::size_t i = 1; i < rising.size(); ++i) CHECK(rising[i] > rising[i - 1]);
  CHECK(rising.back() == doctest::Approx(total_cost(par, rn, p, Trader::A, g).total).epsilon(1e-9));

  // c=1.2 overshoots (a' = 6 - 10t) and sells back from t=0.6 on
  const AnalyticStrategy eager(family::Parabolic{1.2});
  const auto curve = cumulative_cost_curve(eager.trajectory(g), rn.trajectory(g), ImpactParams{1.0, 1.0});
  const auto peak = static_cast<std::size_t>(std::max_element(curve.begin(), curve.end()) - curve.begin());
  CHECK(g[peak] == doctest::Approx(0.6).epsilon(2e-3));
  CHECK(curve.back() < curve[peak]);
  for (std::size_t i = 1; i <= peak; ++i) CHECK(curve[i] >= curve[i - 1]);
}

TEST_CASE("euler-lagrange residual") {
  const AnalyticStrategy rn(family::RiskNeutral{});
  for (double r : el_residual(rn, rn, ImpactParams{0.0, 3.0}, Trader::A)) CHECK(r == 0.0);
  const auto ra = el_residual(rn, rn, ImpactParams{1.0, 1.0}, Trader::A);
  CHECK(ra.size() == TimeGrid().size() - 2);
  for (double r : ra) CHECK(r == doctest::Approx(0.5).epsilon(1e-14));
  for (double r : el_residual(rn, rn, ImpactParams{2.0, 4.0}, Trader::B)) CHECK(r == doctest::Approx(0.25).epsilon(1e-14));

  const TimeGrid g(2000);
  const auto eq = two_trader(ImpactParams{2.0, 5.0});
  for (Trader w : {Trader::A, Trader::B}) {
    for (double r : el_residual(eq.a, eq.b, eq.params, w, g)) CHECK(std::abs(r) < 1e-6);
    for (double r : el_residual(sample(eq.a, g), sample(eq.b, g), eq.params, w)) CHECK(std::abs(r) < 1e-6);
  }

  CHECK_THROWS_AS(el_residual(sample(rn, TimeGrid(100)), sample(rn, TimeGrid(200)), ImpactParams{}, Trader::A),
                  std::invalid_argument);
}

TEST_CASE("doubling the grid changes total cost by less than 1e-8") {
  const auto shapes = unit_shapes();
  for (double kappa : {0.1, 25.0, 100.0}) {
    for (double lambda : {1.0, 25.0}) {
      const ImpactParams p{kappa, lambda};
      const auto eq = two_trader(p);
      std::vector<std::pair<AnalyticStrategy, AnalyticStrategy>> pairs = {{eq.a, eq.b}};
      for (const auto& a : shapes)
        for (const auto& b : shapes) pairs.emplace_back(a, b);
      for (const auto& [a, b] : pairs) {
        for (Trader who : {Trader::A, Trader::B}) {
          const double c1 = total_cost(a, b, p, who, TimeGrid(2000)).total;
          const double c2 = total_cost(a, b, p, who, TimeGrid(4000)).total;
          INFO(a.name(), " vs ", b.name(), " kappa=", kappa, " lambda=", lambda);
          CHECK(std::abs(c1 - c2) < 1e-8);
        }
      }
    }
  }
}

TEST_CASE("temporary cost against itself is at least 1 + lambda") {
  const AnalyticStrategy rn(family::RiskNeutral{});
  for (double lambda : {1.0, 5.0, 25.0}) {
    const ImpactParams p{0.0, lambda};
    CHECK(total_cost(rn, rn, p).temporary == doctest::Approx(1 + lambda).epsilon(1e-13));
    for (const auto& a : unit_shapes()) {
      if (a.name() == "risk-neutral") continue;
      INFO(a.name());
      CHECK(total_cost(a, a, p).temporary > (1 + lambda) * (1 + 1e-6));
    }
    std::mt19937_64 rng(7);
    const TimeGrid g(2000);
    for (int k = 0; k < 20; ++k) {
      const auto x = oracle::random_series(rng, true).trajectory(g);
      CHECK(total_cost(x, x, p).temporary > 1 + lambda);
    }
  }
}

TEST_CASE("permanent impact does not change the optimal shape") {
  for (double kappa : {0.0, 1.0, 10.0}) CHECK(perm_invariance_check(2.0, kappa));
  const auto x = permanent_impact_solution(0.0, 5.0, TimeGrid(200));
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(x[i] == doctest::Approx(i / 200.0).epsilon(1e-10));
  CHECK(perm_invariance_check(0.0, 5.0));
  CHECK(perm_invariance_check(6.0, 100.0));
}
