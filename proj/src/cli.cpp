#include "impact/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <variant>

#include "impact/analysis.hpp"
#include "impact/best_response.hpp"
#include "impact/cost.hpp"
#include "impact/equilibrium.hpp"
#include "impact/inverse.hpp"
#include "impact/numerics.hpp"

namespace impact::cli {
namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string output;
  std::string sidecar;
  std::string format = "csv";
  int grid = 0;
  double tolerance = 1e-6;

  std::optional<double> kappa;
  std::optional<double> lambda;
  std::optional<double> sigma;
  double xi_a = 0.0;
  double xi_b = 0.0;
  double c = 0.0;
  double n_traders = 2.0;

  std::string family = "risk-neutral";
  std::string adversary = "risk-averse";
  std::string given_a = "two-trader-a";
  std::string given_b = "two-trader-b";
  std::string responder = "A";
  std::string method = "closed";

  std::string table;
  double shrink = 0.75;
  bool fixed_truth = false;
  bool scaled_pricing = false;

  double mu = std::log(5.0);
  double sigma_ln = 0.25;
  int n_quad = 32;
  int mc_draws = 0;
  std::uint64_t seed = 42;
};

struct Defaults {
  double kappa = 0.0;
  double lambda = 1.0;
  double sigma = 0.0;
};

ImpactParams resolve(const Options& o, Defaults d) {
  ImpactParams p{o.kappa.value_or(d.kappa), o.lambda.value_or(d.lambda), o.sigma.value_or(d.sigma),
                 o.xi_a, o.xi_b};
  p.validate();
  return p;
}

json params_json(const ImpactParams& p) {
  return {{"kappa", p.kappa}, {"lambda", p.lambda}, {"sigma", p.sigma}, {"xi_a", p.xi_a},
          {"xi_b", p.xi_b}};
}

json cost_json(const CostBreakdown& c) {
  return {{"temporary", c.temporary}, {"permanent", c.permanent}, {"total", c.total}};
}

using Cell = std::variant<double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Report {
  Table table;
  json meta;
  bool tolerance_failed = false;
};

// One side of a strategy pair: either closed form or grid samples.
struct Leg {
  std::optional<AnalyticStrategy> analytic;
  std::optional<SampledStrategy> sampled;

  Trajectory trajectory(const TimeGrid& g) const {
    return analytic ? analytic->trajectory(g) : sampled->trajectory(Stencil::kSixthOrder);
  }
  double at(const TimeGrid& g, std::size_t i) const {
    return analytic ? analytic->value(g[i]) : (*sampled)[i];
  }
  std::string label() const { return analytic ? analytic->name() : "sampled"; }
};

Leg leg(AnalyticStrategy s) { return {std::move(s), std::nullopt}; }
Leg leg(SampledStrategy s) { return {std::nullopt, std::move(s)}; }

CostBreakdown pair_cost(const Leg& a, const Leg& b, const ImpactParams& p, Trader who,
                        const TimeGrid& g) {
  if (a.analytic && b.analytic) return total_cost(*a.analytic, *b.analytic, p, who, g);
  return total_cost(a.trajectory(g), b.trajectory(g), p, who);
}

json residual_json(const std::vector<double>& r, double scale) {
  const double m = numerics::max_abs(r);
  return {{"max_abs", m}, {"scaled", m / scale}};
}

// Columns t, a, b, lambda_b, cumulative costs, plus total costs and residuals for both traders.
Report pair_report(const Leg& a, const Leg& b, const ImpactParams& p,
                   const TimeGrid& g, const std::map<std::string, std::vector<double>>& residuals,
                   double tolerance) {
  Report rep;
  const Trajectory ta = a.trajectory(g);
  const Trajectory tb = b.trajectory(g);
  const auto cum_a = cumulative_cost_curve(ta, tb, p, Trader::A);
  const auto cum_b = cumulative_cost_curve(ta, tb, p, Trader::B);
  rep.table.columns = {"t", "a", "b", "lambda_b", "cumulative_cost_a", "cumulative_cost_b"};
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double bv = b.at(g, i);
    rep.table.rows.push_back({g[i], a.at(g, i), bv, p.lambda * bv, cum_a[i], cum_b[i]});
  }
  const double scale =
      std::max({1.0, numerics::max_abs(ta.second_deriv), numerics::max_abs(tb.second_deriv)});
  json res = json::object();
  double worst = 0.0;
  for (const auto& [name, r] : residuals) {
    res[name] = residual_json(r, scale);
    worst = std::max(worst, numerics::max_abs(r) / scale);
  }
  rep.meta["strategies"] = {{"a", a.label()}, {"b", b.label()}};
  rep.meta["costs"] = {{"A", cost_json(pair_cost(a, b, p, Trader::A, g))},
                       {"B", cost_json(pair_cost(a, b, p, Trader::B, g))}};
  rep.meta["residuals"] = res;
  rep.meta["residual_scale"] = scale;
  rep.meta["max_scaled_residual"] = worst;
  rep.meta["tolerance"] = tolerance;
  rep.tolerance_failed = worst > tolerance;
  return rep;
}

void write_csv(const Table& t, std::ostream& os) {
  for (std::size_t j = 0; j < t.columns.size(); ++j) os << (j ? "," : "") << t.columns[j];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) os << ',';
      if (const double* v = std::get_if<double>(&row[j])) {
        os << format_number(*v);
      } else {
        os << std::get<std::string>(row[j]);
      }
    }
    os << '\n';
  }
}

json table_json(const Table& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json r = json::array();
    for (const auto& cell : row) {
      if (const double* v = std::get_if<double>(&cell)) {
        r.push_back(*v);
      } else {
        r.push_back(std::get<std::string>(cell));
      }
    }
    rows.push_back(std::move(r));
  }
  return {{"columns", t.columns}, {"rows", std::move(rows)}};
}

Report strategy_report(const Options& o, const TimeGrid& g) {
  const ImpactParams p = resolve(o, {});
  const AnalyticStrategy s = family_from_name(o.family, p, o.c, o.n_traders);
  Report rep;
  rep.table.columns = {"t", "value", "deriv", "second_deriv", "integral"};
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Jet j = s.jet(g[i]);
    rep.table.rows.push_back({g[i], j.value, j.deriv, j.second_deriv, j.integral});
  }
  rep.meta["family"] = s.name();
  if (s.name() == "parabolic") rep.meta["c"] = o.c;
  if (s.name() == "multi") rep.meta["n_traders"] = o.n_traders;
  return rep;
}

Report best_response_report(const Options& o, const TimeGrid& g) {
  const ImpactParams p = resolve(o, {});
  const AnalyticStrategy adversary = family_from_name(o.adversary, p, o.c, o.n_traders);
  Report rep;
  if (o.responder == "B") {
    // B responds to the unit strategy given as --adversary.
    const Leg a = leg(adversary);
    const Leg b = leg(best_response_generic(adversary, p, Trader::B, g));
    rep = pair_report(a, b, p, g,
                      {{"B", el_residual(a.trajectory(g), b.trajectory(g), p, Trader::B)}},
                      o.tolerance);
  } else {
    std::optional<AnalyticStrategy> closed;
    if (o.method == "closed") {
      if (o.adversary == "risk-averse" && p.sigma > 0.0) closed = br_to_risk_averse(p);
      if (o.adversary == "risk-neutral") closed = br_to_risk_neutral(p);
      if (o.adversary == "eager" && p.sigma > 0.0) closed = br_to_eager(p);
    }
    const Leg a = closed ? leg(*closed) : leg(best_response_generic(adversary, p, Trader::A, g));
    const Leg b = leg(adversary);
    rep = pair_report(a, b, p, g,
                      {{"A", el_residual(a.trajectory(g), b.trajectory(g), p, Trader::A)}},
                      o.tolerance);
  }
  rep.meta["responder"] = o.responder;
  rep.meta["adversary"] = o.adversary;
  rep.meta["method"] = o.method;
  return rep;
}

Report equilibrium_report(const Options& o, const TimeGrid& g) {
  const ImpactParams p = resolve(o, {});
  const auto eq = two_trader(p);
  return pair_report(leg(eq.a), leg(eq.b), p, g,
                     {{"A", el_residual(eq.a, eq.b, p, Trader::A, g)},
                      {"B", el_residual(eq.a, eq.b, p, Trader::B, g)}},
                     o.tolerance);
}

Report inverse_b_report(const Options& o, const TimeGrid& g) {
  const ImpactParams p = resolve(o, {});
  const AnalyticStrategy a = family_from_name(o.given_a, p, o.c, o.n_traders);
  const Leg la = leg(a);
  const Leg lb = leg(inverse_for_b(a, p, g));
  Report rep = pair_report(la, lb, p, g,
                           {{"A", el_residual(la.trajectory(g), lb.trajectory(g), p, Trader::A)}},
                           o.tolerance);
  rep.meta["given"] = o.given_a;
  return rep;
}

Report inverse_a_report(const Options& o, const TimeGrid& g) {
  const ImpactParams p = resolve(o, {});
  const AnalyticStrategy b = family_from_name(o.given_b, p, o.c, o.n_traders);
  const Leg la = leg(inverse_for_a(b, p, g));
  const Leg lb = leg(b);
  Report rep = pair_report(la, lb, p, g,
                           {{"A", el_residual(la.trajectory(g), lb.trajectory(g), p, Trader::A)}},
                           o.tolerance);
  rep.meta["given"] = o.given_b;
  return rep;
}

Report risk_equilibrium_report(const Options& o, const TimeGrid& g) {
  const ImpactParams p = resolve(o, {});
  const auto eq = risk_equilibrium(p, g);
  return pair_report(leg(eq.a), leg(eq.b), p, g,
                     {{"A", risk_residual(eq.a, eq.b, p, Trader::A)},
                      {"B", risk_residual(eq.a, eq.b, p, Trader::B)}},
                     o.tolerance);
}

Report cost_matrix_report(const ImpactParams& p, const TimeGrid& g) {
  const SelectionReport s = selection_matrix(p, g);
  Report rep;
  rep.table.columns = {"row", "b1a", "b1b"};
  rep.table.rows = {{std::string("a1a"), s.matrix[0][0], s.matrix[0][1]},
                    {std::string("a1b"), s.matrix[1][0], s.matrix[1][1]},
                    {std::string("mean"), s.col_mean[0], s.col_mean[1]},
                    {std::string("std"), s.col_std[0], s.col_std[1]}};
  return rep;
}

Report misestimation_report(const Options& o, const ImpactParams& p, const TimeGrid& g) {
  MisestimationOptions opt;
  opt.shrink = o.shrink;
  opt.fixed_truth = o.fixed_truth;
  opt.pricing = o.scaled_pricing ? Pricing::kScaled : Pricing::kShape;
  Report rep;
  rep.table.columns = {"lambda",          "kappa",           "shifted_kappa",   "base_temporary",
                       "base_permanent",  "base_total",      "shifted_temporary",
                       "shifted_permanent", "shifted_total", "rel_total_diff",
                       "dcost_dkappa_a",  "dcost_dlambda_a", "dcost_dkappa_b",  "dcost_dlambda_b"};
  for (const auto& r : misestimation_table(p.lambda, opt, g)) {
    rep.table.rows.push_back({r.lambda, r.kappa, r.shifted_kappa, r.base.temporary,
                              r.base.permanent, r.base.total, r.shifted.temporary,
                              r.shifted.permanent, r.shifted.total, r.rel_total_diff,
                              r.dcost_dkappa_a, r.dcost_dlambda_a, r.dcost_dkappa_b,
                              r.dcost_dlambda_b});
  }
  rep.meta["shrink"] = o.shrink;
  rep.meta["pricing"] = o.scaled_pricing ? "scaled" : "shape";
  rep.meta["fixed_truth"] = o.fixed_truth;
  return rep;
}

Report temp_perm_report(const ImpactParams& p, const TimeGrid& g) {
  Report rep;
  rep.table.columns = {"lambda",       "kappa",        "br_temporary", "br_permanent",
                       "br_total",     "rn_temporary", "rn_permanent", "rn_total"};
  for (const auto& r : temp_perm_table(p.sigma, g)) {
    rep.table.rows.push_back({r.lambda, r.kappa, r.best_response.temporary,
                              r.best_response.permanent, r.best_response.total,
                              r.risk_neutral.temporary, r.risk_neutral.permanent,
                              r.risk_neutral.total});
  }
  return rep;
}

Report lognormal_report(const Options& o, const ImpactParams& p, const TimeGrid& g) {
  const Moments m = expected_cost_lognormal(o.mu, o.sigma_ln, p.kappa, o.n_quad, g);
  Report rep;
  rep.table.columns = {"mu",      "sigma_ln", "kappa",          "n_quad",      "mean",
                       "variance", "mc_draws", "mc_mean",       "mc_mean_stderr",
                       "mc_variance", "mc_variance_stderr"};
  std::vector<Cell> row = {o.mu, o.sigma_ln, p.kappa, static_cast<double>(o.n_quad),
                           m.mean, m.variance, static_cast<double>(o.mc_draws)};
  if (o.mc_draws > 0) {
    const auto mc = monte_carlo_cost_lognormal(o.mu, o.sigma_ln, p.kappa, o.mc_draws, o.seed, g);
    row.insert(row.end(), {mc.moments.mean, mc.mean_stderr, mc.moments.variance,
                           mc.variance_stderr});
    rep.meta["seed"] = o.seed;
  } else {
    row.insert(row.end(), {std::string(), std::string(), std::string(), std::string()});
  }
  rep.table.rows.push_back(std::move(row));
  return rep;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("-o,--output", o.output, "Output file (default stdout)");
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--grid", o.grid, "Number of grid intervals (even, >= 10)");
  sub->add_option("--seed", o.seed, "Seed for Monte Carlo checks");
  sub->add_option("--sidecar", o.sidecar, "JSON sidecar path (default <output>.json)");
}

void add_params(CLI::App* sub, Options& o) {
  sub->add_option("--kappa", o.kappa, "Permanent impact coefficient");
  sub->add_option("--lambda", o.lambda, "Adversary scale");
  sub->add_option("--sigma", o.sigma, "Shape / volatility parameter");
}

void add_solver(CLI::App* sub, Options& o) {
  add_common(sub, o);
  add_params(sub, o);
  sub->add_option("--tolerance", o.tolerance, "Scaled residual tolerance");
}

int emit(const Report& rep, const Options& o, const json& header, std::ostream& out,
         std::ostream& err) {
  json meta = header;
  for (auto it = rep.meta.begin(); it != rep.meta.end(); ++it) meta[it.key()] = it.value();

  std::ofstream file;
  std::ostream* os = &out;
  if (!o.output.empty()) {
    file.open(o.output, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << o.output << "\n";
      return kUsage;
    }
    os = &file;
  }
  if (o.format == "json") {
    json doc = meta;
    const json t = table_json(rep.table);
    doc["columns"] = t["columns"];
    doc["rows"] = t["rows"];
    *os << doc.dump(2) << '\n';
  } else {
    write_csv(rep.table, *os);
    std::string sidecar = o.sidecar;
    if (sidecar.empty() && !o.output.empty()) {
      sidecar = o.output + ".json";
    }
    if (!sidecar.empty()) {
      std::ofstream sc(sidecar, std::ios::binary);
      if (!sc) {
        err << "error: cannot open " << sidecar << "\n";
        return kUsage;
      }
      sc << meta.dump(2) << '\n';
    }
  }
  if (rep.tolerance_failed) {
    err << "error: scaled residual " << format_number(rep.meta.value("max_scaled_residual", 0.0))
        << " exceeds tolerance " << format_number(o.tolerance) << "\n";
    return kTolerance;
  }
  return kOk;
}

}  // namespace

int default_grid_size() {
  if (const char* env = std::getenv("IMPACT_GAMES_GRID"); env && *env) {
    int n = 0;
    const char* end = env + std::char_traits<char>::length(env);
    const auto [ptr, ec] = std::from_chars(env, end, n);
    if (ec != std::errc() || ptr != end || n < 10 || n % 2 != 0) {
      throw DomainError(std::string("IMPACT_GAMES_GRID must be an even integer >= 10, got ") + env);
    }
    return n;
  }
  return kDefaultIntervals;
}

std::vector<std::string> family_names() {
  return {"risk-neutral",    "risk-averse",  "eager",        "parabolic", "almgren-chriss",
          "br-risk-averse",  "br-risk-neutral", "br-eager", "two-trader-a", "two-trader-b",
          "multi",           "multi-limit",  "case1b-b"};
}

AnalyticStrategy family_from_name(const std::string& name, const ImpactParams& p, double c,
                                  double n_traders) {
  using namespace family;
  static const std::map<std::string, Family (*)(const ImpactParams&, double, double)> kMake = {
      {"risk-neutral", [](const ImpactParams&, double, double) -> Family { return RiskNeutral{}; }},
      {"risk-averse", [](const ImpactParams& q, double, double) -> Family { return RiskAverse{q.sigma}; }},
      {"eager", [](const ImpactParams& q, double, double) -> Family { return Eager{q.sigma}; }},
      {"parabolic", [](const ImpactParams&, double cc, double) -> Family { return Parabolic{cc}; }},
      {"almgren-chriss",
       [](const ImpactParams& q, double, double) -> Family { return AlmgrenChriss{q.sigma}; }},
      {"br-risk-averse",
       [](const ImpactParams& q, double, double) -> Family {
         return BestResponseToRiskAverse{q.kappa, q.lambda, q.sigma};
       }},
      {"br-risk-neutral",
       [](const ImpactParams& q, double, double) -> Family {
         return BestResponseToRiskNeutral{q.kappa, q.lambda};
       }},
      {"br-eager",
       [](const ImpactParams& q, double, double) -> Family {
         return BestResponseToEager{q.kappa, q.lambda, q.sigma};
       }},
      {"two-trader-a",
       [](const ImpactParams& q, double, double) -> Family { return TwoTraderEqUnit{q.kappa, q.lambda}; }},
      {"two-trader-b",
       [](const ImpactParams& q, double, double) -> Family {
         return TwoTraderEqScaled{q.kappa, q.lambda};
       }},
      {"multi",
       [](const ImpactParams& q, double, double n) -> Family {
         if (n < 2.0) throw DomainError("multi: need at least 2 traders");
         return MultiTraderSym{q.kappa, n};
       }},
      {"multi-limit",
       [](const ImpactParams& q, double, double) -> Family { return MultiTraderLimit{q.kappa}; }},
      {"case1b-b", [](const ImpactParams& q, double, double) -> Family { return Case1bB{q.kappa, q.lambda}; }},
  };
  const auto it = kMake.find(name);
  if (it == kMake.end()) throw DomainError("unknown strategy family: " + name);
  return AnalyticStrategy(it->second(p, c, n_traders));
}

std::string format_number(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Optimal position building under linear temporary and permanent impact"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  auto* strategy = app.add_subcommand("strategy", "Sample a closed-form strategy family");
  add_common(strategy, o);
  add_params(strategy, o);
  strategy->add_option("--family", o.family, "Strategy family")->required();
  strategy->add_option("--c", o.c, "Parabolic parameter (c != 1)");
  strategy->add_option("--n-traders", o.n_traders, "Total traders for the multi family");

  auto* br = app.add_subcommand("best-response", "Best response to an adversary strategy");
  add_solver(br, o);
  br->add_option("--adversary", o.adversary, "Adversary family");
  br->add_option("--responder", o.responder, "Responding trader")->check(CLI::IsMember({"A", "B"}));
  br->add_option("--method", o.method, "closed or generic")
      ->check(CLI::IsMember({"closed", "generic"}));
  br->add_option("--c", o.c, "Parabolic parameter of the adversary");
  br->add_option("--n-traders", o.n_traders, "Total traders for a multi adversary");

  auto* eq = app.add_subcommand("equilibrium", "Closed-form two-trader equilibrium");
  add_solver(eq, o);

  auto* inv_b = app.add_subcommand("inverse-b", "Adversary for which --a is the best response");
  add_solver(inv_b, o);
  inv_b->add_option("--a", o.given_a, "Unit strategy family of trader A");
  inv_b->add_option("--c", o.c, "Parabolic parameter");
  inv_b->add_option("--n-traders", o.n_traders, "Total traders for the multi family");

  auto* inv_a = app.add_subcommand("inverse-a", "Unit strategy that best-responds to --b");
  add_solver(inv_a, o);
  inv_a->add_option("--b", o.given_b, "Unit shape family of trader B");
  inv_a->add_option("--c", o.c, "Parabolic parameter");
  inv_a->add_option("--n-traders", o.n_traders, "Total traders for the multi family");

  auto* risk = app.add_subcommand("risk-equilibrium", "Two-trader equilibrium with risk aversion");
  add_solver(risk, o);
  risk->add_option("--xi-a", o.xi_a, "Risk aversion of A");
  risk->add_option("--xi-b", o.xi_b, "Risk aversion of B");

  auto* tables = app.add_subcommand("tables", "Cost tables");
  add_common(tables, o);
  add_params(tables, o);
  tables->add_option("which", o.table, "cost-matrix, misestimation or temp-perm")
      ->required()
      ->check(CLI::IsMember({"cost-matrix", "misestimation", "temp-perm"}));
  tables->add_option("--shrink", o.shrink, "Kappa multiplier of the shifted row");
  tables->add_flag("--fixed-truth", o.fixed_truth, "Price the shifted strategy at the true kappa");
  tables->add_flag("--scaled-pricing", o.scaled_pricing,
                   "Price against the lambda-scaled adversary instead of its unit shape");

  auto* logn = app.add_subcommand("lognormal", "Expected equilibrium cost for log-normal lambda");
  add_common(logn, o);
  logn->add_option("--kappa", o.kappa, "Permanent impact coefficient");
  logn->add_option("--mu", o.mu, "Mean of log lambda");
  logn->add_option("--sigma-ln", o.sigma_ln, "Standard deviation of log lambda");
  logn->add_option("--n-quad", o.n_quad, "Gauss-Hermite nodes (>= 8)");
  logn->add_option("--mc-draws", o.mc_draws, "Monte Carlo draws for comparison (0 = none)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    out << kToolVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    const int n = o.grid ? o.grid : default_grid_size();
    if (n < 10 || n % 2 != 0) throw DomainError("--grid must be an even integer >= 10");
    const TimeGrid g(n);

    Report rep;
    std::string command;
    ImpactParams shown;
    if (strategy->parsed()) {
      command = "strategy";
      shown = resolve(o, {});
      rep = strategy_report(o, g);
    } else if (br->parsed()) {
      command = "best-response";
      shown = resolve(o, {});
      rep = best_response_report(o, g);
    } else if (eq->parsed()) {
      command = "equilibrium";
      shown = resolve(o, {});
      rep = equilibrium_report(o, g);
    } else if (inv_b->parsed()) {
      command = "inverse-b";
      shown = resolve(o, {});
      rep = inverse_b_report(o, g);
    } else if (inv_a->parsed()) {
      command = "inverse-a";
      shown = resolve(o, {});
      rep = inverse_a_report(o, g);
    } else if (risk->parsed()) {
      command = "risk-equilibrium";
      shown = resolve(o, {});
      rep = risk_equilibrium_report(o, g);
    } else if (tables->parsed()) {
      command = "tables " + o.table;
      shown = resolve(o, {25.0, 5.0, 4.0});
      if (o.table == "cost-matrix") {
        rep = cost_matrix_report(shown, g);
      } else if (o.table == "misestimation") {
        rep = misestimation_report(o, shown, g);
      } else {
        rep = temp_perm_report(shown, g);
      }
    } else {
      command = "lognormal";
      shown = resolve(o, {1.0, 1.0, 0.0});
      rep = lognormal_report(o, shown, g);
      rep.meta["mu"] = o.mu;
      rep.meta["sigma_ln"] = o.sigma_ln;
    }
    const json header = {{"tool", kToolName},
                         {"version", kToolVersion},
                         {"command", command},
                         {"params", params_json(shown)},
                         {"grid", g.intervals()}};
    return emit(rep, o, header, out, err);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace impact::cli
