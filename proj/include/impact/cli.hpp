#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "impact/core.hpp"
#include "impact/strategy.hpp"

namespace impact::cli {

inline constexpr const char* kToolName = "impact_games";
inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kTolerance = 3,
};

/// Grid size used when --grid is absent: IMPACT_GAMES_GRID if set, else
/// the library default. Throws DomainError for an invalid value.
int default_grid_size();

/// Builds an analytic strategy from its kebab-case family name and the
/// parameters that family uses. `c` feeds Parabolic, `n_traders` feeds multi.
AnalyticStrategy family_from_name(const std::string& name, const ImpactParams& p, double c,
                                  double n_traders);

/// Names accepted by family_from_name.
std::vector<std::string> family_names();

/// printf("%.12g") in the C locale.
std::string format_number(double v);

/// Runs one command. CSV/JSON goes to `out` unless --output is given;
/// diagnostics go to `err`. Returns an ExitCode.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace impact::cli
