#pragma once

#include <string>
#include <vector>

#include "orbisurf/report.hpp"
#include "orbisurf/scenario.hpp"

namespace orbisurf {

/// Semantic checks run by parse_scenario: builds the surface, root stack,
/// sheaves and parabolic data, and checks query names and arguments.
void check_scenario(const Scenario& s);

struct RunOptions {
  /// When nonempty, only queries whose label or command name is listed run.
  std::vector<std::string> only;
};

/// Executes the queries in order. A failing query is reported and does not
/// stop later ones.
Report run(const Scenario& s, const RunOptions& options = {});

struct OracleLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Built-in chi checks: chi(O(kD~)) on the r-th root of (P^2, line) against
/// chi(P^2, O(floor(k/r))), and chi(O) on the square root of two lines.
std::vector<OracleLine> run_chi_oracles();

}  // namespace orbisurf
