#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "orbisurf/error.hpp"
#include "orbisurf/runner.hpp"
#include "orbisurf/scenario.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int report_error(const std::string& path, const orbisurf::Error& e) {
  std::cerr << path << ":" << e.what() << " [" << orbisurf::to_string(e.code()) << "]\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of sheaves on root stacks over surfaces"};
  app.require_subcommand(1);

  std::string run_file;
  std::string format = "human";
  std::vector<std::string> only;
  auto* run = app.add_subcommand("run", "Evaluate the queries of a scenario file");
  run->add_option("file", run_file, "Scenario file")->required();
  run->add_option("--format", format, "Report format")->check(CLI::IsMember({"human", "machine"}));
  run->add_option("--only", only, "Run only these query labels or command names")->delimiter(',');

  std::string validate_file;
  auto* validate = app.add_subcommand("validate", "Parse and check a scenario file without running it");
  validate->add_option("file", validate_file, "Scenario file")->required();

  auto* oracle = app.add_subcommand("oracle", "Run the built-in Euler characteristic oracles");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      const orbisurf::Scenario s = orbisurf::parse_scenario(slurp(run_file));
      const orbisurf::Report report = orbisurf::run(s, {only});
      std::cout << orbisurf::render_report(
          report, format == "machine" ? orbisurf::ReportFormat::Machine : orbisurf::ReportFormat::Human);
      return report.any_error() ? 1 : 0;
    }
    if (*validate) {
      const orbisurf::Scenario s = orbisurf::parse_scenario(slurp(validate_file));
      std::cout << validate_file << ": ok (" << s.sheaves.size() << " sheaves, " << s.parabolics.size()
                << " parabolic, " << s.queries.size() << " queries)\n";
      return 0;
    }
    if (*oracle) {
      bool all = true;
      for (const auto& line : orbisurf::run_chi_oracles()) {
        std::cout << (line.pass ? "PASS " : "FAIL ") << line.name;
        if (!line.pass) std::cout << ":" << line.detail;
        std::cout << "\n";
        all = all && line.pass;
      }
      return all ? 0 : 1;
    }
  } catch (const orbisurf::Error& e) {
    return report_error(*run ? run_file : validate_file, e);
  } catch (const std::exception& e) {
    std::cerr << "orbisurf: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
