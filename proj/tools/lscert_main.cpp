#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "lscert/scenarios.hpp"

namespace {

int run_command(const std::string& name, const lscert::ScenarioParams& params,
                const std::string& out_path) {
  lscert::Report report = lscert::run_scenario(name, params);
  std::string text = report.to_string();
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open " << out_path << " for writing\n";
      return 2;
    }
    out << text;
  }
  std::size_t failed = 0;
  for (const auto& check : report.checks) {
    if (check.verdict == "fail") {
      ++failed;
    }
  }
  std::cerr << report.scenario << ": " << report.checks.size() << " checks, " << failed
            << " failed\n";
  return report.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coarse-geometry certificates for countable groups"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "list the built-in scenarios");

  std::string name;
  std::string out_path;
  std::string radius_text;
  lscert::ScenarioParams params;
  std::size_t horizon = 0;
  std::size_t support_cap = 0;
  std::size_t kmax = 0;
  double tolerance = 0;

  auto* run = app.add_subcommand("run", "run a scenario and print its report");
  run->add_option("scenario", name, "scenario name from `list`")->required();
  run->add_option("--horizon", horizon, "enumeration horizon");
  run->add_option("--radius", radius_text, "primary radius, rational like 2/5");
  run->add_option("--support-cap", support_cap, "digit/support cap");
  run->add_option("--kmax", kmax, "chain depth");
  run->add_option("--tolerance", tolerance, "tolerance for the QI fit");
  run->add_option("--out", out_path, "write the report to a file");
  run->add_flag("--parallel", params.parallel, "run independent checks concurrently");

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) {
      for (const auto& info : lscert::list_scenarios()) {
        std::cout << info.name << "\n    " << info.description << "\n";
      }
      return 0;
    }
    if (horizon) {
      params.horizon = horizon;
    }
    if (!radius_text.empty()) {
      auto r = lscert::rat_from_string(radius_text);
      if (!r || *r <= 0) {
        std::cerr << "invalid-scenario: radius must be a positive rational\n";
        return 2;
      }
      params.radius = *r;
    }
    if (support_cap) {
      params.support_cap = support_cap;
    }
    if (kmax) {
      params.kmax = kmax;
    }
    if (tolerance > 0) {
      params.tolerance = tolerance;
    }
    return run_command(name, params, out_path);
  } catch (const lscert::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
