#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "slicesim/errors.hpp"
#include "slicesim/runner.hpp"
#include "slicesim/scenario.hpp"
#include "slicesim/trace.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitExpectationMismatch = 1;
constexpr int kExitParseError = 2;
constexpr int kExitInvariantViolation = 3;

std::string default_out_dir() {
  if (const char* env = std::getenv("SLICESIM_OUT_DIR")) return env;
  return "out";
}

std::string default_scenario_dir() {
  if (const char* env = std::getenv("SLICESIM_SCENARIO_DIR")) return env;
  return "scenarios";
}

int cmd_run(const std::string& path, const std::string& out_dir,
            std::uint64_t seed) {
  slicesim::ScenarioSpec spec = slicesim::load_scenario(path);
  spec.seed = seed;
  slicesim::RunArtifacts artifacts = slicesim::run_scenario(spec);
  slicesim::emit_report(artifacts, out_dir);
  std::cout << "scenario " << spec.name << ": " << artifacts.traces.size()
            << " request(s), reports in " << out_dir << "\n";
  for (const auto& r : artifacts.report.requests) {
    std::cout << "  " << r.request_id << " -> " << r.outcome << "\n";
  }
  if (!artifacts.report.expectations_ok) {
    for (const auto& f : artifacts.report.expectation_failures) {
      std::cerr << "expectation mismatch: " << f << "\n";
    }
    return kExitExpectationMismatch;
  }
  return kExitOk;
}

int cmd_validate(const std::string& trace_path, const std::string& scenario) {
  std::ifstream in(trace_path);
  if (!in) {
    std::cerr << "cannot open trace file '" << trace_path << "'\n";
    return kExitParseError;
  }
  slicesim::FormationTrace trace = slicesim::parse_trace(in);
  auto report = slicesim::validate_trace(
      trace, slicesim::scenario_from_string(scenario));
  if (report.conformant) {
    std::cout << "Conformant\n";
    return kExitOk;
  }
  for (const auto& v : report.violations) {
    std::cout << "violation at event " << v.event_index << ": " << v.rule
              << "\n";
  }
  return kExitExpectationMismatch;
}

int cmd_list(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) {
    std::cerr << "no scenario directory '" << dir << "'\n";
    return kExitParseError;
  }
  std::vector<std::string> names;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") {
      names.push_back(entry.path().string());
    }
  }
  std::sort(names.begin(), names.end());
  for (const auto& name : names) {
    auto spec = slicesim::load_scenario(name);
    std::cout << spec.name << " (" << spec.requests.size() << " request(s)): "
              << name << "\n";
  }
  return kExitOk;
}

int cmd_check(const std::string& path) {
  auto spec = slicesim::load_scenario(path);
  std::cout << "ok: " << spec.name << ", " << spec.requests.size()
            << " request(s), " << spec.pools.size() << " pool(s), "
            << spec.mnos.size() << " MNO(s)\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Network-slicing management-plane simulator for local 5G "
               "micro-operator deployments"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out_dir = default_out_dir();
  std::uint64_t seed = 0;
  auto* run = app.add_subcommand("run", "Run a scenario file");
  run->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  run->add_option("--out", out_dir, "Output directory");
  run->add_option("--seed", seed, "Run seed (default 0)");

  std::string trace_path;
  std::string scenario_kind;
  auto* validate = app.add_subcommand("validate", "Validate a trace file");
  validate->add_option("trace", trace_path, "Trace file")->required();
  validate->add_option("--scenario", scenario_kind, "Deployment scenario kind")
      ->required();

  std::string scenario_dir = default_scenario_dir();
  auto* list = app.add_subcommand("list-scenarios", "List bundled scenarios");
  list->add_option("dir", scenario_dir, "Scenario directory");

  std::string check_path;
  auto* check = app.add_subcommand("check", "Parse and validate a scenario");
  check->add_option("scenario", check_path, "Scenario JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(scenario_path, out_dir, seed);
    if (validate->parsed()) return cmd_validate(trace_path, scenario_kind);
    if (list->parsed()) return cmd_list(scenario_dir);
    if (check->parsed()) return cmd_check(check_path);
  } catch (const slicesim::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariantViolation;
  } catch (const slicesim::ReplayDivergence& e) {
    std::cerr << "replay divergence: " << e.what() << "\n";
    return kExitInvariantViolation;
  } catch (const slicesim::SliceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  }
  return kExitOk;
}
