#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "slicesim/scenario.hpp"
#include "slicesim/trace.hpp"

namespace slicesim {

struct RequestReportEntry {
  std::string request_id;
  std::string classification;  // empty when rejected before classification
  std::string config_type;
  std::string outcome;
  std::uint64_t ticks_to_outcome = 0;
  int nf_units_consumed = 0;
};

struct RunReport {
  std::string scenario_name;
  std::vector<RequestReportEntry> requests;
  // location id -> subnet name -> peak allocated units.
  std::map<std::string, std::map<std::string, int>> pool_peak_allocated;
  int shared_nssi_reuse_count = 0;
  std::uint64_t invariant_checks_run = 0;
  bool expectations_ok = true;
  std::vector<std::string> expectation_failures;
};

struct RunArtifacts {
  RunReport report;
  std::vector<FormationTrace> traces;
  std::string final_fingerprint;
};

// Runs the requests in file order, one formation sequence at a time, with
// the invariant suite active after every event. Engine-level invariant
// violations propagate as InvariantViolation; expectation mismatches are
// recorded in the report, not thrown.
RunArtifacts run_scenario(const ScenarioSpec& spec);

// Writes one trace file per request plus report.json and summary.txt.
// Byte-stable for equal inputs.
void emit_report(const RunArtifacts& artifacts, const std::string& out_dir);

// Re-runs the scenario and compares final state and trace bytes against the
// original; throws ReplayDivergence on any mismatch.
RunArtifacts replay_run(const ScenarioSpec& spec, const RunArtifacts& original);

std::string report_to_json(const RunReport& report);

}  // namespace slicesim
