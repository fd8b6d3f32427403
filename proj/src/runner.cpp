#include "slicesim/runner.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "slicesim/engine.hpp"
#include "slicesim/errors.hpp"

namespace slicesim {

using nlohmann::json;

namespace {

// Split the comma-joined NF list written into step-7 payloads.
std::vector<std::string> split_ids(const std::string& joined) {
  std::vector<std::string> out;
  if (joined == "-" || joined.empty()) return out;
  std::istringstream is(joined);
  std::string part;
  while (std::getline(is, part, ',')) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

int units_for(const ScenarioSpec& spec, const std::string& location,
              const std::vector<std::string>& nf_ids) {
  auto lookup = [&](const std::vector<NfResource>& resources) {
    int units = 0;
    for (const auto& id : nf_ids) {
      for (const auto& nf : resources) {
        if (nf.id == id) units += nf.capacity_units;
      }
    }
    return units;
  };
  for (const auto& p : spec.pools) {
    if (p.location == location) return lookup(p.resources);
  }
  for (const auto& m : spec.mnos) {
    if (m.location == location) return lookup(m.resources);
  }
  return 0;
}

bool outcome_matches(const std::string& expected, const std::string& actual) {
  if (expected == actual) return true;
  // A bare kind ("Rejected") matches any reason.
  return actual.size() > expected.size() &&
         actual.compare(0, expected.size(), expected) == 0 &&
         actual[expected.size()] == ':';
}

}  // namespace

RunArtifacts run_scenario(const ScenarioSpec& spec) {
  RunArtifacts artifacts;
  artifacts.report.scenario_name = spec.name;

  World world = build_world(spec);
  SequenceEngine engine(world, /*invariants_each_event=*/true);

  for (const auto& request : spec.requests) {
    FormationTrace trace = engine.run_formation_sequence(request.raw);

    RequestReportEntry entry;
    entry.request_id = trace.request_id;
    entry.outcome = trace.outcome.str();
    if (!trace.events.empty()) {
      entry.ticks_to_outcome =
          trace.events.back().tick - trace.events.front().tick + 1;
    }
    for (const auto& e : trace.events) {
      if (e.step == 3) {
        if (auto it = e.payload.find("scenario"); it != e.payload.end()) {
          entry.classification = it->second;
        }
        if (auto it = e.payload.find("config_type"); it != e.payload.end()) {
          entry.config_type = it->second;
        }
      }
      if (e.step == 7) {
        entry.nf_units_consumed += units_for(
            spec, e.payload.at("location"), split_ids(e.payload.at("nfs")));
      }
      if (e.step == 8 && e.payload.at("mode") == "attached") {
        ++artifacts.report.shared_nssi_reuse_count;
      }
    }
    // The engine must always produce a conformant trace; anything else is
    // an engine bug, not a scenario outcome.
    if (!entry.classification.empty()) {
      auto conf = validate_trace(trace,
                                 scenario_from_string(entry.classification));
      if (!conf.conformant) {
        throw InvariantViolation("engine produced a non-conformant trace for '" +
                                 trace.request_id + "': " +
                                 conf.violations.front().rule);
      }
    }
    artifacts.report.requests.push_back(std::move(entry));

    for (const auto& [loc, snap] : world.all_snapshots()) {
      for (const auto& [subnet, acc] : snap.by_subnet) {
        int& peak = artifacts.report.pool_peak_allocated[loc]
                                                        [to_string(subnet)];
        peak = std::max(peak, acc.allocated_units);
      }
    }

    artifacts.traces.push_back(std::move(trace));
  }

  artifacts.report.invariant_checks_run = engine.invariant_checks_run();
  artifacts.final_fingerprint = world_state_fingerprint(world);

  for (const auto& exp : spec.expectations) {
    const RequestReportEntry* entry = nullptr;
    for (const auto& e : artifacts.report.requests) {
      if (e.request_id == exp.request) entry = &e;
    }
    if (entry == nullptr) {
      artifacts.report.expectations_ok = false;
      artifacts.report.expectation_failures.push_back(
          "request '" + exp.request + "' produced no report entry");
      continue;
    }
    if (exp.scenario && *exp.scenario != entry->classification) {
      artifacts.report.expectations_ok = false;
      artifacts.report.expectation_failures.push_back(
          "request '" + exp.request + "': expected scenario " + *exp.scenario +
          ", got " + (entry->classification.empty() ? "none"
                                                    : entry->classification));
    }
    if (exp.outcome && !outcome_matches(*exp.outcome, entry->outcome)) {
      artifacts.report.expectations_ok = false;
      artifacts.report.expectation_failures.push_back(
          "request '" + exp.request + "': expected outcome " + *exp.outcome +
          ", got " + entry->outcome);
    }
  }

  return artifacts;
}

std::string report_to_json(const RunReport& report) {
  json j;
  j["scenario"] = report.scenario_name;
  j["requests"] = json::array();
  for (const auto& r : report.requests) {
    j["requests"].push_back({{"request_id", r.request_id},
                             {"classification", r.classification},
                             {"config_type", r.config_type},
                             {"outcome", r.outcome},
                             {"ticks_to_outcome", r.ticks_to_outcome},
                             {"nf_units_consumed", r.nf_units_consumed}});
  }
  j["aggregate"] = {
      {"pool_peak_allocated", report.pool_peak_allocated},
      {"shared_nssi_reuse_count", report.shared_nssi_reuse_count},
      {"invariant_checks_run", report.invariant_checks_run},
      {"expectations_ok", report.expectations_ok},
      {"expectation_failures", report.expectation_failures},
  };
  return j.dump(2) + "\n";
}

void emit_report(const RunArtifacts& artifacts, const std::string& out_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    throw ParseError("cannot create output directory '" + out_dir + "'");
  }

  auto write_file = [&](const std::string& name, const std::string& content) {
    std::ofstream out(fs::path(out_dir) / name, std::ios::binary);
    if (!out) throw ParseError("cannot write " + name + " in " + out_dir);
    out << content;
  };

  for (const auto& trace : artifacts.traces) {
    write_file(trace.request_id + ".trace", trace_to_string(trace));
  }
  write_file("report.json", report_to_json(artifacts.report));

  std::ostringstream summary;
  summary << "scenario: " << artifacts.report.scenario_name << "\n";
  for (const auto& r : artifacts.report.requests) {
    summary << r.request_id << ": "
            << (r.classification.empty() ? "-" : r.classification) << " "
            << (r.config_type.empty() ? "-" : r.config_type) << " -> "
            << r.outcome << " (" << r.ticks_to_outcome << " ticks, "
            << r.nf_units_consumed << " NF units)\n";
  }
  summary << "shared NSSI reuse: " << artifacts.report.shared_nssi_reuse_count
          << "\n";
  summary << "expectations: "
          << (artifacts.report.expectations_ok ? "ok" : "FAILED") << "\n";
  for (const auto& f : artifacts.report.expectation_failures) {
    summary << "  " << f << "\n";
  }
  write_file("summary.txt", summary.str());
}

RunArtifacts replay_run(const ScenarioSpec& spec,
                        const RunArtifacts& original) {
  RunArtifacts rerun = run_scenario(spec);
  if (rerun.final_fingerprint != original.final_fingerprint) {
    throw ReplayDivergence("final state differs between run and replay");
  }
  if (rerun.traces.size() != original.traces.size()) {
    throw ReplayDivergence("trace count differs between run and replay");
  }
  for (std::size_t i = 0; i < rerun.traces.size(); ++i) {
    if (trace_to_string(rerun.traces[i]) !=
        trace_to_string(original.traces[i])) {
      throw ReplayDivergence("trace for '" + original.traces[i].request_id +
                             "' differs between run and replay");
    }
  }
  return rerun;
}

}  // namespace slicesim
