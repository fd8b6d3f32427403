#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slicesim/csmf.hpp"
#include "slicesim/engine.hpp"
#include "slicesim/inventory.hpp"
#include "slicesim/mno_stub.hpp"
#include "slicesim/provider.hpp"

namespace slicesim {

struct PoolSpec {
  std::string location;
  std::vector<NfResource> resources;
};

struct MnoSpec {
  std::string name;
  std::string location;
  bool reachable = true;
  bool grant_nssi = true;
  std::map<std::string, PolicyVerdict> policy_table;
  std::vector<NfResource> resources;
};

struct RequestSpec {
  std::string id;
  RawRequestRecord raw;
};

struct ExpectationSpec {
  std::string request;
  std::optional<std::string> scenario;
  std::optional<std::string> outcome;  // "Served", "Rejected", "Rejected:Expired", ...
};

struct ScenarioSpec {
  std::string name;
  std::uint64_t seed = 0;
  double strict_latency_threshold_ms = 10.0;
  std::string micro_operator = "uo";
  std::vector<std::string> locations;
  std::vector<PoolSpec> pools;
  std::vector<MnoSpec> mnos;
  std::vector<std::string> tenants;
  std::vector<ServiceAgreement> agreements;
  std::vector<RequestSpec> requests;
  std::vector<ExpectationSpec> expectations;
};

// Strict schema: unknown fields, dangling references and malformed values
// raise ParseError / SchemaViolation / DanglingReference.
ScenarioSpec load_scenario(const std::string& path);
ScenarioSpec parse_scenario_json(const std::string& text,
                                 const std::string& fallback_name);

World build_world(const ScenarioSpec& spec);

}  // namespace slicesim
