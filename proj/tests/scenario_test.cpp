#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "slicesim/errors.hpp"
#include "slicesim/runner.hpp"
#include "slicesim/scenario.hpp"

using namespace slicesim;
using namespace slicesim::testing;

namespace {

// Minimal valid scenario text used as the base for mutation tests.
const char* kMinimal = R"({
  "name": "mini",
  "locations": ["L1"],
  "pools": [{"location": "L1", "resources": [
    {"id": "nf-an-1", "kind": "vnf", "subnet": "AN", "capacity": 2},
    {"id": "nf-cn-1", "kind": "vnf", "subnet": "CN", "capacity": 2},
    {"id": "nf-dn-1", "kind": "vnf", "subnet": "DN", "capacity": 2}]}],
  "tenants": ["t1"],
  "agreements": [{"tenant": "t1", "valid_from": 0, "valid_until": 1000,
    "allowed_scenarios": ["ClosedDepA"], "sharing_permitted": true,
    "charging_ok": true, "subscription_ok": true}],
  "requests": [{"tenant_slice_id": "r1", "tenant": "t1",
    "home_location": "L1", "latency_ms": 5.0, "throughput_units": 2,
    "duration_ticks": 10, "customer_group": "closed", "sharing": "none"}],
  "expectations": [{"request": "r1", "scenario": "ClosedDepA",
    "outcome": "Served"}]
})";

std::string patched(const std::string& from, const std::string& to) {
  std::string text = kMinimal;
  auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  text.replace(pos, from.size(), to);
  return text;
}

}  // namespace

TEST_CASE("all six bundled fixtures parse") {
  for (const char* name : {"closed_dep_a", "closed_dep_b", "mno_open",
                           "public_open", "mixed_option_a", "mixed_option_b"}) {
    INFO(name);
    auto spec = load_scenario(scenario_path(name));
    CHECK(spec.name == name);
    CHECK(!spec.requests.empty());
    CHECK(!spec.expectations.empty());
  }
}

TEST_CASE("closed_dep_a fixture shape") {
  auto spec = load_scenario(scenario_path("closed_dep_a"));
  CHECK(spec.tenants.size() == 1);
  CHECK(spec.requests.size() == 1);
  CHECK(spec.pools.size() == 1);
  CHECK(spec.mnos.empty());
}

TEST_CASE("minimal scenario parses and builds") {
  auto spec = parse_scenario_json(kMinimal, "mini");
  auto world = build_world(spec);
  CHECK(world.pools.contains("L1"));
  CHECK(world.tenants.contains("t1"));
  CHECK(world.agreements.contains("t1"));
}

TEST_CASE("dangling location reference is refused") {
  auto text = patched("\"home_location\": \"L1\"", "\"home_location\": \"L9\"");
  CHECK_THROWS_AS(parse_scenario_json(text, "mini"), DanglingReference);
}

TEST_CASE("dangling tenant references are refused") {
  CHECK_THROWS_AS(parse_scenario_json(
                      patched("\"tenant\": \"t1\",\n    \"home_location\"",
                              "\"tenant\": \"ghost\",\n    \"home_location\""),
                      "mini"),
                  DanglingReference);
  CHECK_THROWS_AS(
      parse_scenario_json(patched("{\"request\": \"r1\"", "{\"request\": \"rX\""),
                          "mini"),
      DanglingReference);
}

TEST_CASE("unknown fields are refused") {
  auto text = patched("\"name\": \"mini\",", "\"name\": \"mini\", \"bogus\": 1,");
  CHECK_THROWS_AS(parse_scenario_json(text, "mini"), SchemaViolation);
}

TEST_CASE("junk values are refused") {
  CHECK_THROWS_AS(parse_scenario_json("{not json", "x"), ParseError);
  CHECK_THROWS_AS(
      parse_scenario_json(patched("\"subnet\": \"AN\"", "\"subnet\": \"XX\""),
                          "mini"),
      SchemaViolation);
  CHECK_THROWS_AS(parse_scenario_json(patched("\"ClosedDepA\"", "\"DepZ\""),
                                      "mini"),
                  SchemaViolation);
  CHECK_THROWS_AS(
      parse_scenario_json(patched("\"capacity\": 2}]}]", "\"capacity\": 0}]}]"),
                          "mini"),
      SchemaViolation);
}

TEST_CASE("run report carries classification and outcome") {
  auto artifacts = run_scenario(load_scenario(scenario_path("closed_dep_a")));
  REQUIRE(artifacts.report.requests.size() == 1);
  const auto& entry = artifacts.report.requests[0];
  CHECK(entry.classification == "ClosedDepA");
  CHECK(entry.config_type == "Type1");
  CHECK(entry.outcome == "Served");
  CHECK(entry.nf_units_consumed > 0);
  CHECK(artifacts.report.expectations_ok);
}

TEST_CASE("expectation mismatch is reported, not thrown") {
  auto spec = parse_scenario_json(
      patched("\"outcome\": \"Served\"", "\"outcome\": \"Rejected\""), "mini");
  auto artifacts = run_scenario(spec);
  CHECK_FALSE(artifacts.report.expectations_ok);
  CHECK(!artifacts.report.expectation_failures.empty());
}

TEST_CASE("bare Rejected expectation matches any rejection reason") {
  std::string text = patched("\"valid_until\": 1000", "\"valid_until\": 0");
  auto pos = text.find("\"outcome\": \"Served\"");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, std::string("\"outcome\": \"Served\"").size(),
               "\"outcome\": \"Rejected\"");
  auto artifacts = run_scenario(parse_scenario_json(text, "mini"));
  CHECK(artifacts.report.expectations_ok);
  CHECK(artifacts.report.requests[0].outcome == "Rejected:Expired");
}
