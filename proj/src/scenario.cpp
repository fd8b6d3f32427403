#include "slicesim/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "slicesim/errors.hpp"

namespace slicesim {

using nlohmann::json;

namespace {

void expect_keys(const json& j, const std::set<std::string>& allowed,
                 const std::string& where) {
  if (!j.is_object()) {
    throw SchemaViolation(where + " must be an object");
  }
  for (const auto& [k, v] : j.items()) {
    if (!allowed.contains(k)) {
      throw SchemaViolation("unknown field '" + k + "' in " + where);
    }
  }
}

NfResource parse_resource(const json& j, const std::string& where) {
  expect_keys(j, {"id", "kind", "subnet", "capacity"}, where);
  NfResource nf;
  try {
    nf.id = j.at("id").get<std::string>();
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "vnf") {
      nf.kind = NfKind::Vnf;
    } else if (kind == "pnf") {
      nf.kind = NfKind::Pnf;
    } else {
      throw SchemaViolation("NF kind must be vnf|pnf in " + where);
    }
    nf.subnet_affinity = subnet_from_string(j.at("subnet").get<std::string>());
    nf.capacity_units = j.at("capacity").get<int>();
  } catch (const json::exception& e) {
    throw SchemaViolation(where + ": " + e.what());
  }
  if (nf.capacity_units < 1) {
    throw SchemaViolation("NF capacity must be >= 1 in " + where);
  }
  return nf;
}

SharingMode parse_sharing(const std::string& s, const std::string& where) {
  if (s == "none") return SharingMode::None;
  if (s == "within_location") return SharingMode::WithinLocation;
  if (s == "cross_location") return SharingMode::CrossLocation;
  throw SchemaViolation("bad sharing mode '" + s + "' in " + where);
}

CustomerGroup parse_customer_group(const json& j, const std::string& where) {
  CustomerGroup g;
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "closed") {
      g.kind = CustomerGroup::Kind::Closed;
    } else if (s == "public") {
      g.kind = CustomerGroup::Kind::OpenPublic;
    } else {
      throw SchemaViolation("customer_group must be closed|public|{mno_subscribers} in " + where);
    }
    return g;
  }
  expect_keys(j, {"mno_subscribers"}, where + ".customer_group");
  g.kind = CustomerGroup::Kind::OpenMnoSubscribers;
  g.mno_name = j.at("mno_subscribers").get<std::string>();
  return g;
}

RequestSpec parse_request(const json& j, std::size_t index) {
  const std::string where = "requests[" + std::to_string(index) + "]";
  expect_keys(j,
              {"tenant_slice_id", "tenant", "home_location", "latency_ms",
               "throughput_units", "duration_ticks", "mobility",
               "customer_group", "sharing", "share_with_locations",
               "needs_mno_wide_area", "mno_needs_uo_access", "dep_b_bridge",
               "profile_key", "subscriber_group"},
              where);
  RequestSpec spec;
  RawRequestRecord& raw = spec.raw;
  try {
    if (j.contains("tenant_slice_id")) {
      raw.tenant_slice_id = j.at("tenant_slice_id").get<std::string>();
    }
    if (j.contains("tenant")) raw.tenant_id = j.at("tenant").get<std::string>();
    if (j.contains("home_location")) {
      raw.home_location = j.at("home_location").get<std::string>();
    }
    if (j.contains("latency_ms")) {
      raw.latency_ms = j.at("latency_ms").get<double>();
    }
    if (j.contains("throughput_units")) {
      raw.throughput_units = j.at("throughput_units").get<int>();
    }
    if (j.contains("duration_ticks")) {
      raw.duration_ticks = j.at("duration_ticks").get<std::uint64_t>();
    }
    raw.mobility = j.value("mobility", false);
    if (j.contains("customer_group")) {
      raw.customer_group = parse_customer_group(j.at("customer_group"), where);
    }
    if (j.contains("sharing")) {
      raw.sharing_agreement =
          parse_sharing(j.at("sharing").get<std::string>(), where);
    }
    if (j.contains("share_with_locations")) {
      for (const auto& loc : j.at("share_with_locations")) {
        raw.share_with_locations.insert(loc.get<std::string>());
      }
    }
    raw.needs_mno_wide_area = j.value("needs_mno_wide_area", false);
    raw.mno_needs_uo_access = j.value("mno_needs_uo_access", false);
    if (j.contains("dep_b_bridge")) {
      std::string b = j.at("dep_b_bridge").get<std::string>();
      if (b == "mno") {
        raw.dep_b_bridge = DepBBridge::MnoBridged;
      } else if (b == "multi_site") {
        raw.dep_b_bridge = DepBBridge::MultiSite;
      } else {
        throw SchemaViolation("dep_b_bridge must be mno|multi_site in " + where);
      }
    }
    raw.profile_key = j.value("profile_key", std::string("default"));
    raw.subscriber_group = j.value("subscriber_group", std::string());
  } catch (const json::exception& e) {
    throw SchemaViolation(where + ": " + e.what());
  }
  spec.id = raw.tenant_slice_id.value_or("request-" + std::to_string(index));
  return spec;
}

}  // namespace

ScenarioSpec parse_scenario_json(const std::string& text,
                                 const std::string& fallback_name) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  expect_keys(j,
              {"name", "seed", "strict_latency_threshold_ms", "micro_operator",
               "locations", "pools", "mnos", "tenants", "agreements",
               "requests", "expectations"},
              "scenario");

  ScenarioSpec spec;
  try {
    spec.name = j.value("name", fallback_name);
    spec.seed = j.value("seed", std::uint64_t{0});
    spec.strict_latency_threshold_ms =
        j.value("strict_latency_threshold_ms", 10.0);
    spec.micro_operator = j.value("micro_operator", std::string("uo"));
    for (const auto& loc : j.value("locations", json::array())) {
      spec.locations.push_back(loc.get<std::string>());
    }
    std::size_t i = 0;
    for (const auto& pj : j.value("pools", json::array())) {
      const std::string where = "pools[" + std::to_string(i++) + "]";
      expect_keys(pj, {"location", "resources"}, where);
      PoolSpec pool;
      pool.location = pj.at("location").get<std::string>();
      for (const auto& rj : pj.at("resources")) {
        pool.resources.push_back(parse_resource(rj, where));
      }
      spec.pools.push_back(std::move(pool));
    }
    i = 0;
    for (const auto& mj : j.value("mnos", json::array())) {
      const std::string where = "mnos[" + std::to_string(i++) + "]";
      expect_keys(mj,
                  {"name", "location", "reachable", "grant_nssi",
                   "policy_table", "resources"},
                  where);
      MnoSpec mno;
      mno.name = mj.at("name").get<std::string>();
      mno.location = mj.value("location", mno.name + "-site");
      mno.reachable = mj.value("reachable", true);
      mno.grant_nssi = mj.value("grant_nssi", true);
      const json policy = mj.value("policy_table", json::object());
      for (const auto& [group, verdict] : policy.items()) {
        std::string v = verdict.get<std::string>();
        if (v != "allow" && v != "deny") {
          throw SchemaViolation("policy verdict must be allow|deny in " + where);
        }
        mno.policy_table[group] =
            v == "allow" ? PolicyVerdict::Allow : PolicyVerdict::Deny;
      }
      for (const auto& rj : mj.value("resources", json::array())) {
        mno.resources.push_back(parse_resource(rj, where));
      }
      spec.mnos.push_back(std::move(mno));
    }
    for (const auto& t : j.value("tenants", json::array())) {
      spec.tenants.push_back(t.get<std::string>());
    }
    i = 0;
    for (const auto& aj : j.value("agreements", json::array())) {
      const std::string where = "agreements[" + std::to_string(i++) + "]";
      expect_keys(aj,
                  {"tenant", "valid_from", "valid_until", "allowed_scenarios",
                   "sharing_permitted", "charging_ok", "subscription_ok"},
                  where);
      ServiceAgreement a;
      a.tenant_id = aj.at("tenant").get<std::string>();
      a.valid_from_tick = aj.value("valid_from", std::uint64_t{0});
      a.valid_until_tick = aj.at("valid_until").get<std::uint64_t>();
      if (a.valid_from_tick > a.valid_until_tick) {
        throw SchemaViolation("valid_from > valid_until in " + where);
      }
      for (const auto& s : aj.at("allowed_scenarios")) {
        a.allowed_scenarios.insert(scenario_from_string(s.get<std::string>()));
      }
      a.sharing_permitted = aj.value("sharing_permitted", true);
      a.charging_ok = aj.value("charging_ok", true);
      a.subscription_ok = aj.value("subscription_ok", true);
      spec.agreements.push_back(std::move(a));
    }
    i = 0;
    for (const auto& rj : j.value("requests", json::array())) {
      spec.requests.push_back(parse_request(rj, i++));
    }
    i = 0;
    for (const auto& ej : j.value("expectations", json::array())) {
      const std::string where = "expectations[" + std::to_string(i++) + "]";
      expect_keys(ej, {"request", "scenario", "outcome"}, where);
      ExpectationSpec e;
      e.request = ej.at("request").get<std::string>();
      if (ej.contains("scenario")) {
        e.scenario = ej.at("scenario").get<std::string>();
        scenario_from_string(*e.scenario);  // validate
      }
      if (ej.contains("outcome")) e.outcome = ej.at("outcome").get<std::string>();
      spec.expectations.push_back(std::move(e));
    }
  } catch (const json::exception& e) {
    throw SchemaViolation(e.what());
  }

  // Referential integrity across the spec.
  std::set<std::string> locations(spec.locations.begin(), spec.locations.end());
  std::set<std::string> tenants(spec.tenants.begin(), spec.tenants.end());
  std::set<std::string> mno_names;
  for (const auto& m : spec.mnos) mno_names.insert(m.name);
  std::set<std::string> request_ids;
  for (const auto& p : spec.pools) {
    if (!locations.contains(p.location)) {
      throw DanglingReference("pool at undefined location '" + p.location + "'");
    }
  }
  for (const auto& a : spec.agreements) {
    if (!tenants.contains(a.tenant_id)) {
      throw DanglingReference("agreement for undefined tenant '" +
                              a.tenant_id + "'");
    }
  }
  for (const auto& r : spec.requests) {
    if (!request_ids.insert(r.id).second) {
      throw SchemaViolation("duplicate tenant_slice_id '" + r.id + "'");
    }
    if (r.raw.tenant_id && !tenants.contains(*r.raw.tenant_id)) {
      throw DanglingReference("request '" + r.id + "' names undefined tenant '" +
                              *r.raw.tenant_id + "'");
    }
    if (r.raw.home_location && !locations.contains(*r.raw.home_location)) {
      throw DanglingReference("request '" + r.id +
                              "' names undefined location '" +
                              *r.raw.home_location + "'");
    }
    for (const auto& loc : r.raw.share_with_locations) {
      if (!locations.contains(loc)) {
        throw DanglingReference("request '" + r.id +
                                "' names undefined location '" + loc + "'");
      }
    }
    if (r.raw.customer_group.kind == CustomerGroup::Kind::OpenMnoSubscribers &&
        !mno_names.contains(r.raw.customer_group.mno_name)) {
      throw DanglingReference("request '" + r.id + "' names undefined MNO '" +
                              r.raw.customer_group.mno_name + "'");
    }
  }
  for (const auto& e : spec.expectations) {
    if (!request_ids.contains(e.request)) {
      throw DanglingReference("expectation for undefined request '" +
                              e.request + "'");
    }
  }
  return spec;
}

ScenarioSpec load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string name = path;
  if (auto slash = name.find_last_of('/'); slash != std::string::npos) {
    name = name.substr(slash + 1);
  }
  if (auto dot = name.find_last_of('.'); dot != std::string::npos) {
    name = name.substr(0, dot);
  }
  return parse_scenario_json(buf.str(), name);
}

World build_world(const ScenarioSpec& spec) {
  World world;
  world.uo = DomainRef{DomainKind::MicroOperator, spec.micro_operator};
  world.strict_latency_threshold_ms = spec.strict_latency_threshold_ms;
  for (const auto& loc : spec.locations) {
    world.locations[loc] = LocationRef{loc, world.uo};
    world.pools.emplace(loc, NfPool(LocationRef{loc, world.uo}));
  }
  for (const auto& p : spec.pools) {
    NfPool& pool = world.pools.at(p.location);
    for (const auto& nf : p.resources) pool.add_resource(nf);
  }
  for (const auto& m : spec.mnos) {
    MnoDomain mno;
    mno.domain = DomainRef{DomainKind::Mno, m.name};
    mno.pool = NfPool(LocationRef{m.location, mno.domain});
    for (const auto& nf : m.resources) mno.pool.add_resource(nf);
    mno.policy_table = m.policy_table;
    mno.reachable = m.reachable;
    mno.grant_nssi = m.grant_nssi;
    world.mnos.emplace(m.name, std::move(mno));
  }
  for (const auto& t : spec.tenants) world.tenants.insert(t);
  for (const auto& a : spec.agreements) world.agreements[a.tenant_id] = a;
  return world;
}

}  // namespace slicesim
