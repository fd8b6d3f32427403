#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace slicesim {

enum class DomainKind { MicroOperator, Mno };

struct DomainRef {
  DomainKind kind = DomainKind::MicroOperator;
  std::string name;

  friend bool operator==(const DomainRef&, const DomainRef&) = default;
  friend auto operator<=>(const DomainRef&, const DomainRef&) = default;
};

struct LocationRef {
  std::string id;
  DomainRef domain;

  friend bool operator==(const LocationRef&, const LocationRef&) = default;
};

enum class SubnetKind { AN, CN, DN };
enum class NfKind { Vnf, Pnf };

enum class LifecycleState {
  Instantiated,
  Configured,
  Activated,
  Supervised,
  Modified,
  Deactivated,
  Terminated,
};

enum class LifecycleEvent {
  Configure,
  Activate,
  Supervise,
  Modify,
  Deactivate,
  Terminate,
};

enum class DeploymentScenario {
  ClosedDepA,
  ClosedDepB,
  MnoOpen,
  PublicOpen,
  MixedOptionA,
  MixedOptionB,
};

enum class NsiConfigType { Type1, Type2, Type3 };

enum class SharingMode { None, WithinLocation, CrossLocation };
enum class LatencyClass { Strict, Relaxed };

// How a Deployment B slice bridges its locations: through the MNO (default)
// or through a second micro-operator site.
enum class DepBBridge { MnoBridged, MultiSite };

struct CustomerGroup {
  enum class Kind { Closed, OpenMnoSubscribers, OpenPublic };
  Kind kind = Kind::Closed;
  std::string mno_name;  // set iff kind == OpenMnoSubscribers

  friend bool operator==(const CustomerGroup&, const CustomerGroup&) = default;
};

// Validated tenant slice request as it leaves the CSMF ingest step.
struct SliceRequest {
  std::string tenant_slice_id;
  std::string tenant_id;
  double latency_ms = 0.0;
  int throughput_units = 1;
  std::uint64_t duration_ticks = 1;
  bool mobility = false;
  CustomerGroup customer_group;
  SharingMode sharing_agreement = SharingMode::None;
  std::set<std::string> share_with_locations;
  std::string home_location;
  bool needs_mno_wide_area = false;
  bool mno_needs_uo_access = false;
  DepBBridge dep_b_bridge = DepBBridge::MnoBridged;
  std::string profile_key = "default";
  std::string subscriber_group;  // MNO open scenarios only
};

// Output of the CSMF requirement translation, input to the NSMF.
struct NetworkSliceRequirements {
  LatencyClass latency_class = LatencyClass::Relaxed;
  int throughput_units = 1;
  SharingMode sharing = SharingMode::None;
  bool mobility = false;
  std::set<std::string> locations;
  std::uint64_t duration_ticks = 1;
  bool external_access = false;
  CustomerGroup customer_group;
};

// End-to-end slice instance. Constituents are NSSI ids resolved through the
// Nssmf registry.
struct Nsi {
  std::string id;
  std::string tenant_id;
  DeploymentScenario scenario = DeploymentScenario::ClosedDepA;
  NsiConfigType config_type = NsiConfigType::Type1;
  std::vector<std::string> constituents;
  LifecycleState state = LifecycleState::Instantiated;
  DomainRef owner_domain;
  std::string serving_agreement;  // MNO name or "public" for open scenarios
};

// Deterministic id source, one per engine run.
class IdGen {
 public:
  std::string next(const std::string& prefix) {
    return prefix + "-" + std::to_string(counter_++);
  }

 private:
  std::uint64_t counter_ = 1;
};

const char* to_string(DomainKind k);
const char* to_string(SubnetKind s);
const char* to_string(NfKind k);
const char* to_string(LifecycleState s);
const char* to_string(DeploymentScenario s);
const char* to_string(NsiConfigType t);
const char* to_string(SharingMode m);
const char* to_string(LatencyClass c);

// Parses the names produced by to_string; throws SchemaViolation on junk.
DeploymentScenario scenario_from_string(const std::string& s);
SubnetKind subnet_from_string(const std::string& s);

}  // namespace slicesim
