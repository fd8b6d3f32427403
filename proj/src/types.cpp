#include "slicesim/types.hpp"

#include "slicesim/errors.hpp"

namespace slicesim {

const char* to_string(DomainKind k) {
  return k == DomainKind::MicroOperator ? "MicroOperator" : "Mno";
}

const char* to_string(SubnetKind s) {
  switch (s) {
    case SubnetKind::AN: return "AN";
    case SubnetKind::CN: return "CN";
    case SubnetKind::DN: return "DN";
  }
  return "?";
}

const char* to_string(NfKind k) { return k == NfKind::Vnf ? "Vnf" : "Pnf"; }

const char* to_string(LifecycleState s) {
  switch (s) {
    case LifecycleState::Instantiated: return "Instantiated";
    case LifecycleState::Configured: return "Configured";
    case LifecycleState::Activated: return "Activated";
    case LifecycleState::Supervised: return "Supervised";
    case LifecycleState::Modified: return "Modified";
    case LifecycleState::Deactivated: return "Deactivated";
    case LifecycleState::Terminated: return "Terminated";
  }
  return "?";
}

const char* to_string(DeploymentScenario s) {
  switch (s) {
    case DeploymentScenario::ClosedDepA: return "ClosedDepA";
    case DeploymentScenario::ClosedDepB: return "ClosedDepB";
    case DeploymentScenario::MnoOpen: return "MnoOpen";
    case DeploymentScenario::PublicOpen: return "PublicOpen";
    case DeploymentScenario::MixedOptionA: return "MixedOptionA";
    case DeploymentScenario::MixedOptionB: return "MixedOptionB";
  }
  return "?";
}

const char* to_string(NsiConfigType t) {
  switch (t) {
    case NsiConfigType::Type1: return "Type1";
    case NsiConfigType::Type2: return "Type2";
    case NsiConfigType::Type3: return "Type3";
  }
  return "?";
}

const char* to_string(SharingMode m) {
  switch (m) {
    case SharingMode::None: return "None";
    case SharingMode::WithinLocation: return "WithinLocation";
    case SharingMode::CrossLocation: return "CrossLocation";
  }
  return "?";
}

const char* to_string(LatencyClass c) {
  return c == LatencyClass::Strict ? "Strict" : "Relaxed";
}

DeploymentScenario scenario_from_string(const std::string& s) {
  if (s == "ClosedDepA") return DeploymentScenario::ClosedDepA;
  if (s == "ClosedDepB") return DeploymentScenario::ClosedDepB;
  if (s == "MnoOpen") return DeploymentScenario::MnoOpen;
  if (s == "PublicOpen") return DeploymentScenario::PublicOpen;
  if (s == "MixedOptionA") return DeploymentScenario::MixedOptionA;
  if (s == "MixedOptionB") return DeploymentScenario::MixedOptionB;
  throw SchemaViolation("unknown deployment scenario '" + s + "'");
}

SubnetKind subnet_from_string(const std::string& s) {
  if (s == "AN") return SubnetKind::AN;
  if (s == "CN") return SubnetKind::CN;
  if (s == "DN") return SubnetKind::DN;
  throw SchemaViolation("unknown subnet kind '" + s + "'");
}

}  // namespace slicesim
