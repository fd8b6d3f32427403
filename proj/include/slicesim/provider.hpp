#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "slicesim/mno_stub.hpp"
#include "slicesim/types.hpp"

namespace slicesim {

struct ServiceAgreement {
  std::string tenant_id;
  std::uint64_t valid_from_tick = 0;
  std::uint64_t valid_until_tick = 0;
  std::set<DeploymentScenario> allowed_scenarios;
  bool sharing_permitted = true;
  bool charging_ok = true;
  bool subscription_ok = true;
};

struct ApprovalDecision {
  std::string request_id;
  bool approved = false;
  std::string reason;  // empty when approved
  std::uint64_t decided_at_tick = 0;
};

// Rejection reasons, in the fixed check order the provider applies:
// agreement on file, validity window, scenario, charging, subscription,
// sharing, then the MNO subscriber-policy confirmation for MnoOpen.
namespace reject_reason {
inline constexpr const char* kNoAgreement = "NoAgreement";
inline constexpr const char* kExpired = "Expired";
inline constexpr const char* kScenarioNotAllowed = "ScenarioNotAllowed";
inline constexpr const char* kChargingFailed = "ChargingFailed";
inline constexpr const char* kSubscriptionFailed = "SubscriptionFailed";
inline constexpr const char* kSharingForbidden = "SharingForbidden";
inline constexpr const char* kMnoPolicyDenied = "MnoPolicyDenied";
inline constexpr const char* kMnoUnreachable = "MnoUnreachable";
}  // namespace reject_reason

ApprovalDecision approve_request(const SliceRequest& req,
                                 DeploymentScenario scenario,
                                 const ServiceAgreement* agreement,
                                 std::uint64_t now_tick);

// MnoOpen only: asks the MNO stub for its subscriber-policy verdict and
// folds a Denied or unreachable answer into the decision.
ApprovalDecision confirm_subscriber_policy(ApprovalDecision decision,
                                           const MnoDomain& mno,
                                           const std::string& subscriber_group);

}  // namespace slicesim
