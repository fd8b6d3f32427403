#include "slicesim/provider.hpp"

namespace slicesim {

ApprovalDecision approve_request(const SliceRequest& req,
                                 DeploymentScenario scenario,
                                 const ServiceAgreement* agreement,
                                 std::uint64_t now_tick) {
  ApprovalDecision decision;
  decision.request_id = req.tenant_slice_id;
  decision.decided_at_tick = now_tick;

  auto reject = [&](const char* reason) {
    decision.approved = false;
    decision.reason = reason;
    return decision;
  };

  if (agreement == nullptr) return reject(reject_reason::kNoAgreement);
  if (now_tick < agreement->valid_from_tick ||
      now_tick > agreement->valid_until_tick) {
    return reject(reject_reason::kExpired);
  }
  if (!agreement->allowed_scenarios.contains(scenario)) {
    return reject(reject_reason::kScenarioNotAllowed);
  }
  if (!agreement->charging_ok) return reject(reject_reason::kChargingFailed);
  if (!agreement->subscription_ok) {
    return reject(reject_reason::kSubscriptionFailed);
  }
  if (req.sharing_agreement != SharingMode::None &&
      !agreement->sharing_permitted) {
    return reject(reject_reason::kSharingForbidden);
  }
  decision.approved = true;
  return decision;
}

ApprovalDecision confirm_subscriber_policy(ApprovalDecision decision,
                                           const MnoDomain& mno,
                                           const std::string& subscriber_group) {
  if (!decision.approved) return decision;
  if (!mno.reachable) {
    decision.approved = false;
    decision.reason = reject_reason::kMnoUnreachable;
    return decision;
  }
  if (mno_confirm_policy(mno, subscriber_group) == PolicyVerdict::Deny) {
    decision.approved = false;
    decision.reason = reject_reason::kMnoPolicyDenied;
  }
  return decision;
}

}  // namespace slicesim
