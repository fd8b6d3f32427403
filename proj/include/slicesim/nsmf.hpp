#pragma once

#include <map>
#include <string>
#include <vector>

#include "slicesim/inventory.hpp"
#include "slicesim/mno_stub.hpp"
#include "slicesim/nssmf.hpp"
#include "slicesim/provider.hpp"
#include "slicesim/types.hpp"

namespace slicesim {

// Table-driven deployment-scenario classification. Throws
// UnclassifiableRequest when both mixed-direction flags are set.
DeploymentScenario classify_scenario(const SliceRequest& req);

// Type 3 is structural (external constituents) and decided first; sharing
// and latency then split Type 1 from Type 2.
NsiConfigType determine_config_type(const NetworkSliceRequirements& reqs,
                                    DeploymentScenario scenario,
                                    DepBBridge bridge = DepBBridge::MnoBridged);

// Applies the legal-transition graph; throws InvalidTransition and leaves
// the NSI unchanged on an illegal event.
LifecycleState advance_lifecycle(Nsi& nsi, LifecycleEvent event);

// Everything orchestration needs to reach pools and registries. Non-owning.
struct ProvisioningContext {
  DomainRef uo_domain;
  std::map<std::string, NfPool>* uo_pools = nullptr;  // by location id
  std::map<std::string, MnoDomain>* mnos = nullptr;   // by MNO name
  Nssmf* nssmf = nullptr;
  IdGen* ids = nullptr;

  NfPool& pool_for(DomainKind kind, const std::string& location_id) const;
  MnoDomain& default_mno() const;  // lowest-name configured MNO
};

struct ConstituentPlan {
  SubnetRequirement req;
  bool from_mno = false;
  std::string mno_name;
};

// Pure: which AN/CN/DN requirements an NSI needs and which domain serves
// each, per scenario. Exactly one AN, one CN, one DN.
std::vector<ConstituentPlan> plan_constituents(const SliceRequest& req,
                                               const NetworkSliceRequirements& reqs,
                                               DeploymentScenario scenario,
                                               NsiConfigType type,
                                               const ProvisioningContext& ctx);

struct OrchestrationResult {
  Nsi nsi;
  std::vector<ConstituentAction> actions;
};

struct TerminationReport {
  std::string nsi_id;
  std::vector<std::string> terminated_nssis;
  std::vector<std::string> surviving_shared_nssis;
  std::vector<std::string> freed_nf_ids;
};

class Nsmf {
 public:
  // Executes the plan: shared attach first on Type 2 paths, fresh
  // provisioning otherwise; full sibling rollback on any failure. Throws
  // RequestDiscarded for rejected approvals before touching any pool.
  OrchestrationResult orchestrate_nsi(const SliceRequest& req,
                                      DeploymentScenario scenario,
                                      NsiConfigType type,
                                      const ApprovalDecision& approval,
                                      const std::vector<ConstituentPlan>& plan,
                                      const ProvisioningContext& ctx);

  // MNO-side NSI for Mixed Option B, provisioned on demand from the stub
  // pool (AN+CN+DN at the MNO site).
  OrchestrationResult mno_provide_nsi(MnoDomain& mno,
                                      const NetworkSliceRequirements& reqs,
                                      const std::string& tenant_id,
                                      const ProvisioningContext& ctx);

  // Releases every constituent; pre: state == Deactivated.
  TerminationReport terminate_nsi(const std::string& nsi_id,
                                  const ProvisioningContext& ctx);

  Nsi& get(const std::string& nsi_id);
  const Nsi& get(const std::string& nsi_id) const;
  const std::map<std::string, Nsi>& registry() const { return nsis_; }

 private:
  Nsi compose_nsi(const std::string& nsi_id, const std::string& tenant_id,
                  DeploymentScenario scenario, NsiConfigType type,
                  const DomainRef& owner,
                  const std::vector<ConstituentAction>& actions,
                  const std::string& serving_agreement);

  std::map<std::string, Nsi> nsis_;
};

// Releases the listed constituents in reverse order (shared ones are just
// detached). Used for sibling rollback on partial provisioning failure.
void rollback_constituents(const std::vector<ConstituentAction>& actions,
                           const std::string& holder_nsi,
                           const ProvisioningContext& ctx);

}  // namespace slicesim
