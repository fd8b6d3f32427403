#include "slicesim/nsmf.hpp"

#include <algorithm>

#include "slicesim/errors.hpp"

namespace slicesim {

DeploymentScenario classify_scenario(const SliceRequest& req) {
  if (req.needs_mno_wide_area && req.mno_needs_uo_access) {
    throw UnclassifiableRequest("request '" + req.tenant_slice_id +
                                "' sets both mixed directions");
  }
  if (req.mno_needs_uo_access) return DeploymentScenario::MixedOptionB;

  switch (req.customer_group.kind) {
    case CustomerGroup::Kind::OpenMnoSubscribers:
      return DeploymentScenario::MnoOpen;
    case CustomerGroup::Kind::OpenPublic:
      return DeploymentScenario::PublicOpen;
    case CustomerGroup::Kind::Closed:
      break;
  }
  // Closed group. Multiple tenant locations mean Dep B bridging; a
  // single-location request that still consumes MNO wide-area services is
  // the Mixed Option A composition.
  const bool multi_location = !req.share_with_locations.empty() &&
                              !(req.share_with_locations.size() == 1 &&
                                req.share_with_locations.contains(req.home_location));
  if (multi_location) return DeploymentScenario::ClosedDepB;
  if (req.needs_mno_wide_area) return DeploymentScenario::MixedOptionA;
  return DeploymentScenario::ClosedDepA;
}

NsiConfigType determine_config_type(const NetworkSliceRequirements& reqs,
                                    DeploymentScenario scenario,
                                    DepBBridge bridge) {
  const bool external_constituents =
      scenario == DeploymentScenario::MixedOptionA ||
      (scenario == DeploymentScenario::ClosedDepB &&
       bridge == DepBBridge::MnoBridged);
  if (external_constituents) return NsiConfigType::Type3;
  if (reqs.sharing == SharingMode::None ||
      reqs.latency_class == LatencyClass::Strict) {
    return NsiConfigType::Type1;
  }
  return NsiConfigType::Type2;
}

LifecycleState advance_lifecycle(Nsi& nsi, LifecycleEvent event) {
  using S = LifecycleState;
  using E = LifecycleEvent;
  const S s = nsi.state;
  S next = s;
  bool legal = false;
  switch (s) {
    case S::Instantiated:
      legal = event == E::Configure;
      next = S::Configured;
      break;
    case S::Configured:
      legal = event == E::Activate;
      next = S::Activated;
      break;
    case S::Activated:
      if (event == E::Supervise) { legal = true; next = S::Supervised; }
      if (event == E::Deactivate) { legal = true; next = S::Deactivated; }
      break;
    case S::Supervised:
      if (event == E::Supervise) { legal = true; next = S::Supervised; }
      if (event == E::Modify) { legal = true; next = S::Modified; }
      if (event == E::Deactivate) { legal = true; next = S::Deactivated; }
      break;
    case S::Modified:
      legal = event == E::Supervise;
      next = S::Supervised;
      break;
    case S::Deactivated:
      legal = event == E::Terminate;
      next = S::Terminated;
      break;
    case S::Terminated:
      legal = false;
      break;
  }
  if (!legal) {
    throw InvalidTransition("no transition from " +
                            std::string(to_string(s)) + " on this event");
  }
  nsi.state = next;
  return next;
}

NfPool& ProvisioningContext::pool_for(DomainKind kind,
                                      const std::string& location_id) const {
  if (kind == DomainKind::MicroOperator) {
    auto it = uo_pools->find(location_id);
    if (it == uo_pools->end()) {
      throw DanglingReference("no pool at location '" + location_id + "'");
    }
    return it->second;
  }
  for (auto& [name, mno] : *mnos) {
    if (mno.pool.location().id == location_id) return mno.pool;
  }
  throw DanglingReference("no MNO pool at location '" + location_id + "'");
}

MnoDomain& ProvisioningContext::default_mno() const {
  if (mnos->empty()) {
    throw MnoUnreachable("scenario requires an MNO but none is configured");
  }
  return mnos->begin()->second;
}

std::vector<ConstituentPlan> plan_constituents(const SliceRequest& req,
                                               const NetworkSliceRequirements& reqs,
                                               DeploymentScenario scenario,
                                               NsiConfigType type,
                                               const ProvisioningContext& ctx) {
  // A constituent may be served from a shared NSSI only when the tenant
  // permits sharing and latency is relaxed; Type 1 is then impossible.
  const bool shareable = reqs.sharing != SharingMode::None &&
                         reqs.latency_class == LatencyClass::Relaxed;
  (void)type;

  LocationRef home{req.home_location, ctx.uo_domain};
  auto uo_req = [&](SubnetKind subnet, const LocationRef& loc) {
    ConstituentPlan p;
    p.req = SubnetRequirement{subnet, std::max(1, reqs.throughput_units), loc,
                              shareable, req.profile_key};
    return p;
  };
  auto mno_req = [&](SubnetKind subnet) {
    MnoDomain& mno = ctx.default_mno();
    ConstituentPlan p;
    p.req = SubnetRequirement{subnet, std::max(1, reqs.throughput_units),
                              mno.pool.location(), shareable, req.profile_key};
    p.from_mno = true;
    p.mno_name = mno.domain.name;
    return p;
  };

  std::vector<ConstituentPlan> plan;
  switch (scenario) {
    case DeploymentScenario::ClosedDepA:
    case DeploymentScenario::MnoOpen:
    case DeploymentScenario::PublicOpen:
    case DeploymentScenario::MixedOptionB:  // micro-operator side only
      plan = {uo_req(SubnetKind::AN, home), uo_req(SubnetKind::CN, home),
              uo_req(SubnetKind::DN, home)};
      break;
    case DeploymentScenario::ClosedDepB: {
      if (req.dep_b_bridge == DepBBridge::MnoBridged) {
        // The MNO carries the inter-site core.
        plan = {uo_req(SubnetKind::AN, home), mno_req(SubnetKind::CN),
                uo_req(SubnetKind::DN, home)};
      } else {
        // Second micro-operator site carries the core.
        std::string second;
        for (const auto& loc : req.share_with_locations) {
          if (loc != req.home_location) { second = loc; break; }
        }
        if (second.empty()) {
          throw ContractViolation("multi-site Dep B needs a second location");
        }
        LocationRef site{second, ctx.uo_domain};
        plan = {uo_req(SubnetKind::AN, home), uo_req(SubnetKind::CN, site),
                uo_req(SubnetKind::DN, home)};
      }
      break;
    }
    case DeploymentScenario::MixedOptionA:
      // Wide-area services (faraway server, remote monitoring) sit in the
      // data network drawn from the MNO.
      plan = {uo_req(SubnetKind::AN, home), uo_req(SubnetKind::CN, home),
              mno_req(SubnetKind::DN)};
      break;
  }
  return plan;
}

Nsi Nsmf::compose_nsi(const std::string& nsi_id, const std::string& tenant_id,
                      DeploymentScenario scenario, NsiConfigType type,
                      const DomainRef& owner,
                      const std::vector<ConstituentAction>& actions,
                      const std::string& serving_agreement) {
  Nsi nsi;
  nsi.id = nsi_id;
  nsi.tenant_id = tenant_id;
  nsi.scenario = scenario;
  nsi.config_type = type;
  nsi.owner_domain = owner;
  nsi.serving_agreement = serving_agreement;
  for (const auto& a : actions) nsi.constituents.push_back(a.nssi_id);
  advance_lifecycle(nsi, LifecycleEvent::Configure);
  advance_lifecycle(nsi, LifecycleEvent::Activate);
  return nsi;
}

OrchestrationResult Nsmf::orchestrate_nsi(
    const SliceRequest& req, DeploymentScenario scenario, NsiConfigType type,
    const ApprovalDecision& approval, const std::vector<ConstituentPlan>& plan,
    const ProvisioningContext& ctx) {
  if (!approval.approved) {
    throw RequestDiscarded("request '" + req.tenant_slice_id +
                           "' has no approval (" + approval.reason + ")");
  }

  const std::string nsi_id = ctx.ids->next("nsi");
  std::vector<ConstituentAction> actions;
  try {
    for (const auto& item : plan) {
      ConstituentAction action;
      action.subnet = item.req.subnet;
      action.location_id = item.req.location.id;
      if (item.req.shareable) {
        if (auto existing = ctx.nssmf->find_shareable(item.req)) {
          Nssi nssi = ctx.nssmf->attach_shared(*existing, nsi_id, item.req);
          action.nssi_id = nssi.id;
          action.domain_name = nssi.owner_domain.name;
          action.domain_kind = nssi.owner_domain.kind;
          action.attached = true;
          action.shared = true;
          actions.push_back(action);
          continue;
        }
      }
      Nssi nssi;
      const std::string nssi_id = ctx.ids->next("nssi");
      if (item.from_mno) {
        MnoDomain& mno = ctx.mnos->at(item.mno_name);
        nssi = mno_provide_nssi(mno, item.req, *ctx.nssmf, nsi_id, nssi_id);
      } else {
        NfPool& pool = ctx.pool_for(DomainKind::MicroOperator, item.req.location.id);
        nssi = ctx.nssmf->provision_nssi(item.req, pool, nsi_id, nssi_id,
                                         ctx.uo_domain);
      }
      action.nssi_id = nssi.id;
      action.domain_name = nssi.owner_domain.name;
      action.domain_kind = nssi.owner_domain.kind;
      action.attached = false;
      action.shared = nssi.shared;
      action.nf_ids.assign(nssi.nf_ids.begin(), nssi.nf_ids.end());
      actions.push_back(action);
    }
  } catch (const SliceError&) {
    rollback_constituents(actions, nsi_id, ctx);
    throw;
  }

  std::string serving;
  if (scenario == DeploymentScenario::MnoOpen) {
    serving = req.customer_group.mno_name;
  } else if (scenario == DeploymentScenario::PublicOpen) {
    serving = "public";
  }

  OrchestrationResult result;
  result.nsi = compose_nsi(nsi_id, req.tenant_id, scenario, type,
                           ctx.uo_domain, actions, serving);
  result.actions = std::move(actions);
  nsis_[result.nsi.id] = result.nsi;
  return result;
}

OrchestrationResult Nsmf::mno_provide_nsi(MnoDomain& mno,
                                          const NetworkSliceRequirements& reqs,
                                          const std::string& tenant_id,
                                          const ProvisioningContext& ctx) {
  if (!mno.reachable) {
    throw MnoUnreachable("MNO '" + mno.domain.name + "' is unreachable");
  }
  const std::string nsi_id = ctx.ids->next("nsi");
  std::vector<ConstituentAction> actions;
  try {
    for (SubnetKind subnet : {SubnetKind::AN, SubnetKind::CN, SubnetKind::DN}) {
      SubnetRequirement sr{subnet, std::max(1, reqs.throughput_units),
                           mno.pool.location(), false, "mno"};
      const std::string nssi_id = ctx.ids->next("nssi");
      Nssi nssi = slicesim::mno_provide_nssi(mno, sr, *ctx.nssmf, nsi_id, nssi_id);
      ConstituentAction action;
      action.nssi_id = nssi.id;
      action.subnet = subnet;
      action.location_id = nssi.location.id;
      action.domain_name = mno.domain.name;
      action.domain_kind = DomainKind::Mno;
      action.nf_ids.assign(nssi.nf_ids.begin(), nssi.nf_ids.end());
      actions.push_back(action);
    }
  } catch (const SliceError&) {
    rollback_constituents(actions, nsi_id, ctx);
    throw;
  }
  OrchestrationResult result;
  result.nsi = compose_nsi(nsi_id, tenant_id, DeploymentScenario::MixedOptionB,
                           NsiConfigType::Type1, mno.domain, actions, "");
  result.actions = std::move(actions);
  nsis_[result.nsi.id] = result.nsi;
  return result;
}

TerminationReport Nsmf::terminate_nsi(const std::string& nsi_id,
                                      const ProvisioningContext& ctx) {
  Nsi& nsi = get(nsi_id);
  if (nsi.state != LifecycleState::Deactivated) {
    throw InvalidTransition("NSI '" + nsi_id + "' is " +
                            std::string(to_string(nsi.state)) +
                            ", termination requires Deactivated");
  }
  TerminationReport report;
  report.nsi_id = nsi_id;
  for (const auto& nssi_id : nsi.constituents) {
    const Nssi& nssi = ctx.nssmf->get(nssi_id);
    std::vector<std::string> nfs(nssi.nf_ids.begin(), nssi.nf_ids.end());
    NfPool& pool = ctx.pool_for(nssi.owner_domain.kind, nssi.location.id);
    ReleaseResult r = ctx.nssmf->release_nssi(nssi_id, nsi_id, pool);
    if (r == ReleaseResult::Terminated) {
      report.terminated_nssis.push_back(nssi_id);
      report.freed_nf_ids.insert(report.freed_nf_ids.end(), nfs.begin(), nfs.end());
    } else {
      report.surviving_shared_nssis.push_back(nssi_id);
    }
  }
  advance_lifecycle(nsi, LifecycleEvent::Terminate);
  return report;
}

Nsi& Nsmf::get(const std::string& nsi_id) {
  auto it = nsis_.find(nsi_id);
  if (it == nsis_.end()) {
    throw ContractViolation("unknown NSI '" + nsi_id + "'");
  }
  return it->second;
}

const Nsi& Nsmf::get(const std::string& nsi_id) const {
  return const_cast<Nsmf*>(this)->get(nsi_id);
}

void rollback_constituents(const std::vector<ConstituentAction>& actions,
                           const std::string& holder_nsi,
                           const ProvisioningContext& ctx) {
  for (auto it = actions.rbegin(); it != actions.rend(); ++it) {
    NfPool& pool = ctx.pool_for(it->domain_kind, it->location_id);
    ctx.nssmf->release_nssi(it->nssi_id, holder_nsi, pool);
  }
}

}  // namespace slicesim
