#include "slicesim/engine.hpp"

#include <algorithm>
#include <sstream>

#include "slicesim/errors.hpp"

namespace slicesim {

ProvisioningContext World::ctx() {
  ProvisioningContext c;
  c.uo_domain = uo;
  c.uo_pools = &pools;
  c.mnos = &mnos;
  c.nssmf = &nssmf;
  c.ids = &ids;
  return c;
}

std::map<std::string, PoolSnapshot> World::all_snapshots() const {
  std::map<std::string, PoolSnapshot> snaps;
  for (const auto& [loc, pool] : pools) snaps[loc] = pool.snapshot();
  for (const auto& [name, mno] : mnos) {
    snaps[mno.pool.location().id] = mno.pool.snapshot();
  }
  return snaps;
}

std::string world_state_fingerprint(const World& world) {
  std::ostringstream os;
  for (const auto& [loc, snap] : world.all_snapshots()) {
    os << "pool " << loc;
    for (const auto& [subnet, acc] : snap.by_subnet) {
      os << ' ' << to_string(subnet) << ':' << acc.allocated_units << '/'
         << acc.total_units;
    }
    os << '\n';
  }
  for (const auto& [id, nssi] : world.nssmf.registry()) {
    os << "nssi " << id << ' ' << to_string(nssi.subnet) << ' '
       << nssi.location.id << ' ' << to_string(nssi.state) << " refs="
       << nssi.ref_count() << " nfs=";
    for (const auto& nf : nssi.nf_ids) os << nf << ',';
    os << '\n';
  }
  for (const auto& [id, nsi] : world.nsmf.registry()) {
    os << "nsi " << id << ' ' << nsi.tenant_id << ' '
       << to_string(nsi.scenario) << ' ' << to_string(nsi.config_type) << ' '
       << to_string(nsi.state) << " parts=";
    for (const auto& c : nsi.constituents) os << c << ',';
    os << '\n';
  }
  for (const auto& [id, svc] : world.csmf.registry()) {
    os << "svc " << id << ' ' << svc.tenant_id << ' '
       << (svc.status == ServiceStatus::Active ? "Active" : "Terminated")
       << " nsis=";
    for (const auto& n : svc.nsi_ids) os << n << ',';
    os << '\n';
  }
  return os.str();
}

void SequenceEngine::emit(FormationTrace& trace, int step, Actor actor,
                          std::map<std::string, std::string> payload) {
  if (step != current_step_) {
    current_step_ = step;
    ++world_.tick;
  }
  TraceEvent e;
  e.seq_no = ++seq_no_;
  e.tick = world_.tick;
  e.step = step;
  e.request_id = trace.request_id;
  e.actor = actor;
  e.payload = std::move(payload);
  trace.events.push_back(std::move(e));
  if (invariants_each_event_) check_invariants();
}

static std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ',';
    out += p;
  }
  return out.empty() ? "-" : out;
}

FormationTrace SequenceEngine::run_formation_sequence(
    const RawRequestRecord& raw) {
  FormationTrace trace;
  trace.request_id =
      raw.tenant_slice_id.value_or(std::string()).empty()
          ? world_.ids.next("req")
          : *raw.tenant_slice_id;
  seq_no_ = 0;
  current_step_ = -1;

  auto finish = [&](OutcomeKind kind, const std::string& reason) {
    trace.outcome.kind = kind;
    trace.outcome.reason = reason;
    return trace;
  };

  // Step 0: UEs waiting on the tenant. Sentinel, no state.
  emit(trace, 0, Actor::Ue, {{"status", "waiting"}});

  // Step 1: tenant embeds the request and sends it out; CSMF ingest.
  SliceRequest req;
  try {
    req = ingest_request(raw);
  } catch (const SliceError& e) {
    emit(trace, 1, Actor::Tenant, {{"error", e.code()}});
    return finish(OutcomeKind::Rejected, e.code());
  }
  emit(trace, 1, Actor::Tenant, {{"tenant", req.tenant_id}});

  // Step 2: comm. service provider forwards the request to the provider.
  emit(trace, 2, Actor::CommServiceProvider, {{"forwarded", "true"}});

  // Step 3: CSMF translates requirements and hands them to the NSMF.
  NetworkSliceRequirements reqs =
      translate_request(req, world_.strict_latency_threshold_ms);
  DeploymentScenario scenario;
  try {
    scenario = classify_scenario(req);
  } catch (const SliceError& e) {
    emit(trace, 3, Actor::Csmf, {{"error", e.code()}});
    return finish(OutcomeKind::Rejected, e.code());
  }
  const NsiConfigType type =
      determine_config_type(reqs, scenario, req.dep_b_bridge);
  emit(trace, 3, Actor::Csmf,
       {{"scenario", to_string(scenario)},
        {"latency_class", to_string(reqs.latency_class)},
        {"config_type", to_string(type)}});

  // Step 4: provider approval, joint to NSMF and NSSMF; MnoOpen adds the
  // subscriber-policy confirmation.
  const ServiceAgreement* agreement = nullptr;
  if (auto it = world_.agreements.find(req.tenant_id);
      it != world_.agreements.end()) {
    agreement = &it->second;
  }
  ApprovalDecision decision =
      approve_request(req, scenario, agreement, world_.tick + 1);
  if (decision.approved && scenario == DeploymentScenario::MnoOpen) {
    auto it = world_.mnos.find(req.customer_group.mno_name);
    if (it == world_.mnos.end()) {
      decision.approved = false;
      decision.reason = reject_reason::kMnoUnreachable;
    } else {
      decision = confirm_subscriber_policy(decision, it->second,
                                           req.subscriber_group);
    }
  }
  emit(trace, 4, Actor::NetworkProvider,
       {{"verdict", decision.approved ? "Approved" : "Rejected"},
        {"reason", decision.approved ? "-" : decision.reason}});
  if (!decision.approved) {
    return finish(OutcomeKind::Rejected, decision.reason);
  }

  ProvisioningContext ctx = world_.ctx();
  std::vector<ConstituentPlan> plan;
  try {
    plan = plan_constituents(req, reqs, scenario, type, ctx);
  } catch (const SliceError& e) {
    return finish(OutcomeKind::Failed, e.code());
  }

  // Steps 5/6: NSSI requisitions to the micro-operator and MNO NSSMFs.
  for (const auto& item : plan) {
    if (item.from_mno) continue;
    emit(trace, 5, Actor::UoNssmf,
         {{"subnet", to_string(item.req.subnet)},
          {"location", item.req.location.id},
          {"units", std::to_string(item.req.units_needed)}});
  }
  const bool mixed_b = scenario == DeploymentScenario::MixedOptionB;
  for (const auto& item : plan) {
    if (!item.from_mno) continue;
    emit(trace, 6, Actor::MnoNssmf,
         {{"subnet", to_string(item.req.subnet)},
          {"mno", item.mno_name},
          {"units", std::to_string(item.req.units_needed)}});
  }
  if (mixed_b) {
    emit(trace, 6, Actor::MnoNsmf, {{"request", "nsi"}});
  }

  OrchestrationResult uo_result;
  OrchestrationResult mno_result;
  bool have_mno_nsi = false;
  try {
    uo_result =
        world_.nsmf.orchestrate_nsi(req, scenario, type, decision, plan, ctx);
    if (mixed_b) {
      mno_result = world_.nsmf.mno_provide_nsi(ctx.default_mno(), reqs,
                                               req.tenant_id, ctx);
      have_mno_nsi = true;
    }
  } catch (const SliceError& e) {
    if (!uo_result.nsi.id.empty()) {
      // The micro-operator NSI was already composed; undo it too.
      Nsi& nsi = world_.nsmf.get(uo_result.nsi.id);
      advance_lifecycle(nsi, LifecycleEvent::Deactivate);
      world_.nsmf.terminate_nsi(nsi.id, ctx);
    }
    return finish(OutcomeKind::Failed, e.code());
  }

  std::vector<ConstituentAction> actions = uo_result.actions;
  if (have_mno_nsi) {
    actions.insert(actions.end(), mno_result.actions.begin(),
                   mno_result.actions.end());
  }

  // Step 7: NF resources requested and allocated.
  for (const auto& a : actions) {
    if (a.attached) continue;
    emit(trace, 7, Actor::Nf,
         {{"nssi", a.nssi_id},
          {"domain", a.domain_name},
          {"location", a.location_id},
          {"nfs", join(a.nf_ids)}});
  }
  // Step 8: resources provided as NSSIs.
  for (const auto& a : actions) {
    emit(trace, 8,
         a.domain_kind == DomainKind::Mno ? Actor::MnoNssmf : Actor::UoNssmf,
         {{"nssi", a.nssi_id},
          {"subnet", to_string(a.subnet)},
          {"mode", a.attached ? "attached" : "provisioned"}});
  }
  // Step 9: NSSMF manages the shared or non-shared constituents.
  for (const auto& a : actions) {
    emit(trace, 9,
         a.domain_kind == DomainKind::Mno ? Actor::MnoNssmf : Actor::UoNssmf,
         {{"nssi", a.nssi_id}, {"shared", a.shared ? "true" : "false"}});
  }

  // Steps 10/11: NSI composition, attributed back to the tenant.
  emit(trace, 10, Actor::Nsmf,
       {{"nsi", uo_result.nsi.id},
        {"config_type", to_string(uo_result.nsi.config_type)},
        {"constituents", std::to_string(uo_result.nsi.constituents.size())}});
  if (have_mno_nsi) {
    emit(trace, 10, Actor::MnoNsmf, {{"nsi", mno_result.nsi.id}});
  }
  emit(trace, 11, Actor::Nsmf,
       {{"nsi", uo_result.nsi.id}, {"tenant", req.tenant_id}});

  // Steps 12/13: NSIs handed to the CSMF as a communication service.
  std::vector<Nsi> service_nsis{world_.nsmf.get(uo_result.nsi.id)};
  if (have_mno_nsi) service_nsis.push_back(world_.nsmf.get(mno_result.nsi.id));
  CommunicationService svc;
  try {
    svc = world_.csmf.assemble_service(service_nsis, req.tenant_id, world_.ids);
  } catch (const SliceError& e) {
    return finish(OutcomeKind::Failed, e.code());
  }
  std::vector<std::string> nsi_ids = svc.nsi_ids;
  emit(trace, 12, Actor::Csmf, {{"service", svc.id}, {"nsis", join(nsi_ids)}});
  emit(trace, 13, Actor::Csmf, {{"service", svc.id}, {"managed", "true"}});

  // Step 14: communication service delivered to the tenant.
  world_.csmf.notify_tenant(svc.id);
  emit(trace, 14, Actor::CommServiceProvider,
       {{"service", svc.id}, {"delivered", "true"}});

  // Step 15: tenant enables connectivity for its UEs.
  emit(trace, 15, Actor::Ue, {{"attached", "true"}, {"tenant", req.tenant_id}});

  return finish(OutcomeKind::Served, "");
}

void SequenceEngine::terminate_all() {
  ProvisioningContext ctx = world_.ctx();
  std::vector<std::string> live;
  for (const auto& [id, nsi] : world_.nsmf.registry()) {
    if (nsi.state != LifecycleState::Terminated) live.push_back(id);
  }
  for (const auto& id : live) {
    Nsi& nsi = world_.nsmf.get(id);
    if (nsi.state == LifecycleState::Activated ||
        nsi.state == LifecycleState::Supervised ||
        nsi.state == LifecycleState::Modified) {
      advance_lifecycle(nsi, LifecycleEvent::Deactivate);
    }
    world_.nsmf.terminate_nsi(id, ctx);
    world_.csmf.on_nsi_terminated(id);
    if (invariants_each_event_) check_invariants();
  }
}

void SequenceEngine::check_invariants() const {
  ++const_cast<SequenceEngine*>(this)->invariant_checks_run_;
  auto fail = [](const std::string& what) {
    throw InvariantViolation(what);
  };

  // Pool conservation, per subnet and per capacity unit.
  auto check_pool = [&](const NfPool& pool) {
    PoolSnapshot snap = pool.snapshot();
    for (const auto& [subnet, acc] : snap.by_subnet) {
      if (acc.allocated_units + acc.free_units != acc.total_units ||
          acc.allocated_nfs + acc.free_nfs != acc.total_nfs) {
        fail("conservation broken in pool " + snap.location_id);
      }
    }
    for (const auto& [nf, holder] : pool.allocations()) {
      if (!pool.resources().contains(nf)) {
        fail("allocation of unknown NF '" + nf + "'");
      }
    }
  };
  for (const auto& [loc, pool] : world_.pools) check_pool(pool);
  for (const auto& [name, mno] : world_.mnos) check_pool(mno.pool);

  // NSSI records agree with pool allocations; live NF sets are disjoint.
  std::map<std::string, std::string> nf_owner;  // "<loc>/<nf>" -> nssi
  for (const auto& [id, nssi] : world_.nssmf.registry()) {
    if (nssi.state == LifecycleState::Terminated) {
      if (!nssi.nf_ids.empty()) fail("terminated NSSI '" + id + "' holds NFs");
      continue;
    }
    if (nssi.ref_count() < 1) fail("live NSSI '" + id + "' has no holders");
    if (!nssi.shared && nssi.ref_count() != 1) {
      fail("non-shared NSSI '" + id + "' has refcount " +
           std::to_string(nssi.ref_count()));
    }
    if (nssi.nf_ids.empty()) fail("live NSSI '" + id + "' has no NFs");
    for (const auto& nf : nssi.nf_ids) {
      std::string key = nssi.location.id + "/" + nf;
      auto [it, inserted] = nf_owner.emplace(key, id);
      if (!inserted) {
        fail("NF '" + key + "' held by both '" + it->second + "' and '" + id +
             "'");
      }
    }
  }

  // NSI structure rules.
  for (const auto& [id, nsi] : world_.nsmf.registry()) {
    if (nsi.state == LifecycleState::Terminated) continue;
    if (nsi.constituents.empty()) fail("NSI '" + id + "' has no constituents");
    bool has_external = false;
    for (const auto& cid : nsi.constituents) {
      const Nssi& nssi = world_.nssmf.get(cid);
      if (nssi.owner_domain.kind == DomainKind::Mno) has_external = true;
      if (nsi.config_type == NsiConfigType::Type1 && nssi.shared) {
        fail("Type1 NSI '" + id + "' references shared NSSI '" + cid + "'");
      }
      if (nsi.scenario == DeploymentScenario::ClosedDepA &&
          nssi.owner_domain.kind == DomainKind::Mno) {
        fail("ClosedDepA NSI '" + id + "' references MNO NSSI '" + cid + "'");
      }
    }
    if (nsi.config_type == NsiConfigType::Type3 &&
        nsi.owner_domain.kind == DomainKind::MicroOperator && !has_external) {
      fail("Type3 NSI '" + id + "' has no external constituent");
    }
  }

  // Services reference Activated NSIs of their own tenant.
  for (const auto& [id, svc] : world_.csmf.registry()) {
    if (svc.status != ServiceStatus::Active) continue;
    for (const auto& nsi_id : svc.nsi_ids) {
      const Nsi& nsi = world_.nsmf.get(nsi_id);
      if (nsi.tenant_id != svc.tenant_id) {
        fail("service '" + id + "' crosses tenants");
      }
      if (nsi.state != LifecycleState::Activated) {
        fail("active service '" + id + "' references inactive NSI '" +
             nsi_id + "'");
      }
    }
  }
}

}  // namespace slicesim
