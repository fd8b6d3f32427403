#include "slicesim/csmf.hpp"

#include "slicesim/errors.hpp"

namespace slicesim {

SliceRequest ingest_request(const RawRequestRecord& raw) {
  auto missing = [](const char* field) -> MalformedRequest {
    return MalformedRequest(std::string("missing field '") + field + "'");
  };
  if (!raw.tenant_slice_id || raw.tenant_slice_id->empty()) {
    throw missing("tenant_slice_id");
  }
  if (!raw.tenant_id || raw.tenant_id->empty()) throw missing("tenant_id");
  if (!raw.home_location || raw.home_location->empty()) {
    throw missing("home_location");
  }
  if (!raw.latency_ms) throw missing("latency_ms");
  if (*raw.latency_ms <= 0.0) {
    throw MalformedRequest("latency_ms must be positive");
  }
  if (!raw.throughput_units) throw missing("throughput_units");
  if (*raw.throughput_units < 1) {
    throw MalformedRequest("throughput_units must be >= 1");
  }
  if (!raw.duration_ticks) throw missing("duration_ticks");
  if (*raw.duration_ticks < 1) {
    throw MalformedRequest("duration_ticks must be >= 1");
  }
  if (raw.sharing_agreement == SharingMode::CrossLocation &&
      raw.share_with_locations.empty()) {
    throw MalformedRequest(
        "sharing_agreement=CrossLocation requires share_with_locations");
  }
  if (raw.customer_group.kind == CustomerGroup::Kind::OpenMnoSubscribers &&
      raw.customer_group.mno_name.empty()) {
    throw MalformedRequest("OpenMnoSubscribers requires an MNO name");
  }

  SliceRequest req;
  req.tenant_slice_id = *raw.tenant_slice_id;
  req.tenant_id = *raw.tenant_id;
  req.latency_ms = *raw.latency_ms;
  req.throughput_units = *raw.throughput_units;
  req.duration_ticks = *raw.duration_ticks;
  req.mobility = raw.mobility;
  req.customer_group = raw.customer_group;
  req.sharing_agreement = raw.sharing_agreement;
  req.share_with_locations = raw.share_with_locations;
  req.home_location = *raw.home_location;
  req.needs_mno_wide_area = raw.needs_mno_wide_area;
  req.mno_needs_uo_access = raw.mno_needs_uo_access;
  req.dep_b_bridge = raw.dep_b_bridge;
  req.profile_key = raw.profile_key;
  req.subscriber_group =
      raw.subscriber_group.empty() ? req.tenant_id : raw.subscriber_group;
  return req;
}

NetworkSliceRequirements translate_request(const SliceRequest& req,
                                           double strict_latency_threshold_ms) {
  NetworkSliceRequirements out;
  out.latency_class = req.latency_ms <= strict_latency_threshold_ms
                          ? LatencyClass::Strict
                          : LatencyClass::Relaxed;
  out.throughput_units = req.throughput_units;
  out.sharing = req.sharing_agreement;
  out.mobility = req.mobility;
  out.locations = req.share_with_locations;
  out.locations.insert(req.home_location);
  out.duration_ticks = req.duration_ticks;
  out.external_access = req.needs_mno_wide_area;
  out.customer_group = req.customer_group;
  return out;
}

CommunicationService Csmf::assemble_service(const std::vector<Nsi>& nsis,
                                            const std::string& tenant_id,
                                            IdGen& ids) {
  if (nsis.empty()) {
    throw ContractViolation("assemble_service needs at least one NSI");
  }
  for (const auto& nsi : nsis) {
    if (nsi.tenant_id != tenant_id) {
      throw TenantMismatch("NSI '" + nsi.id + "' belongs to '" +
                           nsi.tenant_id + "', not '" + tenant_id + "'");
    }
    if (nsi.state != LifecycleState::Activated) {
      throw InactiveNsi("NSI '" + nsi.id + "' is " +
                        std::string(to_string(nsi.state)));
    }
  }
  if (nsis.size() == 2 && nsis[0].owner_domain == nsis[1].owner_domain) {
    throw ContractViolation("a two-NSI service must span two domains");
  }
  if (nsis.size() > 2) {
    throw ContractViolation("a service holds one NSI, or two for MixedOptionB");
  }

  CommunicationService svc;
  svc.id = ids.next("svc");
  svc.tenant_id = tenant_id;
  for (const auto& nsi : nsis) svc.nsi_ids.push_back(nsi.id);
  services_[svc.id] = svc;
  return svc;
}

bool Csmf::notify_tenant(const std::string& service_id) {
  const auto& svc = get(service_id);
  if (svc.status != ServiceStatus::Active) {
    throw InactiveNsi("service '" + service_id + "' is not active");
  }
  return served_.insert(service_id).second;
}

bool Csmf::tenant_served(const std::string& service_id) const {
  return served_.contains(service_id);
}

void Csmf::on_nsi_terminated(const std::string& nsi_id) {
  for (auto& [id, svc] : services_) {
    for (const auto& ref : svc.nsi_ids) {
      if (ref == nsi_id) svc.status = ServiceStatus::Terminated;
    }
  }
}

const CommunicationService& Csmf::get(const std::string& service_id) const {
  auto it = services_.find(service_id);
  if (it == services_.end()) {
    throw ContractViolation("unknown service '" + service_id + "'");
  }
  return it->second;
}

int Csmf::active_service_count() const {
  int n = 0;
  for (const auto& [id, svc] : services_) {
    if (svc.status == ServiceStatus::Active) ++n;
  }
  return n;
}

}  // namespace slicesim
