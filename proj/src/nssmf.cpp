#include "slicesim/nssmf.hpp"

#include "slicesim/errors.hpp"

namespace slicesim {

Nssi Nssmf::provision_nssi(const SubnetRequirement& req, NfPool& pool,
                           const std::string& holder_nsi,
                           const std::string& nssi_id, const DomainRef& owner) {
  if (pool.location().id != req.location.id) {
    throw ContractViolation("pool " + pool.location().id +
                            " cannot serve requirement at " + req.location.id);
  }
  if (nssis_.contains(nssi_id)) {
    throw ContractViolation("duplicate NSSI id '" + nssi_id + "'");
  }
  auto nf_ids = pool.allocate_nfs(req.subnet, req.units_needed, nssi_id);

  Nssi nssi;
  nssi.id = nssi_id;
  nssi.subnet = req.subnet;
  nssi.owner_domain = owner;
  nssi.location = req.location;
  nssi.nf_ids.insert(nf_ids.begin(), nf_ids.end());
  nssi.shared = req.shareable;
  nssi.holders.insert(holder_nsi);
  nssi.profile_key = req.profile_key;
  nssi.state = LifecycleState::Activated;
  nssis_[nssi_id] = nssi;
  return nssi;
}

Nssi Nssmf::attach_shared(const std::string& nssi_id,
                          const std::string& holder_nsi,
                          const SubnetRequirement& req) {
  auto it = nssis_.find(nssi_id);
  if (it == nssis_.end()) {
    throw ContractViolation("unknown NSSI '" + nssi_id + "'");
  }
  Nssi& nssi = it->second;
  if (!nssi.shared) {
    throw NotShareable("NSSI '" + nssi_id + "' is not shareable");
  }
  if (nssi.profile_key != req.profile_key || nssi.subnet != req.subnet ||
      nssi.location.id != req.location.id ||
      nssi.state != LifecycleState::Activated) {
    throw IncompatibleProfile("NSSI '" + nssi_id +
                              "' does not match the requirement profile");
  }
  nssi.holders.insert(holder_nsi);
  return nssi;
}

ReleaseResult Nssmf::release_nssi(const std::string& nssi_id,
                                  const std::string& holder_nsi, NfPool& pool) {
  auto it = nssis_.find(nssi_id);
  if (it == nssis_.end()) {
    throw ContractViolation("unknown NSSI '" + nssi_id + "'");
  }
  Nssi& nssi = it->second;
  if (!nssi.holders.contains(holder_nsi)) {
    throw UnknownHolder("NSI '" + holder_nsi + "' never referenced NSSI '" +
                        nssi_id + "'");
  }
  nssi.holders.erase(holder_nsi);
  if (!nssi.holders.empty()) return ReleaseResult::Decremented;

  pool.release_nfs(nssi_id);
  nssi.nf_ids.clear();
  nssi.state = LifecycleState::Terminated;
  return ReleaseResult::Terminated;
}

std::optional<std::string> Nssmf::find_shareable(
    const SubnetRequirement& req) const {
  for (const auto& [id, nssi] : nssis_) {
    if (nssi.shared && nssi.state == LifecycleState::Activated &&
        nssi.subnet == req.subnet && nssi.location.id == req.location.id &&
        nssi.profile_key == req.profile_key) {
      return id;
    }
  }
  return std::nullopt;
}

DomainGroupedNssis Nssmf::aggregate_multi_domain(
    const std::vector<Nssi>& nssis) {
  if (nssis.empty()) {
    throw ContractViolation("aggregate_multi_domain needs a nonempty list");
  }
  DomainGroupedNssis grouped;
  for (const auto& nssi : nssis) {
    grouped.by_domain[nssi.owner_domain.name].push_back(nssi.id);
    if (nssi.owner_domain.kind == DomainKind::Mno) grouped.spans_external = true;
  }
  return grouped;
}

const Nssi& Nssmf::get(const std::string& nssi_id) const {
  auto it = nssis_.find(nssi_id);
  if (it == nssis_.end()) {
    throw ContractViolation("unknown NSSI '" + nssi_id + "'");
  }
  return it->second;
}

}  // namespace slicesim
