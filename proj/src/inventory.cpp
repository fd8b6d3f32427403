#include "slicesim/inventory.hpp"

#include <numeric>

#include "slicesim/errors.hpp"

namespace slicesim {

void NfPool::add_resource(const NfResource& nf) {
  if (nf.capacity_units < 1) {
    throw ContractViolation("NF '" + nf.id + "' must have capacity >= 1");
  }
  if (resources_.contains(nf.id)) {
    throw ContractViolation("duplicate NF id '" + nf.id + "' in pool " +
                            location_.id);
  }
  resources_[nf.id] = nf;
}

std::vector<std::string> NfPool::allocate_nfs(SubnetKind subnet,
                                              int units_needed,
                                              const std::string& holder) {
  if (units_needed < 1) {
    throw ContractViolation("units_needed must be >= 1");
  }
  for (const auto& [nf_id, h] : allocations_) {
    if (h == holder && resources_.at(nf_id).subnet_affinity == subnet) {
      throw ContractViolation("holder '" + holder +
                              "' already holds NFs for this subnet");
    }
  }

  // Ascending id walk over free NFs of the subnet; stop once covered.
  std::vector<std::string> picked;
  int covered = 0;
  for (const auto& [nf_id, nf] : resources_) {
    if (nf.subnet_affinity != subnet || allocations_.contains(nf_id)) continue;
    picked.push_back(nf_id);
    covered += nf.capacity_units;
    if (covered >= units_needed) break;
  }
  if (covered < units_needed) {
    throw InsufficientResources(
        "pool " + location_.id + " has " + std::to_string(free_units(subnet)) +
        " free " + std::string(to_string(subnet)) + " units, need " +
        std::to_string(units_needed));
  }
  for (const auto& nf_id : picked) allocations_[nf_id] = holder;
  return picked;
}

std::vector<std::string> NfPool::release_nfs(const std::string& holder) {
  std::vector<std::string> released;
  for (auto it = allocations_.begin(); it != allocations_.end();) {
    if (it->second == holder) {
      released.push_back(it->first);
      it = allocations_.erase(it);
    } else {
      ++it;
    }
  }
  return released;
}

PoolSnapshot NfPool::snapshot() const {
  PoolSnapshot snap;
  snap.location_id = location_.id;
  for (SubnetKind s : {SubnetKind::AN, SubnetKind::CN, SubnetKind::DN}) {
    snap.by_subnet[s] = SubnetAccount{};
  }
  for (const auto& [nf_id, nf] : resources_) {
    auto& acc = snap.by_subnet[nf.subnet_affinity];
    acc.total_units += nf.capacity_units;
    acc.total_nfs += 1;
    if (allocations_.contains(nf_id)) {
      acc.allocated_units += nf.capacity_units;
      acc.allocated_nfs += 1;
    } else {
      acc.free_units += nf.capacity_units;
      acc.free_nfs += 1;
    }
  }
  return snap;
}

int NfPool::free_units(SubnetKind subnet) const {
  int units = 0;
  for (const auto& [nf_id, nf] : resources_) {
    if (nf.subnet_affinity == subnet && !allocations_.contains(nf_id)) {
      units += nf.capacity_units;
    }
  }
  return units;
}

}  // namespace slicesim
