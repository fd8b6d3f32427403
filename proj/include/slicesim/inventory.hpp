#pragma once

#include <map>
#include <string>
#include <vector>

#include "slicesim/types.hpp"

namespace slicesim {

struct NfResource {
  std::string id;
  NfKind kind = NfKind::Vnf;
  SubnetKind subnet_affinity = SubnetKind::AN;
  int capacity_units = 1;

  friend bool operator==(const NfResource&, const NfResource&) = default;
};

struct SubnetAccount {
  int total_units = 0;
  int allocated_units = 0;
  int free_units = 0;
  int total_nfs = 0;
  int allocated_nfs = 0;
  int free_nfs = 0;

  friend bool operator==(const SubnetAccount&, const SubnetAccount&) = default;
};

struct PoolSnapshot {
  std::string location_id;
  std::map<SubnetKind, SubnetAccount> by_subnet;

  friend bool operator==(const PoolSnapshot&, const PoolSnapshot&) = default;
};

// Capacity-accounted VNF/PNF inventory for one location. Selection is
// deterministic: free NFs of the requested subnet are taken in ascending
// id order until the summed capacity covers the need. A failed allocation
// leaves the pool untouched.
class NfPool {
 public:
  NfPool() = default;
  explicit NfPool(LocationRef location) : location_(std::move(location)) {}

  const LocationRef& location() const { return location_; }

  // capacity_units must be >= 1 and the id unused.
  void add_resource(const NfResource& nf);

  // All-or-nothing; throws InsufficientResources when the free capacity of
  // that subnet cannot cover units_needed. The holder must not already hold
  // NFs of this subnet in this pool.
  std::vector<std::string> allocate_nfs(SubnetKind subnet, int units_needed,
                                        const std::string& holder);

  // Frees every NF held by holder; no-op for unknown holders.
  std::vector<std::string> release_nfs(const std::string& holder);

  PoolSnapshot snapshot() const;

  const std::map<std::string, NfResource>& resources() const { return resources_; }
  const std::map<std::string, std::string>& allocations() const { return allocations_; }

  int free_units(SubnetKind subnet) const;

 private:
  LocationRef location_;
  std::map<std::string, NfResource> resources_;
  std::map<std::string, std::string> allocations_;  // nf id -> holder NSSI id
};

}  // namespace slicesim
