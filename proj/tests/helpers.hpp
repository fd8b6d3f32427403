#pragma once

#include <string>
#include <vector>

#include "slicesim/csmf.hpp"
#include "slicesim/inventory.hpp"
#include "slicesim/types.hpp"

namespace slicesim::testing {

inline LocationRef uo_loc(const std::string& id) {
  return LocationRef{id, DomainRef{DomainKind::MicroOperator, "uo"}};
}

struct NfSpec {
  std::string id;
  SubnetKind subnet;
  int capacity = 1;
};

inline NfPool make_pool(const std::string& location,
                        const std::vector<NfSpec>& nfs) {
  NfPool pool(uo_loc(location));
  for (const auto& nf : nfs) {
    pool.add_resource(NfResource{nf.id, NfKind::Vnf, nf.subnet, nf.capacity});
  }
  return pool;
}

// A complete, valid closed-group record; tests tweak individual fields.
inline RawRequestRecord basic_record(const std::string& slice_id = "req-1",
                                     const std::string& tenant = "t1") {
  RawRequestRecord raw;
  raw.tenant_slice_id = slice_id;
  raw.tenant_id = tenant;
  raw.home_location = "L1";
  raw.latency_ms = 5.0;
  raw.throughput_units = 2;
  raw.duration_ticks = 100;
  return raw;
}

inline std::string scenario_path(const std::string& name) {
  return std::string(SLICESIM_SCENARIO_DIR) + "/" + name + ".json";
}

// Sum of allocated units over every subnet of a snapshot.
inline int allocated_units(const PoolSnapshot& snap) {
  int total = 0;
  for (const auto& [subnet, acct] : snap.by_subnet) total += acct.allocated_units;
  return total;
}

}  // namespace slicesim::testing
