#pragma once

#include <map>
#include <string>

#include "slicesim/inventory.hpp"
#include "slicesim/nssmf.hpp"
#include "slicesim/types.hpp"

namespace slicesim {

enum class PolicyVerdict { Allow, Deny };

// Scriptable external MNO domain: an NF pool plus failure knobs. The pool
// obeys the same accounting rules as micro-operator pools.
struct MnoDomain {
  DomainRef domain{DomainKind::Mno, ""};
  NfPool pool;
  std::map<std::string, PolicyVerdict> policy_table;
  bool reachable = true;
  bool grant_nssi = true;
};

// NSSI provisioning on behalf of the NSMF (Dep B / Mixed A paths). The NSSI
// lands in the shared registry with owner_domain = the MNO.
Nssi mno_provide_nssi(MnoDomain& mno, const SubnetRequirement& req,
                      Nssmf& nssmf, const std::string& holder_nsi,
                      const std::string& nssi_id);

// Closed-world policy lookup; unknown groups are denied.
PolicyVerdict mno_confirm_policy(const MnoDomain& mno,
                                 const std::string& subscriber_group);

}  // namespace slicesim
