#include "slicesim/mno_stub.hpp"

#include "slicesim/errors.hpp"

namespace slicesim {

Nssi mno_provide_nssi(MnoDomain& mno, const SubnetRequirement& req,
                      Nssmf& nssmf, const std::string& holder_nsi,
                      const std::string& nssi_id) {
  if (!mno.reachable) {
    throw MnoUnreachable("MNO '" + mno.domain.name + "' is unreachable");
  }
  if (!mno.grant_nssi) {
    throw GrantRefused("MNO '" + mno.domain.name + "' refuses NSSI grants");
  }
  return nssmf.provision_nssi(req, mno.pool, holder_nsi, nssi_id, mno.domain);
}

PolicyVerdict mno_confirm_policy(const MnoDomain& mno,
                                 const std::string& subscriber_group) {
  if (!mno.reachable) {
    throw MnoUnreachable("MNO '" + mno.domain.name + "' is unreachable");
  }
  auto it = mno.policy_table.find(subscriber_group);
  if (it == mno.policy_table.end()) return PolicyVerdict::Deny;
  return it->second;
}

}  // namespace slicesim
