#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "slicesim/inventory.hpp"
#include "slicesim/types.hpp"

namespace slicesim {

struct SubnetRequirement {
  SubnetKind subnet = SubnetKind::AN;
  int units_needed = 1;
  LocationRef location;
  bool shareable = false;
  std::string profile_key = "default";
};

struct Nssi {
  std::string id;
  SubnetKind subnet = SubnetKind::AN;
  DomainRef owner_domain;
  LocationRef location;
  std::set<std::string> nf_ids;
  bool shared = false;
  std::set<std::string> holders;  // NSI ids referencing this NSSI
  std::string profile_key = "default";
  LifecycleState state = LifecycleState::Activated;

  int ref_count() const { return static_cast<int>(holders.size()); }
};

enum class ReleaseResult { Decremented, Terminated };

// One provisioned or attached constituent, as reported back to the engine
// for trace emission and rollback.
struct ConstituentAction {
  std::string nssi_id;
  SubnetKind subnet = SubnetKind::AN;
  std::string location_id;
  std::string domain_name;
  DomainKind domain_kind = DomainKind::MicroOperator;
  bool attached = false;
  bool shared = false;
  std::vector<std::string> nf_ids;
};

struct DomainGroupedNssis {
  // domain name -> NSSI ids, plus whether the set crosses domains.
  std::map<std::string, std::vector<std::string>> by_domain;
  bool spans_external = false;
};

// NSSI registry and lifecycle manager. One instance manages every NSSI in a
// simulation, micro-operator and MNO owned alike; owner_domain tells them
// apart. Ids are assigned by the caller so the engine keeps one counter.
class Nssmf {
 public:
  // Allocates NFs from pool and registers a fresh Activated NSSI referenced
  // by holder_nsi. Throws InsufficientResources with the pool untouched.
  Nssi provision_nssi(const SubnetRequirement& req, NfPool& pool,
                      const std::string& holder_nsi, const std::string& nssi_id,
                      const DomainRef& owner);

  // Adds holder_nsi to an existing shared NSSI. No pool interaction.
  Nssi attach_shared(const std::string& nssi_id, const std::string& holder_nsi,
                     const SubnetRequirement& req);

  // Drops holder_nsi's reference; terminates and frees NFs at refcount zero.
  ReleaseResult release_nssi(const std::string& nssi_id,
                             const std::string& holder_nsi, NfPool& pool);

  // Lowest-id Activated shared NSSI compatible with req, if any.
  std::optional<std::string> find_shareable(const SubnetRequirement& req) const;

  static DomainGroupedNssis aggregate_multi_domain(const std::vector<Nssi>& nssis);

  const Nssi& get(const std::string& nssi_id) const;
  const std::map<std::string, Nssi>& registry() const { return nssis_; }

 private:
  std::map<std::string, Nssi> nssis_;
};

}  // namespace slicesim
