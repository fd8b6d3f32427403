#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "slicesim/csmf.hpp"
#include "slicesim/inventory.hpp"
#include "slicesim/mno_stub.hpp"
#include "slicesim/nsmf.hpp"
#include "slicesim/nssmf.hpp"
#include "slicesim/provider.hpp"
#include "slicesim/trace.hpp"
#include "slicesim/types.hpp"

namespace slicesim {

// Full engine state for one run. Single-writer: every mutation happens on
// the event thread driving run_formation_sequence.
struct World {
  DomainRef uo{DomainKind::MicroOperator, "uo"};
  std::map<std::string, LocationRef> locations;   // µO locations by id
  std::map<std::string, NfPool> pools;            // µO pools by location id
  std::map<std::string, MnoDomain> mnos;          // by MNO name
  std::map<std::string, ServiceAgreement> agreements;  // by tenant id
  std::set<std::string> tenants;
  Nssmf nssmf;
  Nsmf nsmf;
  Csmf csmf;
  IdGen ids;
  std::uint64_t tick = 0;
  double strict_latency_threshold_ms = 10.0;

  ProvisioningContext ctx();
  std::map<std::string, PoolSnapshot> all_snapshots() const;
};

// Canonical dump of pools, NSSIs, NSIs and services; equal strings mean
// equal observable state. Used by replay and determinism checks.
std::string world_state_fingerprint(const World& world);

class SequenceEngine {
 public:
  explicit SequenceEngine(World& world, bool invariants_each_event = true)
      : world_(world), invariants_each_event_(invariants_each_event) {}

  // One formation sequence, steps 0-15, one tick per step. Failures become
  // trace outcomes; InvariantViolation is the only thing that escapes.
  FormationTrace run_formation_sequence(const RawRequestRecord& raw);

  // Deactivates and terminates every live NSI, flipping services with it.
  void terminate_all();

  // Throws InvariantViolation naming the broken property.
  void check_invariants() const;

  std::uint64_t invariant_checks_run() const { return invariant_checks_run_; }

 private:
  struct RunState;
  void emit(FormationTrace& trace, int step, Actor actor,
            std::map<std::string, std::string> payload);

  World& world_;
  bool invariants_each_event_ = true;
  std::uint64_t seq_no_ = 0;
  int current_step_ = -1;
  std::uint64_t invariant_checks_run_ = 0;
};

}  // namespace slicesim
