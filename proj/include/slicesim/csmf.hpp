#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "slicesim/types.hpp"

namespace slicesim {

// A tenant request as it arrives off the wire, before validation. Required
// fields are optional here so ingest can report exactly what is missing.
struct RawRequestRecord {
  std::optional<std::string> tenant_slice_id;
  std::optional<std::string> tenant_id;
  std::optional<std::string> home_location;
  std::optional<double> latency_ms;
  std::optional<int> throughput_units;
  std::optional<std::uint64_t> duration_ticks;
  bool mobility = false;
  CustomerGroup customer_group;
  SharingMode sharing_agreement = SharingMode::None;
  std::set<std::string> share_with_locations;
  bool needs_mno_wide_area = false;
  bool mno_needs_uo_access = false;
  DepBBridge dep_b_bridge = DepBBridge::MnoBridged;
  std::string profile_key = "default";
  std::string subscriber_group;
};

enum class ServiceStatus { Active, Terminated };

struct CommunicationService {
  std::string id;
  std::string tenant_id;
  std::vector<std::string> nsi_ids;  // length 1, or 2 for MixedOptionB
  ServiceStatus status = ServiceStatus::Active;
};

// Validates a raw record into a SliceRequest; throws MalformedRequest
// naming the offending field.
SliceRequest ingest_request(const RawRequestRecord& raw);

// Pure communication-requirement to slice-requirement translation.
// latency_ms at or below the threshold maps to Strict.
NetworkSliceRequirements translate_request(const SliceRequest& req,
                                           double strict_latency_threshold_ms);

// Communication-service registry. Receives NSI activation/termination
// notifications from the NSMF as calls on the event thread.
class Csmf {
 public:
  // Every NSI must be Activated and belong to tenant_id; a two-NSI service
  // (Mixed Option B) must span two distinct owner domains.
  CommunicationService assemble_service(const std::vector<Nsi>& nsis,
                                        const std::string& tenant_id,
                                        IdGen& ids);

  // Idempotent served mark; returns true the first time.
  bool notify_tenant(const std::string& service_id);

  bool tenant_served(const std::string& service_id) const;

  void on_nsi_terminated(const std::string& nsi_id);

  const CommunicationService& get(const std::string& service_id) const;
  const std::map<std::string, CommunicationService>& registry() const {
    return services_;
  }

  int active_service_count() const;

 private:
  std::map<std::string, CommunicationService> services_;
  std::set<std::string> served_;
};

}  // namespace slicesim
