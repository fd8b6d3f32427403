#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "slicesim/types.hpp"

namespace slicesim {

enum class Actor {
  Tenant,
  CommServiceProvider,
  Csmf,
  NetworkProvider,
  Nsmf,
  UoNssmf,
  MnoNssmf,
  MnoNsmf,
  Nf,
  Ue,
};

const char* to_string(Actor a);
Actor actor_from_string(const std::string& s);

struct TraceEvent {
  std::uint64_t seq_no = 0;
  std::uint64_t tick = 0;
  int step = 0;  // 0..15
  std::string request_id;
  Actor actor = Actor::Tenant;
  std::map<std::string, std::string> payload;
};

enum class OutcomeKind { Served, Rejected, Failed };

struct Outcome {
  OutcomeKind kind = OutcomeKind::Served;
  std::string reason;  // empty for Served

  std::string str() const;
  friend bool operator==(const Outcome&, const Outcome&) = default;
};

struct FormationTrace {
  std::string request_id;
  std::vector<TraceEvent> events;
  Outcome outcome;
};

// Step order derived from the formation-sequence narrative. Steps 5 and 6
// are parallel requisitions; everything else is a pipeline.
inline constexpr std::array<std::pair<int, int>, 18> kStepDependencyEdges{{
    {0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 5}, {3, 6}, {4, 6},
    {5, 7}, {6, 7}, {7, 8}, {8, 9}, {9, 10}, {10, 11}, {11, 12}, {12, 13},
    {13, 14}, {14, 15},
}};

struct TraceViolation {
  std::size_t event_index = 0;  // index of the offending event, or 0
  std::string rule;
};

struct ConformanceReport {
  bool conformant = true;
  std::vector<TraceViolation> violations;
};

// Checks ordering against the dependency edges, approval-before-
// provisioning, per-outcome step presence, the step-6/MNO coupling, and
// seq_no / tick monotonicity.
ConformanceReport validate_trace(const FormationTrace& trace,
                                 DeploymentScenario scenario);

// Line format: seq_no tick step request_id actor k=v ... then a final
// "outcome <request_id> <outcome>" line. LF endings, byte-stable.
void write_trace(std::ostream& os, const FormationTrace& trace);
std::string trace_to_string(const FormationTrace& trace);
FormationTrace parse_trace(std::istream& is);  // throws MalformedTrace

}  // namespace slicesim
