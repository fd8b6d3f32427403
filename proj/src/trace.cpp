#include "slicesim/trace.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>

#include "slicesim/errors.hpp"

namespace slicesim {

const char* to_string(Actor a) {
  switch (a) {
    case Actor::Tenant: return "Tenant";
    case Actor::CommServiceProvider: return "CommServiceProvider";
    case Actor::Csmf: return "Csmf";
    case Actor::NetworkProvider: return "NetworkProvider";
    case Actor::Nsmf: return "Nsmf";
    case Actor::UoNssmf: return "UoNssmf";
    case Actor::MnoNssmf: return "MnoNssmf";
    case Actor::MnoNsmf: return "MnoNsmf";
    case Actor::Nf: return "Nf";
    case Actor::Ue: return "Ue";
  }
  return "?";
}

Actor actor_from_string(const std::string& s) {
  for (Actor a : {Actor::Tenant, Actor::CommServiceProvider, Actor::Csmf,
                  Actor::NetworkProvider, Actor::Nsmf, Actor::UoNssmf,
                  Actor::MnoNssmf, Actor::MnoNsmf, Actor::Nf, Actor::Ue}) {
    if (s == to_string(a)) return a;
  }
  throw MalformedTrace("unknown actor '" + s + "'");
}

std::string Outcome::str() const {
  switch (kind) {
    case OutcomeKind::Served: return "Served";
    case OutcomeKind::Rejected: return "Rejected:" + reason;
    case OutcomeKind::Failed: return "Failed:" + reason;
  }
  return "?";
}

static Outcome outcome_from_string(const std::string& s) {
  Outcome out;
  if (s == "Served") {
    out.kind = OutcomeKind::Served;
    return out;
  }
  auto colon = s.find(':');
  std::string head = s.substr(0, colon);
  if (colon != std::string::npos) out.reason = s.substr(colon + 1);
  if (head == "Rejected") {
    out.kind = OutcomeKind::Rejected;
  } else if (head == "Failed") {
    out.kind = OutcomeKind::Failed;
  } else {
    throw MalformedTrace("unknown outcome '" + s + "'");
  }
  return out;
}

ConformanceReport validate_trace(const FormationTrace& trace,
                                 DeploymentScenario scenario) {
  ConformanceReport report;
  auto flag = [&](std::size_t idx, std::string rule) {
    report.conformant = false;
    report.violations.push_back({idx, std::move(rule)});
  };

  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::array<std::uint64_t, 16> first_idx;
  std::array<std::uint64_t, 16> last_idx;
  first_idx.fill(kNone);
  last_idx.fill(kNone);

  bool mno_involved = false;
  for (std::size_t i = 0; i < trace.events.size(); ++i) {
    const TraceEvent& e = trace.events[i];
    if (e.step < 0 || e.step > 15) {
      flag(i, "step out of range [0,15]");
      continue;
    }
    if (i > 0) {
      if (e.seq_no <= trace.events[i - 1].seq_no) {
        flag(i, "seq_no not strictly increasing");
      }
      if (e.tick < trace.events[i - 1].tick) flag(i, "tick decreased");
    }
    if (first_idx[e.step] == kNone) first_idx[e.step] = i;
    last_idx[e.step] = i;
    if (e.actor == Actor::MnoNssmf || e.actor == Actor::MnoNsmf) {
      mno_involved = true;
    }
  }

  for (const auto& [a, b] : kStepDependencyEdges) {
    if (first_idx[a] == kNone || first_idx[b] == kNone) continue;
    if (last_idx[a] > first_idx[b]) {
      flag(first_idx[b], "dependency edge " + std::to_string(a) + "->" +
                             std::to_string(b) + " violated");
    }
  }

  // Approval must precede any provisioning activity.
  if (first_idx[4] != kNone) {
    for (int s = 5; s <= 15; ++s) {
      if (first_idx[s] != kNone && first_idx[s] < last_idx[4]) {
        flag(first_idx[s],
             "step " + std::to_string(s) + " precedes approval (step 4)");
      }
    }
  }

  switch (trace.outcome.kind) {
    case OutcomeKind::Served: {
      for (int s : {0, 1, 2, 3, 4, 5, 7, 8, 9, 10, 11, 12, 13, 14, 15}) {
        if (first_idx[s] == kNone) {
          flag(0, "served trace is missing step " + std::to_string(s));
        }
      }
      break;
    }
    case OutcomeKind::Rejected: {
      for (int s = 5; s <= 15; ++s) {
        if (first_idx[s] != kNone) {
          flag(first_idx[s],
               "rejected trace contains step " + std::to_string(s));
        }
      }
      break;
    }
    case OutcomeKind::Failed:
      break;
  }

  // Step 6 is the MNO requisition; it appears exactly when MNO management
  // functions take part, and never in scenarios the MNO cannot serve.
  const bool step6 = first_idx[6] != kNone;
  if (step6 != mno_involved) {
    flag(step6 ? first_idx[6] : 0,
         step6 ? "step 6 present without MNO involvement"
               : "MNO involvement without a step-6 event");
  }
  const bool mno_forbidden = scenario == DeploymentScenario::ClosedDepA ||
                             scenario == DeploymentScenario::MnoOpen ||
                             scenario == DeploymentScenario::PublicOpen;
  if (step6 && mno_forbidden) {
    flag(first_idx[6], "step 6 forbidden in scenario " +
                           std::string(to_string(scenario)));
  }
  if (trace.outcome.kind == OutcomeKind::Served && !step6 &&
      (scenario == DeploymentScenario::MixedOptionA ||
       scenario == DeploymentScenario::MixedOptionB)) {
    flag(0, "served mixed-scenario trace lacks a step-6 event");
  }

  return report;
}

void write_trace(std::ostream& os, const FormationTrace& trace) {
  for (const TraceEvent& e : trace.events) {
    os << e.seq_no << ' ' << e.tick << ' ' << e.step << ' ' << e.request_id
       << ' ' << to_string(e.actor);
    for (const auto& [k, v] : e.payload) os << ' ' << k << '=' << v;
    os << '\n';
  }
  os << "outcome " << trace.request_id << ' ' << trace.outcome.str() << '\n';
}

std::string trace_to_string(const FormationTrace& trace) {
  std::ostringstream os;
  write_trace(os, trace);
  return os.str();
}

FormationTrace parse_trace(std::istream& is) {
  FormationTrace trace;
  std::string line;
  bool saw_outcome = false;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (saw_outcome) {
      throw MalformedTrace("content after the outcome line");
    }
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "outcome") {
      std::string req_id, outcome_str;
      if (!(ls >> req_id >> outcome_str)) {
        throw MalformedTrace("bad outcome line " + std::to_string(line_no));
      }
      trace.request_id = req_id;
      trace.outcome = outcome_from_string(outcome_str);
      saw_outcome = true;
      continue;
    }
    TraceEvent e;
    std::string actor;
    std::istringstream es(line);
    if (!(es >> e.seq_no >> e.tick >> e.step >> e.request_id >> actor)) {
      throw MalformedTrace("bad event line " + std::to_string(line_no));
    }
    if (e.step < 0 || e.step > 15) {
      throw MalformedTrace("step out of range on line " +
                           std::to_string(line_no));
    }
    e.actor = actor_from_string(actor);
    std::string kv;
    while (es >> kv) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) {
        throw MalformedTrace("bad payload token '" + kv + "' on line " +
                             std::to_string(line_no));
      }
      e.payload[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    trace.events.push_back(std::move(e));
  }
  if (!saw_outcome) throw MalformedTrace("missing outcome line");
  return trace;
}

}  // namespace slicesim
