// SPDX-License-Identifier: Apache-2.0
//
// Serving-sector selection.
//
// The baseline attaches every UE to the sector with the highest received
// power. The constrained policy first forms the admissible set
//
//   S = { i : PD_i < gamma }
//
// and attaches to the highest-RSS member of S, or declares outage when S is
// empty. The same rule is available as an event-driven state machine
// (Scanning -> Attached -> Handover -> Attached, Outage on an empty S, and a
// periodic forced re-search) for UEs whose reports change over time.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>

#include "emfsim/exposure.hpp"
#include "emfsim/layout.hpp"

namespace emfsim {

/// An empty candidate list means the drop was built incorrectly.
class MalformedDropError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CandidateReport {
  SectorId sector;
  double rss_dbm = 0.0;
  double pd_w_m2 = 0.0;
};

/// What is needed to turn a chosen candidate into experienced exposure and rate.
struct LinkContext {
  double noise_floor_dbm = 0.0;
  double bandwidth_hz = 0.0;
  TissueParams tissue;
};

struct AttachmentOutcome {
  /// Empty when the UE is in outage.
  std::optional<SectorId> serving;
  double experienced_pd_w_m2 = 0.0;
  double experienced_sar_w_kg = 0.0;
  double rate_bps = 0.0;
  int handover_count = 0;

  bool outage() const { return !serving.has_value(); }
};

enum class Policy : std::uint8_t { Baseline, Constrained };

/// Index of the highest-RSS candidate with pd < gamma; lowest sector id wins ties.
/// Pass +infinity to consider every candidate.
std::optional<std::size_t> best_admissible(std::span<const CandidateReport> candidates, double gamma);

AttachmentOutcome select_baseline(std::span<const CandidateReport> candidates, const LinkContext& context);

AttachmentOutcome select_constrained(std::span<const CandidateReport> candidates, double gamma,
                                     const LinkContext& context);

inline AttachmentOutcome select(Policy policy, std::span<const CandidateReport> candidates,
                                double gamma, const LinkContext& context) {
  return policy == Policy::Baseline ? select_baseline(candidates, context)
                                    : select_constrained(candidates, gamma, context);
}

/// Fills exposure and rate for the candidate at `index` (or an outage outcome).
AttachmentOutcome make_outcome(std::span<const CandidateReport> candidates,
                               std::optional<std::size_t> index, const LinkContext& context);

enum class Phase : std::uint8_t { Scanning, Attached, Handover, Outage };

enum class ProtocolEvent : std::uint8_t {
  /// Fresh RSS/PD reports; the serving sector is checked against gamma.
  Measurement,
  /// One clock tick; a full search runs when the timer reaches zero.
  Tick,
};

struct ProtocolConfig {
  double gamma_w_m2 = 10.0;
  int update_period_ticks = 100;
};

struct ProtocolState {
  Phase phase = Phase::Scanning;
  std::optional<SectorId> serving;
  int timer = 0;
  /// Changes from one serving sector to a different one.
  int handover_count = 0;
};

/// Advances the selection state machine by one event.
///  - Scanning: attach to the highest-RSS candidate, arm the timer.
///  - Attached + Measurement: a serving PD >= gamma starts a Handover.
///  - Handover + any event: move to the highest-RSS member of S, or Outage.
///  - Attached/Outage + Tick: count down; at zero re-run the search over S.
/// Candidates must be non-empty.
ProtocolState step_state_machine(const ProtocolState& state, std::span<const CandidateReport> candidates,
                                 const ProtocolConfig& config, ProtocolEvent event);

/// Runs Scanning -> (Handover) -> steady state on static reports.
ProtocolState run_search_cycle(std::span<const CandidateReport> candidates, const ProtocolConfig& config);

std::string_view to_string(Phase phase);
std::string_view to_string(Policy policy);
Policy parse_policy(std::string_view text);

}  // namespace emfsim
