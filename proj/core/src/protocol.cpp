// SPDX-License-Identifier: Apache-2.0

#include "emfsim/protocol.hpp"

#include <limits>
#include <string>

#include "emfsim/channel.hpp"
#include "emfsim/units.hpp"

namespace emfsim {
namespace {

void require_candidates(std::span<const CandidateReport> candidates) {
  if (candidates.empty()) throw MalformedDropError("empty candidate list");
}

std::optional<std::size_t> find_sector(std::span<const CandidateReport> candidates, SectorId id) {
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (candidates[i].sector == id) return i;
  }
  return std::nullopt;
}

ProtocolState full_search(ProtocolState next, std::span<const CandidateReport> candidates,
                          const ProtocolConfig& config) {
  const auto best = best_admissible(candidates, config.gamma_w_m2);
  if (!best) {
    next.phase = Phase::Outage;
    next.serving.reset();
  } else {
    const SectorId chosen = candidates[*best].sector;
    if (next.serving && *next.serving != chosen) ++next.handover_count;
    next.phase = Phase::Attached;
    next.serving = chosen;
  }
  next.timer = config.update_period_ticks;
  return next;
}

}  // namespace

std::optional<std::size_t> best_admissible(std::span<const CandidateReport> candidates, double gamma) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& c = candidates[i];
    if (!(c.pd_w_m2 < gamma)) continue;
    if (!best) {
      best = i;
      continue;
    }
    const auto& b = candidates[*best];
    if (c.rss_dbm > b.rss_dbm || (c.rss_dbm == b.rss_dbm && c.sector < b.sector)) best = i;
  }
  return best;
}

AttachmentOutcome make_outcome(std::span<const CandidateReport> candidates,
                               std::optional<std::size_t> index, const LinkContext& context) {
  AttachmentOutcome out;
  if (!index) return out;
  const auto& c = candidates[*index];
  out.serving = c.sector;
  out.experienced_pd_w_m2 = c.pd_w_m2;
  out.experienced_sar_w_kg = sar_boundary(c.pd_w_m2, context.tissue);
  out.rate_bps = shannon_rate_bps(context.bandwidth_hz, c.rss_dbm - context.noise_floor_dbm);
  return out;
}

AttachmentOutcome select_baseline(std::span<const CandidateReport> candidates, const LinkContext& context) {
  require_candidates(candidates);
  return make_outcome(candidates, best_admissible(candidates, std::numeric_limits<double>::infinity()),
                      context);
}

AttachmentOutcome select_constrained(std::span<const CandidateReport> candidates, double gamma,
                                     const LinkContext& context) {
  require_candidates(candidates);
  require(gamma > 0.0, "gamma must be positive");
  return make_outcome(candidates, best_admissible(candidates, gamma), context);
}

ProtocolState step_state_machine(const ProtocolState& state, std::span<const CandidateReport> candidates,
                                 const ProtocolConfig& config, ProtocolEvent event) {
  require_candidates(candidates);
  ProtocolState next = state;
  switch (state.phase) {
    case Phase::Scanning: {
      const auto best = best_admissible(candidates, std::numeric_limits<double>::infinity());
      next.phase = Phase::Attached;
      next.serving = candidates[*best].sector;
      next.timer = config.update_period_ticks;
      return next;
    }
    case Phase::Handover:
      return full_search(next, candidates, config);
    case Phase::Attached:
      if (event == ProtocolEvent::Measurement) {
        const auto idx = state.serving ? find_sector(candidates, *state.serving) : std::nullopt;
        if (!idx || !(candidates[*idx].pd_w_m2 < config.gamma_w_m2)) next.phase = Phase::Handover;
        return next;
      }
      break;
    case Phase::Outage:
      if (event == ProtocolEvent::Measurement) return next;
      break;
  }
  // Tick in Attached or Outage.
  next.timer = state.timer > 0 ? state.timer - 1 : 0;
  if (next.timer == 0) return full_search(next, candidates, config);
  return next;
}

ProtocolState run_search_cycle(std::span<const CandidateReport> candidates, const ProtocolConfig& config) {
  ProtocolState state;
  state = step_state_machine(state, candidates, config, ProtocolEvent::Measurement);
  state = step_state_machine(state, candidates, config, ProtocolEvent::Measurement);
  if (state.phase == Phase::Handover) {
    state = step_state_machine(state, candidates, config, ProtocolEvent::Measurement);
  }
  return state;
}

std::string_view to_string(Phase phase) {
  switch (phase) {
    case Phase::Scanning: return "Scanning";
    case Phase::Attached: return "Attached";
    case Phase::Handover: return "Handover";
    case Phase::Outage: return "Outage";
  }
  return "?";
}

std::string_view to_string(Policy policy) {
  return policy == Policy::Baseline ? "baseline" : "constrained";
}

Policy parse_policy(std::string_view text) {
  if (text == "baseline") return Policy::Baseline;
  if (text == "constrained") return Policy::Constrained;
  throw ConfigError("unknown policy '" + std::string(text) + "' (expected baseline or constrained)");
}

}  // namespace emfsim
