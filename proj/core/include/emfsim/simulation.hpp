// SPDX-License-Identifier: Apache-2.0
//
// Monte Carlo drop engine and distance sweeps.
//
// A drop places ues_per_sector UEs uniformly in every sector of the layout.
// Each UE sees every sector as a candidate (network-wide attachment); both
// policies are evaluated on the same reports so that paired properties can be
// checked per UE. Drop d draws from RandomStream(seed, d), and per-drop
// results are concatenated in drop order, so output does not depend on the
// number of workers.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "emfsim/exposure.hpp"
#include "emfsim/profiles.hpp"
#include "emfsim/protocol.hpp"
#include "emfsim/statistics.hpp"

namespace emfsim {

struct SweepConfig {
  double dmin_m = 10.0;
  double dmax_m = 100.0;
  double step_m = 5.0;
  std::size_t azimuth_samples = 2000;

  void validate() const;
};

struct RunConfig {
  SystemProfile profile = builtin_profile(Generation::FiveG);
  TissueParams tissue;
  ExposureLimits limits;
  Policy policy = Policy::Constrained;
  double gamma_w_m2 = 10.0;
  int update_period_ticks = 100;
  std::size_t num_drops = 10000;
  std::size_t ues_per_sector = 10;
  std::uint64_t seed = 1;
  /// Only UEs whose home sector belongs to the center site enter the statistics.
  bool center_only = false;
  unsigned workers = 1;
  SweepConfig sweep;

  void validate() const;
};

struct PolicyStats {
  Policy policy = Policy::Baseline;
  /// Served UEs only.
  EmpiricalDistribution pd;
  EmpiricalDistribution sar;
  /// All UEs; outage contributes 0.
  EmpiricalDistribution rate;
  std::size_t ues = 0;
  std::size_t outages = 0;
  /// Served UEs whose experienced PD is at or above gamma.
  std::size_t threshold_violations = 0;
  double mean_handovers = 0.0;

  double outage_fraction() const { return ues == 0 ? 0.0 : static_cast<double>(outages) / static_cast<double>(ues); }
};

struct RunResult {
  PolicyStats baseline;
  PolicyStats constrained;
  std::size_t drops = 0;
  /// UEs whose constrained rate exceeds their baseline rate.
  std::size_t rate_dominance_violations = 0;
  /// UEs whose constrained serving sector differs from the baseline.
  std::size_t reselected_ues = 0;

  const PolicyStats& stats(Policy policy) const {
    return policy == Policy::Baseline ? baseline : constrained;
  }
};

/// One UE of one drop, evaluated under both policies.
struct UeEvaluation {
  UeDrop ue;
  AttachmentOutcome baseline;
  AttachmentOutcome constrained;
};

/// Samples and evaluates every UE of drop `drop_index`. Exposed for tests.
std::vector<UeEvaluation> evaluate_drop(const RunConfig& config, const std::vector<SectorGeometry>& layout,
                                        std::uint64_t drop_index);

/// RSS and PD from every sector toward one UE.
std::vector<CandidateReport> candidate_reports(const SystemProfile& profile,
                                               const std::vector<SectorGeometry>& layout, const UeDrop& ue);

/// Throws ConfigError on an invalid configuration.
RunResult run_drops(const RunConfig& config);

struct SweepRow {
  double distance_m = 0.0;
  MonteCarloEstimate pd;
  MonteCarloEstimate sar;
};

struct SweepResult {
  Generation generation = Generation::FiveG;
  std::vector<SweepRow> rows;
  /// Distance beyond which the azimuth-averaged PD stays below gamma;
  /// empty when it never reaches gamma inside the cell.
  std::optional<double> crossing_distance_m;
  /// Largest azimuth-averaged PD found along the radius.
  double peak_mean_pd_w_m2 = 0.0;
  double peak_distance_m = 0.0;
};

std::vector<double> distance_grid(const SweepConfig& sweep);

/// Azimuth-averaged PD and SAR at a fixed 2D distance from the boresight-0
/// sector of the center site. All distances reuse the same azimuth draws.
SweepRow ring_average(const SystemProfile& profile, const TissueParams& tissue, double distance_m,
                      std::size_t azimuth_samples, std::uint64_t seed);

SweepResult distance_sweep(const SystemProfile& profile, const TissueParams& tissue, const SweepConfig& sweep,
                           std::span<const double> distances, std::uint64_t seed, double gamma_w_m2);

/// Largest in-cell sector distance (the sector's far vertex).
double max_sweep_distance(const SystemProfile& profile);

}  // namespace emfsim
