// SPDX-License-Identifier: Apache-2.0

#include "emfsim/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "emfsim/channel.hpp"
#include "emfsim/units.hpp"

namespace emfsim {
namespace {

constexpr std::size_t kBatchDrops = 64;
constexpr double kCrossingScanStep = 0.25;  // m
constexpr int kRingRejectionTries = 10000;

struct UeRecord {
  double baseline_pd;
  double baseline_rate;
  double constrained_pd;
  double constrained_rate;
  bool constrained_outage;
  int handovers;
  bool reselected;
};

LinkContext make_context(const RunConfig& config) {
  return {noise_floor_dbm(config.profile), config.profile.bandwidth_hz, config.tissue};
}

}  // namespace

void SweepConfig::validate() const {
  require(std::isfinite(dmin_m) && dmin_m > 0.0, "sweep dmin must be positive");
  require(std::isfinite(dmax_m) && dmax_m >= dmin_m, "sweep dmax must be at least dmin");
  require(std::isfinite(step_m) && step_m > 0.0, "sweep step must be positive");
  require(azimuth_samples >= 2, "sweep needs at least two azimuth samples");
}

void RunConfig::validate() const {
  profile.validate();
  tissue.validate();
  limits.validate();
  sweep.validate();
  require(gamma_w_m2 > 0.0, "gamma must be positive");
  require(update_period_ticks >= 1, "update period must be at least one tick");
  require(num_drops >= 1, "num_drops must be at least 1");
  require(ues_per_sector >= 1, "ues_per_sector must be at least 1");
  require(workers >= 1, "workers must be at least 1");
}

std::vector<CandidateReport> candidate_reports(const SystemProfile& profile,
                                               const std::vector<SectorGeometry>& layout, const UeDrop& ue) {
  const PatternParams pattern = pattern_params(profile);
  std::vector<CandidateReport> reports;
  reports.reserve(layout.size());
  for (const auto& sector : layout) {
    const LinkGeometry g = link_geometry(sector, ue);
    reports.push_back({sector.id(), rss_dbm(profile, g, pattern), pd_from_link(profile, g, pattern)});
  }
  return reports;
}

std::vector<UeEvaluation> evaluate_drop(const RunConfig& config, const std::vector<SectorGeometry>& layout,
                                        std::uint64_t drop_index) {
  RandomStream rng(config.seed, drop_index);
  const LinkContext context = make_context(config);
  const ProtocolConfig protocol{config.gamma_w_m2, config.update_period_ticks};

  std::vector<UeEvaluation> out;
  out.reserve(layout.size() * config.ues_per_sector);
  for (const auto& sector : layout) {
    for (std::size_t u = 0; u < config.ues_per_sector; ++u) {
      UeEvaluation eval;
      eval.ue = sample_ue(sector, rng, config.profile.ue_height_m);
      const auto reports = candidate_reports(config.profile, layout, eval.ue);
      eval.baseline = select_baseline(reports, context);

      // Static drop: one search cycle of the state machine.
      const ProtocolState state = run_search_cycle(reports, protocol);
      std::optional<std::size_t> index;
      if (state.serving) {
        for (std::size_t i = 0; i < reports.size(); ++i) {
          if (reports[i].sector == *state.serving) index = i;
        }
      }
      eval.constrained = make_outcome(reports, index, context);
      eval.constrained.handover_count = state.handover_count;
      out.push_back(eval);
    }
  }
  return out;
}

RunResult run_drops(const RunConfig& config) {
  config.validate();
  const auto layout = build_layout(config.profile);

  std::vector<double> b_pd, b_rate, c_pd, c_rate;
  RunResult result;
  result.drops = config.num_drops;
  result.baseline.policy = Policy::Baseline;
  result.constrained.policy = Policy::Constrained;
  std::size_t handovers = 0;

  auto process = [&](std::uint64_t drop) {
    std::vector<UeRecord> records;
    for (const auto& e : evaluate_drop(config, layout, drop)) {
      if (config.center_only && layout[e.ue.home_sector.value].site_index != 0) continue;
      records.push_back({e.baseline.experienced_pd_w_m2, e.baseline.rate_bps, e.constrained.experienced_pd_w_m2,
                         e.constrained.rate_bps, e.constrained.outage(), e.constrained.handover_count,
                         e.constrained.serving != e.baseline.serving});
    }
    return records;
  };

  const unsigned workers = std::max(1u, config.workers);
  for (std::size_t first = 0; first < config.num_drops; first += kBatchDrops) {
    const std::size_t count = std::min(kBatchDrops, config.num_drops - first);
    std::vector<std::vector<UeRecord>> batch(count);
    if (workers == 1) {
      for (std::size_t j = 0; j < count; ++j) batch[j] = process(first + j);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          for (std::size_t j = w; j < count; j += workers) batch[j] = process(first + j);
        });
      }
    }
    for (const auto& records : batch) {
      for (const auto& r : records) {
        b_pd.push_back(r.baseline_pd);
        b_rate.push_back(r.baseline_rate);
        c_rate.push_back(r.constrained_rate);
        ++result.baseline.ues;
        ++result.constrained.ues;
        if (r.baseline_pd >= config.gamma_w_m2) ++result.baseline.threshold_violations;
        if (r.constrained_outage) {
          ++result.constrained.outages;
        } else {
          c_pd.push_back(r.constrained_pd);
          if (r.constrained_pd >= config.gamma_w_m2) ++result.constrained.threshold_violations;
        }
        if (r.constrained_rate > r.baseline_rate) ++result.rate_dominance_violations;
        if (r.reselected) ++result.reselected_ues;
        handovers += static_cast<std::size_t>(r.handovers);
      }
    }
  }

  const double sar_per_pd = sar_boundary(1.0, config.tissue);
  auto finish = [&](PolicyStats& stats, std::vector<double>& pd, std::vector<double>& rate) {
    stats.pd = EmpiricalDistribution(Metric::Pd, std::move(pd));
    stats.sar = stats.pd.scaled(Metric::Sar, sar_per_pd);
    stats.rate = EmpiricalDistribution(Metric::Rate, std::move(rate));
  };
  finish(result.baseline, b_pd, b_rate);
  finish(result.constrained, c_pd, c_rate);
  if (result.constrained.ues > 0) {
    result.constrained.mean_handovers =
        static_cast<double>(handovers) / static_cast<double>(result.constrained.ues);
  }
  return result;
}

std::vector<double> distance_grid(const SweepConfig& sweep) {
  sweep.validate();
  std::vector<double> grid;
  const auto steps = static_cast<std::size_t>(std::floor((sweep.dmax_m - sweep.dmin_m) / sweep.step_m + 1e-9));
  for (std::size_t i = 0; i <= steps; ++i) grid.push_back(sweep.dmin_m + static_cast<double>(i) * sweep.step_m);
  return grid;
}

double max_sweep_distance(const SystemProfile& profile) { return profile.cell_radius_m; }

SweepRow ring_average(const SystemProfile& profile, const TissueParams& tissue, double distance_m,
                      std::size_t azimuth_samples, std::uint64_t seed) {
  require(distance_m > 0.0 && distance_m <= max_sweep_distance(profile) * (1.0 + 1e-12),
          "sweep distance must lie inside the cell");
  const auto layout = build_layout(profile, 0);
  const SectorGeometry& sector = layout.front();
  const PatternParams pattern = pattern_params(profile);

  RandomStream rng(seed, 0);
  std::vector<double> pd(azimuth_samples);
  for (auto& value : pd) {
    UeDrop ue;
    ue.height_m = profile.ue_height_m;
    ue.home_sector = sector.id();
    for (int attempt = 0; attempt < kRingRejectionTries; ++attempt) {
      const double az = deg_to_rad(sector.boresight_deg + rng.uniform(-60.0, 60.0));
      ue.position = {sector.bs_position.x + distance_m * std::cos(az),
                     sector.bs_position.y + distance_m * std::sin(az)};
      if (sector.contains(ue.position)) break;
    }
    value = pd_from_link(profile, link_geometry(sector, ue), pattern);
  }
  std::vector<double> sar(pd.size());
  std::transform(pd.begin(), pd.end(), sar.begin(), [&](double v) { return sar_boundary(v, tissue); });
  return {distance_m, estimate_mean(pd), estimate_mean(sar)};
}

SweepResult distance_sweep(const SystemProfile& profile, const TissueParams& tissue, const SweepConfig& sweep,
                           std::span<const double> distances, std::uint64_t seed, double gamma_w_m2) {
  profile.validate();
  tissue.validate();
  sweep.validate();
  SweepResult result;
  result.generation = profile.generation;
  for (double d : distances) result.rows.push_back(ring_average(profile, tissue, d, sweep.azimuth_samples, seed));

  // Fine scan along the radius for the last distance with mean PD >= gamma.
  const double edge = max_sweep_distance(profile);
  auto mean_pd = [&](double d) { return ring_average(profile, tissue, d, sweep.azimuth_samples, seed).pd.mean; };
  std::optional<double> last_above;
  for (double d = constants::kMinDistance; d <= edge; d += kCrossingScanStep) {
    const double value = mean_pd(d);
    if (value > result.peak_mean_pd_w_m2) {
      result.peak_mean_pd_w_m2 = value;
      result.peak_distance_m = d;
    }
    if (value >= gamma_w_m2) last_above = d;
  }
  if (last_above && *last_above + kCrossingScanStep <= edge) {
    double lo = *last_above;
    double hi = *last_above + kCrossingScanStep;
    for (int i = 0; i < 40; ++i) {
      const double mid = 0.5 * (lo + hi);
      (mean_pd(mid) >= gamma_w_m2 ? lo : hi) = mid;
    }
    result.crossing_distance_m = hi;
  }
  return result;
}

}  // namespace emfsim
