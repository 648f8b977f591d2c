// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <limits>

#include "emfsim/channel.hpp"
#include "emfsim/simulation.hpp"
#include "emfsim/units.hpp"

using namespace emfsim;

namespace {

RunConfig small_run(Generation g, std::size_t drops) {
  RunConfig cfg;
  cfg.profile = builtin_profile(g);
  cfg.num_drops = drops;
  cfg.ues_per_sector = 3;
  cfg.seed = 2718;
  return cfg;
}

}  // namespace

TEST_CASE("drop evaluation covers every sector with network-wide candidates") {
  const auto cfg = small_run(Generation::FiveG, 1);
  const auto layout = build_layout(cfg.profile);
  const auto ues = evaluate_drop(cfg, layout, 0);
  REQUIRE(ues.size() == layout.size() * cfg.ues_per_sector);
  for (std::size_t i = 0; i < ues.size(); ++i) {
    const auto& e = ues[i];
    CHECK(e.ue.home_sector.value == i / cfg.ues_per_sector);
    CHECK(layout[e.ue.home_sector.value].contains(e.ue.position));
    REQUIRE(e.baseline.serving);
    const auto reports = candidate_reports(cfg.profile, layout, e.ue);
    CHECK(reports.size() == layout.size());
    // Baseline serving sector has the maximum RSS of all reports.
    for (const auto& r : reports) CHECK(r.rss_dbm <= reports[e.baseline.serving->value].rss_dbm);
    CHECK(e.baseline.rate_bps >= e.constrained.rate_bps);
  }
}

TEST_CASE("candidate reports match the per-link formulas") {
  const auto profile = builtin_profile(Generation::FourG);
  const auto layout = build_layout(profile);
  RandomStream rng(1);
  const auto ue = sample_ue(layout[10], rng);
  const auto reports = candidate_reports(profile, layout, ue);
  const auto pattern = pattern_params(profile);
  for (std::size_t i = 0; i < layout.size(); ++i) {
    const auto g = link_geometry(layout[i], ue);
    CHECK(reports[i].sector == layout[i].id());
    CHECK(reports[i].rss_dbm == rss_dbm(profile, g, pattern));
    CHECK(reports[i].pd_w_m2 == pd_from_link(profile, g, pattern));
  }
}

TEST_CASE("run is independent of worker count") {
  auto cfg = small_run(Generation::FiveG, 70);
  cfg.gamma_w_m2 = 0.05;
  const auto one = run_drops(cfg);
  cfg.workers = 3;
  const auto three = run_drops(cfg);
  CHECK(one.constrained.pd.sorted() == three.constrained.pd.sorted());
  CHECK(one.baseline.rate.sorted() == three.baseline.rate.sorted());
  CHECK(one.constrained.outages == three.constrained.outages);
  CHECK(one.reselected_ues == three.reselected_ues);
}

TEST_CASE("different seeds give different drops") {
  auto cfg = small_run(Generation::FiveG, 2);
  const auto a = run_drops(cfg);
  cfg.seed += 1;
  const auto b = run_drops(cfg);
  CHECK(a.baseline.rate.sorted() != b.baseline.rate.sorted());
}

TEST_CASE("constrained policy with a tight threshold") {
  auto cfg = small_run(Generation::FiveG, 20);
  cfg.gamma_w_m2 = 0.02;
  const auto r = run_drops(cfg);
  CHECK(r.constrained.threshold_violations == 0);
  CHECK(r.constrained.pd.max() < cfg.gamma_w_m2);
  CHECK(r.baseline.threshold_violations > 0);
  CHECK(r.reselected_ues > 0);
  CHECK(r.rate_dominance_violations == 0);
  CHECK(r.constrained.mean_handovers > 0.0);
  CHECK(r.constrained.pd.size() + r.constrained.outages == r.constrained.ues);
  CHECK(r.constrained.rate.size() == r.constrained.ues);
  // First-order dominance of the rate distributions.
  for (double x : r.baseline.rate.sorted()) CHECK(r.baseline.rate.cdf(x) <= r.constrained.rate.cdf(x));
}

TEST_CASE("infinite threshold reduces to the baseline") {
  auto cfg = small_run(Generation::FiveG, 10);
  cfg.gamma_w_m2 = std::numeric_limits<double>::infinity();
  const auto r = run_drops(cfg);
  CHECK(r.reselected_ues == 0);
  CHECK(r.constrained.outages == 0);
  CHECK(r.constrained.rate.sorted() == r.baseline.rate.sorted());
}

TEST_CASE("center-only restricts statistics to the center site") {
  auto cfg = small_run(Generation::FiveG, 4);
  cfg.center_only = true;
  const auto r = run_drops(cfg);
  CHECK(r.baseline.ues == 4 * 3 * cfg.ues_per_sector);
}

TEST_CASE("run validation") {
  auto cfg = small_run(Generation::FiveG, 0);
  CHECK_THROWS_AS(run_drops(cfg), ConfigError);
  cfg = small_run(Generation::FiveG, 1);
  cfg.ues_per_sector = 0;
  CHECK_THROWS_AS(run_drops(cfg), ConfigError);
  cfg = small_run(Generation::FiveG, 1);
  cfg.gamma_w_m2 = -1;
  CHECK_THROWS_AS(run_drops(cfg), ConfigError);
}

TEST_CASE("distance grid") {
  const auto g = distance_grid(SweepConfig{10, 100, 5, 10});
  REQUIRE(g.size() == 19);
  CHECK(g.front() == 10.0);
  CHECK(g.back() == 100.0);
  CHECK_THROWS_AS(distance_grid(SweepConfig{10, 5, 1, 10}), ConfigError);
}

TEST_CASE("sweep matches the ring-restricted sector average") {
  // Sector-uniform UEs falling in a thin annulus are uniform in azimuth over
  // the boresight +/- 60 degree arc, so their mean SAR must agree with the
  // azimuth-averaged sweep at that radius.
  const auto profile = builtin_profile(Generation::FiveG);
  const TissueParams tissue;
  const auto layout = build_layout(profile, 0);
  const auto pattern = pattern_params(profile);
  const double ring = 40.0;
  const double half_width = 0.5;

  RandomStream rng(606);
  std::vector<double> sar;
  while (sar.size() < 20000) {
    const auto ue = sample_ue(layout[0], rng);
    const auto g = link_geometry(layout[0], ue);
    if (std::abs(g.distance_2d_m - ring) > half_width) continue;
    sar.push_back(sar_boundary(pd_from_link(profile, g, pattern), tissue));
  }
  const auto area_est = estimate_mean(sar);
  const auto row = ring_average(profile, tissue, ring, 20000, 99);
  const double tol = 4.0 * std::hypot(area_est.std_error, row.sar.std_error);
  CHECK(std::abs(area_est.mean - row.sar.mean) < tol);
}

TEST_CASE("sweep SAR is the boundary conversion of sweep PD") {
  const auto profile = builtin_profile(Generation::FourG);
  const TissueParams tissue;
  const auto grid = distance_grid(SweepConfig{10, 60, 10, 500});
  const auto s = distance_sweep(profile, tissue, SweepConfig{10, 60, 10, 500}, grid, 3, 10.0);
  REQUIRE(s.rows.size() == grid.size());
  for (const auto& r : s.rows) {
    CHECK(r.sar.mean == doctest::Approx(sar_boundary(r.pd.mean, tissue)).epsilon(1e-12));
    CHECK(r.pd.std_error > 0.0);
  }
}

TEST_CASE("crossing distance is found when the threshold is inside the range") {
  const auto profile = builtin_profile(Generation::FiveG);
  const TissueParams tissue;
  const SweepConfig sweep{10, 100, 10, 400};
  const auto grid = distance_grid(sweep);
  const auto base = distance_sweep(profile, tissue, sweep, grid, 5, 10.0);
  REQUIRE(base.peak_mean_pd_w_m2 > 0.0);

  // A threshold at a tenth of the peak must be crossed somewhere past the peak.
  const double gamma = base.peak_mean_pd_w_m2 / 10.0;
  const auto s = distance_sweep(profile, tissue, sweep, grid, 5, gamma);
  REQUIRE(s.crossing_distance_m);
  CHECK(*s.crossing_distance_m > s.peak_distance_m);
  CHECK(ring_average(profile, tissue, *s.crossing_distance_m + 0.01, 400, 5).pd.mean < gamma);
  CHECK(ring_average(profile, tissue, *s.crossing_distance_m - 0.01, 400, 5).pd.mean >= gamma);

  CHECK_THROWS_AS(ring_average(profile, tissue, 500.0, 10, 1), ConfigError);
}
