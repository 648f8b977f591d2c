// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "emfsim/config.hpp"
#include "emfsim/outputs.hpp"
#include "emfsim/profile_io.hpp"
#include "emfsim/random.hpp"
#include "emfsim/svg_plot.hpp"
#include "emfsim/units.hpp"

using namespace emfsim;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("emfsim_io_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("profiles round-trip exactly through JSON") {
  for (auto g : {Generation::FiveG, Generation::FourG, Generation::ThreePointNineG}) {
    const auto p = builtin_profile(g);
    CHECK(profile_from_json(profile_to_json(p)) == p);
  }
  // Randomized field values survive too.
  RandomStream rng(12);
  for (int i = 0; i < 50; ++i) {
    auto p = builtin_profile(Generation::FiveG);
    p.carrier_frequency_hz = rng.uniform(1e9, 1e11);
    p.bandwidth_hz = rng.uniform(1e6, 1e9);
    p.element_tx_power_dbm = rng.uniform(1.0, 50.0);
    p.pathloss.intercept_db = rng.uniform(20.0, 40.0);
    CHECK(profile_from_json(profile_to_json(p)) == p);
  }
}

TEST_CASE("partial profile overrides") {
  const auto base = builtin_profile(Generation::FiveG);
  const auto p = profile_from_json(R"({"bandwidth_hz": 4e8, "pathloss": {"intercept_db": 30}})", base);
  CHECK(p.bandwidth_hz == 4e8);
  CHECK(p.pathloss.intercept_db == 30.0);
  CHECK(p.pathloss.distance_slope_db == 21.0);
  CHECK(p.carrier_frequency_hz == 28e9);

  const auto switched = profile_from_json(R"({"generation": "3.9g"})", base);
  CHECK(switched == builtin_profile(Generation::ThreePointNineG));

  CHECK_THROWS_AS(profile_from_json(R"({"bandwith_hz": 1})", base), ConfigError);
  CHECK_THROWS_AS(profile_from_json(R"({"bandwidth_hz": -1})", base), ConfigError);
  CHECK_THROWS_AS(profile_from_json(R"({"bandwidth_hz": "wide"})", base), ConfigError);
  CHECK_THROWS_AS(profile_from_json("{not json", base), ConfigError);
  CHECK_THROWS_AS(profile_from_json(R"({"bandwidth_hz": 1})"), ConfigError);
}

TEST_CASE("tissue JSON") {
  const TissueParams t = tissue_from_json(R"({"reflection_coefficient": 0.5})");
  CHECK(t.reflection_coefficient == 0.5);
  CHECK(t.penetration_depth_m == 1e-3);
  CHECK(tissue_from_json(tissue_to_json(t)) == t);
  CHECK_THROWS_AS(tissue_from_json(R"({"reflection_coefficient": 1.2})"), ConfigError);
}

TEST_CASE("run configuration file") {
  const auto cfg = load_config_json(R"({
    "profile": {"generation": "4g", "bs_antenna_height_m": 12},
    "tissue": {"reflection_coefficient": 0.4},
    "run": {"policy": "baseline", "gamma": 5, "drops": 50, "ues_per_sector": 2, "seed": 9, "center_only": true},
    "sweep": {"profiles": ["5g", "3.9g"], "dmin": 20, "dmax": 80, "step": 20},
    "output": {"out": "somewhere", "plots": false, "cdf_points": 0}
  })");
  CHECK(cfg.run.profile.generation == Generation::FourG);
  CHECK(cfg.run.profile.bs_antenna_height_m == 12.0);
  CHECK(cfg.run.tissue.reflection_coefficient == 0.4);
  CHECK(cfg.run.policy == Policy::Baseline);
  CHECK(cfg.run.gamma_w_m2 == 5.0);
  CHECK(cfg.run.num_drops == 50);
  CHECK(cfg.run.ues_per_sector == 2);
  CHECK(cfg.run.seed == 9);
  CHECK(cfg.run.center_only);
  REQUIRE(cfg.sweep_profiles.size() == 2);
  CHECK(cfg.sweep_profiles[1].generation == Generation::ThreePointNineG);
  CHECK(cfg.run.sweep.dmin_m == 20.0);
  CHECK(cfg.output.directory == "somewhere");
  CHECK_FALSE(cfg.output.plots);
  CHECK(cfg.output.cdf_points == 0);

  CHECK_THROWS_AS(load_config_json(R"({"runs": {}})"), ConfigError);
  CHECK_THROWS_AS(load_config_json(R"({"run": {"policy": "greedy"}})"), ConfigError);
  CHECK_THROWS_AS(load_config_file("/nonexistent/emfsim.json"), ConfigError);
}

TEST_CASE("number formatting is shortest round-trip") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(10.0) == "10");
  CHECK(format_number(1.0 / 3.0) == "0.3333333333333333");
  CHECK(std::stod(format_number(2.0 / 7.0)) == 2.0 / 7.0);
}

TEST_CASE("emitted files and determinism") {
  RunConfig cfg;
  cfg.num_drops = 4;
  cfg.ues_per_sector = 2;
  cfg.seed = 11;
  cfg.gamma_w_m2 = 0.05;
  const auto run = run_drops(cfg);
  const auto grid = distance_grid(SweepConfig{10, 50, 20, 100});
  const std::vector sweeps{distance_sweep(cfg.profile, cfg.tissue, SweepConfig{10, 50, 20, 100}, grid, 1, 10.0)};

  const auto dir_a = scratch("a");
  const auto dir_b = scratch("b");
  const auto files_a = emit_outputs(cfg, &run, sweeps, OutputOptions{dir_a, true, 200});
  const auto files_b = emit_outputs(cfg, &run, sweeps, OutputOptions{dir_b, false, 200});

  for (const char* name : {"sweep_5g.csv", "cdf_pd_baseline.csv", "cdf_sar_constrained.csv", "cdf_rate_baseline.csv",
                           "summary.json", "fig_pd_cdf.svg", "fig_sar_vs_distance.svg", "fig_rate_cdf.svg"}) {
    CHECK(std::filesystem::exists(dir_a / name));
  }
  CHECK_FALSE(std::filesystem::exists(dir_b / "fig_pd_cdf.svg"));
  for (const char* name : {"sweep_5g.csv", "cdf_pd_constrained.csv", "cdf_rate_constrained.csv", "summary.json"}) {
    CHECK(slurp(dir_a / name) == slurp(dir_b / name));
  }

  const std::string sweep_csv = slurp(dir_a / "sweep_5g.csv");
  CHECK(sweep_csv.rfind("distance_m,mean_pd_w_m2,stderr_pd,mean_sar_w_kg,stderr_sar\n", 0) == 0);
  const std::string cdf = slurp(dir_a / "cdf_rate_baseline.csv");
  CHECK(cdf.rfind("value,cdf\n", 0) == 0);
  CHECK(cdf.ends_with(",1\n"));

  const std::string summary = slurp(dir_a / "summary.json");
  CHECK(summary.find("\"crossing_distance_m\"") != std::string::npos);
  CHECK(summary.find("\"outage_fraction\"") != std::string::npos);
  CHECK(summary.find("\"spectral_efficiency_bps_hz\"") != std::string::npos);

  std::filesystem::remove_all(dir_a);
  std::filesystem::remove_all(dir_b);
}

TEST_CASE("unwritable output directory") {
  const auto blocker = scratch("blocker");
  std::ofstream(blocker) << "file, not a directory";
  RunConfig cfg;
  CHECK_THROWS_AS(emit_outputs(cfg, nullptr, {}, OutputOptions{blocker / "sub", false, 10}), OutputError);
  std::filesystem::remove(blocker);
}

TEST_CASE("SVG renderer produces a standalone document") {
  PlotSpec spec{"t <1>", "x", "y", false, true, {}, {10.0}, {{"a", {{1, 1}, {2, 10}, {3, 100}}, false}}};
  const auto svg = render_svg(spec);
  CHECK(svg.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\"", 0) == 0);
  CHECK(svg.find("t &lt;1&gt;") != std::string::npos);
  CHECK(svg.find("<path d=\"M") != std::string::npos);
  CHECK(svg.ends_with("</svg>\n"));
}
