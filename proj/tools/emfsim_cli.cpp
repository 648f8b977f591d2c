// SPDX-License-Identifier: Apache-2.0
//
// emfsim command-line front end.
//
//   emfsim simulate --profile 5g --policy constrained --gamma 10 --drops 10000 \
//                   --ues-per-sector 10 --seed 1 --out results [--center-only] [--no-plots]
//   emfsim sweep    --profile 5g --profile 4g --dmin 10 --dmax 100 --step 5 --out results
//   emfsim profile  --profile 3.9g            # print the profile as JSON
//   emfsim layout   --profile 5g [--rings 2]  # print the sector layout as CSV
//
// A --config JSON file may supply any option; flags given on the command line
// take precedence over the file.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "emfsim/config.hpp"
#include "emfsim/layout.hpp"
#include "emfsim/outputs.hpp"
#include "emfsim/profile_io.hpp"
#include "emfsim/simulation.hpp"
#include "emfsim/units.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitOutput = 3;

struct Flags {
  std::string config_file;
  std::vector<std::string> profiles;
  std::string policy;
  double gamma = 0.0;
  std::size_t drops = 0;
  std::size_t ues_per_sector = 0;
  std::uint64_t seed = 0;
  std::string out;
  bool center_only = false;
  bool no_plots = false;
  unsigned workers = 1;
  std::size_t cdf_points = 0;
  double dmin = 0.0;
  double dmax = 0.0;
  double step = 0.0;
  std::size_t azimuth_samples = 0;
  int rings = -1;
};

// Options a subcommand does not define count as not given.
bool given(const CLI::App& app, const std::string& name) {
  const auto* opt = app.get_option_no_throw(name);
  return opt != nullptr && opt->count() > 0;
}

emfsim::FileConfig resolve(const CLI::App& cmd, const Flags& f) {
  emfsim::FileConfig cfg;
  if (!f.config_file.empty()) cfg = emfsim::load_config_file(f.config_file);

  if (given(cmd, "--profile")) {
    cfg.run.profile = emfsim::builtin_profile(emfsim::parse_generation(f.profiles.front()));
    cfg.sweep_profiles.clear();
    for (const auto& p : f.profiles) {
      cfg.sweep_profiles.push_back(emfsim::builtin_profile(emfsim::parse_generation(p)));
    }
  }
  if (given(cmd, "--policy")) cfg.run.policy = emfsim::parse_policy(f.policy);
  if (given(cmd, "--gamma")) cfg.run.gamma_w_m2 = f.gamma;
  if (given(cmd, "--drops")) cfg.run.num_drops = f.drops;
  if (given(cmd, "--ues-per-sector")) cfg.run.ues_per_sector = f.ues_per_sector;
  if (given(cmd, "--seed")) cfg.run.seed = f.seed;
  if (given(cmd, "--out")) cfg.output.directory = f.out;
  if (given(cmd, "--center-only")) cfg.run.center_only = true;
  if (given(cmd, "--no-plots")) cfg.output.plots = false;
  if (given(cmd, "--workers")) cfg.run.workers = f.workers;
  if (given(cmd, "--cdf-points")) cfg.output.cdf_points = f.cdf_points;
  if (given(cmd, "--dmin")) cfg.run.sweep.dmin_m = f.dmin;
  if (given(cmd, "--dmax")) cfg.run.sweep.dmax_m = f.dmax;
  if (given(cmd, "--step")) cfg.run.sweep.step_m = f.step;
  if (given(cmd, "--azimuth-samples")) cfg.run.sweep.azimuth_samples = f.azimuth_samples;
  return cfg;
}

std::vector<emfsim::SweepResult> run_sweeps(const emfsim::RunConfig& run,
                                            const std::vector<emfsim::SystemProfile>& profiles) {
  std::vector<emfsim::SweepResult> sweeps;
  for (const auto& profile : profiles) {
    auto grid = emfsim::distance_grid(run.sweep);
    std::erase_if(grid, [&](double d) { return d > emfsim::max_sweep_distance(profile); });
    sweeps.push_back(emfsim::distance_sweep(profile, run.tissue, run.sweep, grid, run.seed, run.gamma_w_m2));
  }
  return sweeps;
}

void report(const std::vector<std::filesystem::path>& written) {
  for (const auto& p : written) std::cout << "wrote " << p.string() << '\n';
}

void add_common(CLI::App& cmd, Flags& f) {
  cmd.add_option("--config", f.config_file, "JSON configuration file")->check(CLI::ExistingFile);
  cmd.add_option("--seed", f.seed, "64-bit run seed");
  cmd.add_option("--gamma", f.gamma, "PD threshold in W/m^2");
  cmd.add_option("--out", f.out, "output directory");
  cmd.add_flag("--no-plots", f.no_plots, "skip SVG figures");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Downlink EMF exposure simulator"};
  app.require_subcommand(1);
  Flags f;

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo drops with exposure and rate CDFs");
  simulate->add_option("--profile", f.profiles, "5g, 4g or 3.9g")->expected(1);
  simulate->add_option("--policy", f.policy, "baseline or constrained");
  simulate->add_option("--drops", f.drops, "number of drops");
  simulate->add_option("--ues-per-sector", f.ues_per_sector, "UEs per sector per drop");
  simulate->add_flag("--center-only", f.center_only, "statistics over the center site only");
  simulate->add_option("--workers", f.workers, "worker threads (results do not depend on it)");
  simulate->add_option("--cdf-points", f.cdf_points, "max rows per CDF file, 0 for all");
  simulate->add_option("--dmin", f.dmin, "sweep start distance (m)");
  simulate->add_option("--dmax", f.dmax, "sweep end distance (m)");
  simulate->add_option("--step", f.step, "sweep step (m)");
  simulate->add_option("--azimuth-samples", f.azimuth_samples, "azimuth draws per sweep distance");
  add_common(*simulate, f);

  auto* sweep = app.add_subcommand("sweep", "Azimuth-averaged PD and SAR versus distance");
  sweep->add_option("--profile", f.profiles, "5g, 4g or 3.9g (repeatable, default all)");
  sweep->add_option("--dmin", f.dmin, "start distance (m)");
  sweep->add_option("--dmax", f.dmax, "end distance (m)");
  sweep->add_option("--step", f.step, "step (m)");
  sweep->add_option("--azimuth-samples", f.azimuth_samples, "azimuth draws per distance");
  add_common(*sweep, f);

  auto* profile = app.add_subcommand("profile", "Print a built-in profile as JSON");
  profile->add_option("--profile", f.profiles, "5g, 4g or 3.9g")->expected(1)->required();

  auto* layout = app.add_subcommand("layout", "Print the sector layout as CSV");
  layout->add_option("--profile", f.profiles, "5g, 4g or 3.9g")->expected(1)->required();
  layout->add_option("--rings", f.rings, "rings of sites around the center (0-2)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*profile) {
      std::cout << emfsim::profile_to_json(emfsim::builtin_profile(emfsim::parse_generation(f.profiles.front())))
                << '\n';
      return 0;
    }
    if (*layout) {
      const auto p = emfsim::builtin_profile(emfsim::parse_generation(f.profiles.front()));
      emfsim::write_layout_csv(std::cout, emfsim::build_layout(p, f.rings >= 0 ? f.rings : p.layout_rings));
      return 0;
    }
    if (*simulate) {
      auto cfg = resolve(*simulate, f);
      cfg.run.validate();
      const auto result = emfsim::run_drops(cfg.run);
      const auto sweeps = run_sweeps(cfg.run, {cfg.run.profile});
      report(emfsim::emit_outputs(cfg.run, &result, sweeps, cfg.output));
      const auto& selected = result.stats(cfg.run.policy);
      std::cout << "UEs: " << selected.ues << ", outage fraction: " << selected.outage_fraction()
                << ", PD exceedance: " << selected.pd.exceedance(cfg.run.limits.pd_limit_w_m2) << '\n';
      return 0;
    }
    if (*sweep) {
      auto cfg = resolve(*sweep, f);
      if (cfg.sweep_profiles.empty()) {
        for (auto g : {emfsim::Generation::FiveG, emfsim::Generation::FourG, emfsim::Generation::ThreePointNineG}) {
          cfg.sweep_profiles.push_back(emfsim::builtin_profile(g));
        }
      }
      cfg.run.validate();
      const auto sweeps = run_sweeps(cfg.run, cfg.sweep_profiles);
      report(emfsim::emit_outputs(cfg.run, nullptr, sweeps, cfg.output));
      for (const auto& s : sweeps) {
        std::cout << emfsim::short_name(s.generation) << ": peak mean PD " << s.peak_mean_pd_w_m2 << " W/m^2 at "
                  << s.peak_distance_m << " m";
        if (s.crossing_distance_m) std::cout << ", falls below gamma beyond " << *s.crossing_distance_m << " m";
        std::cout << '\n';
      }
      return 0;
    }
  } catch (const emfsim::ConfigError& e) {
    std::cerr << "emfsim: invalid configuration: " << e.what() << '\n';
    return kExitConfig;
  } catch (const emfsim::OutputError& e) {
    std::cerr << "emfsim: " << e.what() << '\n';
    return kExitOutput;
  }
  return 0;
}
