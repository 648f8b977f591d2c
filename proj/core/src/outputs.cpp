// SPDX-License-Identifier: Apache-2.0

#include "emfsim/outputs.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "emfsim/svg_plot.hpp"

namespace emfsim {
namespace {

using nlohmann::ordered_json;

constexpr double kQuantiles[] = {0.01, 0.05, 0.5, 0.95, 0.99};

ordered_json number_or_null(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

std::string quantile_key(double p) {
  std::string key = "p" + format_number(p * 100.0);
  for (auto& c : key) {
    if (c == '.') c = '_';
  }
  return key;
}

ordered_json quantiles_json(const EmpiricalDistribution& dist) {
  ordered_json q = ordered_json::object();
  if (dist.empty()) return q;
  q["min"] = dist.min();
  for (double p : kQuantiles) q[quantile_key(p)] = dist.quantile(p);
  q["max"] = dist.max();
  q["mean"] = dist.mean();
  return q;
}

ordered_json policy_json(const RunConfig& config, const PolicyStats& stats) {
  ordered_json j;
  j["policy"] = std::string(to_string(stats.policy));
  j["ues"] = stats.ues;
  j["served"] = stats.ues - stats.outages;
  j["outages"] = stats.outages;
  j["outage_fraction"] = stats.outage_fraction();
  j["pd_exceedance_fraction"] = stats.pd.exceedance(config.limits.pd_limit_w_m2);
  j["sar_exceedance_fraction"] = stats.sar.exceedance(config.limits.sar_limit_w_kg);
  j["served_pd_at_or_above_gamma"] = stats.threshold_violations;
  j["mean_handovers"] = stats.mean_handovers;
  j["pd_w_m2"] = quantiles_json(stats.pd);
  j["sar_w_kg"] = quantiles_json(stats.sar);
  j["rate_bps"] = quantiles_json(stats.rate);
  if (!stats.rate.empty()) {
    const double b = config.profile.bandwidth_hz;
    j["spectral_efficiency_bps_hz"] = {{"p1", stats.rate.quantile(0.01) / b}, {"p99", stats.rate.quantile(0.99) / b}};
  }
  return j;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw OutputError("cannot open " + path.string() + " for writing");
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  auto out = open_output(path);
  out << content;
  if (!out) throw OutputError("failed writing " + path.string());
}

PlotSeries cdf_series(const std::string& label, const EmpiricalDistribution& dist, double scale) {
  PlotSeries s{label, {}, true};
  for (auto [v, c] : dist.cdf_points(400)) s.points.emplace_back(v * scale, c);
  return s;
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, end);
}

void write_sweep_csv(std::ostream& out, const SweepResult& sweep) {
  out << "distance_m,mean_pd_w_m2,stderr_pd,mean_sar_w_kg,stderr_sar\n";
  for (const auto& r : sweep.rows) {
    out << format_number(r.distance_m) << ',' << format_number(r.pd.mean) << ',' << format_number(r.pd.std_error)
        << ',' << format_number(r.sar.mean) << ',' << format_number(r.sar.std_error) << '\n';
  }
}

void write_cdf_csv(std::ostream& out, const EmpiricalDistribution& dist, std::size_t max_points) {
  out << "value,cdf\n";
  for (auto [v, c] : dist.cdf_points(max_points)) out << format_number(v) << ',' << format_number(c) << '\n';
}

std::string summary_json(const RunConfig& config, const RunResult* run, std::span<const SweepResult> sweeps) {
  ordered_json j;
  ordered_json cfg;
  cfg["generation"] = std::string(short_name(config.profile.generation));
  cfg["policy"] = std::string(to_string(config.policy));
  cfg["gamma_w_m2"] = config.gamma_w_m2;
  cfg["drops"] = config.num_drops;
  cfg["ues_per_sector"] = config.ues_per_sector;
  cfg["seed"] = config.seed;
  cfg["center_only"] = config.center_only;
  cfg["reflection_coefficient"] = config.tissue.reflection_coefficient;
  j["config"] = cfg;

  if (run != nullptr) {
    ordered_json r;
    r["drops"] = run->drops;
    r["selected"] = policy_json(config, run->stats(config.policy));
    r["baseline"] = policy_json(config, run->baseline);
    r["constrained"] = policy_json(config, run->constrained);
    r["rate_dominance_violations"] = run->rate_dominance_violations;
    r["reselected_ues"] = run->reselected_ues;
    j["run"] = r;
  }

  ordered_json sw = ordered_json::array();
  for (const auto& s : sweeps) {
    ordered_json e;
    e["generation"] = std::string(short_name(s.generation));
    e["crossing_distance_m"] = s.crossing_distance_m ? number_or_null(*s.crossing_distance_m) : ordered_json(nullptr);
    e["peak_mean_pd_w_m2"] = s.peak_mean_pd_w_m2;
    e["peak_distance_m"] = s.peak_distance_m;
    sw.push_back(e);
  }
  j["sweeps"] = sw;
  return j.dump(2) + "\n";
}

std::vector<std::filesystem::path> emit_outputs(const RunConfig& config, const RunResult* run,
                                                std::span<const SweepResult> sweeps, const OutputOptions& options) {
  std::error_code ec;
  std::filesystem::create_directories(options.directory, ec);
  if (ec || !std::filesystem::is_directory(options.directory)) {
    throw OutputError("cannot create output directory " + options.directory.string());
  }

  std::vector<std::filesystem::path> written;
  auto emit = [&](const std::string& name, const std::string& content) {
    const auto path = options.directory / name;
    write_file(path, content);
    written.push_back(path);
  };

  for (const auto& s : sweeps) {
    std::ostringstream csv;
    write_sweep_csv(csv, s);
    emit("sweep_" + std::string(short_name(s.generation)) + ".csv", csv.str());
  }
  if (run != nullptr) {
    for (const PolicyStats* stats : {&run->baseline, &run->constrained}) {
      for (const EmpiricalDistribution* dist : {&stats->pd, &stats->sar, &stats->rate}) {
        std::ostringstream csv;
        write_cdf_csv(csv, *dist, options.cdf_points);
        emit("cdf_" + std::string(to_string(dist->metric())) + "_" + std::string(to_string(stats->policy)) + ".csv",
             csv.str());
      }
    }
  }
  emit("summary.json", summary_json(config, run, sweeps));

  if (!options.plots) return written;

  if (!sweeps.empty()) {
    PlotSpec pd{"Mean PD versus BS-UE distance", "distance (m)", "PD (W/m^2)", false, true, {}, {config.limits.pd_limit_w_m2}, {}};
    PlotSpec sar{"Mean SAR versus BS-UE distance", "distance (m)", "SAR (W/kg)", false, true, {}, {config.limits.sar_limit_w_kg}, {}};
    for (const auto& s : sweeps) {
      PlotSeries ps{std::string(short_name(s.generation)), {}, false};
      PlotSeries ss = ps;
      for (const auto& r : s.rows) {
        ps.points.emplace_back(r.distance_m, r.pd.mean);
        ss.points.emplace_back(r.distance_m, r.sar.mean);
      }
      pd.series.push_back(std::move(ps));
      sar.series.push_back(std::move(ss));
    }
    emit("fig_pd_vs_distance.svg", render_svg(pd));
    emit("fig_sar_vs_distance.svg", render_svg(sar));
  }
  if (run != nullptr) {
    const std::string gen(short_name(config.profile.generation));
    PlotSpec pd{"Distribution of PD (" + gen + ")", "PD (W/m^2)", "CDF", true, false, {config.limits.pd_limit_w_m2}, {}, {}};
    PlotSpec sar{"Distribution of SAR (" + gen + ")", "SAR (W/kg)", "CDF", true, false, {}, {}, {}};
    PlotSpec rate{"Distribution of data rate (" + gen + ")", "rate (Gbit/s)", "CDF", false, false, {}, {}, {}};
    for (const PolicyStats* stats : {&run->baseline, &run->constrained}) {
      const std::string label(to_string(stats->policy));
      pd.series.push_back(cdf_series(label, stats->pd, 1.0));
      sar.series.push_back(cdf_series(label, stats->sar, 1.0));
      rate.series.push_back(cdf_series(label, stats->rate, 1e-9));
    }
    emit("fig_pd_cdf.svg", render_svg(pd));
    emit("fig_sar_cdf.svg", render_svg(sar));
    emit("fig_rate_cdf.svg", render_svg(rate));
  }
  return written;
}

}  // namespace emfsim
