// SPDX-License-Identifier: Apache-2.0

#include "emfsim/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "emfsim/profile_io.hpp"
#include "emfsim/units.hpp"

namespace emfsim {
namespace {

using nlohmann::json;

void reject_unknown(const json& j, const std::set<std::string>& known, const std::string& section) {
  if (!j.is_object()) throw ConfigError("section '" + section + "' must be an object");
  for (const auto& [key, _] : j.items()) {
    if (!known.contains(key)) throw ConfigError("unknown key '" + key + "' in section '" + section + "'");
  }
}

template <typename T>
void read(const json& j, const char* key, T& field) {
  if (!j.contains(key)) return;
  try {
    field = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
  }
}

SystemProfile read_profile(const json& j, const SystemProfile& base) {
  if (j.is_string()) return builtin_profile(parse_generation(j.get<std::string>()));
  return profile_from_json(j.dump(), base);
}

}  // namespace

FileConfig load_config_json(std::string_view json_text, FileConfig base) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
  reject_unknown(root, {"profile", "tissue", "limits", "run", "sweep", "output"}, "top level");

  FileConfig cfg = std::move(base);
  if (root.contains("profile")) cfg.run.profile = read_profile(root.at("profile"), cfg.run.profile);
  if (root.contains("tissue")) cfg.run.tissue = tissue_from_json(root.at("tissue").dump(), cfg.run.tissue);
  if (root.contains("limits")) {
    const json& j = root.at("limits");
    reject_unknown(j, {"pd_limit_w_m2", "sar_limit_w_kg"}, "limits");
    read(j, "pd_limit_w_m2", cfg.run.limits.pd_limit_w_m2);
    read(j, "sar_limit_w_kg", cfg.run.limits.sar_limit_w_kg);
  }
  if (root.contains("run")) {
    const json& j = root.at("run");
    reject_unknown(j,
                   {"policy", "gamma", "drops", "ues_per_sector", "seed", "center_only", "workers",
                    "update_period_ticks"},
                   "run");
    if (j.contains("policy")) cfg.run.policy = parse_policy(j.at("policy").get<std::string>());
    read(j, "gamma", cfg.run.gamma_w_m2);
    read(j, "drops", cfg.run.num_drops);
    read(j, "ues_per_sector", cfg.run.ues_per_sector);
    read(j, "seed", cfg.run.seed);
    read(j, "center_only", cfg.run.center_only);
    read(j, "workers", cfg.run.workers);
    read(j, "update_period_ticks", cfg.run.update_period_ticks);
  }
  if (root.contains("sweep")) {
    const json& j = root.at("sweep");
    reject_unknown(j, {"profiles", "dmin", "dmax", "step", "azimuth_samples"}, "sweep");
    if (j.contains("profiles")) {
      cfg.sweep_profiles.clear();
      for (const auto& p : j.at("profiles")) cfg.sweep_profiles.push_back(read_profile(p, cfg.run.profile));
    }
    read(j, "dmin", cfg.run.sweep.dmin_m);
    read(j, "dmax", cfg.run.sweep.dmax_m);
    read(j, "step", cfg.run.sweep.step_m);
    read(j, "azimuth_samples", cfg.run.sweep.azimuth_samples);
  }
  if (root.contains("output")) {
    const json& j = root.at("output");
    reject_unknown(j, {"out", "plots", "cdf_points"}, "output");
    if (j.contains("out")) cfg.output.directory = j.at("out").get<std::string>();
    read(j, "plots", cfg.output.plots);
    read(j, "cdf_points", cfg.output.cdf_points);
  }
  return cfg;
}

FileConfig load_config_file(const std::filesystem::path& path, FileConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return load_config_json(text.str(), std::move(base));
}

}  // namespace emfsim
