// SPDX-License-Identifier: Apache-2.0

#include "emfsim/profile_io.hpp"

#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "emfsim/units.hpp"

namespace emfsim {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
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

void reject_unknown(const json& j, const std::set<std::string>& known, const char* what) {
  for (const auto& [key, _] : j.items()) {
    if (!known.contains(key)) throw ConfigError(std::string("unknown ") + what + " key '" + key + "'");
  }
}

}  // namespace

std::string profile_to_json(const SystemProfile& p) {
  ordered_json j;
  j["generation"] = std::string(short_name(p.generation));
  j["carrier_frequency_hz"] = p.carrier_frequency_hz;
  j["bandwidth_hz"] = p.bandwidth_hz;
  j["inter_site_distance_m"] = p.inter_site_distance_m;
  j["cell_radius_m"] = p.cell_radius_m;
  j["layout_rings"] = p.layout_rings;
  j["sectors_per_site"] = p.sectors_per_site;
  j["element_gain_max_dbi"] = p.element_gain_max_dbi;
  j["gain_per_element"] = p.gain_per_element;
  j["element_tx_power_dbm"] = p.element_tx_power_dbm;
  j["power_per_element"] = p.power_per_element;
  j["array_elements"] = p.array_elements;
  j["bs_antenna_height_m"] = p.bs_antenna_height_m;
  j["ue_height_m"] = p.ue_height_m;
  j["az_3db_deg"] = p.az_3db_deg;
  j["beamwidth_reading"] = std::string(to_string(p.beamwidth_reading));
  j["omni_azimuth"] = p.omni_azimuth;
  j["front_to_back_db"] = p.front_to_back_db;
  j["el_3db_deg"] = p.el_3db_deg;
  j["sla_v_db"] = p.sla_v_db;
  j["ue_noise_figure_db"] = p.ue_noise_figure_db;
  j["temperature_k"] = p.temperature_k;
  j["pathloss_model"] = std::string(to_string(p.pathloss_model));
  j["pathloss"] = {{"intercept_db", p.pathloss.intercept_db},
                   {"distance_slope_db", p.pathloss.distance_slope_db},
                   {"frequency_slope_db", p.pathloss.frequency_slope_db}};
  return j.dump(2);
}

SystemProfile profile_from_json(std::string_view json_text, const SystemProfile& base) {
  const json j = parse(json_text);
  if (!j.is_object()) throw ConfigError("profile must be a JSON object");
  reject_unknown(j,
                 {"generation", "carrier_frequency_hz", "bandwidth_hz", "inter_site_distance_m", "cell_radius_m",
                  "layout_rings", "sectors_per_site", "element_gain_max_dbi", "gain_per_element",
                  "element_tx_power_dbm", "power_per_element", "array_elements", "bs_antenna_height_m",
                  "ue_height_m", "az_3db_deg", "beamwidth_reading", "omni_azimuth", "front_to_back_db",
                  "el_3db_deg", "sla_v_db", "ue_noise_figure_db", "temperature_k", "pathloss_model", "pathloss"},
                 "profile");

  SystemProfile p = base;
  if (j.contains("generation")) {
    const Generation g = parse_generation(j.at("generation").get<std::string>());
    if (g != base.generation) p = builtin_profile(g);
  }
  read(j, "carrier_frequency_hz", p.carrier_frequency_hz);
  read(j, "bandwidth_hz", p.bandwidth_hz);
  read(j, "inter_site_distance_m", p.inter_site_distance_m);
  read(j, "cell_radius_m", p.cell_radius_m);
  read(j, "layout_rings", p.layout_rings);
  read(j, "sectors_per_site", p.sectors_per_site);
  read(j, "element_gain_max_dbi", p.element_gain_max_dbi);
  read(j, "gain_per_element", p.gain_per_element);
  read(j, "element_tx_power_dbm", p.element_tx_power_dbm);
  read(j, "power_per_element", p.power_per_element);
  read(j, "array_elements", p.array_elements);
  read(j, "bs_antenna_height_m", p.bs_antenna_height_m);
  read(j, "ue_height_m", p.ue_height_m);
  read(j, "az_3db_deg", p.az_3db_deg);
  read(j, "omni_azimuth", p.omni_azimuth);
  read(j, "front_to_back_db", p.front_to_back_db);
  read(j, "el_3db_deg", p.el_3db_deg);
  read(j, "sla_v_db", p.sla_v_db);
  read(j, "ue_noise_figure_db", p.ue_noise_figure_db);
  read(j, "temperature_k", p.temperature_k);
  if (j.contains("beamwidth_reading")) {
    p.beamwidth_reading = parse_beamwidth_reading(j.at("beamwidth_reading").get<std::string>());
  }
  if (j.contains("pathloss_model")) {
    p.pathloss_model = parse_pathloss_model(j.at("pathloss_model").get<std::string>());
    p.pathloss = default_pathloss_coefficients(p.pathloss_model);
  }
  if (j.contains("pathloss")) {
    const json& c = j.at("pathloss");
    reject_unknown(c, {"intercept_db", "distance_slope_db", "frequency_slope_db"}, "pathloss");
    read(c, "intercept_db", p.pathloss.intercept_db);
    read(c, "distance_slope_db", p.pathloss.distance_slope_db);
    read(c, "frequency_slope_db", p.pathloss.frequency_slope_db);
  }
  p.validate();
  return p;
}

SystemProfile profile_from_json(std::string_view json_text) {
  const json j = parse(json_text);
  if (!j.is_object() || !j.contains("generation")) throw ConfigError("profile needs a 'generation' key");
  return profile_from_json(json_text, builtin_profile(parse_generation(j.at("generation").get<std::string>())));
}

std::string tissue_to_json(const TissueParams& t) {
  ordered_json j;
  j["reflection_coefficient"] = t.reflection_coefficient;
  j["penetration_depth_m"] = t.penetration_depth_m;
  j["mass_density_kg_m3"] = t.mass_density_kg_m3;
  j["conductivity_s_m"] = t.conductivity_s_m;
  return j.dump(2);
}

TissueParams tissue_from_json(std::string_view json_text, const TissueParams& base) {
  const json j = parse(json_text);
  if (!j.is_object()) throw ConfigError("tissue must be a JSON object");
  reject_unknown(j, {"reflection_coefficient", "penetration_depth_m", "mass_density_kg_m3", "conductivity_s_m"},
                 "tissue");
  TissueParams t = base;
  read(j, "reflection_coefficient", t.reflection_coefficient);
  read(j, "penetration_depth_m", t.penetration_depth_m);
  read(j, "mass_density_kg_m3", t.mass_density_kg_m3);
  read(j, "conductivity_s_m", t.conductivity_s_m);
  t.validate();
  return t;
}

}  // namespace emfsim
