// SPDX-License-Identifier: Apache-2.0

#include "emfsim/profiles.hpp"

#include <cmath>
#include <string>

#include "emfsim/units.hpp"

namespace emfsim {

PathLossCoefficients default_pathloss_coefficients(PathLossModel model) {
  switch (model) {
    case PathLossModel::Umi38901:
      return {32.4, 21.0, 20.0};
    case PathLossModel::Umi36873:
      return {28.0, 22.0, 20.0};
    case PathLossModel::Umi25996:
      return {34.53, 38.0, 0.0};
  }
  throw ConfigError("unknown path loss model");
}

SystemProfile builtin_profile(Generation generation) {
  SystemProfile p;
  p.generation = generation;
  switch (generation) {
    case Generation::FiveG:
      p.carrier_frequency_hz = 28e9;
      p.bandwidth_hz = 850e6;
      p.inter_site_distance_m = 200.0;
      p.cell_radius_m = 200.0 / std::sqrt(3.0);
      p.layout_rings = 2;
      p.element_gain_max_dbi = 8.0;
      p.gain_per_element = true;
      p.element_tx_power_dbm = 21.0;
      p.power_per_element = true;
      p.array_elements = 64;  // 8 x 8
      p.bs_antenna_height_m = 10.0;
      p.az_3db_deg = 65.0;
      p.front_to_back_db = 30.0;
      p.el_3db_deg = 65.0;
      p.sla_v_db = 30.0;
      p.pathloss_model = PathLossModel::Umi38901;
      break;
    case Generation::FourG:
      p.carrier_frequency_hz = 2e9;
      p.bandwidth_hz = 20e6;
      p.inter_site_distance_m = 200.0;
      p.cell_radius_m = 200.0 / std::sqrt(3.0);
      p.layout_rings = 2;
      p.element_gain_max_dbi = 8.0;
      p.gain_per_element = true;
      p.element_tx_power_dbm = 44.0;
      p.power_per_element = false;
      p.array_elements = 4;
      p.bs_antenna_height_m = 10.0;
      p.az_3db_deg = 65.0;
      p.front_to_back_db = 30.0;
      p.el_3db_deg = 65.0;
      p.sla_v_db = 30.0;
      p.pathloss_model = PathLossModel::Umi36873;
      break;
    case Generation::ThreePointNineG:
      p.carrier_frequency_hz = 1.9e9;
      p.bandwidth_hz = 20e6;
      p.inter_site_distance_m = 1000.0;
      // Single site; the UMi cell radius is 500 m.
      p.cell_radius_m = 500.0;
      p.layout_rings = 0;
      p.element_gain_max_dbi = 17.0;
      p.gain_per_element = false;
      p.element_tx_power_dbm = 43.0;
      p.power_per_element = false;
      p.array_elements = 1;
      p.bs_antenna_height_m = 32.0;
      p.az_3db_deg = 35.0;
      p.omni_azimuth = true;
      p.front_to_back_db = 23.0;
      p.el_3db_deg = 35.0;
      p.sla_v_db = 23.0;
      p.pathloss_model = PathLossModel::Umi25996;
      break;
  }
  p.pathloss = default_pathloss_coefficients(p.pathloss_model);
  return p;
}

void SystemProfile::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  require(positive(carrier_frequency_hz), "carrier_frequency_hz must be positive");
  require(positive(bandwidth_hz), "bandwidth_hz must be positive");
  require(positive(inter_site_distance_m), "inter_site_distance_m must be positive");
  require(positive(cell_radius_m), "cell_radius_m must be positive");
  require(layout_rings >= 0 && layout_rings <= 2, "layout_rings must be 0, 1 or 2");
  require(sectors_per_site == 3, "sectors_per_site must be 3");
  require(positive(element_gain_max_dbi), "element_gain_max_dbi must be positive");
  require(positive(element_tx_power_dbm), "element_tx_power_dbm must be positive");
  require(array_elements >= 1, "array_elements must be at least 1");
  require(positive(bs_antenna_height_m), "bs_antenna_height_m must be positive");
  require(positive(ue_height_m), "ue_height_m must be positive");
  require(positive(az_3db_deg), "az_3db_deg must be positive");
  require(positive(el_3db_deg), "el_3db_deg must be positive");
  require(positive(front_to_back_db) && front_to_back_db <= 60.0,
          "front_to_back_db must be in (0, 60]");
  require(positive(sla_v_db) && sla_v_db <= 60.0, "sla_v_db must be in (0, 60]");
  require(std::isfinite(ue_noise_figure_db) && ue_noise_figure_db >= 0.0,
          "ue_noise_figure_db must be non-negative");
  require(positive(temperature_k), "temperature_k must be positive");
  require(std::isfinite(pathloss.intercept_db) && positive(pathloss.distance_slope_db) &&
              std::isfinite(pathloss.frequency_slope_db),
          "path loss coefficients must be finite with a positive distance slope");
}

void ExposureLimits::validate() const {
  require(std::isfinite(pd_limit_w_m2) && pd_limit_w_m2 > 0.0, "pd_limit must be positive");
  require(std::isfinite(sar_limit_w_kg) && sar_limit_w_kg > 0.0, "sar_limit must be positive");
}

double effective_tx_power_dbm(const SystemProfile& profile) {
  if (!profile.power_per_element) return profile.element_tx_power_dbm;
  return profile.element_tx_power_dbm + 10.0 * std::log10(static_cast<double>(profile.array_elements));
}

std::string_view to_string(Generation generation) {
  switch (generation) {
    case Generation::FiveG: return "FiveG";
    case Generation::FourG: return "FourG";
    case Generation::ThreePointNineG: return "ThreePointNineG";
  }
  return "?";
}

std::string_view to_string(PathLossModel model) {
  switch (model) {
    case PathLossModel::Umi38901: return "Umi38901";
    case PathLossModel::Umi36873: return "Umi36873";
    case PathLossModel::Umi25996: return "Umi25996";
  }
  return "?";
}

std::string_view to_string(BeamwidthReading reading) {
  switch (reading) {
    case BeamwidthReading::HalfPowerBeamwidth: return "hpbw";
    case BeamwidthReading::Literal: return "literal";
  }
  return "?";
}

std::string_view short_name(Generation generation) {
  switch (generation) {
    case Generation::FiveG: return "5g";
    case Generation::FourG: return "4g";
    case Generation::ThreePointNineG: return "3.9g";
  }
  return "?";
}

Generation parse_generation(std::string_view text) {
  if (text == "5g" || text == "5G" || text == "FiveG") return Generation::FiveG;
  if (text == "4g" || text == "4G" || text == "FourG") return Generation::FourG;
  if (text == "3.9g" || text == "3.9G" || text == "ThreePointNineG") {
    return Generation::ThreePointNineG;
  }
  throw ConfigError("unknown generation '" + std::string(text) + "' (expected 5g, 4g or 3.9g)");
}

PathLossModel parse_pathloss_model(std::string_view text) {
  if (text == "Umi38901") return PathLossModel::Umi38901;
  if (text == "Umi36873") return PathLossModel::Umi36873;
  if (text == "Umi25996") return PathLossModel::Umi25996;
  throw ConfigError("unknown path loss model '" + std::string(text) + "'");
}

BeamwidthReading parse_beamwidth_reading(std::string_view text) {
  if (text == "hpbw") return BeamwidthReading::HalfPowerBeamwidth;
  if (text == "literal") return BeamwidthReading::Literal;
  throw ConfigError("unknown beamwidth reading '" + std::string(text) + "' (expected hpbw or literal)");
}

}  // namespace emfsim
