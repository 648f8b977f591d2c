// SPDX-License-Identifier: Apache-2.0

#include "emfsim/antenna.hpp"

#include <algorithm>
#include <cmath>

#include "emfsim/units.hpp"

namespace emfsim {

void PatternParams::validate() const {
  require(az_3db_deg > 0.0 && el_3db_deg > 0.0, "3-dB angles must be positive");
  require(a_m_db > 0.0 && a_m_db <= 60.0, "front-to-back ratio must be in (0, 60] dB");
  require(sla_v_db > 0.0 && sla_v_db <= 60.0, "vertical side-lobe limit must be in (0, 60] dB");
  require(std::isfinite(g_max_dbi), "maximum gain must be finite");
}

PatternParams pattern_params(const SystemProfile& profile) {
  PatternParams p;
  p.az_3db_deg = profile.beamwidth_reading == BeamwidthReading::Literal ? 2.0 * profile.az_3db_deg
                                                                        : profile.az_3db_deg;
  p.el_3db_deg = profile.el_3db_deg;
  p.a_m_db = profile.front_to_back_db;
  p.sla_v_db = profile.sla_v_db;
  p.omni_azimuth = profile.omni_azimuth;
  p.g_max_dbi = profile.element_gain_max_dbi;
  if (profile.gain_per_element) {
    p.g_max_dbi += 10.0 * std::log10(static_cast<double>(profile.array_elements));
  }
  return p;
}

double attenuation_db(const PatternParams& params, double azimuth_offset_deg,
                      double elevation_offset_deg) {
  double horizontal = 0.0;
  if (!params.omni_azimuth) {
    const double r = azimuth_offset_deg / params.az_3db_deg;
    horizontal = std::min(12.0 * r * r, params.a_m_db);
  }
  const double r = elevation_offset_deg / params.el_3db_deg;
  const double vertical = std::min(12.0 * r * r, params.sla_v_db);
  return std::min(horizontal + vertical, params.a_m_db);
}

double gain_dbi(const PatternParams& params, double azimuth_offset_deg,
                double elevation_offset_deg) {
  return params.g_max_dbi - attenuation_db(params, azimuth_offset_deg, elevation_offset_deg);
}

}  // namespace emfsim
