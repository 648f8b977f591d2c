// SPDX-License-Identifier: Apache-2.0

#include "emfsim/channel.hpp"

#include <cmath>

#include "emfsim/units.hpp"

namespace emfsim {

double path_loss_db(const SystemProfile& profile, const LinkGeometry& geometry) {
  const double d = geometry.distance_3d_m;
  require(std::isfinite(d), "path loss distance must be finite");
  require(d >= constants::kMinDistance, "path loss distance must be at least 1 m");
  const auto& c = profile.pathloss;
  return c.intercept_db + c.distance_slope_db * std::log10(d) +
         c.frequency_slope_db * std::log10(profile.carrier_frequency_hz / 1e9);
}

double rss_dbm(const SystemProfile& profile, const LinkGeometry& geometry,
               const PatternParams& pattern) {
  return effective_tx_power_dbm(profile) +
         gain_dbi(pattern, geometry.azimuth_offset_deg, geometry.elevation_offset_deg()) -
         path_loss_db(profile, geometry);
}

double noise_floor_dbm(const SystemProfile& profile) {
  const double ktb_watts = constants::kBoltzmann * profile.temperature_k * profile.bandwidth_hz;
  return 10.0 * std::log10(ktb_watts * 1000.0) + profile.ue_noise_figure_db;
}

double shannon_rate_bps(double bandwidth_hz, double snr_db) {
  return bandwidth_hz * std::log2(1.0 + std::pow(10.0, snr_db / 10.0));
}

}  // namespace emfsim
