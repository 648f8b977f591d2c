// SPDX-License-Identifier: Apache-2.0
//
// Deterministic LOS link budget: path loss, received power, thermal noise
// and Shannon rate. No shadowing, fading or interference.

#pragma once

#include "emfsim/antenna.hpp"
#include "emfsim/layout.hpp"
#include "emfsim/profiles.hpp"

namespace emfsim {

struct LinkSample {
  double path_loss_db = 0.0;
  double rss_dbm = 0.0;
  double snr_db = 0.0;
  double rate_bps = 0.0;
  double pd_w_m2 = 0.0;
  double sar_w_kg = 0.0;
  bool outage = false;
};

/// Throws ConfigError for a non-finite or sub-meter 3D distance.
double path_loss_db(const SystemProfile& profile, const LinkGeometry& geometry);

double rss_dbm(const SystemProfile& profile, const LinkGeometry& geometry,
               const PatternParams& pattern);

/// 10 log10(k T B / 1 mW) + noise figure.
double noise_floor_dbm(const SystemProfile& profile);

double shannon_rate_bps(double bandwidth_hz, double snr_db);
inline double shannon_rate_bps(const SystemProfile& profile, double snr_db) {
  return shannon_rate_bps(profile.bandwidth_hz, snr_db);
}

}  // namespace emfsim
