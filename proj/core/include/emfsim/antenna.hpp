// SPDX-License-Identifier: Apache-2.0
//
// Sectorized base-station element pattern.
//
//   A_a(phi)        = min(12 (phi / az_3db)^2, A_m)        (0 when omni)
//   A_e(theta)      = min(12 (theta / el_3db)^2, SLA_v)
//   A(phi, theta)   = min(A_a + A_e, A_m)
//   G(phi, theta)   = G_max - A(phi, theta)
//
// G_max already contains the array gain; there is no per-UE beam steering.

#pragma once

#include "emfsim/profiles.hpp"

namespace emfsim {

struct PatternParams {
  double az_3db_deg = 65.0;
  double el_3db_deg = 65.0;
  double a_m_db = 30.0;
  double sla_v_db = 30.0;
  double g_max_dbi = 0.0;
  bool omni_azimuth = false;

  void validate() const;
};

/// Pattern of a profile, folding 10 log10(N) array gain into G_max for
/// per-element gains and converting a literal 3-dB angle into the HPBW form.
PatternParams pattern_params(const SystemProfile& profile);

/// Attenuation relative to boresight in dB, within [0, a_m_db].
double attenuation_db(const PatternParams& params, double azimuth_offset_deg,
                      double elevation_offset_deg);

double gain_dbi(const PatternParams& params, double azimuth_offset_deg,
                double elevation_offset_deg);

}  // namespace emfsim
