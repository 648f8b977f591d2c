// SPDX-License-Identifier: Apache-2.0
//
// Per-generation base-station parameter sets and regulatory exposure limits.
//
// The three built-in profiles carry the deployment values for a 28 GHz 5G
// small-cell network, a 2 GHz LTE network and a 1.9 GHz 3.9G network. Any
// field may be overridden from a configuration file (see profile_io.hpp) for
// sensitivity studies; a profile is validated once and then treated as an
// immutable value.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace emfsim {

enum class Generation : std::uint8_t { FiveG, FourG, ThreePointNineG };

enum class PathLossModel : std::uint8_t { Umi38901, Umi36873, Umi25996 };

/// How the azimuth 3-dB angle is read by the element pattern.
///  - HalfPowerBeamwidth: az_3db is the HPBW, 3 dB loss at az_3db / 2.
///  - Literal: 3 dB loss occurs at az_3db off boresight.
enum class BeamwidthReading : std::uint8_t { HalfPowerBeamwidth, Literal };

/// LOS path loss of the form
///   intercept + distance_slope * log10(d_3d / 1 m) + frequency_slope * log10(f / 1 GHz)
struct PathLossCoefficients {
  double intercept_db = 0.0;
  double distance_slope_db = 0.0;
  double frequency_slope_db = 0.0;

  friend bool operator==(const PathLossCoefficients&, const PathLossCoefficients&) = default;
};

/// Published UMi street-canyon LOS constants for each model.
PathLossCoefficients default_pathloss_coefficients(PathLossModel model);

struct SystemProfile {
  Generation generation = Generation::FiveG;
  double carrier_frequency_hz = 0.0;
  double bandwidth_hz = 0.0;
  double inter_site_distance_m = 0.0;
  /// Circumradius of the hexagonal cell of one site.
  double cell_radius_m = 0.0;
  /// Rings of sites around the center site used by default (0, 1 or 2).
  int layout_rings = 2;
  int sectors_per_site = 3;

  double element_gain_max_dbi = 0.0;
  bool gain_per_element = true;
  double element_tx_power_dbm = 0.0;
  bool power_per_element = true;
  int array_elements = 1;

  double bs_antenna_height_m = 0.0;
  double ue_height_m = 1.5;

  double az_3db_deg = 0.0;
  BeamwidthReading beamwidth_reading = BeamwidthReading::HalfPowerBeamwidth;
  bool omni_azimuth = false;
  double front_to_back_db = 0.0;
  double el_3db_deg = 0.0;
  double sla_v_db = 0.0;

  double ue_noise_figure_db = 7.0;
  double temperature_k = 290.0;

  PathLossModel pathloss_model = PathLossModel::Umi38901;
  PathLossCoefficients pathloss;

  /// Throws ConfigError when any invariant is broken.
  void validate() const;

  friend bool operator==(const SystemProfile&, const SystemProfile&) = default;
};

struct ExposureLimits {
  double pd_limit_w_m2 = 10.0;
  double sar_limit_w_kg = 1.6;

  void validate() const;
};

SystemProfile builtin_profile(Generation generation);

/// Total conducted power. Per-element powers are summed over the array.
double effective_tx_power_dbm(const SystemProfile& profile);

std::string_view to_string(Generation generation);
std::string_view to_string(PathLossModel model);
std::string_view to_string(BeamwidthReading reading);

/// Short tag used on the command line and in file names: "5g", "4g", "3.9g".
std::string_view short_name(Generation generation);

Generation parse_generation(std::string_view text);
PathLossModel parse_pathloss_model(std::string_view text);
BeamwidthReading parse_beamwidth_reading(std::string_view text);

}  // namespace emfsim
