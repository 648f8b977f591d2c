// SPDX-License-Identifier: Apache-2.0
//
// Decibel conversions and physical constants shared by the link-budget and
// exposure code.

#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace emfsim {

/// Raised for invalid configuration or malformed inputs.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace constants {
inline constexpr double kBoltzmann = 1.380649e-23;         // J/K
inline constexpr double kFreeSpaceImpedance = 376.73;       // ohm
inline constexpr double kMinDistance = 1.0;                 // m
inline constexpr double kUeHeight = 1.5;                    // m
}  // namespace constants

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

inline constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

/// Wraps an angle in degrees into (-180, 180].
inline double wrap_degrees(double deg) {
  double wrapped = std::fmod(deg, 360.0);
  if (wrapped <= -180.0) wrapped += 360.0;
  if (wrapped > 180.0) wrapped -= 360.0;
  return wrapped;
}

inline void require(bool condition, const std::string& message) {
  if (!condition) throw ConfigError(message);
}

}  // namespace emfsim
