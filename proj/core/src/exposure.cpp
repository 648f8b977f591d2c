// SPDX-License-Identifier: Apache-2.0

#include "emfsim/exposure.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "emfsim/units.hpp"

namespace emfsim {
namespace {
constexpr std::size_t kLeafBlock = 8;
}

void TissueParams::validate() const {
  require(reflection_coefficient >= 0.0 && reflection_coefficient < 1.0,
          "reflection coefficient must be in [0, 1)");
  require(std::isfinite(penetration_depth_m) && penetration_depth_m > 0.0,
          "penetration depth must be positive");
  require(std::isfinite(mass_density_kg_m3) && mass_density_kg_m3 > 0.0,
          "mass density must be positive");
  require(std::isfinite(conductivity_s_m) && conductivity_s_m >= 0.0,
          "conductivity must be non-negative");
}

double pd_from_field(double e_field_amplitude_v_m, const FreeSpaceParams& free_space) {
  return e_field_amplitude_v_m * e_field_amplitude_v_m / free_space.characteristic_impedance_ohm;
}

double pd_from_transmitter(double tx_power_w, double gain_dbi, double distance_m) {
  return tx_power_w * db_to_linear(gain_dbi) / (4.0 * std::numbers::pi * distance_m * distance_m);
}

double pd_from_link(const SystemProfile& profile, const LinkGeometry& geometry,
                    const PatternParams& pattern) {
  const double gain = gain_dbi(pattern, geometry.azimuth_offset_deg, geometry.elevation_offset_deg());
  return pd_from_transmitter(dbm_to_watts(effective_tx_power_dbm(profile)), gain, geometry.distance_3d_m);
}

double sar_point(double e_field_amplitude_v_m, const TissueParams& tissue) {
  return tissue.conductivity_s_m * e_field_amplitude_v_m * e_field_amplitude_v_m /
         tissue.mass_density_kg_m3;
}

double sar_boundary(double pd_w_m2, const TissueParams& tissue) {
  const double r = tissue.reflection_coefficient;
  return 2.0 * pd_w_m2 * (1.0 - r * r) / (tissue.penetration_depth_m * tissue.mass_density_kg_m3);
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= kLeafBlock) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

MonteCarloEstimate estimate_mean(std::span<const double> values) {
  MonteCarloEstimate est;
  est.samples = values.size();
  if (values.empty()) {
    est.mean = std::numeric_limits<double>::quiet_NaN();
    est.std_error = est.mean;
    return est;
  }
  const double n = static_cast<double>(values.size());
  est.mean = pairwise_sum(values) / n;
  if (values.size() == 1) {
    est.std_error = std::numeric_limits<double>::quiet_NaN();
    return est;
  }
  std::vector<double> sq(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double d = values[i] - est.mean;
    sq[i] = d * d;
  }
  const double variance = pairwise_sum(sq) / (n - 1.0);
  est.std_error = std::sqrt(variance / n);
  return est;
}

MonteCarloEstimate sector_average(const SectorGeometry& sector, std::size_t num_samples,
                                  RandomStream& rng,
                                  const std::function<double(const UeDrop&)>& integrand,
                                  double ue_height_m) {
  require(num_samples >= 1, "sector average needs at least one sample");
  std::vector<double> values(num_samples);
  for (auto& v : values) v = integrand(sample_ue(sector, rng, ue_height_m));
  return estimate_mean(values);
}

MonteCarloEstimate sector_average_sar(const SectorGeometry& sector, const SystemProfile& profile,
                                      const TissueParams& tissue, std::size_t num_samples,
                                      RandomStream& rng) {
  const PatternParams pattern = pattern_params(profile);
  return sector_average(
      sector, num_samples, rng,
      [&](const UeDrop& ue) {
        return sar_boundary(pd_from_link(profile, link_geometry(sector, ue), pattern), tissue);
      },
      profile.ue_height_m);
}

}  // namespace emfsim
