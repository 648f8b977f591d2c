// SPDX-License-Identifier: Apache-2.0
//
// Power density and specific absorption rate.
//
//   PD   = |E|^2 / rho0                         field form
//   PD   = P_T G_T / (4 pi d^2)                 transmitter form
//   SAR  = sigma |E|^2 / rho                    point SAR
//   SAR  = 2 PD (1 - R^2) / (delta rho)         air-skin boundary SAR
//
// The simulator uses the boundary form on its main path; sar_point is a
// standalone calculator.

#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "emfsim/antenna.hpp"
#include "emfsim/layout.hpp"
#include "emfsim/profiles.hpp"
#include "emfsim/random.hpp"

namespace emfsim {

struct TissueParams {
  /// Amplitude reflection coefficient at the air-skin boundary, in [0, 1).
  double reflection_coefficient = 0.6;
  double penetration_depth_m = 1e-3;
  double mass_density_kg_m3 = 1000.0;
  /// Only used by sar_point.
  double conductivity_s_m = 38.2;

  void validate() const;

  friend bool operator==(const TissueParams&, const TissueParams&) = default;
};

struct FreeSpaceParams {
  double characteristic_impedance_ohm = 376.73;
};

double pd_from_field(double e_field_amplitude_v_m, const FreeSpaceParams& free_space = {});

/// Inverse-square density for a transmitter of the given power and gain.
double pd_from_transmitter(double tx_power_w, double gain_dbi, double distance_m);

/// Uses the total conducted power, the pattern gain toward the UE and the 3D distance.
double pd_from_link(const SystemProfile& profile, const LinkGeometry& geometry,
                    const PatternParams& pattern);

double sar_point(double e_field_amplitude_v_m, const TissueParams& tissue);

double sar_boundary(double pd_w_m2, const TissueParams& tissue);

struct MonteCarloEstimate {
  double mean = 0.0;
  /// Standard error of the mean; NaN for a single sample.
  double std_error = 0.0;
  std::size_t samples = 0;
};

/// Sum by a fixed binary tree over blocks, independent of any threading.
double pairwise_sum(std::span<const double> values);

/// Mean and standard error with pairwise-summed moments.
MonteCarloEstimate estimate_mean(std::span<const double> values);

/// Area average of `integrand` over the sector by uniform sampling.
MonteCarloEstimate sector_average(const SectorGeometry& sector, std::size_t num_samples,
                                  RandomStream& rng,
                                  const std::function<double(const UeDrop&)>& integrand,
                                  double ue_height_m = 1.5);

/// Area-averaged boundary SAR from the sector's own transmitter.
MonteCarloEstimate sector_average_sar(const SectorGeometry& sector, const SystemProfile& profile,
                                      const TissueParams& tissue, std::size_t num_samples,
                                      RandomStream& rng);

}  // namespace emfsim
