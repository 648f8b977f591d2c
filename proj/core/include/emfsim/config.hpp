// SPDX-License-Identifier: Apache-2.0
//
// Run configuration files. A file may set anything the command line can:
//
//   {
//     "profile": "5g"  or  { "generation": "5g", "bandwidth_hz": 4e8, ... },
//     "tissue":  { "reflection_coefficient": 0.6, ... },
//     "limits":  { "pd_limit_w_m2": 10, "sar_limit_w_kg": 1.6 },
//     "run":     { "policy": "constrained", "gamma": 10, "drops": 10000,
//                  "ues_per_sector": 10, "seed": 1, "center_only": false,
//                  "workers": 1, "update_period_ticks": 100 },
//     "sweep":   { "profiles": ["5g", "4g", "3.9g"], "dmin": 10, "dmax": 100,
//                  "step": 5, "azimuth_samples": 2000 },
//     "output":  { "out": "results", "plots": true, "cdf_points": 1000 }
//   }
//
// Every section and key is optional. Unknown keys are rejected.

#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include "emfsim/outputs.hpp"
#include "emfsim/simulation.hpp"

namespace emfsim {

struct FileConfig {
  RunConfig run;
  OutputOptions output{"results", true, 1000};
  /// Profiles for the distance sweep; empty means the run profile only.
  std::vector<SystemProfile> sweep_profiles;
};

FileConfig load_config_json(std::string_view json_text, FileConfig base = {});
FileConfig load_config_file(const std::filesystem::path& path, FileConfig base = {});

}  // namespace emfsim
