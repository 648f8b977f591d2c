// SPDX-License-Identifier: Apache-2.0
//
// Result files: sweep_<gen>.csv, cdf_<metric>_<policy>.csv, summary.json and
// optional SVG figures. Numbers are written in shortest round-trip form so
// identical results give byte-identical files.

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "emfsim/simulation.hpp"
#include "emfsim/statistics.hpp"

namespace emfsim {

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OutputOptions {
  std::filesystem::path directory;
  bool plots = true;
  /// Maximum rows per CDF file; 0 writes every distinct sample.
  std::size_t cdf_points = 1000;
};

std::string format_number(double value);

/// Columns: distance_m,mean_pd_w_m2,stderr_pd,mean_sar_w_kg,stderr_sar
void write_sweep_csv(std::ostream& out, const SweepResult& sweep);

/// Columns: value,cdf
void write_cdf_csv(std::ostream& out, const EmpiricalDistribution& dist, std::size_t max_points);

/// `run` may be null for sweep-only invocations.
std::string summary_json(const RunConfig& config, const RunResult* run, std::span<const SweepResult> sweeps);

/// Writes every output file into options.directory (created if missing) and
/// returns the written paths. Throws OutputError when a file cannot be written.
std::vector<std::filesystem::path> emit_outputs(const RunConfig& config, const RunResult* run,
                                                std::span<const SweepResult> sweeps, const OutputOptions& options);

}  // namespace emfsim
