// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

namespace emfsim {

enum class Metric : unsigned char { Pd, Sar, Rate };

std::string_view to_string(Metric metric);

/// Empirical CDF over a sample. cdf(x) = #{samples <= x} / n, and
/// quantile(p) is the smallest sample whose cdf is at least p, so the k-th
/// order statistic has cdf exactly k / n (k counted with ties collapsed to
/// the last occurrence).
class EmpiricalDistribution {
 public:
  EmpiricalDistribution() = default;
  EmpiricalDistribution(Metric metric, std::vector<double> samples);

  Metric metric() const { return metric_; }
  std::size_t size() const { return sorted_.size(); }
  bool empty() const { return sorted_.empty(); }
  const std::vector<double>& sorted() const { return sorted_; }

  double cdf(double x) const;
  /// p in [0, 1]; p == 0 returns the minimum. Throws on an empty sample.
  double quantile(double p) const;
  double min() const { return quantile(0.0); }
  double max() const { return quantile(1.0); }
  double mean() const;

  /// Fraction of samples strictly above x.
  double exceedance(double x) const { return empty() ? 0.0 : 1.0 - cdf(x); }

  /// Step points (value, cdf) at distinct values, thinned to at most
  /// max_points rows (0 keeps all). The last row is always (max, 1).
  std::vector<std::pair<double, double>> cdf_points(std::size_t max_points) const;

  /// Same distribution with every value multiplied by factor > 0.
  EmpiricalDistribution scaled(Metric metric, double factor) const;

 private:
  Metric metric_ = Metric::Pd;
  std::vector<double> sorted_;
};

/// Standard error of the p-quantile from the asymptotic binomial
/// order-statistic interval: half the spread between the quantiles at
/// p +/- sqrt(p (1 - p) / n).
double quantile_std_error(const EmpiricalDistribution& dist, double p);

}  // namespace emfsim
