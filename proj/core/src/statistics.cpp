// SPDX-License-Identifier: Apache-2.0

#include "emfsim/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>

#include "emfsim/exposure.hpp"

namespace emfsim {

std::string_view to_string(Metric metric) {
  switch (metric) {
    case Metric::Pd: return "pd";
    case Metric::Sar: return "sar";
    case Metric::Rate: return "rate";
  }
  return "?";
}

EmpiricalDistribution::EmpiricalDistribution(Metric metric, std::vector<double> samples)
    : metric_(metric), sorted_(std::move(samples)) {
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalDistribution::cdf(double x) const {
  if (sorted_.empty()) return 0.0;
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double EmpiricalDistribution::quantile(double p) const {
  if (sorted_.empty()) throw std::logic_error("quantile of an empty distribution");
  if (p <= 0.0) return sorted_.front();
  if (p >= 1.0) return sorted_.back();
  const double n = static_cast<double>(sorted_.size());
  auto k = static_cast<std::size_t>(std::ceil(p * n));
  k = std::clamp<std::size_t>(k, 1, sorted_.size());
  return sorted_[k - 1];
}

double EmpiricalDistribution::mean() const {
  if (sorted_.empty()) return 0.0;
  return pairwise_sum(sorted_) / static_cast<double>(sorted_.size());
}

std::vector<std::pair<double, double>> EmpiricalDistribution::cdf_points(std::size_t max_points) const {
  std::vector<std::pair<double, double>> steps;
  const std::size_t n = sorted_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (i + 1 < n && sorted_[i + 1] == sorted_[i]) continue;
    steps.emplace_back(sorted_[i], static_cast<double>(i + 1) / static_cast<double>(n));
  }
  if (max_points == 0 || steps.size() <= max_points) return steps;
  if (max_points == 1) return {steps.back()};

  std::vector<std::pair<double, double>> thinned;
  thinned.reserve(max_points);
  const double stride = static_cast<double>(steps.size() - 1) / static_cast<double>(max_points - 1);
  std::size_t last = steps.size();
  for (std::size_t j = 0; j < max_points; ++j) {
    const auto idx = static_cast<std::size_t>(std::llround(stride * static_cast<double>(j)));
    if (idx == last) continue;
    thinned.push_back(steps[idx]);
    last = idx;
  }
  if (thinned.back() != steps.back()) thinned.push_back(steps.back());
  return thinned;
}

EmpiricalDistribution EmpiricalDistribution::scaled(Metric metric, double factor) const {
  if (!(factor > 0.0)) throw std::invalid_argument("scale factor must be positive");
  EmpiricalDistribution out;
  out.metric_ = metric;
  out.sorted_.reserve(sorted_.size());
  for (double v : sorted_) out.sorted_.push_back(v * factor);
  return out;
}

double quantile_std_error(const EmpiricalDistribution& dist, double p) {
  const double n = static_cast<double>(dist.size());
  if (n < 2) return 0.0;
  const double half_width = std::sqrt(p * (1.0 - p) / n);
  const double lo = dist.quantile(std::max(0.0, p - half_width));
  const double hi = dist.quantile(std::min(1.0, p + half_width));
  return 0.5 * (hi - lo);
}

}  // namespace emfsim
