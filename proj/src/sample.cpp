#include "gencor/sample.hpp"

#include <algorithm>
#include <cmath>

#include "gencor/errors.hpp"

namespace gencor {

BivariateSample make_sample(std::span<const double> xs, std::span<const double> ys,
                            NaPolicy /*policy*/) {
  if (xs.size() != ys.size()) throw LengthMismatch("xs and ys differ in length");
  std::vector<double> kept_x;
  std::vector<double> kept_y;
  kept_x.reserve(xs.size());
  kept_y.reserve(ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (std::isfinite(xs[i]) && std::isfinite(ys[i])) {
      kept_x.push_back(xs[i]);
      kept_y.push_back(ys[i]);
    }
  }
  if (kept_x.empty()) throw EmptySample();
  return BivariateSample(std::move(kept_x), std::move(kept_y));
}

EmpiricalDistribution::EmpiricalDistribution(std::span<const double> values)
    : sorted_(values.begin(), values.end()) {
  if (sorted_.empty()) throw EmptySample();
  std::sort(sorted_.begin(), sorted_.end());
}

std::int64_t EmpiricalDistribution::count_le(double t) const noexcept {
  return std::upper_bound(sorted_.begin(), sorted_.end(), t) - sorted_.begin();
}

std::int64_t EmpiricalDistribution::count_lt(double t) const noexcept {
  return std::lower_bound(sorted_.begin(), sorted_.end(), t) - sorted_.begin();
}

double EmpiricalDistribution::cdf(double t) const noexcept {
  return static_cast<double>(count_le(t)) / static_cast<double>(sorted_.size());
}

std::size_t lower_quantile_rank(double alpha, std::size_t n) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw LevelOutOfRange("quantile level must lie in (0, 1]");
  const double nd = static_cast<double>(n);
  auto k = static_cast<std::size_t>(std::ceil(alpha * nd));
  k = std::clamp<std::size_t>(k, 1, n);
  while (k > 1 && static_cast<double>(k - 1) / nd >= alpha) --k;
  while (k < n && static_cast<double>(k) / nd < alpha) ++k;
  return k;
}

std::size_t EmpiricalDistribution::quantile_rank(double alpha) const {
  return lower_quantile_rank(alpha, sorted_.size());
}

double EmpiricalDistribution::quantile(double alpha) const {
  return sorted_[quantile_rank(alpha) - 1];
}

std::int64_t joint_count(const BivariateSample& sample, double a, double b) noexcept {
  const auto& xs = sample.xs();
  const auto& ys = sample.ys();
  std::int64_t count = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) count += (xs[i] <= a && ys[i] <= b) ? 1 : 0;
  return count;
}

double joint_cdf(const BivariateSample& sample, double a, double b) noexcept {
  return static_cast<double>(joint_count(sample, a, b)) / static_cast<double>(sample.size());
}

}  // namespace gencor
