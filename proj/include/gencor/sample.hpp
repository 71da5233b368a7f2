#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gencor {

enum class NaPolicy { drop_pairwise };

/// Paired observations (x_i, y_i). Immutable; every entry is finite and n >= 1.
class BivariateSample {
 public:
  const std::vector<double>& xs() const noexcept { return xs_; }
  const std::vector<double>& ys() const noexcept { return ys_; }
  std::size_t size() const noexcept { return xs_.size(); }

  /// The same pairs with the roles of the margins exchanged.
  BivariateSample swapped() const { return BivariateSample(ys_, xs_); }

  friend BivariateSample make_sample(std::span<const double> xs, std::span<const double> ys,
                                     NaPolicy policy);

 private:
  BivariateSample(std::vector<double> xs, std::vector<double> ys)
      : xs_(std::move(xs)), ys_(std::move(ys)) {}

  std::vector<double> xs_;
  std::vector<double> ys_;
};

/// Builds a sample, dropping every pair in which either entry is non-finite.
/// Throws LengthMismatch for unequal inputs and EmptySample when nothing remains.
BivariateSample make_sample(std::span<const double> xs, std::span<const double> ys,
                            NaPolicy policy = NaPolicy::drop_pairwise);

/// Step CDF and lower quantile of one margin.
///
/// cdf(t) = #{i : x_i <= t} / n and quantile(alpha) = inf{t : cdf(t) >= alpha}, which is the
/// order statistic X_(k) with k the smallest index such that k/n >= alpha. The comparison is
/// carried out in double precision so that grid levels such as 0.07 with n = 100 select
/// k = 7 rather than 8.
class EmpiricalDistribution {
 public:
  explicit EmpiricalDistribution(std::span<const double> values);

  std::size_t size() const noexcept { return sorted_.size(); }
  const std::vector<double>& sorted_values() const noexcept { return sorted_; }

  /// #{i : x_i <= t}
  std::int64_t count_le(double t) const noexcept;
  /// #{i : x_i < t}
  std::int64_t count_lt(double t) const noexcept;

  double cdf(double t) const noexcept;

  /// 1-based index k of the order statistic returned by quantile(alpha); alpha in (0, 1].
  std::size_t quantile_rank(double alpha) const;
  double quantile(double alpha) const;

  double min() const noexcept { return sorted_.front(); }
  double max() const noexcept { return sorted_.back(); }

 private:
  std::vector<double> sorted_;
};

/// Smallest k in [1, n] with k / n >= alpha, evaluated in double precision.
std::size_t lower_quantile_rank(double alpha, std::size_t n);

inline EmpiricalDistribution empirical_cdf(std::span<const double> margin) {
  return EmpiricalDistribution(margin);
}

/// A sample together with the empirical distributions of both margins, built once and shared
/// by the estimators that need order statistics.
class RankedSample {
 public:
  explicit RankedSample(BivariateSample sample)
      : sample_(std::move(sample)), x_(sample_.xs()), y_(sample_.ys()) {}

  const BivariateSample& sample() const noexcept { return sample_; }
  const EmpiricalDistribution& x() const noexcept { return x_; }
  const EmpiricalDistribution& y() const noexcept { return y_; }
  std::size_t size() const noexcept { return sample_.size(); }

 private:
  BivariateSample sample_;
  EmpiricalDistribution x_;
  EmpiricalDistribution y_;
};

/// #{i : x_i <= a and y_i <= b}
std::int64_t joint_count(const BivariateSample& sample, double a, double b) noexcept;

/// Joint empirical CDF, #{i : x_i <= a, y_i <= b} / n.
double joint_cdf(const BivariateSample& sample, double a, double b) noexcept;

}  // namespace gencor
