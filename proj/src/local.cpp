#include "gencor/local.hpp"

#include <algorithm>
#include <cmath>

#include "gencor/errors.hpp"
#include "gencor/gen_errors.hpp"

namespace gencor {

namespace {

void require_level(double level) {
  if (!(level > 0.0 && level < 1.0)) throw LevelOutOfRange("level must lie strictly inside (0, 1)");
}

}  // namespace

MeasureResult local_measure(const LocalCounts& c) {
  const std::int64_t n = c.n;
  const std::int64_t base = c.nx * c.ny;
  const std::int64_t cov_num = n * c.nxy - base;
  const std::int64_t upper_num = n * std::min(c.nx, c.ny) - base;
  const std::int64_t lower_num = n * std::max<std::int64_t>(c.nx + c.ny - n, 0) - base;
  const double n2 = static_cast<double>(n) * static_cast<double>(n);

  MeasureResult out;
  out.covariance = static_cast<double>(cov_num) / n2;
  out.bounds = {static_cast<double>(lower_num) / n2, static_cast<double>(upper_num) / n2};
  out.degenerate = c.nx == 0 || c.nx == n || c.ny == 0 || c.ny == n;
  if (out.degenerate) return out;
  if (cov_num >= 0) {
    out.correlation = static_cast<double>(cov_num) / static_cast<double>(upper_num);
    out.normaliser = Normaliser::upper;
  } else {
    out.correlation = static_cast<double>(cov_num) / static_cast<double>(-lower_num);
    out.normaliser = Normaliser::lower;
  }
  return out;
}

double tcov(const BivariateSample& sample, double a, double b) {
  return tcor(sample, a, b).covariance;
}

MeasureResult tcor(const BivariateSample& sample, double a, double b) {
  LocalCounts c;
  c.n = static_cast<std::int64_t>(sample.size());
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const bool bx = sample.xs()[i] <= a;
    const bool by = sample.ys()[i] <= b;
    c.nx += bx;
    c.ny += by;
    c.nxy += bx && by;
  }
  return local_measure(c);
}

MeasureResult tcor(const RankedSample& sample, double a, double b) {
  LocalCounts c{static_cast<std::int64_t>(sample.size()), sample.x().count_le(a),
                sample.y().count_le(b), joint_count(sample.sample(), a, b)};
  return local_measure(c);
}

LocalCounts quantile_counts(const RankedSample& sample, double alpha, double beta) {
  require_level(alpha);
  require_level(beta);
  const double qx = sample.x().quantile(alpha);
  const double qy = sample.y().quantile(beta);
  return {static_cast<std::int64_t>(sample.size()), sample.x().count_le(qx),
          sample.y().count_le(qy), joint_count(sample.sample(), qx, qy)};
}

QuantileCovariance qcov(const RankedSample& sample, double alpha, double beta) {
  const LocalCounts c = quantile_counts(sample, alpha, beta);
  const double n = static_cast<double>(c.n);
  QuantileCovariance out;
  out.covariance = local_measure(c).covariance;
  out.levels = {static_cast<double>(c.nx) / n, static_cast<double>(c.ny) / n};
  out.quantile_x = sample.x().quantile(alpha);
  out.quantile_y = sample.y().quantile(beta);
  return out;
}

QuantileCovariance qcov(const BivariateSample& sample, double alpha, double beta) {
  return qcov(RankedSample(sample), alpha, beta);
}

MeasureResult qcor(const RankedSample& sample, double alpha, double beta) {
  return local_measure(quantile_counts(sample, alpha, beta));
}

MeasureResult qcor(const BivariateSample& sample, double alpha, double beta) {
  return qcor(RankedSample(sample), alpha, beta);
}

double blomqvist_beta(const RankedSample& sample) {
  const LocalCounts c = quantile_counts(sample, 0.5, 0.5);
  return static_cast<double>(4 * c.nxy - c.n) / static_cast<double>(c.n);
}

double blomqvist_beta(const BivariateSample& sample) { return blomqvist_beta(RankedSample(sample)); }

double qmcov(const RankedSample& sample, double alpha) { return qmcor(sample, alpha).covariance; }

MeasureResult qmcor(const RankedSample& sample, double alpha) {
  const auto ex = raw_quantile_error_series(alpha, sample.sample().xs(), sample.x());
  const auto ey = error_series(mean_functional(), sample.sample().ys(), sample.y());
  return gcor(ex, ey);
}

MeasureResult qmcor(const BivariateSample& sample, double alpha) {
  return qmcor(RankedSample(sample), alpha);
}

PearsonBounds pearson_quantile_bounds(double alpha, double beta) {
  require_level(alpha);
  require_level(beta);
  const double lo = std::min(alpha, beta);
  const double hi = std::max(alpha, beta);
  // min(a, b) - ab = lo (1 - hi); dividing by the error standard deviations leaves a ratio
  // under a single square root.
  const double upper = std::sqrt((lo * (1.0 - hi)) / ((1.0 - lo) * hi));
  double lower = -1.0;
  if (alpha + beta == 1.0) {
    // Rounding in 1 - alpha would otherwise leave the ratio a few ulps away from one.
  } else if (alpha + beta < 1.0) {
    lower = -std::sqrt((alpha * beta) / ((1.0 - alpha) * (1.0 - beta)));
  } else {
    lower = -std::sqrt(((1.0 - alpha) * (1.0 - beta)) / (alpha * beta));
  }
  return {lower, upper};
}

}  // namespace gencor
