#pragma once

#include <cstdint>

#include "gencor/gcov.hpp"
#include "gencor/sample.hpp"

namespace gencor {

/// Exceedance counts behind every threshold and quantile measure: n, #{x <= a}, #{y <= b}
/// and #{x <= a, y <= b}.
struct LocalCounts {
  std::int64_t n = 0;
  std::int64_t nx = 0;
  std::int64_t ny = 0;
  std::int64_t nxy = 0;
};

/// Threshold/quantile covariance and correlation from counts.
///
/// All quantities are integer numerators over n^2, so each value is a single correctly
/// rounded division. The bounds are the Frechet-Hoeffding forms min(u, v) - uv and
/// max(u + v - 1, 0) - uv with u = nx / n and v = ny / n. Degenerate when u or v is 0 or 1.
MeasureResult local_measure(const LocalCounts& counts);

double tcov(const BivariateSample& sample, double a, double b);
MeasureResult tcor(const BivariateSample& sample, double a, double b);
MeasureResult tcor(const RankedSample& sample, double a, double b);

/// u* = F(q_alpha(X)) and v* = F(q_beta(Y)).
struct CorrectedLevels {
  double u_star = 0.0;
  double v_star = 0.0;
};

struct QuantileCovariance {
  double covariance = 0.0;
  CorrectedLevels levels;
  double quantile_x = 0.0;
  double quantile_y = 0.0;
};

LocalCounts quantile_counts(const RankedSample& sample, double alpha, double beta);

QuantileCovariance qcov(const RankedSample& sample, double alpha, double beta);
QuantileCovariance qcov(const BivariateSample& sample, double alpha, double beta);
MeasureResult qcor(const RankedSample& sample, double alpha, double beta);
MeasureResult qcor(const BivariateSample& sample, double alpha, double beta);

/// 4 F(med_X, med_Y) - 1.
double blomqvist_beta(const RankedSample& sample);
double blomqvist_beta(const BivariateSample& sample);

/// (1/n) sum (alpha - 1{x_i <= q_alpha}) (y_i - mean(y)), with the raw level alpha.
double qmcov(const RankedSample& sample, double alpha);
/// Quantile-mean correlation normalised by the order-statistic coupling bounds.
MeasureResult qmcor(const RankedSample& sample, double alpha);
MeasureResult qmcor(const BivariateSample& sample, double alpha);

/// Bounds of the Pearson correlation between two continuous quantile errors; these depend
/// only on the levels.
struct PearsonBounds {
  double lower = 0.0;
  double upper = 0.0;
};
PearsonBounds pearson_quantile_bounds(double alpha, double beta);

}  // namespace gencor
