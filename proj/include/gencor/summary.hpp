#pragma once

#include <optional>
#include <vector>

#include "gencor/gcov.hpp"
#include "gencor/sample.hpp"

namespace gencor {

/// qf integrates quantile covariances over levels in [0, 1]^2; cdf integrates threshold
/// covariances over the observation plane.
enum class SummaryDomain { cdf, qf };

/// Closed rectangle [lo_x, hi_x] x [lo_y, hi_y]; cdf-domain rectangles may be unbounded.
struct Region {
  double lo_x;
  double hi_x;
  double lo_y;
  double hi_y;
};

/// Lebesgue measure on the whole domain, or restricted to a rectangle.
struct MeasureSpec {
  SummaryDomain domain = SummaryDomain::qf;
  std::optional<Region> region;
};

using SummaryResult = MeasureResult;

/// Integral of the step function a -> 1{x_k <= a} (cdf) or alpha -> 1{x_k <= q_alpha} (qf)
/// over one side of the integration rectangle, per observation.
///
/// By Fubini the summary covariance is the 1/n covariance of the x- and y-weights, which is
/// the exact integral of the piecewise-constant surface. Throws EmptyRegion when the clipped
/// interval has zero length.
std::vector<double> summary_weights(const EmpiricalDistribution& margin,
                                    std::span<const double> values, SummaryDomain domain,
                                    double lo, double hi);

double scov_cdf(const RankedSample& sample, const std::optional<Region>& region = std::nullopt);
double scov_qf(const RankedSample& sample, const std::optional<Region>& region = std::nullopt);

/// Summary correlation; bounds integrate the same surface over the comonotone and
/// countermonotone order-statistic couplings.
SummaryResult scor(const RankedSample& sample, const MeasureSpec& spec);
SummaryResult scor(const BivariateSample& sample, const MeasureSpec& spec);

SummaryResult regional_scor(const RankedSample& sample, SummaryDomain domain, const Region& rect);

}  // namespace gencor
