#include "gencor/summary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gencor/errors.hpp"

namespace gencor {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct CentredWeights {
  std::vector<double> x;
  std::vector<double> y;
};

// Negated, centred weights: increasing in the observation, so they behave like errors.
std::vector<double> as_errors(std::vector<double> weights) {
  long double sum = 0.0L;
  for (double w : weights) sum += w;
  const double mean = static_cast<double>(sum / static_cast<long double>(weights.size()));
  for (double& w : weights) w = mean - w;
  return weights;
}

CentredWeights weights_for(const RankedSample& sample, SummaryDomain domain,
                           const std::optional<Region>& region) {
  const double unbounded_lo = domain == SummaryDomain::qf ? 0.0 : -kInf;
  const double unbounded_hi = domain == SummaryDomain::qf ? 1.0 : kInf;
  const Region r = region.value_or(Region{unbounded_lo, unbounded_hi, unbounded_lo, unbounded_hi});
  if (std::isnan(r.lo_x) || std::isnan(r.hi_x) || std::isnan(r.lo_y) || std::isnan(r.hi_y) ||
      !(r.lo_x < r.hi_x) || !(r.lo_y < r.hi_y))
    throw InvalidParam("region must be a non-degenerate rectangle");
  if (domain == SummaryDomain::qf && (r.lo_x < 0.0 || r.hi_x > 1.0 || r.lo_y < 0.0 || r.hi_y > 1.0))
    throw InvalidParam("quantile-domain regions must lie inside [0, 1]^2");
  return {as_errors(summary_weights(sample.x(), sample.sample().xs(), domain, r.lo_x, r.hi_x)),
          as_errors(summary_weights(sample.y(), sample.sample().ys(), domain, r.lo_y, r.hi_y))};
}

bool constant(const std::vector<double>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
}

}  // namespace

std::vector<double> summary_weights(const EmpiricalDistribution& margin,
                                    std::span<const double> values, SummaryDomain domain,
                                    double lo, double hi) {
  std::vector<double> out(values.size(), 0.0);
  if (domain == SummaryDomain::cdf) {
    // Threshold covariances vanish outside [min, max).
    lo = std::max(lo, margin.min());
    hi = std::min(hi, margin.max());
    if (margin.min() == margin.max()) return out;  // constant margin: surface is 0
    if (!(lo < hi)) throw EmptyRegion("region misses the support of a margin");
    for (std::size_t k = 0; k < values.size(); ++k)
      out[k] = std::max(0.0, hi - std::max(lo, values[k]));
  } else {
    lo = std::max(lo, 0.0);
    hi = std::min(hi, 1.0);
    if (!(lo < hi)) throw EmptyRegion("region has no level range");
    // q_alpha >= x_k exactly when alpha > #{x < x_k} / n.
    const double n = static_cast<double>(margin.size());
    for (std::size_t k = 0; k < values.size(); ++k) {
      const double start = static_cast<double>(margin.count_lt(values[k])) / n;
      out[k] = std::max(0.0, hi - std::max(lo, start));
    }
  }
  return out;
}

double scov_cdf(const RankedSample& sample, const std::optional<Region>& region) {
  const auto w = weights_for(sample, SummaryDomain::cdf, region);
  return gcov(w.x, w.y);
}

double scov_qf(const RankedSample& sample, const std::optional<Region>& region) {
  const auto w = weights_for(sample, SummaryDomain::qf, region);
  return gcov(w.x, w.y);
}

SummaryResult scor(const RankedSample& sample, const MeasureSpec& spec) {
  const auto w = weights_for(sample, spec.domain, spec.region);
  const bool degenerate = constant(w.x) || constant(w.y);
  return normalise(gcov(w.x, w.y), coupling_bounds(w.x, w.y), degenerate);
}

SummaryResult scor(const BivariateSample& sample, const MeasureSpec& spec) {
  return scor(RankedSample(sample), spec);
}

SummaryResult regional_scor(const RankedSample& sample, SummaryDomain domain, const Region& rect) {
  return scor(sample, MeasureSpec{domain, rect});
}

}  // namespace gencor
