#include "gencor/gcov.hpp"

#include <algorithm>
#include <vector>

#include "gencor/errors.hpp"

namespace gencor {

namespace {

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 16) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

double mean_of_sorted(std::vector<double>& terms) {
  std::sort(terms.begin(), terms.end());
  return pairwise_sum(terms) / static_cast<double>(terms.size());
}

void check_lengths(std::span<const double> ex, std::span<const double> ey) {
  if (ex.size() != ey.size()) throw LengthMismatch("error series differ in length");
  if (ex.empty()) throw EmptySample();
}

bool constant(std::span<const double> values) {
  return std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) == values.end();
}

}  // namespace

double gcov(std::span<const double> ex, std::span<const double> ey) {
  check_lengths(ex, ey);
  std::vector<double> terms(ex.size());
  for (std::size_t i = 0; i < ex.size(); ++i) terms[i] = ex[i] * ey[i];
  return mean_of_sorted(terms);
}

double gcov(const ErrorSeries& ex, const ErrorSeries& ey) { return gcov(ex.values, ey.values); }

CouplingBounds coupling_bounds(std::span<const double> ex, std::span<const double> ey) {
  check_lengths(ex, ey);
  std::vector<double> sx(ex.begin(), ex.end());
  std::vector<double> sy(ey.begin(), ey.end());
  std::stable_sort(sx.begin(), sx.end());
  std::stable_sort(sy.begin(), sy.end());
  const std::size_t n = sx.size();
  std::vector<double> co(n);
  std::vector<double> counter(n);
  for (std::size_t i = 0; i < n; ++i) {
    co[i] = sx[i] * sy[i];
    counter[i] = sx[i] * sy[n - 1 - i];
  }
  return {mean_of_sorted(counter), mean_of_sorted(co)};
}

CouplingBounds coupling_bounds(const ErrorSeries& ex, const ErrorSeries& ey) {
  return coupling_bounds(ex.values, ey.values);
}

MeasureResult normalise(double covariance, CouplingBounds bounds, bool degenerate) {
  MeasureResult out{covariance, bounds, 0.0, degenerate, Normaliser::none};
  if (degenerate) return out;
  if (covariance >= 0.0) {
    if (bounds.upper > 0.0) {
      out.correlation = std::min(covariance / bounds.upper, 1.0);
      out.normaliser = Normaliser::upper;
    }
  } else if (bounds.lower < 0.0) {
    out.correlation = std::max(covariance / -bounds.lower, -1.0);
    out.normaliser = Normaliser::lower;
  }
  return out;
}

MeasureResult gcor(const ErrorSeries& ex, const ErrorSeries& ey) {
  check_lengths(ex.values, ey.values);
  const bool degenerate = constant(ex.values) || constant(ey.values);
  return normalise(gcov(ex, ey), coupling_bounds(ex, ey), degenerate);
}

MeasureResult gcor(const RankedSample& sample, const FunctionalSpec& spec_x,
                   const FunctionalSpec& spec_y) {
  const auto ex = error_series(spec_x, sample.sample().xs(), sample.x());
  const auto ey = error_series(spec_y, sample.sample().ys(), sample.y());
  return gcor(ex, ey);
}

MeasureResult gcor(const BivariateSample& sample, const FunctionalSpec& spec_x,
                   const FunctionalSpec& spec_y) {
  return gcor(RankedSample(sample), spec_x, spec_y);
}

MeasureResult mcor(const RankedSample& sample) {
  return gcor(sample, mean_functional(), mean_functional());
}

}  // namespace gencor
