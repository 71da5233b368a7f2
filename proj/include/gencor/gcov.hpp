#pragma once

#include <span>

#include "gencor/gen_errors.hpp"
#include "gencor/sample.hpp"

namespace gencor {

/// Covariances of the countermonotone (lower) and comonotone (upper) couplings with the same
/// margins. lower <= 0 <= upper.
struct CouplingBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Which coupling normalised the correlation.
enum class Normaliser { upper, lower, none };

struct MeasureResult {
  double covariance = 0.0;
  CouplingBounds bounds;
  /// covariance / |upper| if covariance >= 0, covariance / |lower| otherwise; 0 if degenerate.
  double correlation = 0.0;
  /// True when one of the error series is constant.
  bool degenerate = false;
  Normaliser normaliser = Normaliser::none;
};

/// (1/n) sum e_x[i] e_y[i].
///
/// Products are summed in sorted order, so the result depends only on the multiset of
/// products. A comonotone sample then reproduces its upper coupling bit for bit.
double gcov(std::span<const double> ex, std::span<const double> ey);
double gcov(const ErrorSeries& ex, const ErrorSeries& ey);

/// Order-statistic couplings: upper pairs e_x(i) with e_y(i), lower with e_y(n-i+1).
CouplingBounds coupling_bounds(std::span<const double> ex, std::span<const double> ey);
CouplingBounds coupling_bounds(const ErrorSeries& ex, const ErrorSeries& ey);

/// Applies the sign-dependent ratio. A zero bound on the relevant side yields correlation 0.
MeasureResult normalise(double covariance, CouplingBounds bounds, bool degenerate);

MeasureResult gcor(const ErrorSeries& ex, const ErrorSeries& ey);
MeasureResult gcor(const BivariateSample& sample, const FunctionalSpec& spec_x,
                   const FunctionalSpec& spec_y);
MeasureResult gcor(const RankedSample& sample, const FunctionalSpec& spec_x,
                   const FunctionalSpec& spec_y);

/// Mean correlation, gcor with mean errors on both margins.
MeasureResult mcor(const RankedSample& sample);

}  // namespace gencor
