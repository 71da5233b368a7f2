#pragma once

#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "gencor/sample.hpp"

namespace gencor {

struct MeanFunctional {};
struct ExpectileFunctional {
  double tau;
};
struct QuantileFunctional {
  double alpha;
};
/// Constant functional at a fixed point; its error is the centred exceedance indicator.
struct ThresholdFunctional {
  double point;
};
/// Produced only by error_series_from_identification; carries a label for reporting.
struct CustomFunctional {
  std::string name;
};

using FunctionalSpec = std::variant<MeanFunctional, ExpectileFunctional, QuantileFunctional,
                                    ThresholdFunctional, CustomFunctional>;

// Validating constructors. Levels must lie strictly inside (0, 1), points must be finite.
FunctionalSpec mean_functional();
FunctionalSpec expectile_functional(double tau);
FunctionalSpec quantile_functional(double alpha);
FunctionalSpec threshold_functional(double point);

/// Short human-readable form, e.g. "quantile(0.5)".
std::string describe(const FunctionalSpec& spec);

// Canonical identification functions.
inline double id_mean(double t, double x) noexcept { return x - t; }
double id_expectile(double tau, double t, double x) noexcept;
inline double id_quantile(double alpha, double t, double x) noexcept {
  return alpha - (x <= t ? 1.0 : 0.0);
}

/// Per-observation generalised errors for one margin.
struct ErrorSeries {
  std::vector<double> values;
  FunctionalSpec functional;
  /// Estimated functional value; for thresholds the level F(a).
  double fitted_value = 0.0;

  bool is_constant() const noexcept;
};

/// Solves the sample moment condition for the functional. Threshold specs need no fitting
/// and raise UnsupportedFunctional.
///
/// The expectile moment map is piecewise linear in t with kinks at the data points, so the
/// root is located on the bracketing segment and solved in closed form there.
double estimate_functional(const FunctionalSpec& spec, const EmpiricalDistribution& margin);

/// Errors e_T(x_i) in sample order. Quantile errors use the corrected level F(q_alpha).
ErrorSeries error_series(const FunctionalSpec& spec, std::span<const double> values,
                         const EmpiricalDistribution& margin);
ErrorSeries error_series(const FunctionalSpec& spec, std::span<const double> values);

/// Quantile error with the raw level, alpha - 1{x_i <= q_alpha}. Only centred when
/// F(q_alpha) = alpha; used where the partner error is centred.
ErrorSeries raw_quantile_error_series(double alpha, std::span<const double> values,
                                      const EmpiricalDistribution& margin);

/// Increasing identification function v(t, x); the extension point for functionals beyond
/// the four named families.
using IdentificationFunction = std::function<double(double t, double x)>;

/// inf{t : mean_i v(t, x_i) <= 0} over [min, max], by bisection to the given absolute tolerance.
double solve_moment_condition(const IdentificationFunction& v, const EmpiricalDistribution& margin,
                              double abs_tol);

/// Errors v(t_hat, x_i) with t_hat from solve_moment_condition.
ErrorSeries error_series_from_identification(const IdentificationFunction& v, std::string name,
                                             std::span<const double> values,
                                             const EmpiricalDistribution& margin);

}  // namespace gencor
