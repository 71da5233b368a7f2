#include "gencor/gen_errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gencor/errors.hpp"

namespace gencor {

namespace {

void require_open_level(double level, const char* what) {
  if (!(level > 0.0 && level < 1.0)) {
    throw LevelOutOfRange(std::string(what) + " must lie strictly inside (0, 1)");
  }
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

double sample_mean(const std::vector<double>& sorted) {
  long double sum = 0.0L;
  for (double x : sorted) sum += x;
  return static_cast<double>(sum / static_cast<long double>(sorted.size()));
}

// Root of t -> sum_i |1{x_i <= t} - tau| (x_i - t). On [v_j, v_{j+1}) the weights are
// fixed, so the map is linear there and its root is a weighted mean.
double expectile_root(double tau, const std::vector<double>& sorted) {
  const std::size_t n = sorted.size();
  long double total = 0.0L;
  for (double x : sorted) total += x;
  const long double below_w = 1.0L - tau;
  const long double above_w = tau;

  long double below_sum = 0.0L;
  std::size_t k = 0;
  while (k < n) {
    const double v = sorted[k];
    while (k < n && sorted[k] == v) below_sum += sorted[k++];
    const long double num = below_w * below_sum + above_w * (total - below_sum);
    const long double den = below_w * static_cast<long double>(k) +
                            above_w * static_cast<long double>(n - k);
    const double t = static_cast<double>(num / den);
    if (k == n) return v;
    const double next = sorted[k];
    if (t < next) return std::clamp(t, v, next);
  }
  return sorted.back();
}

}  // namespace

FunctionalSpec mean_functional() { return MeanFunctional{}; }

FunctionalSpec expectile_functional(double tau) {
  require_open_level(tau, "expectile level");
  return ExpectileFunctional{tau};
}

FunctionalSpec quantile_functional(double alpha) {
  require_open_level(alpha, "quantile level");
  return QuantileFunctional{alpha};
}

FunctionalSpec threshold_functional(double point) {
  if (!std::isfinite(point)) throw InvalidParam("threshold point must be finite");
  return ThresholdFunctional{point};
}

std::string describe(const FunctionalSpec& spec) {
  std::ostringstream out;
  out.precision(17);
  std::visit(overloaded{
                 [&](const MeanFunctional&) { out << "mean"; },
                 [&](const ExpectileFunctional& f) { out << "expectile(" << f.tau << ")"; },
                 [&](const QuantileFunctional& f) { out << "quantile(" << f.alpha << ")"; },
                 [&](const ThresholdFunctional& f) { out << "threshold(" << f.point << ")"; },
                 [&](const CustomFunctional& f) { out << f.name; },
             },
             spec);
  return out.str();
}

double id_expectile(double tau, double t, double x) noexcept {
  const double indicator = x <= t ? 1.0 : 0.0;
  return 2.0 * std::abs(indicator - tau) * (x - t);
}

bool ErrorSeries::is_constant() const noexcept {
  return std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) == values.end();
}

double estimate_functional(const FunctionalSpec& spec, const EmpiricalDistribution& margin) {
  return std::visit(
      overloaded{
          [&](const MeanFunctional&) { return sample_mean(margin.sorted_values()); },
          [&](const ExpectileFunctional& f) {
            require_open_level(f.tau, "expectile level");
            return expectile_root(f.tau, margin.sorted_values());
          },
          [&](const QuantileFunctional& f) {
            require_open_level(f.alpha, "quantile level");
            return margin.quantile(f.alpha);
          },
          [&](const ThresholdFunctional&) -> double {
            throw UnsupportedFunctional("threshold functionals are not fitted");
          },
          [&](const CustomFunctional&) -> double {
            throw UnsupportedFunctional("custom functionals are fitted via solve_moment_condition");
          },
      },
      spec);
}

ErrorSeries error_series(const FunctionalSpec& spec, std::span<const double> values,
                         const EmpiricalDistribution& margin) {
  if (values.size() != margin.size()) throw LengthMismatch("margin and values differ in length");
  ErrorSeries out{{}, spec, 0.0};
  out.values.resize(values.size());
  const double n = static_cast<double>(values.size());

  std::visit(overloaded{
                 [&](const MeanFunctional&) {
                   out.fitted_value = estimate_functional(spec, margin);
                   for (std::size_t i = 0; i < values.size(); ++i)
                     out.values[i] = id_mean(out.fitted_value, values[i]);
                 },
                 [&](const ExpectileFunctional& f) {
                   out.fitted_value = estimate_functional(spec, margin);
                   for (std::size_t i = 0; i < values.size(); ++i)
                     out.values[i] = id_expectile(f.tau, out.fitted_value, values[i]);
                 },
                 [&](const QuantileFunctional&) {
                   const double q = estimate_functional(spec, margin);
                   out.fitted_value = q;
                   const double level = static_cast<double>(margin.count_le(q)) / n;
                   for (std::size_t i = 0; i < values.size(); ++i)
                     out.values[i] = level - (values[i] <= q ? 1.0 : 0.0);
                 },
                 [&](const ThresholdFunctional& f) {
                   const double level = static_cast<double>(margin.count_le(f.point)) / n;
                   out.fitted_value = level;
                   for (std::size_t i = 0; i < values.size(); ++i)
                     out.values[i] = level - (values[i] <= f.point ? 1.0 : 0.0);
                 },
                 [&](const CustomFunctional&) {
                   throw UnsupportedFunctional(
                       "custom functionals need error_series_from_identification");
                 },
             },
             spec);
  return out;
}

ErrorSeries error_series(const FunctionalSpec& spec, std::span<const double> values) {
  return error_series(spec, values, EmpiricalDistribution(values));
}

ErrorSeries raw_quantile_error_series(double alpha, std::span<const double> values,
                                      const EmpiricalDistribution& margin) {
  require_open_level(alpha, "quantile level");
  if (values.size() != margin.size()) throw LengthMismatch("margin and values differ in length");
  ErrorSeries out{{}, QuantileFunctional{alpha}, margin.quantile(alpha)};
  out.values.resize(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    out.values[i] = id_quantile(alpha, out.fitted_value, values[i]);
  return out;
}

double solve_moment_condition(const IdentificationFunction& v, const EmpiricalDistribution& margin,
                              double abs_tol) {
  const auto& xs = margin.sorted_values();
  auto moment = [&](double t) {
    long double sum = 0.0L;
    for (double x : xs) sum += v(t, x);
    return static_cast<double>(sum / static_cast<long double>(xs.size()));
  };
  double lo = margin.min();
  double hi = margin.max();
  if (moment(lo) <= 0.0) return lo;
  if (moment(hi) > 0.0) throw InvalidParam("identification function has no sign change on the data");
  while (hi - lo > abs_tol) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (moment(mid) <= 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

ErrorSeries error_series_from_identification(const IdentificationFunction& v, std::string name,
                                             std::span<const double> values,
                                             const EmpiricalDistribution& margin) {
  if (values.size() != margin.size()) throw LengthMismatch("margin and values differ in length");
  const double tol = 1e-10 * (margin.max() - margin.min() + 1.0);
  ErrorSeries out{{}, CustomFunctional{std::move(name)}, solve_moment_condition(v, margin, tol)};
  out.values.resize(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out.values[i] = v(out.fitted_value, values[i]);
  return out;
}

}  // namespace gencor
