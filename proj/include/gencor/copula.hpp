#pragma once

#include <cstdint>
#include <string>

#include "gencor/sample.hpp"

namespace gencor {

enum class CopulaFamily {
  independence,
  comonotone,
  countermonotone,
  gaussian,
  student_t,
  clayton,
  gumbel,
  /// X ~ U(0, 1), Y = 1/2 - X on [0, 1/2] and 3/2 - X on (1/2, 1]: comonotone median
  /// indicators without being comonotone.
  perfect_local_median
};

std::string to_string(CopulaFamily family);
/// Parses the names produced by to_string; "cauchy" is accepted as student_t with nu = 1.
CopulaFamily parse_copula_family(const std::string& name);

struct CopulaSpec {
  CopulaFamily family = CopulaFamily::independence;
  double r = 0.0;      // gaussian, student_t
  double nu = 0.0;     // student_t
  double theta = 0.0;  // clayton (> 0), gumbel (>= 1)

  static CopulaSpec independence() { return {CopulaFamily::independence}; }
  static CopulaSpec comonotone() { return {CopulaFamily::comonotone}; }
  static CopulaSpec countermonotone() { return {CopulaFamily::countermonotone}; }
  static CopulaSpec perfect_local_median() { return {CopulaFamily::perfect_local_median}; }
  static CopulaSpec gaussian(double r);
  static CopulaSpec student_t(double r, double nu);
  static CopulaSpec cauchy(double r) { return student_t(r, 1.0); }
  static CopulaSpec clayton(double theta);
  static CopulaSpec gumbel(double theta);

  /// Throws InvalidParam when parameters are out of range.
  void validate() const;
};

/// n draws with uniform margins. Gaussian and t use correlated normal (t) pairs mapped
/// through their CDFs; Clayton uses a gamma frailty and Gumbel a positive stable frailty.
/// The generator stream is derive_stream_seed(seed, family index, n).
BivariateSample sample_copula(const CopulaSpec& spec, std::size_t n, std::uint64_t seed);

/// C(u, v). Closed forms where they exist; gaussian and t integrate the conditional CDF
/// over the first argument to absolute tolerance 1e-9. Boundary arguments are exact.
double copula_cdf(const CopulaSpec& spec, double u, double v);

/// dC/du (u, v) = P(V <= v | U = u).
double conditional_cdf(const CopulaSpec& spec, double u, double v);

/// P(U > u, V > v) = 1 - u - v + C(u, v).
double copula_survival(const CopulaSpec& spec, double u, double v);

/// Population quantile covariance C(alpha, beta) - alpha beta.
double population_qfcov(const CopulaSpec& spec, double alpha, double beta);
/// Population quantile correlation with the copula Frechet-Hoeffding normalisation.
double population_qfcor(const CopulaSpec& spec, double alpha, double beta);

struct PopulationTail {
  double lambda_lower = 0.0;
  double lambda_upper = 0.0;
  double lower_tail_cor = 0.0;
  double upper_tail_cor = 0.0;
};

/// Closed-form tail coefficients and tail correlations. Throws Unsupported for student_t and
/// perfect_local_median.
PopulationTail population_tail(const CopulaSpec& spec);

/// Spearman's rho, 12 * integral of C over the unit square - 3, by nested adaptive quadrature.
double spearman_rho(const CopulaSpec& spec);

/// Bisection (to 1e-6 in the parameter) for the family parameter with spearman_rho = target.
/// nu is used for student_t only. Throws TargetUnattainable outside the family's range.
CopulaSpec calibrate_spearman(CopulaFamily family, double target, double nu = 1.0);

/// Marginal transforms for simulated data.
enum class Marginal { uniform, normal, exponential };
Marginal parse_marginal(const std::string& name);
std::string to_string(Marginal marginal);
double apply_marginal(Marginal marginal, double u);

}  // namespace gencor
