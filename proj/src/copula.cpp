#include "gencor/copula.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>

#include "gencor/errors.hpp"
#include "gencor/quadrature.hpp"
#include "gencor/rng.hpp"

namespace gencor {

namespace {

constexpr double kCdfTol = 1e-9;

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double normal_quantile(double p) {
  return boost::math::quantile(boost::math::normal_distribution<double>(), p);
}

double t_cdf(double nu, double x) {
  return boost::math::cdf(boost::math::students_t_distribution<double>(nu), x);
}

double t_quantile(double nu, double p) {
  return boost::math::quantile(boost::math::students_t_distribution<double>(nu), p);
}

// Keeps quantile transforms finite at the unit-interval boundary.
double open_unit(double u) {
  constexpr double lo = std::numeric_limits<double>::min();
  constexpr double hi = 1.0 - std::numeric_limits<double>::epsilon() / 2.0;
  return std::clamp(u, lo, hi);
}

// log(e^a + e^b - 1) for a, b >= 0.
double log_clayton_sum(double a, double b) {
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi) - std::exp(-hi));
}

double frechet_clamp(double c, double u, double v) {
  return std::clamp(c, std::max(u + v - 1.0, 0.0), std::min(u, v));
}

double perfect_local_cdf(double u, double v) {
  // Lower branch: x in [0, 1/2] with y = 1/2 - x; upper branch: x in (1/2, 1] with y = 3/2 - x.
  const double lower = std::max(0.0, std::min(u, 0.5) - std::max(0.0, 0.5 - v));
  const double upper = std::max(0.0, u - std::max(0.5, 1.5 - v));
  return lower + upper;
}

}  // namespace

std::string to_string(CopulaFamily family) {
  switch (family) {
    case CopulaFamily::independence: return "independence";
    case CopulaFamily::comonotone: return "comonotone";
    case CopulaFamily::countermonotone: return "countermonotone";
    case CopulaFamily::gaussian: return "gaussian";
    case CopulaFamily::student_t: return "student_t";
    case CopulaFamily::clayton: return "clayton";
    case CopulaFamily::gumbel: return "gumbel";
    case CopulaFamily::perfect_local_median: return "perfect_local_median";
  }
  return "unknown";
}

CopulaFamily parse_copula_family(const std::string& name) {
  for (auto f : {CopulaFamily::independence, CopulaFamily::comonotone, CopulaFamily::countermonotone,
                 CopulaFamily::gaussian, CopulaFamily::student_t, CopulaFamily::clayton,
                 CopulaFamily::gumbel, CopulaFamily::perfect_local_median}) {
    if (to_string(f) == name) return f;
  }
  if (name == "cauchy" || name == "t") return CopulaFamily::student_t;
  throw InvalidParam("unknown copula family '" + name + "'");
}

CopulaSpec CopulaSpec::gaussian(double r) {
  CopulaSpec spec{CopulaFamily::gaussian, r};
  spec.validate();
  return spec;
}

CopulaSpec CopulaSpec::student_t(double r, double nu) {
  CopulaSpec spec{CopulaFamily::student_t, r, nu};
  spec.validate();
  return spec;
}

CopulaSpec CopulaSpec::clayton(double theta) {
  CopulaSpec spec{CopulaFamily::clayton, 0.0, 0.0, theta};
  spec.validate();
  return spec;
}

CopulaSpec CopulaSpec::gumbel(double theta) {
  CopulaSpec spec{CopulaFamily::gumbel, 0.0, 0.0, theta};
  spec.validate();
  return spec;
}

void CopulaSpec::validate() const {
  switch (family) {
    case CopulaFamily::student_t:
      if (!(nu > 0.0) || !std::isfinite(nu)) throw InvalidParam("t copula needs nu > 0");
      [[fallthrough]];
    case CopulaFamily::gaussian:
      if (!(r > -1.0 && r < 1.0)) throw InvalidParam("correlation parameter must lie in (-1, 1)");
      break;
    case CopulaFamily::clayton:
      if (!(theta > 0.0) || !std::isfinite(theta)) throw InvalidParam("Clayton needs theta > 0");
      break;
    case CopulaFamily::gumbel:
      if (!(theta >= 1.0) || !std::isfinite(theta)) throw InvalidParam("Gumbel needs theta >= 1");
      break;
    default:
      break;
  }
}

BivariateSample sample_copula(const CopulaSpec& spec, std::size_t n, std::uint64_t seed) {
  spec.validate();
  if (n == 0) throw InvalidParam("sample size must be positive");
  Rng rng(derive_stream_seed(seed, static_cast<std::uint64_t>(spec.family), n));
  std::vector<double> us(n);
  std::vector<double> vs(n);

  for (std::size_t i = 0; i < n; ++i) {
    double u = 0.0;
    double v = 0.0;
    switch (spec.family) {
      case CopulaFamily::independence:
        u = rng.uniform();
        v = rng.uniform();
        break;
      case CopulaFamily::comonotone:
        u = v = rng.uniform();
        break;
      case CopulaFamily::countermonotone:
        u = rng.uniform();
        v = 1.0 - u;
        break;
      case CopulaFamily::gaussian: {
        const double z1 = rng.normal();
        const double z2 = spec.r * z1 + std::sqrt(1.0 - spec.r * spec.r) * rng.normal();
        u = normal_cdf(z1);
        v = normal_cdf(z2);
        break;
      }
      case CopulaFamily::student_t: {
        const double z1 = rng.normal();
        const double z2 = spec.r * z1 + std::sqrt(1.0 - spec.r * spec.r) * rng.normal();
        const double chi2 = 2.0 * rng.gamma(0.5 * spec.nu);
        const double scale = std::sqrt(spec.nu / chi2);
        u = t_cdf(spec.nu, z1 * scale);
        v = t_cdf(spec.nu, z2 * scale);
        break;
      }
      case CopulaFamily::clayton: {
        const double frailty = rng.gamma(1.0 / spec.theta);
        u = std::pow(1.0 + rng.exponential() / frailty, -1.0 / spec.theta);
        v = std::pow(1.0 + rng.exponential() / frailty, -1.0 / spec.theta);
        break;
      }
      case CopulaFamily::gumbel: {
        const double a = 1.0 / spec.theta;
        double frailty = 1.0;
        if (a < 1.0) {
          // Kanter's representation of the positive stable law with Laplace transform
          // exp(-s^a).
          const double angle = std::numbers::pi * rng.uniform();
          const double w = rng.exponential();
          frailty = std::sin(a * angle) / std::pow(std::sin(angle), 1.0 / a) *
                    std::pow(std::sin((1.0 - a) * angle) / w, (1.0 - a) / a);
        }
        u = std::exp(-std::pow(rng.exponential() / frailty, a));
        v = std::exp(-std::pow(rng.exponential() / frailty, a));
        break;
      }
      case CopulaFamily::perfect_local_median:
        u = rng.uniform();
        v = u <= 0.5 ? 0.5 - u : 1.5 - u;
        break;
    }
    us[i] = u;
    vs[i] = v;
  }
  return make_sample(us, vs);
}

double conditional_cdf(const CopulaSpec& spec, double u, double v) {
  if (v <= 0.0) return 0.0;
  if (v >= 1.0) return 1.0;
  switch (spec.family) {
    case CopulaFamily::independence:
      return v;
    case CopulaFamily::comonotone:
      return v >= u ? 1.0 : 0.0;
    case CopulaFamily::countermonotone:
      return u + v >= 1.0 ? 1.0 : 0.0;
    case CopulaFamily::perfect_local_median:
      return u <= 0.5 ? (v >= 0.5 - u ? 1.0 : 0.0) : (v >= 1.5 - u ? 1.0 : 0.0);
    case CopulaFamily::gaussian: {
      const double a = normal_quantile(open_unit(u));
      const double b = normal_quantile(v);
      return normal_cdf((b - spec.r * a) / std::sqrt(1.0 - spec.r * spec.r));
    }
    case CopulaFamily::student_t: {
      const double a = t_quantile(spec.nu, open_unit(u));
      const double b = t_quantile(spec.nu, v);
      const double scale =
          std::sqrt((spec.nu + a * a) * (1.0 - spec.r * spec.r) / (spec.nu + 1.0));
      return t_cdf(spec.nu + 1.0, (b - spec.r * a) / scale);
    }
    case CopulaFamily::clayton: {
      const double uu = open_unit(u);
      const double a = -spec.theta * std::log(uu);
      const double b = -spec.theta * std::log(v);
      return std::exp((1.0 + 1.0 / spec.theta) * (a - log_clayton_sum(a, b)));
    }
    case CopulaFamily::gumbel: {
      const double uu = open_unit(u);
      const double lu = -std::log(uu);
      const double lv = -std::log(v);
      const double sum = std::pow(lu, spec.theta) + std::pow(lv, spec.theta);
      const double c = std::exp(-std::pow(sum, 1.0 / spec.theta));
      return c * std::pow(sum, 1.0 / spec.theta - 1.0) * std::pow(lu, spec.theta - 1.0) / uu;
    }
  }
  return 0.0;
}

double copula_cdf(const CopulaSpec& spec, double u, double v) {
  if (u <= 0.0 || v <= 0.0) return 0.0;
  if (u >= 1.0) return std::min(v, 1.0);
  if (v >= 1.0) return u;
  switch (spec.family) {
    case CopulaFamily::independence:
      return u * v;
    case CopulaFamily::comonotone:
      return std::min(u, v);
    case CopulaFamily::countermonotone:
      return std::max(u + v - 1.0, 0.0);
    case CopulaFamily::perfect_local_median:
      return perfect_local_cdf(u, v);
    case CopulaFamily::clayton: {
      const double a = -spec.theta * std::log(u);
      const double b = -spec.theta * std::log(v);
      return std::exp(-log_clayton_sum(a, b) / spec.theta);
    }
    case CopulaFamily::gumbel: {
      const double sum = std::pow(-std::log(u), spec.theta) + std::pow(-std::log(v), spec.theta);
      return std::exp(-std::pow(sum, 1.0 / spec.theta));
    }
    case CopulaFamily::gaussian:
      if (spec.r == 0.0) return u * v;
      [[fallthrough]];
    case CopulaFamily::student_t: {
      auto h = [&](double s) { return conditional_cdf(spec, s, v); };
      const double c = u <= 0.5 ? integrate(h, 0.0, u, kCdfTol) : v - integrate(h, u, 1.0, kCdfTol);
      return frechet_clamp(c, u, v);
    }
  }
  return 0.0;
}

double copula_survival(const CopulaSpec& spec, double u, double v) {
  return 1.0 - u - v + copula_cdf(spec, u, v);
}

double population_qfcov(const CopulaSpec& spec, double alpha, double beta) {
  return copula_cdf(spec, alpha, beta) - alpha * beta;
}

double population_qfcor(const CopulaSpec& spec, double alpha, double beta) {
  if (!(alpha > 0.0 && alpha < 1.0 && beta > 0.0 && beta < 1.0))
    throw LevelOutOfRange("levels must lie strictly inside (0, 1)");
  const double cov = population_qfcov(spec, alpha, beta);
  const double base = alpha * beta;
  if (cov >= 0.0) return cov / (std::min(alpha, beta) - base);
  return cov / std::abs(std::max(alpha + beta - 1.0, 0.0) - base);
}

PopulationTail population_tail(const CopulaSpec& spec) {
  spec.validate();
  switch (spec.family) {
    case CopulaFamily::independence:
    case CopulaFamily::gaussian:
      return {0.0, 0.0, 0.0, 0.0};
    case CopulaFamily::comonotone:
      return {1.0, 1.0, 1.0, 1.0};
    case CopulaFamily::countermonotone:
      return {0.0, 0.0, -1.0, -1.0};
    case CopulaFamily::clayton: {
      const double lambda = std::pow(2.0, -1.0 / spec.theta);
      return {lambda, 0.0, lambda, 0.0};
    }
    case CopulaFamily::gumbel: {
      const double lambda = 2.0 - std::pow(2.0, 1.0 / spec.theta);
      return {0.0, lambda, 0.0, lambda};
    }
    case CopulaFamily::student_t:
    case CopulaFamily::perfect_local_median:
      break;
  }
  throw Unsupported("no closed-form tail limits for " + to_string(spec.family));
}

double spearman_rho(const CopulaSpec& spec) {
  spec.validate();
  switch (spec.family) {
    case CopulaFamily::independence:
      return 0.0;
    case CopulaFamily::comonotone:
      return 1.0;
    case CopulaFamily::countermonotone:
      return -1.0;
    case CopulaFamily::gaussian:
    case CopulaFamily::student_t: {
      // Integrating C by parts in u gives rho = 3 - 12 * int int u dC/du (u, v) dv du, which
      // only needs the closed-form conditional CDF.
      auto outer = [&](double u) {
        auto inner = [&](double v) { return conditional_cdf(spec, u, v); };
        return u * integrate(inner, 0.0, 1.0, 1e-10);
      };
      return 3.0 - 12.0 * integrate(outer, 0.0, 1.0, 1e-9);
    }
    default: {
      auto outer = [&](double u) {
        auto inner = [&](double v) { return copula_cdf(spec, u, v); };
        return integrate(inner, 0.0, 1.0, 1e-10);
      };
      return 12.0 * integrate(outer, 0.0, 1.0, 1e-9) - 3.0;
    }
  }
}

CopulaSpec calibrate_spearman(CopulaFamily family, double target, double nu) {
  auto make = [&](double p) {
    switch (family) {
      case CopulaFamily::gaussian: return CopulaSpec::gaussian(p);
      case CopulaFamily::student_t: return CopulaSpec::student_t(p, nu);
      case CopulaFamily::clayton: return CopulaSpec::clayton(p);
      case CopulaFamily::gumbel: return CopulaSpec::gumbel(p);
      default: throw InvalidParam("calibration supports gaussian, student_t, clayton, gumbel");
    }
  };
  double lo = 0.0;
  double hi = 0.0;
  switch (family) {
    case CopulaFamily::gaussian:
    case CopulaFamily::student_t:
      lo = -1.0 + 1e-9;
      hi = 1.0 - 1e-9;
      break;
    case CopulaFamily::clayton:
      lo = 1e-6;
      hi = 50.0;
      break;
    case CopulaFamily::gumbel:
      lo = 1.0;
      hi = 50.0;
      break;
    default:
      make(0.0);
  }
  if (!(target > spearman_rho(make(lo)) && target < spearman_rho(make(hi))))
    throw TargetUnattainable("Spearman's rho " + std::to_string(target) + " is outside the range of " +
                             to_string(family));
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    if (spearman_rho(make(mid)) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return make(0.5 * (lo + hi));
}

Marginal parse_marginal(const std::string& name) {
  if (name == "uniform") return Marginal::uniform;
  if (name == "normal") return Marginal::normal;
  if (name == "exponential") return Marginal::exponential;
  throw InvalidParam("unknown marginal '" + name + "'");
}

std::string to_string(Marginal marginal) {
  switch (marginal) {
    case Marginal::uniform: return "uniform";
    case Marginal::normal: return "normal";
    case Marginal::exponential: return "exponential";
  }
  return "unknown";
}

double apply_marginal(Marginal marginal, double u) {
  switch (marginal) {
    case Marginal::uniform: return u;
    case Marginal::normal: return normal_quantile(open_unit(u));
    case Marginal::exponential: return -std::log1p(-open_unit(u));
  }
  return u;
}

}  // namespace gencor
