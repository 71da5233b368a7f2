#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gencor/sample.hpp"

namespace gencor {

enum class SurfaceMeasure { cdf_cov, cdf_cor, qf_cov, qf_cor };
enum class SurfaceStat { covariance, correlation };

std::string to_string(SurfaceMeasure measure);

/// Threshold or quantile covariances/correlations over a rectangular grid.
struct DependenceSurface {
  SurfaceMeasure measure = SurfaceMeasure::qf_cor;
  std::vector<double> axis_x;
  std::vector<double> axis_y;
  /// Row-major: values[i * axis_y.size() + j] belongs to (axis_x[i], axis_y[j]).
  std::vector<double> values;
  /// 1 where an error series is constant (value emitted as 0).
  std::vector<std::uint8_t> degenerate;
  std::size_t sample_size = 0;

  std::size_t rows() const noexcept { return axis_x.size(); }
  std::size_t cols() const noexcept { return axis_y.size(); }
  double at(std::size_t i, std::size_t j) const { return values[i * cols() + j]; }
  bool is_degenerate(std::size_t i, std::size_t j) const { return degenerate[i * cols() + j] != 0; }
  bool is_correlation() const noexcept {
    return measure == SurfaceMeasure::cdf_cor || measure == SurfaceMeasure::qf_cor;
  }
};

/// 0.01, 0.02, ..., 0.99.
std::vector<double> default_levels();

/// values[i][j] = qcor(levels_x[i], levels_y[j]) (or qcov).
DependenceSurface qf_surface(const RankedSample& sample, std::span<const double> levels_x,
                             std::span<const double> levels_y,
                             SurfaceStat stat = SurfaceStat::correlation);
DependenceSurface qf_surface(const RankedSample& sample, std::span<const double> levels,
                             SurfaceStat stat = SurfaceStat::correlation);

/// values[i][j] = tcor(grid_x[i], grid_y[j]) (or tcov). Cells with a threshold below the
/// minimum or at/above the maximum of a margin are degenerate.
DependenceSurface cdf_surface(const RankedSample& sample, std::span<const double> grid_x,
                              std::span<const double> grid_y,
                              SurfaceStat stat = SurfaceStat::correlation);

struct Trim {
  double lo = 0.025;
  double hi = 0.975;
};

/// Distinct data values v with q_lo <= v <= q_hi (q_0 is the minimum). When max_points > 0 and
/// more values qualify, an evenly spaced subset (always keeping both ends) is returned.
/// Throws EmptyGrid if nothing qualifies.
std::vector<double> data_breakpoints(const EmpiricalDistribution& margin, Trim trim,
                                     std::size_t max_points = 0);

DependenceSurface cdf_surface_breakpoints(const RankedSample& sample, Trim trim = {},
                                          std::size_t max_points = 0,
                                          SurfaceStat stat = SurfaceStat::correlation);

enum class GlobalDependence { positive, negative, mixed };

std::string to_string(GlobalDependence label);

/// 2 / sqrt(n)
double default_classification_tolerance(std::size_t n);

/// Requires a covariance surface. Degenerate cells are skipped.
GlobalDependence global_dependence_classify(const DependenceSurface& surface, double tol);

}  // namespace gencor
