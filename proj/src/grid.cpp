#include "gencor/grid.hpp"

#include <algorithm>
#include <cmath>

#include "gencor/errors.hpp"
#include "gencor/local.hpp"
#include "gencor/parallel.hpp"

namespace gencor {

namespace {

void require_ascending(std::span<const double> grid, const char* what) {
  if (grid.empty()) throw EmptyGrid(std::string(what) + " is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i])) throw InvalidParam(std::string(what) + " has non-finite entries");
    if (i > 0 && !(grid[i - 1] < grid[i]))
      throw InvalidParam(std::string(what) + " must be strictly ascending");
  }
}

// Index of the first threshold >= value, i.e. the first grid cell whose event {v <= t}
// contains the observation; thresholds.size() when none does.
std::vector<std::uint32_t> bucket(std::span<const double> values, std::span<const double> thresholds) {
  std::vector<std::uint32_t> out(values.size());
  parallel_for(values.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const auto it = std::lower_bound(thresholds.begin(), thresholds.end(), values[k]);
      out[k] = static_cast<std::uint32_t>(it - thresholds.begin());
    }
  });
  return out;
}

// Evaluates local measures on the grid spanned by per-axis thresholds, using cumulative
// joint counts so the cost is O(n log L + L^2).
void fill_from_thresholds(const RankedSample& sample, std::span<const double> tx,
                          std::span<const double> ty, SurfaceStat stat, DependenceSurface& out) {
  const std::size_t rows = tx.size();
  const std::size_t cols = ty.size();
  const auto bx = bucket(sample.sample().xs(), tx);
  const auto by = bucket(sample.sample().ys(), ty);

  const std::size_t stride = cols + 1;
  std::vector<std::int64_t> cum((rows + 1) * stride, 0);
  for (std::size_t k = 0; k < bx.size(); ++k) ++cum[bx[k] * stride + by[k]];
  for (std::size_t i = 0; i <= rows; ++i) {
    for (std::size_t j = 0; j <= cols; ++j) {
      std::int64_t v = cum[i * stride + j];
      if (i > 0) v += cum[(i - 1) * stride + j];
      if (j > 0) v += cum[i * stride + j - 1];
      if (i > 0 && j > 0) v -= cum[(i - 1) * stride + j - 1];
      cum[i * stride + j] = v;
    }
  }

  const auto n = static_cast<std::int64_t>(sample.size());
  out.values.assign(rows * cols, 0.0);
  out.degenerate.assign(rows * cols, 0);
  out.sample_size = sample.size();
  parallel_for(
      rows * cols,
      [&](std::size_t begin, std::size_t end) {
        for (std::size_t cell = begin; cell < end; ++cell) {
          const std::size_t i = cell / cols;
          const std::size_t j = cell % cols;
          const LocalCounts c{n, cum[i * stride + cols], cum[rows * stride + j],
                              cum[i * stride + j]};
          const MeasureResult m = local_measure(c);
          out.values[cell] = stat == SurfaceStat::covariance ? m.covariance : m.correlation;
          out.degenerate[cell] = m.degenerate ? 1 : 0;
        }
      },
      256);
}

}  // namespace

std::string to_string(SurfaceMeasure measure) {
  switch (measure) {
    case SurfaceMeasure::cdf_cov: return "CDFCov";
    case SurfaceMeasure::cdf_cor: return "CDFCor";
    case SurfaceMeasure::qf_cov: return "QFCov";
    case SurfaceMeasure::qf_cor: return "QFCor";
  }
  return "unknown";
}

std::string to_string(GlobalDependence label) {
  switch (label) {
    case GlobalDependence::positive: return "positive";
    case GlobalDependence::negative: return "negative";
    case GlobalDependence::mixed: return "mixed";
  }
  return "unknown";
}

std::vector<double> default_levels() {
  std::vector<double> levels(99);
  for (int i = 0; i < 99; ++i) levels[i] = (i + 1) / 100.0;
  return levels;
}

DependenceSurface qf_surface(const RankedSample& sample, std::span<const double> levels_x,
                             std::span<const double> levels_y, SurfaceStat stat) {
  require_ascending(levels_x, "level grid");
  require_ascending(levels_y, "level grid");
  auto in_unit = [](double a) { return a > 0.0 && a < 1.0; };
  if (!std::all_of(levels_x.begin(), levels_x.end(), in_unit) ||
      !std::all_of(levels_y.begin(), levels_y.end(), in_unit))
    throw LevelOutOfRange("grid levels must lie strictly inside (0, 1)");

  std::vector<double> qx(levels_x.size());
  std::vector<double> qy(levels_y.size());
  for (std::size_t i = 0; i < qx.size(); ++i) qx[i] = sample.x().quantile(levels_x[i]);
  for (std::size_t j = 0; j < qy.size(); ++j) qy[j] = sample.y().quantile(levels_y[j]);

  DependenceSurface out;
  out.measure = stat == SurfaceStat::covariance ? SurfaceMeasure::qf_cov : SurfaceMeasure::qf_cor;
  out.axis_x.assign(levels_x.begin(), levels_x.end());
  out.axis_y.assign(levels_y.begin(), levels_y.end());
  fill_from_thresholds(sample, qx, qy, stat, out);
  return out;
}

DependenceSurface qf_surface(const RankedSample& sample, std::span<const double> levels,
                             SurfaceStat stat) {
  return qf_surface(sample, levels, levels, stat);
}

DependenceSurface cdf_surface(const RankedSample& sample, std::span<const double> grid_x,
                              std::span<const double> grid_y, SurfaceStat stat) {
  require_ascending(grid_x, "x grid");
  require_ascending(grid_y, "y grid");
  DependenceSurface out;
  out.measure = stat == SurfaceStat::covariance ? SurfaceMeasure::cdf_cov : SurfaceMeasure::cdf_cor;
  out.axis_x.assign(grid_x.begin(), grid_x.end());
  out.axis_y.assign(grid_y.begin(), grid_y.end());
  fill_from_thresholds(sample, grid_x, grid_y, stat, out);
  return out;
}

std::vector<double> data_breakpoints(const EmpiricalDistribution& margin, Trim trim,
                                     std::size_t max_points) {
  if (!(trim.lo >= 0.0 && trim.lo < trim.hi && trim.hi <= 1.0))
    throw InvalidParam("trim must satisfy 0 <= lo < hi <= 1");
  const double lo = trim.lo > 0.0 ? margin.quantile(trim.lo) : margin.min();
  const double hi = margin.quantile(trim.hi);
  std::vector<double> points;
  for (double v : margin.sorted_values()) {
    if (v < lo || v > hi) continue;
    if (points.empty() || points.back() != v) points.push_back(v);
  }
  if (points.empty()) throw EmptyGrid("trimming removed every breakpoint");
  if (max_points > 0 && points.size() > max_points) {
    std::vector<double> thinned;
    thinned.reserve(max_points);
    if (max_points == 1) {
      thinned.push_back(points.front());
    } else {
      const double step = static_cast<double>(points.size() - 1) / static_cast<double>(max_points - 1);
      for (std::size_t i = 0; i < max_points; ++i) {
        const auto idx = static_cast<std::size_t>(std::llround(step * static_cast<double>(i)));
        const double v = points[std::min(idx, points.size() - 1)];
        if (thinned.empty() || thinned.back() != v) thinned.push_back(v);
      }
    }
    points = std::move(thinned);
  }
  return points;
}

DependenceSurface cdf_surface_breakpoints(const RankedSample& sample, Trim trim,
                                          std::size_t max_points, SurfaceStat stat) {
  const auto gx = data_breakpoints(sample.x(), trim, max_points);
  const auto gy = data_breakpoints(sample.y(), trim, max_points);
  return cdf_surface(sample, gx, gy, stat);
}

double default_classification_tolerance(std::size_t n) {
  return 2.0 / std::sqrt(static_cast<double>(n));
}

GlobalDependence global_dependence_classify(const DependenceSurface& surface, double tol) {
  if (surface.is_correlation())
    throw InvalidParam("global dependence classification needs a covariance surface");
  bool all_nonneg = true;
  bool all_nonpos = true;
  for (std::size_t cell = 0; cell < surface.values.size(); ++cell) {
    if (surface.degenerate[cell] != 0) continue;
    const double v = surface.values[cell];
    if (v < -tol) all_nonneg = false;
    if (v > tol) all_nonpos = false;
  }
  if (all_nonneg) return GlobalDependence::positive;
  if (all_nonpos) return GlobalDependence::negative;
  return GlobalDependence::mixed;
}

}  // namespace gencor
