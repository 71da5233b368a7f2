#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gencor/gcov.hpp"
#include "gencor/grid.hpp"
#include "gencor/sample.hpp"
#include "gencor/tail.hpp"

namespace gencor {

/// Two numeric columns read from a CSV file with a header row.
struct CsvColumns {
  std::vector<double> x;
  std::vector<double> y;
  /// Data rows seen and rows dropped because a selected cell was empty or non-numeric.
  std::size_t rows = 0;
  std::size_t dropped = 0;
};

/// Comma separated, '.' decimal point, optional double quotes around fields. Throws
/// ParseError for a missing header, unknown column or a row with too few fields.
CsvColumns read_csv_columns(std::istream& in, const std::string& col_x, const std::string& col_y);
/// As above; throws IoError when the file cannot be opened.
CsvColumns read_csv_columns(const std::string& path, const std::string& col_x,
                            const std::string& col_y);
/// Reads the columns and builds a sample; EmptySample when no complete row remains.
BivariateSample read_sample(const std::string& path, const std::string& col_x,
                            const std::string& col_y);

/// 17 significant digits.
std::string format_double(double value);

/// Long format: axis_x,axis_y,value,degenerate with one line per cell, row-major.
void write_surface_csv(std::ostream& out, const DependenceSurface& surface);
/// Inverse of write_surface_csv; measure is not stored in the CSV and must be supplied.
DependenceSurface read_surface_csv(std::istream& in, SurfaceMeasure measure);

/// {measure, axis_x, axis_y, values, degenerate} with nested row arrays.
nlohmann::json surface_to_json(const DependenceSurface& surface);
void write_surface_json(std::ostream& out, const DependenceSurface& surface);

/// Cell heatmap with x on the horizontal axis. Correlations use a blue-white-red scale fixed
/// at -1, 0, 1; covariances use the same scale stretched to +-max |value|. Degenerate cells
/// are grey. Output depends only on the surface.
void write_surface_svg(std::ostream& out, const DependenceSurface& surface);

/// side,level,qcor,lambda,n_corner
void write_tail_csv(std::ostream& out, const TailCurve& curve);

/// One scalar dependence measure with the parameters that produced it.
struct MeasureRecord {
  std::string measure;
  std::vector<std::pair<std::string, double>> params;
  MeasureResult result;
  std::size_t n = 0;
};

nlohmann::json record_to_json(const MeasureRecord& record);
/// Header measure,params,covariance,lower_bound,upper_bound,correlation,n,degenerate; params
/// are written as name=value joined by ';'.
void write_record_csv(std::ostream& out, const MeasureRecord& record);

/// u,v and, when transformed margins are given, x,y columns.
void write_simulation_csv(std::ostream& out, const BivariateSample& uniforms,
                          const BivariateSample* transformed = nullptr);

}  // namespace gencor
