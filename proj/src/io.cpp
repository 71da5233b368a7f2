#include "gencor/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

#include "gencor/errors.hpp"

namespace gencor {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c != '\r') {
      field += c;
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t");
  return s.substr(begin, end - begin + 1);
}

bool parse_number(const std::string& raw, double& out) {
  std::string text = trim(raw);
  if (!text.empty() && text.front() == '+') text.erase(0, 1);
  if (text.empty()) return false;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size() && std::isfinite(out);
}

std::size_t find_column(const std::vector<std::string>& header, const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (trim(header[i]) == name) return i;
  }
  throw ParseError("column '" + name + "' not found in header");
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string hex_colour(double r, double g, double b) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(std::lround(r)),
                static_cast<int>(std::lround(g)), static_cast<int>(std::lround(b)));
  return buf;
}

struct Rgb {
  double r, g, b;
};

constexpr Rgb kBlue{33, 102, 172};
constexpr Rgb kWhite{247, 247, 247};
constexpr Rgb kRed{178, 24, 43};
constexpr const char* kGrey = "#bdbdbd";

// t in [-1, 1]
std::string diverging(double t) {
  t = std::clamp(t, -1.0, 1.0);
  const Rgb& end = t < 0.0 ? kBlue : kRed;
  const double w = std::abs(t);
  return hex_colour(kWhite.r + w * (end.r - kWhite.r), kWhite.g + w * (end.g - kWhite.g),
                    kWhite.b + w * (end.b - kWhite.b));
}

std::vector<std::size_t> tick_indices(std::size_t count) {
  std::vector<std::size_t> ticks;
  if (count == 0) return ticks;
  const std::size_t steps = std::min<std::size_t>(4, count - 1);
  for (std::size_t k = 0; k <= steps; ++k) {
    const std::size_t idx = steps == 0 ? 0 : k * (count - 1) / steps;
    if (ticks.empty() || ticks.back() != idx) ticks.push_back(idx);
  }
  return ticks;
}

}  // namespace

CsvColumns read_csv_columns(std::istream& in, const std::string& col_x, const std::string& col_y) {
  std::string line;
  if (!std::getline(in, line) || trim(line).empty()) throw ParseError("missing CSV header");
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
  const auto header = split_csv_line(line);
  const std::size_t ix = find_column(header, col_x);
  const std::size_t iy = find_column(header, col_y);
  const std::size_t needed = std::max(ix, iy) + 1;

  CsvColumns out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty() || line == "\r") continue;
    const auto fields = split_csv_line(line);
    if (fields.size() < needed)
      throw ParseError("line " + std::to_string(line_no) + " has " + std::to_string(fields.size()) +
                       " fields, expected at least " + std::to_string(needed));
    ++out.rows;
    double x = 0.0;
    double y = 0.0;
    if (parse_number(fields[ix], x) && parse_number(fields[iy], y)) {
      out.x.push_back(x);
      out.y.push_back(y);
    } else {
      ++out.dropped;
    }
  }
  return out;
}

CsvColumns read_csv_columns(const std::string& path, const std::string& col_x,
                            const std::string& col_y) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return read_csv_columns(in, col_x, col_y);
}

BivariateSample read_sample(const std::string& path, const std::string& col_x,
                            const std::string& col_y) {
  const auto cols = read_csv_columns(path, col_x, col_y);
  if (cols.x.empty()) throw EmptySample();
  return make_sample(cols.x, cols.y);
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_surface_csv(std::ostream& out, const DependenceSurface& surface) {
  out << "axis_x,axis_y,value,degenerate\n";
  for (std::size_t i = 0; i < surface.rows(); ++i) {
    for (std::size_t j = 0; j < surface.cols(); ++j) {
      out << format_double(surface.axis_x[i]) << ',' << format_double(surface.axis_y[j]) << ','
          << format_double(surface.at(i, j)) << ',' << (surface.is_degenerate(i, j) ? 1 : 0)
          << '\n';
    }
  }
}

DependenceSurface read_surface_csv(std::istream& in, SurfaceMeasure measure) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("missing surface header");
  DependenceSurface s;
  s.measure = measure;
  std::vector<double> xs;
  std::vector<double> ys;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const auto f = split_csv_line(line);
    double x = 0.0;
    double y = 0.0;
    double v = 0.0;
    double d = 0.0;
    if (f.size() != 4 || !parse_number(f[0], x) || !parse_number(f[1], y) ||
        !parse_number(f[2], v) || !parse_number(f[3], d))
      throw ParseError("malformed surface row: " + line);
    xs.push_back(x);
    ys.push_back(y);
    s.values.push_back(v);
    s.degenerate.push_back(d != 0.0 ? 1 : 0);
  }
  for (double x : xs) {
    if (s.axis_x.empty() || s.axis_x.back() != x) s.axis_x.push_back(x);
  }
  for (double y : ys) {
    if (std::find(s.axis_y.begin(), s.axis_y.end(), y) != s.axis_y.end()) break;
    s.axis_y.push_back(y);
  }
  if (s.axis_x.size() * s.axis_y.size() != s.values.size())
    throw ParseError("surface rows do not form a rectangular grid");
  return s;
}

nlohmann::json surface_to_json(const DependenceSurface& surface) {
  nlohmann::json values = nlohmann::json::array();
  nlohmann::json degenerate = nlohmann::json::array();
  for (std::size_t i = 0; i < surface.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    nlohmann::json flags = nlohmann::json::array();
    for (std::size_t j = 0; j < surface.cols(); ++j) {
      row.push_back(surface.at(i, j));
      flags.push_back(surface.is_degenerate(i, j));
    }
    values.push_back(std::move(row));
    degenerate.push_back(std::move(flags));
  }
  return {{"measure", to_string(surface.measure)},
          {"axis_x", surface.axis_x},
          {"axis_y", surface.axis_y},
          {"values", std::move(values)},
          {"degenerate", std::move(degenerate)}};
}

void write_surface_json(std::ostream& out, const DependenceSurface& surface) {
  out << surface_to_json(surface).dump(1) << '\n';
}

void write_surface_svg(std::ostream& out, const DependenceSurface& surface) {
  constexpr double left = 70.0;
  constexpr double top = 30.0;
  constexpr double plot = 500.0;
  constexpr double legend_x = left + plot + 30.0;
  constexpr double width = legend_x + 90.0;
  constexpr double height = top + plot + 60.0;

  const std::size_t nx = surface.rows();
  const std::size_t ny = surface.cols();
  const double cw = plot / static_cast<double>(std::max<std::size_t>(nx, 1));
  const double ch = plot / static_cast<double>(std::max<std::size_t>(ny, 1));

  double scale = 1.0;
  if (!surface.is_correlation()) {
    double m = 0.0;
    for (std::size_t k = 0; k < surface.values.size(); ++k) {
      if (!surface.degenerate[k]) m = std::max(m, std::abs(surface.values[k]));
    }
    if (m > 0.0) scale = m;
  }

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(width) << "\" height=\""
      << fixed(height) << "\" viewBox=\"0 0 " << fixed(width) << ' ' << fixed(height) << "\">\n";
  out << "<title>" << to_string(surface.measure) << "</title>\n";

  out << "<g id=\"cells\" shape-rendering=\"crispEdges\">\n";
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      const double x = left + static_cast<double>(i) * cw;
      const double y = top + plot - static_cast<double>(j + 1) * ch;
      const std::string fill =
          surface.is_degenerate(i, j) ? kGrey : diverging(surface.at(i, j) / scale);
      out << "<rect x=\"" << fixed(x) << "\" y=\"" << fixed(y) << "\" width=\"" << fixed(cw)
          << "\" height=\"" << fixed(ch) << "\" fill=\"" << fill << "\"/>\n";
    }
  }
  out << "</g>\n";

  out << "<g id=\"axes\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#000\">\n";
  out << "<path d=\"M" << fixed(left) << ' ' << fixed(top + plot) << "H" << fixed(left + plot)
      << "M" << fixed(left) << ' ' << fixed(top) << "V" << fixed(top + plot)
      << "\" stroke=\"#000\" fill=\"none\"/>\n";
  for (std::size_t i : tick_indices(nx)) {
    const double x = left + (static_cast<double>(i) + 0.5) * cw;
    out << "<text x=\"" << fixed(x) << "\" y=\"" << fixed(top + plot + 16.0)
        << "\" text-anchor=\"middle\">" << tick_label(surface.axis_x[i]) << "</text>\n";
  }
  for (std::size_t j : tick_indices(ny)) {
    const double y = top + plot - (static_cast<double>(j) + 0.5) * ch;
    out << "<text x=\"" << fixed(left - 6.0) << "\" y=\"" << fixed(y + 4.0)
        << "\" text-anchor=\"end\">" << tick_label(surface.axis_y[j]) << "</text>\n";
  }
  out << "<text x=\"" << fixed(left + plot / 2.0) << "\" y=\"" << fixed(top + plot + 40.0)
      << "\" text-anchor=\"middle\">x</text>\n";
  out << "<text x=\"" << fixed(left - 45.0) << "\" y=\"" << fixed(top + plot / 2.0)
      << "\" text-anchor=\"middle\">y</text>\n";
  out << "</g>\n";

  out << "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"11\">\n";
  out << "<defs><linearGradient id=\"scale\" x1=\"0\" y1=\"1\" x2=\"0\" y2=\"0\">"
      << "<stop offset=\"0\" stop-color=\"" << diverging(-1.0) << "\"/>"
      << "<stop offset=\"0.5\" stop-color=\"" << diverging(0.0) << "\"/>"
      << "<stop offset=\"1\" stop-color=\"" << diverging(1.0) << "\"/>"
      << "</linearGradient></defs>\n";
  out << "<rect x=\"" << fixed(legend_x) << "\" y=\"" << fixed(top) << "\" width=\"20.00\" height=\""
      << fixed(plot) << "\" fill=\"url(#scale)\" stroke=\"#000\"/>\n";
  const double marks[] = {-1.0, 0.0, 1.0};
  for (double m : marks) {
    const double y = top + plot * (1.0 - m) / 2.0;
    out << "<text x=\"" << fixed(legend_x + 26.0) << "\" y=\"" << fixed(y + 4.0) << "\">"
        << tick_label(m * scale) << "</text>\n";
  }
  out << "</g>\n";
  out << "</svg>\n";
}

void write_tail_csv(std::ostream& out, const TailCurve& curve) {
  out << "side,level,qcor,lambda,n_corner\n";
  for (std::size_t k = 0; k < curve.levels.size(); ++k) {
    out << to_string(curve.side) << ',' << format_double(curve.levels[k]) << ','
        << format_double(curve.qcor_values[k]) << ',' << format_double(curve.lambda_values[k])
        << ',' << curve.corner_counts[k] << '\n';
  }
}

nlohmann::json record_to_json(const MeasureRecord& record) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [name, value] : record.params) params[name] = value;
  return {{"measure", record.measure},
          {"params", std::move(params)},
          {"covariance", record.result.covariance},
          {"lower_bound", record.result.bounds.lower},
          {"upper_bound", record.result.bounds.upper},
          {"correlation", record.result.correlation},
          {"n", record.n},
          {"degenerate", record.result.degenerate}};
}

void write_record_csv(std::ostream& out, const MeasureRecord& record) {
  out << "measure,params,covariance,lower_bound,upper_bound,correlation,n,degenerate\n";
  std::string params;
  for (const auto& [name, value] : record.params) {
    if (!params.empty()) params += ';';
    params += name + '=' + format_double(value);
  }
  out << record.measure << ',' << params << ',' << format_double(record.result.covariance) << ','
      << format_double(record.result.bounds.lower) << ','
      << format_double(record.result.bounds.upper) << ','
      << format_double(record.result.correlation) << ',' << record.n << ','
      << (record.result.degenerate ? "true" : "false") << '\n';
}

void write_simulation_csv(std::ostream& out, const BivariateSample& uniforms,
                          const BivariateSample* transformed) {
  out << (transformed ? "u,v,x,y\n" : "u,v\n");
  for (std::size_t i = 0; i < uniforms.size(); ++i) {
    out << format_double(uniforms.xs()[i]) << ',' << format_double(uniforms.ys()[i]);
    if (transformed)
      out << ',' << format_double(transformed->xs()[i]) << ',' << format_double(transformed->ys()[i]);
    out << '\n';
  }
}

}  // namespace gencor
