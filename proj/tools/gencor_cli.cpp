// gencor: command-line driver for the dependence measures.
//
// Exit codes: 0 success, 1 usage or parameter error, 2 file access, 3 malformed input,
// 4 no complete observations, 5 empty grid or integration region.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gencor/copula.hpp"
#include "gencor/errors.hpp"
#include "gencor/gcov.hpp"
#include "gencor/gen_errors.hpp"
#include "gencor/grid.hpp"
#include "gencor/io.hpp"
#include "gencor/local.hpp"
#include "gencor/summary.hpp"
#include "gencor/tail.hpp"

namespace {

using namespace gencor;

enum ExitCode { kOk = 0, kUsage = 1, kIo = 2, kParse = 3, kEmptySample = 4, kEmptyGrid = 5 };

struct InputOptions {
  std::string input;
  std::string col_x;
  std::string col_y;
};

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("-i,--input", in.input, "CSV file with a header row")->required();
  cmd->add_option("--x", in.col_x, "column used as X")->required();
  cmd->add_option("--y", in.col_y, "column used as Y")->required();
}

// Output goes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw IoError("cannot write '" + path + "'");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void close() {
    if (!file_) return;
    file_->close();
    if (!*file_) throw IoError("write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

double parse_real(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InvalidParam("not a number: '" + text + "'");
  }
  if (used != text.size()) throw InvalidParam("not a number: '" + text + "'");
  return v;
}

// Rounds start + k * step to 12 significant digits so that 0.01:0.99:0.01 yields the same
// doubles as k / 100.
double tidy(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

// "a,b,c" or "start:stop:step".
std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(parse_real(item));
    if (parts.size() != 3 || !(parts[2] > 0.0) || parts[1] < parts[0])
      throw InvalidParam("range must be start:stop:step with step > 0");
    const auto count = static_cast<std::size_t>(std::floor((parts[1] - parts[0]) / parts[2] + 1e-9));
    for (std::size_t k = 0; k <= count; ++k)
      out.push_back(tidy(parts[0] + static_cast<double>(k) * parts[2]));
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_real(item));
  return out;
}

Trim parse_trim(const std::string& text) {
  const auto v = parse_list(text);
  if (v.size() != 2 || !(v[0] >= 0.0 && v[0] < v[1] && v[1] <= 1.0))
    throw InvalidParam("trim must be lo,hi with 0 <= lo < hi <= 1");
  return {v[0], v[1]};
}

// "mean", "expectile:0.3", "quantile:0.5" or "threshold:1.2".
FunctionalSpec parse_functional(const std::string& text) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  if (kind == "mean" && colon == std::string::npos) return mean_functional();
  if (colon == std::string::npos) throw InvalidParam("functional '" + text + "' needs a parameter");
  const double p = parse_real(text.substr(colon + 1));
  if (kind == "expectile") return expectile_functional(p);
  if (kind == "quantile") return quantile_functional(p);
  if (kind == "threshold") return threshold_functional(p);
  throw InvalidParam("unknown functional '" + kind + "'");
}

// Level or point of a functional as a record parameter, e.g. tau_x = 0.2.
void add_functional_params(MeasureRecord& rec, const FunctionalSpec& spec, const std::string& suffix) {
  if (const auto* e = std::get_if<ExpectileFunctional>(&spec)) rec.params.emplace_back("tau" + suffix, e->tau);
  if (const auto* q = std::get_if<QuantileFunctional>(&spec)) rec.params.emplace_back("alpha" + suffix, q->alpha);
  if (const auto* t = std::get_if<ThresholdFunctional>(&spec)) rec.params.emplace_back("a" + suffix, t->point);
}

void write_record(const MeasureRecord& record, const std::string& format, const std::string& out_path) {
  Output out(out_path);
  if (format == "json") {
    out.stream() << record_to_json(record).dump(1) << '\n';
  } else {
    write_record_csv(out.stream(), record);
  }
  out.close();
}

struct ComputeOptions {
  InputOptions in;
  std::string measure;
  std::optional<double> alpha, beta, tau, eta, a, b;
  std::string fx = "mean";
  std::string fy = "mean";
  std::string format = "csv";
  std::string out;
};

template <typename T>
T need(const std::optional<T>& v, const char* flag, const std::string& measure) {
  if (!v) throw InvalidParam(measure + " requires " + flag);
  return *v;
}

int run_compute(const ComputeOptions& o) {
  const RankedSample sample(read_sample(o.in.input, o.in.col_x, o.in.col_y));
  MeasureRecord rec;
  rec.measure = o.measure;
  rec.n = sample.size();
  if (o.measure == "mcor") {
    rec.result = mcor(sample);
  } else if (o.measure == "ecor") {
    const double tau = need(o.tau, "--tau", o.measure);
    const double eta = o.eta.value_or(tau);
    rec.params = {{"tau", tau}, {"eta", eta}};
    rec.result = gcor(sample, expectile_functional(tau), expectile_functional(eta));
  } else if (o.measure == "qcor") {
    const double alpha = need(o.alpha, "--alpha", o.measure);
    const double beta = o.beta.value_or(alpha);
    rec.params = {{"alpha", alpha}, {"beta", beta}};
    rec.result = qcor(sample, alpha, beta);
  } else if (o.measure == "tcor") {
    const double a = need(o.a, "--a", o.measure);
    const double b = need(o.b, "--b", o.measure);
    rec.params = {{"a", a}, {"b", b}};
    rec.result = tcor(sample, a, b);
  } else if (o.measure == "qmcor") {
    const double alpha = need(o.alpha, "--alpha", o.measure);
    rec.params = {{"alpha", alpha}};
    rec.result = qmcor(sample, alpha);
  } else if (o.measure == "blomqvist") {
    // 4 F(med, med) - 1 is the median covariance F(med, med) - 1/4 over the bound 1/4.
    const double beta = blomqvist_beta(sample);
    rec.result.covariance = beta / 4.0;
    rec.result.bounds = {-0.25, 0.25};
    rec.result.correlation = beta;
    rec.result.normaliser = beta >= 0.0 ? Normaliser::upper : Normaliser::lower;
  } else {
    const FunctionalSpec fx = parse_functional(o.fx);
    const FunctionalSpec fy = parse_functional(o.fy);
    add_functional_params(rec, fx, "_x");
    add_functional_params(rec, fy, "_y");
    rec.result = gcor(sample, fx, fy);
  }
  write_record(rec, o.format, o.out);
  return kOk;
}

struct GridOptions {
  InputOptions in;
  std::string mode = "qf";
  std::optional<std::string> levels;
  std::optional<std::string> levels_y;
  std::string grid_x;
  std::string grid_y;
  std::string stat = "cor";
  std::string trim = "0.025,0.975";
  std::size_t max_points = 200;
  std::string format = "csv";
  std::string out;
  bool classify = false;
};

int run_grid(const GridOptions& o) {
  const RankedSample sample(read_sample(o.in.input, o.in.col_x, o.in.col_y));
  const SurfaceStat stat = o.stat == "cov" ? SurfaceStat::covariance : SurfaceStat::correlation;
  DependenceSurface surface;
  if (o.mode == "qf") {
    const auto lx = o.levels ? parse_list(*o.levels) : default_levels();
    const auto ly = o.levels_y ? parse_list(*o.levels_y) : lx;
    surface = qf_surface(sample, lx, ly, stat);
  } else if (!o.grid_x.empty() || !o.grid_y.empty()) {
    if (o.grid_x.empty() || o.grid_y.empty()) throw InvalidParam("--grid-x and --grid-y go together");
    surface = cdf_surface(sample, parse_list(o.grid_x), parse_list(o.grid_y), stat);
  } else {
    surface = cdf_surface_breakpoints(sample, parse_trim(o.trim), o.max_points, stat);
  }

  Output out(o.out);
  if (o.format == "json") {
    write_surface_json(out.stream(), surface);
  } else if (o.format == "svg") {
    write_surface_svg(out.stream(), surface);
  } else {
    write_surface_csv(out.stream(), surface);
  }
  out.close();

  if (o.classify) {
    if (surface.is_correlation()) throw InvalidParam("--classify needs --stat cov");
    const double tol = default_classification_tolerance(sample.size());
    std::cerr << "global dependence: " << to_string(global_dependence_classify(surface, tol))
              << " (tolerance " << format_double(tol) << ")\n";
  }
  return kOk;
}

struct TailOptions {
  InputOptions in;
  std::string side = "lower";
  std::string levels;
  std::string out;
};

std::vector<double> default_tail_levels(TailSide side) {
  const double lower[] = {0.5, 0.4, 0.3, 0.2, 0.1, 0.05, 0.02, 0.01, 0.005, 0.002, 0.001};
  std::vector<double> out;
  for (double l : lower) out.push_back(side == TailSide::lower ? l : tidy(1.0 - l));
  return out;
}

int run_tail(const TailOptions& o) {
  const RankedSample sample(read_sample(o.in.input, o.in.col_x, o.in.col_y));
  const TailSide side = o.side == "upper" ? TailSide::upper : TailSide::lower;
  const auto levels = o.levels.empty() ? default_tail_levels(side) : parse_list(o.levels);
  const TailCurve curve = tail_curve(sample, side, levels);

  Output out(o.out);
  write_tail_csv(out.stream(), curve);
  out.close();

  try {
    const TailClassification c = tail_estimate(curve);
    std::cerr << to_string(side) << " tail: " << to_string(c.label) << " (qcor "
              << format_double(c.estimate) << " at level " << format_double(c.level)
              << ", tolerance " << format_double(c.tolerance) << ")\n";
  } catch (const InsufficientTailData& e) {
    std::cerr << to_string(side) << " tail: not classified (" << e.what() << ")\n";
  }
  return kOk;
}

struct SummaryOptions {
  InputOptions in;
  std::string domain = "qf";
  std::string measure = "lebesgue";
  std::string region;
  std::string trim;
  std::string format = "csv";
  std::string out;
};

int run_summary(const SummaryOptions& o) {
  if (!o.region.empty() && !o.trim.empty()) throw InvalidParam("--region and --trim are exclusive");
  const RankedSample sample(read_sample(o.in.input, o.in.col_x, o.in.col_y));
  MeasureSpec spec;
  spec.domain = o.domain == "cdf" ? SummaryDomain::cdf : SummaryDomain::qf;
  MeasureRecord rec;
  rec.measure = "scor_" + o.domain;
  rec.n = sample.size();
  if (!o.region.empty()) {
    const auto r = parse_list(o.region);
    if (r.size() != 4) throw InvalidParam("--region needs lo_x,hi_x,lo_y,hi_y");
    spec.region = Region{r[0], r[1], r[2], r[3]};
  } else if (!o.trim.empty()) {
    // Trimming restricts integration to the central quantile range of each margin.
    const Trim t = parse_trim(o.trim);
    if (spec.domain == SummaryDomain::qf) {
      spec.region = Region{t.lo, t.hi, t.lo, t.hi};
    } else {
      auto q = [](const EmpiricalDistribution& m, double p) { return p <= 0.0 ? m.min() : m.quantile(p); };
      spec.region = Region{q(sample.x(), t.lo), q(sample.x(), t.hi), q(sample.y(), t.lo),
                           q(sample.y(), t.hi)};
    }
  }
  if (spec.region) {
    rec.measure += "_region";
    rec.params = {{"lo_x", spec.region->lo_x}, {"hi_x", spec.region->hi_x},
                  {"lo_y", spec.region->lo_y}, {"hi_y", spec.region->hi_y}};
  }
  rec.result = scor(sample, spec);
  write_record(rec, o.format, o.out);
  return kOk;
}

struct SimulateOptions {
  std::string family;
  std::optional<double> r, nu, theta, rho_s;
  std::size_t n = 1000;
  std::uint64_t seed = 1;
  std::string margin = "uniform";
  std::string out;
};

CopulaSpec simulation_spec(const SimulateOptions& o) {
  const CopulaFamily family = parse_copula_family(o.family);
  const double nu = o.family == "cauchy" ? 1.0 : o.nu.value_or(1.0);
  if (o.rho_s) return calibrate_spearman(family, *o.rho_s, nu);
  CopulaSpec spec{family};
  switch (family) {
    case CopulaFamily::gaussian:
      spec.r = need(o.r, "--r or --rho-s", o.family);
      break;
    case CopulaFamily::student_t:
      spec.r = need(o.r, "--r or --rho-s", o.family);
      spec.nu = nu;
      break;
    case CopulaFamily::clayton:
    case CopulaFamily::gumbel:
      spec.theta = need(o.theta, "--theta or --rho-s", o.family);
      break;
    default:
      break;
  }
  spec.validate();
  return spec;
}

int run_simulate(const SimulateOptions& o) {
  const CopulaSpec spec = simulation_spec(o);
  const BivariateSample uv = sample_copula(spec, o.n, o.seed);
  Output out(o.out);
  const Marginal margin = parse_marginal(o.margin);
  if (margin == Marginal::uniform) {
    write_simulation_csv(out.stream(), uv);
  } else {
    std::vector<double> xs(uv.size());
    std::vector<double> ys(uv.size());
    for (std::size_t i = 0; i < uv.size(); ++i) {
      xs[i] = apply_marginal(margin, uv.xs()[i]);
      ys[i] = apply_marginal(margin, uv.ys()[i]);
    }
    const BivariateSample xy = make_sample(xs, ys);
    write_simulation_csv(out.stream(), uv, &xy);
  }
  out.close();
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalised covariances and correlations of bivariate samples"};
  app.require_subcommand(1);

  ComputeOptions compute;
  auto* c = app.add_subcommand("compute", "single dependence measure");
  add_input(c, compute.in);
  c->add_option("--measure", compute.measure)
      ->required()
      ->check(CLI::IsMember({"mcor", "ecor", "qcor", "tcor", "qmcor", "blomqvist", "gcor"}));
  c->add_option("--alpha", compute.alpha, "quantile level of X");
  c->add_option("--beta", compute.beta, "quantile level of Y (default alpha)");
  c->add_option("--tau", compute.tau, "expectile level of X");
  c->add_option("--eta", compute.eta, "expectile level of Y (default tau)");
  c->add_option("--a", compute.a, "threshold for X");
  c->add_option("--b", compute.b, "threshold for Y");
  c->add_option("--fx", compute.fx, "gcor functional for X: mean, expectile:T, quantile:A, threshold:P");
  c->add_option("--fy", compute.fy, "gcor functional for Y");
  c->add_option("--format", compute.format)->check(CLI::IsMember({"csv", "json"}));
  c->add_option("-o,--out", compute.out);

  GridOptions grid;
  auto* g = app.add_subcommand("grid", "quantile or threshold dependence surface");
  add_input(g, grid.in);
  g->add_option("--mode", grid.mode)->check(CLI::IsMember({"qf", "cdf"}));
  g->add_option("--levels", grid.levels, "qf levels, a,b,c or start:stop:step (default 0.01:0.99:0.01)");
  g->add_option("--levels-y", grid.levels_y, "qf levels for Y (default --levels)");
  g->add_option("--grid-x", grid.grid_x, "cdf thresholds for X");
  g->add_option("--grid-y", grid.grid_y, "cdf thresholds for Y");
  g->add_option("--stat", grid.stat)->check(CLI::IsMember({"cor", "cov"}));
  g->add_option("--trim", grid.trim, "quantile range of data breakpoints in cdf mode");
  g->add_option("--max-points", grid.max_points, "breakpoints per axis in cdf mode, 0 = all");
  g->add_option("--format", grid.format)->check(CLI::IsMember({"csv", "json", "svg"}));
  g->add_option("-o,--out", grid.out);
  g->add_flag("--classify", grid.classify, "report global quadrant dependence (cov only)");

  TailOptions tail;
  auto* t = app.add_subcommand("tail", "tail correlation curve");
  add_input(t, tail.in);
  t->add_option("--side", tail.side)->check(CLI::IsMember({"lower", "upper"}));
  t->add_option("--levels", tail.levels);
  t->add_option("-o,--out", tail.out);

  SummaryOptions summary;
  auto* s = app.add_subcommand("summary", "integrated summary correlation");
  add_input(s, summary.in);
  s->add_option("--domain", summary.domain)->check(CLI::IsMember({"qf", "cdf"}));
  s->add_option("--measure", summary.measure)->check(CLI::IsMember({"lebesgue"}));
  s->add_option("--region", summary.region, "lo_x,hi_x,lo_y,hi_y");
  s->add_option("--trim", summary.trim, "lo,hi quantile range on both margins");
  s->add_option("--format", summary.format)->check(CLI::IsMember({"csv", "json"}));
  s->add_option("-o,--out", summary.out);

  SimulateOptions sim;
  auto* m = app.add_subcommand("simulate", "draw from a copula");
  m->add_option("--family", sim.family)->required();
  m->add_option("--r", sim.r);
  m->add_option("--nu", sim.nu);
  m->add_option("--theta", sim.theta);
  m->add_option("--rho-s", sim.rho_s, "calibrate the parameter to this Spearman's rho");
  m->add_option("--n", sim.n);
  m->add_option("--seed", sim.seed);
  m->add_option("--margin", sim.margin)->check(CLI::IsMember({"uniform", "normal", "exponential"}));
  m->add_option("-o,--out", sim.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (c->parsed()) return run_compute(compute);
    if (g->parsed()) return run_grid(grid);
    if (t->parsed()) return run_tail(tail);
    if (s->parsed()) return run_summary(summary);
    return run_simulate(sim);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const EmptySample& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kEmptySample;
  } catch (const EmptyGrid& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kEmptyGrid;
  } catch (const EmptyRegion& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kEmptyGrid;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
