// Acceptance checks. Prints one PASS/FAIL line per criterion and exits nonzero on any failure.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gencor/copula.hpp"
#include "gencor/gcov.hpp"
#include "gencor/gen_errors.hpp"
#include "gencor/grid.hpp"
#include "gencor/io.hpp"
#include "gencor/local.hpp"
#include "gencor/summary.hpp"
#include "gencor/tail.hpp"
#include "oracles.hpp"

using namespace gencor;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure and keeps a short description.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) ++failed_;
    if (!ok && out_.pass) {
      out_.pass = false;
      out_.detail = what;
    }
  }
  void near(double got, double want, double tol, const std::string& what) {
    std::ostringstream ss;
    ss.precision(17);
    ss << what << ": got " << got << ", want " << want << " +- " << tol;
    expect(std::abs(got - want) <= tol, ss.str());
  }
  void note(const std::string& s) {
    if (out_.pass) out_.detail = s;
  }
  Outcome result() {
    if (out_.pass && out_.detail.empty()) out_.detail = std::to_string(checks_) + " checks";
    if (!out_.pass)
      out_.detail += " (" + std::to_string(failed_) + " of " + std::to_string(checks_) + " checks failed)";
    return out_;
  }

 private:
  Outcome out_;
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v, int digits = 4) {
  std::ostringstream ss;
  ss.precision(digits);
  ss << v;
  return ss.str();
}

BivariateSample transformed(const BivariateSample& s, const std::function<double(double)>& fx,
                            const std::function<double(double)>& fy) {
  std::vector<double> x(s.size());
  std::vector<double> y(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    x[i] = fx(s.xs()[i]);
    y[i] = fy(s.ys()[i]);
  }
  return make_sample(x, y);
}

BivariateSample normal_margins(const BivariateSample& uv) {
  auto phi_inv = [](double u) { return apply_marginal(Marginal::normal, u); };
  return transformed(uv, phi_inv, phi_inv);
}

// 1. Cauchy-Schwarz bounds for quantile errors.
Outcome criterion_1() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 1; i < 100; ++i) {
    for (int j = 1; j < 100; ++j) {
      const double a = i / 100.0;
      const double b = j / 100.0;
      const double sd = std::sqrt(a * (1 - a) * b * (1 - b));
      const auto pb = pearson_quantile_bounds(a, b);
      c.near(pb.upper, (std::min(a, b) - a * b) / sd, 1e-12, "upper " + fmt(a) + "," + fmt(b));
      c.near(pb.lower, (std::max(a + b - 1, 0.0) - a * b) / sd, 1e-12, "lower " + fmt(a) + "," + fmt(b));
      c.expect((pb.upper == 1.0) == (i == j), "upper = 1 iff a = b at " + fmt(a) + "," + fmt(b));
      c.expect((pb.lower == -1.0) == (i + j == 100), "lower = -1 iff a + b = 1 at " + fmt(a) + "," + fmt(b));
    }
  }
  const double t = seconds_since(t0);
  c.expect(t < 1.0, "runtime " + fmt(t) + " s");
  return c.result();
}

// 2. Full-plane cdf summary covariance equals the 1/n sample covariance.
Outcome criterion_2() {
  Check c;
  std::mt19937_64 gen(2024);
  std::uniform_int_distribution<int> size(1, 200);
  std::uniform_int_distribution<int> small(0, 9);
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int rep = 0; rep < 1000; ++rep) {
    const std::size_t n = size(gen);
    auto x = oracle::normal_draws(gen, n);
    auto y = oracle::normal_draws(gen, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rep % 3 == 0) x[i] = small(gen);  // ties
      y[i] = 0.5 * x[i] + y[i] * (1 + rep % 7);
    }
    const double got = scov_cdf(RankedSample(make_sample(x, y)));
    const double want = oracle::covariance(x, y);
    worst = std::max(worst, std::abs(got - want));
    c.near(got, want, 1e-10, "sample " + std::to_string(rep));
  }
  const double t = seconds_since(t0);
  c.expect(t < 5.0, "runtime " + fmt(t) + " s");
  c.note("max |diff| " + fmt(worst, 3) + ", " + fmt(t, 3) + " s");
  return c.result();
}

// 3. Enumeration of every sample with n <= 5 over {0, 1, 2}.
Outcome criterion_3() {
  Check c;
  const std::vector<double> levels{0.1, 0.2, 0.25, 1.0 / 3.0, 0.4, 0.5, 0.6, 2.0 / 3.0, 0.75, 0.8, 0.9};
  const std::vector<double> thresholds{-0.5, 0.0, 0.5, 1.0, 1.5, 2.0, 2.5};
  std::size_t samples = 0;
  std::size_t tie_free = 0;
  std::size_t tied_differs = 0;
  double worst_gcov = 0.0;
  double worst_tie_free = 0.0;
  for (std::size_t n = 1; n <= 5; ++n) {
    std::size_t total = 1;
    for (std::size_t k = 0; k < 2 * n; ++k) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<double> x(n);
      std::vector<double> y(n);
      std::size_t rest = code;
      for (std::size_t i = 0; i < n; ++i, rest /= 9) {
        x[i] = static_cast<double>(rest % 3);
        y[i] = static_cast<double>((rest / 3) % 3);
      }
      ++samples;
      const auto bs = make_sample(x, y);
      const RankedSample s(bs);

      for (double a : thresholds)
        for (double b : thresholds)
          c.expect(tcov(bs, a, b) == oracle::threshold_covariance_value(x, y, a, b), "tcov");
      for (double a : levels)
        for (double b : levels)
          c.expect(qcov(s, a, b).covariance == oracle::quantile_covariance(x, y, a, b), "qcov");

      // Mean errors: n e_i = n x_i - sum x is an integer, so the covariance is an exact rational.
      std::int64_t sx = 0;
      std::int64_t sy = 0;
      for (std::size_t i = 0; i < n; ++i) {
        sx += static_cast<std::int64_t>(x[i]);
        sy += static_cast<std::int64_t>(y[i]);
      }
      std::int64_t num = 0;
      const auto ni = static_cast<std::int64_t>(n);
      for (std::size_t i = 0; i < n; ++i)
        num += (ni * static_cast<std::int64_t>(x[i]) - sx) * (ni * static_cast<std::int64_t>(y[i]) - sy);
      const double exact = static_cast<double>(num) / static_cast<double>(ni * ni * ni);
      const double got = gcov(error_series(mean_functional(), x), error_series(mean_functional(), y));
      worst_gcov = std::max(worst_gcov, std::abs(got - exact));
      c.near(got, exact, 1e-15, "gcov mean");

      // Summary integrals against cell sums of the defining surfaces.
      c.near(scov_qf(s), oracle::qf_cell_sum(x, y, 0, 1, 0, 1), 1e-15, "scov_qf");
      c.near(scov_cdf(s), oracle::covariance(x, y), 1e-15, "scov_cdf");

      // Level-space summary against the rank-transform covariance.
      const double diff = std::abs(scov_qf(s) - oracle::rank_pit_covariance(x, y));
      const bool distinct = std::set<double>(x.begin(), x.end()).size() == n &&
                            std::set<double>(y.begin(), y.end()).size() == n;
      if (distinct) {
        ++tie_free;
        worst_tie_free = std::max(worst_tie_free, diff);
        c.expect(diff <= 1e-15, "tie-free summary-qf vs rank transform");
      } else if (diff > 1e-12) {
        ++tied_differs;
      }
    }
  }
  c.expect(tie_free > 0 && tied_differs > 0, "verdict needs both tie-free and differing tied samples");
  c.note(std::to_string(samples) + " samples; gcov max err " + fmt(worst_gcov, 2) +
         "; summary-qf = rank covariance on " + std::to_string(tie_free) +
         " tie-free samples (max diff " + fmt(worst_tie_free, 2) + "), differs on " +
         std::to_string(tied_differs) + " tied samples");
  return c.result();
}

// 4. Empirical quantile correlations against population values for calibrated copulas.
Outcome criterion_4() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<double> pts{0.1, 0.5, 0.9};
  double worst = 0.0;
  struct Panel {
    CopulaFamily family;
    double tol;
  };
  for (const Panel& p : {Panel{CopulaFamily::gaussian, 0.02}, Panel{CopulaFamily::clayton, 0.02},
                         Panel{CopulaFamily::gumbel, 0.02}, Panel{CopulaFamily::student_t, 0.03}}) {
    const CopulaSpec spec = calibrate_spearman(p.family, 0.5, 1.0);
    const RankedSample s(normal_margins(sample_copula(spec, 100000, 41)));
    for (double a : pts) {
      for (double b : pts) {
        const double got = qcor(s, a, b).correlation;
        const double want = population_qfcor(spec, a, b);
        worst = std::max(worst, std::abs(got - want));
        c.near(got, want, p.tol, to_string(p.family) + " " + fmt(a) + "," + fmt(b));
      }
    }
  }
  const double t = seconds_since(t0);
  c.expect(t < 60.0, "runtime " + fmt(t) + " s");
  c.note("max |diff| " + fmt(worst, 3) + ", " + fmt(t, 3) + " s");
  return c.result();
}

// 5. Tail correlations.
Outcome criterion_5() {
  Check c;
  const std::vector<double> lower{0.1, 0.05, 0.02, 0.01};
  const std::vector<double> upper{0.9, 0.95, 0.98, 0.99};
  const RankedSample cl(sample_copula(CopulaSpec::clayton(2.0), 1000000, 51));
  const auto lc = tail_curve(cl, TailSide::lower, lower);
  c.near(lc.qcor_values.back(), std::pow(2.0, -0.5), 0.05, "Clayton lower tail at 0.01");
  const RankedSample gu(sample_copula(CopulaSpec::gumbel(2.0), 1000000, 52));
  const auto uc = tail_curve(gu, TailSide::upper, upper);
  c.near(uc.qcor_values.back(), 2.0 - std::sqrt(2.0), 0.05, "Gumbel upper tail at 0.99");

  const auto pt = population_tail(CopulaSpec::countermonotone());
  c.expect(pt.lower_tail_cor == -1.0 && pt.upper_tail_cor == -1.0, "countermonotone tail correlations");
  c.expect(pt.lambda_lower == 0.0 && pt.lambda_upper == 0.0, "countermonotone tail coefficients");
  const RankedSample cm(sample_copula(CopulaSpec::countermonotone(), 100000, 53));
  for (const auto& curve : {tail_curve(cm, TailSide::lower, lower), tail_curve(cm, TailSide::upper, upper)}) {
    for (std::size_t k = 0; k < curve.levels.size(); ++k) {
      c.expect(curve.lambda_values[k] == 0.0, "countermonotone sample lambda");
      c.expect(curve.qcor_values[k] == -1.0, "countermonotone sample tail qcor");
    }
  }
  c.note("Clayton " + fmt(lc.qcor_values.back()) + " vs 0.7071, Gumbel " + fmt(uc.qcor_values.back()) +
         " vs 0.5858");
  return c.result();
}

// Every correlation the library implements, on one sample.
std::vector<std::pair<std::string, MeasureResult>> all_correlations(const BivariateSample& bs) {
  const RankedSample s(bs);
  std::vector<std::pair<std::string, MeasureResult>> out;
  out.emplace_back("mcor", mcor(s));
  for (double tau : {0.1, 0.5, 0.8})
    out.emplace_back("ecor " + fmt(tau), gcor(s, expectile_functional(tau), expectile_functional(1 - tau)));
  out.emplace_back("gcor mean/quantile", gcor(s, mean_functional(), quantile_functional(0.3)));
  out.emplace_back("gcor expectile/quantile", gcor(s, expectile_functional(0.2), quantile_functional(0.6)));
  for (double a : {0.1, 0.25, 0.5, 0.9})
    for (double b : {0.2, 0.5, 0.75})
      out.emplace_back("qcor " + fmt(a) + "," + fmt(b), qcor(s, a, b));
  for (double a : {0.3, 0.5})
    out.emplace_back("qmcor " + fmt(a), qmcor(s, a));
  const double xa = s.x().quantile(0.4);
  const double yb = s.y().quantile(0.7);
  out.emplace_back("tcor", tcor(s, xa, yb));
  MeasureResult blom;
  blom.correlation = blomqvist_beta(s);
  out.emplace_back("blomqvist", blom);
  for (auto d : {SummaryDomain::cdf, SummaryDomain::qf}) {
    out.emplace_back(d == SummaryDomain::cdf ? "scor cdf" : "scor qf", scor(s, {d}));
  }
  out.emplace_back("scor qf region", regional_scor(s, SummaryDomain::qf, {0.0, 0.4, 0.2, 0.9}));
  out.emplace_back("scor cdf region",
                   regional_scor(s, SummaryDomain::cdf, {s.x().quantile(0.2), s.x().quantile(0.8),
                                                         s.y().quantile(0.1), s.y().quantile(0.6)}));
  const std::vector<double> lv{0.05, 0.3, 0.6, 0.95};
  const auto qs = qf_surface(s, lv);
  for (std::size_t k = 0; k < qs.values.size(); ++k) {
    MeasureResult m;
    m.correlation = qs.values[k];
    m.degenerate = qs.degenerate[k] != 0;
    out.emplace_back("qf surface cell", m);
  }
  const auto cs = cdf_surface_breakpoints(s, {}, 8);
  for (std::size_t k = 0; k < cs.values.size(); ++k) {
    if (cs.degenerate[k]) continue;
    MeasureResult m;
    m.correlation = cs.values[k];
    out.emplace_back("cdf surface cell", m);
  }
  return out;
}

// 6. Perfect dependence and degeneracy.
Outcome criterion_6() {
  Check c;
  std::mt19937_64 gen(6);
  const auto x = oracle::normal_draws(gen, 200);
  const auto base = make_sample(x, x);
  const auto co = transformed(base, [](double v) { return v; }, [](double v) { return std::exp(v); });
  const auto counter = transformed(base, [](double v) { return v * v * v; }, [](double v) { return -v; });
  std::size_t count = 0;
  for (const auto& [name, m] : all_correlations(co)) {
    c.expect(m.correlation == 1.0 && !m.degenerate, "comonotone " + name + " = " + fmt(m.correlation, 17));
    ++count;
  }
  for (const auto& [name, m] : all_correlations(counter)) {
    c.expect(m.correlation == -1.0 && !m.degenerate, "countermonotone " + name + " = " + fmt(m.correlation, 17));
  }

  const auto flat = make_sample(x, std::vector<double>(x.size(), 4.0));
  const RankedSample fs(flat);
  std::vector<std::pair<std::string, MeasureResult>> deg;
  deg.emplace_back("mcor", mcor(fs));
  deg.emplace_back("ecor", gcor(fs, expectile_functional(0.3), expectile_functional(0.3)));
  deg.emplace_back("qcor", qcor(fs, 0.5, 0.5));
  deg.emplace_back("qcor", qcor(fs, 0.1, 0.9));
  deg.emplace_back("qmcor", qmcor(fs, 0.5));
  deg.emplace_back("qmcor swapped", qmcor(flat.swapped(), 0.5));
  deg.emplace_back("tcor", tcor(fs, 0.0, 4.0));
  deg.emplace_back("scor cdf", scor(fs, {SummaryDomain::cdf}));
  deg.emplace_back("scor qf", scor(fs, {SummaryDomain::qf}));
  for (const auto& [name, m] : deg)
    c.expect(m.correlation == 0.0 && m.degenerate, "constant margin " + name);
  const auto surf = qf_surface(fs, default_levels());
  for (std::size_t k = 0; k < surf.values.size(); ++k)
    c.expect(surf.values[k] == 0.0 && surf.degenerate[k] == 1, "constant margin surface");
  c.note(std::to_string(count) + " measures exact at +-1; constant margin degenerate");
  return c.result();
}

// 7. Invariance.
Outcome criterion_7() {
  Check c;
  const auto base = normal_margins(sample_copula(CopulaSpec::clayton(1.5), 3000, 7));
  const auto cube = [](double v) { return v * v * v; };
  const auto ex = [](double v) { return std::exp(v); };
  const RankedSample s0(base);
  const RankedSample s1(transformed(base, ex, cube));
  const RankedSample s2(transformed(base, cube, ex));
  for (const RankedSample* s : {&s1, &s2}) {
    for (double a : {0.05, 0.3, 0.5, 0.77})
      for (double b : {0.1, 0.5, 0.95})
        c.near(qcor(*s, a, b).correlation, qcor(s0, a, b).correlation, 1e-12, "qcor");
    const auto f0 = qf_surface(s0, default_levels());
    const auto f1 = qf_surface(*s, default_levels());
    for (std::size_t k = 0; k < f0.values.size(); ++k) c.near(f1.values[k], f0.values[k], 1e-12, "QFCor");
    c.near(scor(*s, {SummaryDomain::qf}).correlation, scor(s0, {SummaryDomain::qf}).correlation, 1e-12,
           "summary qf");
    c.near(regional_scor(*s, SummaryDomain::qf, {0.0, 0.3, 0.0, 0.3}).correlation,
           regional_scor(s0, SummaryDomain::qf, {0.0, 0.3, 0.0, 0.3}).correlation, 1e-12,
           "regional summary qf");
  }

  const RankedSample affine(transformed(base, [](double v) { return 2.5 * v + 3.0; },
                                        [](double v) { return 0.2 * v - 7.0; }));
  for (double tau : {0.05, 0.3, 0.5, 0.9}) {
    for (double eta : {0.1, 0.6}) {
      c.near(gcor(affine, expectile_functional(tau), expectile_functional(eta)).correlation,
             gcor(s0, expectile_functional(tau), expectile_functional(eta)).correlation, 1e-12, "ecor");
    }
  }

  for (double tau : {0.2, 0.7}) {
    const auto vx = [tau](double t, double x) { return id_expectile(tau, t, x); };
    const auto vy = [](double t, double x) { return x - t; };
    const auto& xs = s0.sample().xs();
    const auto& ys = s0.sample().ys();
    const auto ref = gcor(error_series_from_identification(vx, "e", xs, s0.x()),
                          error_series_from_identification(vy, "m", ys, s0.y()));
    for (double scale : {0.001, 3.0, 250.0}) {
      const auto sx = [&](double t, double x) { return scale * vx(t, x); };
      const auto sy = [&](double t, double x) { return 7.0 * scale * vy(t, x); };
      const auto r1 = gcor(error_series_from_identification(sx, "e", xs, s0.x()),
                           error_series_from_identification(vy, "m", ys, s0.y()));
      const auto r2 = gcor(error_series_from_identification(vx, "e", xs, s0.x()),
                           error_series_from_identification(sy, "m", ys, s0.y()));
      c.near(r1.correlation, ref.correlation, 1e-12, "scaled identification x");
      c.near(r2.correlation, ref.correlation, 1e-12, "scaled identification y");
    }
  }
  return c.result();
}

// 8. Mean correlation equals Pearson for a symmetric bivariate normal.
Outcome criterion_8() {
  Check c;
  const auto s = normal_margins(sample_copula(CopulaSpec::gaussian(0.6), 100000, 8));
  const double m = mcor(RankedSample(s)).correlation;
  const double p = oracle::pearson(s.xs(), s.ys());
  c.near(m, p, 0.01, "MCor vs Pearson");
  c.note("MCor " + fmt(m, 6) + ", Pearson " + fmt(p, 6));
  return c.result();
}

// 9. Median absolute error shrinks by at least 5x from n = 1e3 to n = 1e5.
Outcome criterion_9() {
  Check c;
  const auto spec = CopulaSpec::clayton(2.0);
  const double q_true = population_qfcor(spec, 0.5, 0.5);
  const double rho = spearman_rho(spec);
  auto median_errors = [&](std::size_t n) {
    std::vector<double> eq;
    std::vector<double> em;
    std::vector<double> es;
    for (std::uint64_t rep = 0; rep < 50; ++rep) {
      const RankedSample s(sample_copula(spec, n, 900 + rep));
      eq.push_back(std::abs(qcor(s, 0.5, 0.5).correlation - q_true));
      em.push_back(std::abs(mcor(s).correlation - rho));
      es.push_back(std::abs(scor(s, {SummaryDomain::qf}).correlation - rho));
    }
    auto med = [](std::vector<double> v) {
      std::sort(v.begin(), v.end());
      return 0.5 * (v[24] + v[25]);
    };
    return std::vector<double>{med(eq), med(em), med(es)};
  };
  const auto small = median_errors(1000);
  const auto large = median_errors(100000);
  const char* names[] = {"qcor(0.5,0.5)", "mcor", "scor qf"};
  std::string detail;
  for (int k = 0; k < 3; ++k) {
    const double ratio = small[k] / large[k];
    c.expect(ratio >= 5.0, std::string(names[k]) + " ratio " + fmt(ratio));
    detail += std::string(k ? ", " : "") + names[k] + " x" + fmt(ratio, 3);
  }
  c.note(detail);
  return c.result();
}

int run_cli(const std::string& args, const std::string& out) {
  const std::string cmd = std::string(GENCOR_CLI) + " " + args + " > " + out + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// 10. Command-line pipeline on a user CSV.
Outcome criterion_10() {
  Check c;
  const std::string dir = std::string(ACCEPTANCE_TMP) + "/";
  const std::string data = dir + "panel.csv";
  {
    // Two skewed variables with missing entries, like survey income data.
    const auto uv = sample_copula(CopulaSpec::gumbel(1.4), 5000, 10);
    std::ofstream out(data);
    out << "id,income_a,income_b,note\n";
    for (std::size_t i = 0; i < uv.size(); ++i) {
      out << i << ',';
      if (i % 97 != 0) out << format_double(std::exp(3 * uv.xs()[i]));
      out << ',';
      if (i % 89 != 0) out << format_double(-std::log1p(-uv.ys()[i]));
      out << ",x\n";
    }
  }
  const std::string sel = " -i " + data + " --x income_a --y income_b";
  const std::string out = dir + "out.txt";
  auto correlation_of = [&](const std::string& path) {
    std::ifstream in(path);
    return nlohmann::json::parse(in)["correlation"].get<double>();
  };
  for (const std::string m : {"mcor", "qcor --alpha 0.5", "ecor --tau 0.5", "qmcor --alpha 0.9", "blomqvist"}) {
    c.expect(run_cli("compute" + sel + " --format json --measure " + m, out) == 0, "compute " + m);
    const double r = correlation_of(out);
    c.expect(r > 0.0 && r <= 1.0, "compute " + m + " = " + fmt(r));
  }
  const std::string trim = " --trim 0.025,0.975";
  c.expect(run_cli("grid" + sel + " --mode cdf --stat cor" + trim + " --format csv", out) == 0, "grid cdf csv");
  std::ifstream in(out);
  const auto surf = read_surface_csv(in, SurfaceMeasure::cdf_cor);
  c.expect(surf.rows() > 10 && surf.cols() > 10, "grid size");
  c.expect(run_cli("grid" + sel + " --mode cdf --stat cov" + trim + " --format svg -o " + dir + "g.svg", out) == 0,
           "grid cdf svg");
  c.expect(run_cli("grid" + sel + " --mode qf --format json", out) == 0, "grid qf json");
  for (const std::string d : {"cdf", "qf"}) {
    c.expect(run_cli("summary" + sel + " --domain " + d + trim + " --format json", out) == 0, "summary " + d);
    const double r = correlation_of(out);
    c.expect(r > 0.0 && r <= 1.0, "summary " + d + " = " + fmt(r));
  }
  c.expect(run_cli("tail" + sel + " --side upper", out) == 0, "tail");
  return c.result();
}

// 11. Median quantile correlation is Blomqvist's beta on tie-free even samples.
Outcome criterion_11() {
  Check c;
  std::mt19937_64 gen(11);
  std::uniform_int_distribution<int> half(1, 150);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 2 * static_cast<std::size_t>(half(gen));
    const auto x = oracle::normal_draws(gen, n);
    auto y = oracle::normal_draws(gen, n);
    for (std::size_t i = 0; i < n; ++i) y[i] += (rep % 5) * 0.3 * x[i];
    const double mx = oracle::quantile(x, 0.5);
    const double my = oracle::quantile(y, 0.5);
    std::int64_t joint = 0;
    for (std::size_t i = 0; i < n; ++i) joint += x[i] <= mx && y[i] <= my;
    const double want = static_cast<double>(4 * joint - static_cast<std::int64_t>(n)) / static_cast<double>(n);
    c.expect(qcor(make_sample(x, y), 0.5, 0.5).correlation == want, "sample " + std::to_string(rep));
  }
  return c.result();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Cauchy-Schwarz quantile bounds on the 99x99 level grid", criterion_1},
      {"cdf summary covariance equals sample covariance", criterion_2},
      {"brute-force enumeration for n <= 5", criterion_3},
      {"calibrated copula quantile correlations at n = 1e5", criterion_4},
      {"tail correlations", criterion_5},
      {"perfect dependence and degeneracy", criterion_6},
      {"invariance under monotone and affine maps", criterion_7},
      {"mean correlation equals Pearson for bivariate normal", criterion_8},
      {"consistency from n = 1e3 to 1e5", criterion_9},
      {"command-line pipeline on a CSV", criterion_10},
      {"median quantile correlation equals Blomqvist's beta", criterion_11},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s %2zu %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                seconds_since(t0), o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
