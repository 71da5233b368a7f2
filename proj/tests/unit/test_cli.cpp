#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "gencor/grid.hpp"
#include "gencor/io.hpp"
#include "oracles.hpp"

using namespace gencor;

namespace {

const std::string kCli = GENCOR_CLI;

std::string temp(const std::string& name) { return ::testing::TempDir() + "gencor_cli_" + name; }

int run(const std::string& args, const std::string& stdout_path = "") {
  std::string cmd = kCli + " " + args;
  cmd += stdout_path.empty() ? " > /dev/null" : " > " + stdout_path;
  cmd += " 2> " + temp("stderr.txt");
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

// Second line of a record CSV split on commas.
std::vector<std::string> record_fields(const std::string& path) {
  std::istringstream in(slurp(path));
  std::string line;
  std::getline(in, line);
  std::getline(in, line);
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string f;
  while (std::getline(ss, f, ',')) out.push_back(f);
  return out;
}

// Record columns: measure,params,covariance,lower_bound,upper_bound,correlation,n,degenerate
constexpr int kCov = 2;
constexpr int kCor = 5;
constexpr int kDegenerate = 7;

}  // namespace

TEST(Cli, ComputePerfectDependence) {
  const std::string csv = temp("perfect.csv");
  write_file(csv, "a,b,c,d\n1,10,5,3\n2,20,4,3\n3,30,3,3\n4,40,2,3\n5,50,1,3\n6,60,0,3\n");
  const std::string out = temp("out.csv");

  ASSERT_EQ(run("compute -i " + csv + " --x a --y b --measure qcor --alpha 0.5 --beta 0.5", out), 0);
  EXPECT_EQ(record_fields(out)[kCor], "1");
  ASSERT_EQ(run("compute -i " + csv + " --x a --y c --measure mcor", out), 0);
  EXPECT_EQ(record_fields(out)[kCor], "-1");
  ASSERT_EQ(run("compute -i " + csv + " --x a --y d --measure ecor --tau 0.3", out), 0);
  EXPECT_EQ(record_fields(out)[kCor], "0");
  EXPECT_EQ(record_fields(out)[kDegenerate], "true");
  for (const char* m : {"tcor --a 3 --b 30", "qmcor --alpha 0.4", "blomqvist",
                        "gcor --fx expectile:0.2 --fy quantile:0.7"}) {
    ASSERT_EQ(run("compute -i " + csv + " --x a --y b --measure " + std::string(m), out), 0) << m;
    EXPECT_EQ(record_fields(out)[kCor], "1") << m;
  }
  EXPECT_EQ(record_fields(out)[1], "tau_x=0.20000000000000001;alpha_y=0.69999999999999996");
}

TEST(Cli, ExitCodes) {
  const std::string csv = temp("codes.csv");
  write_file(csv, "x,y\n1,2\n2,1\n3,3\n");
  const std::string na = temp("na.csv");
  write_file(na, "x,y\n1,\n,2\n");
  EXPECT_EQ(run("compute -i " + temp("missing.csv") + " --x x --y y --measure mcor"), 2);
  EXPECT_EQ(run("compute -i " + csv + " --x x --y nope --measure mcor"), 3);
  EXPECT_EQ(run("compute -i " + na + " --x x --y y --measure mcor"), 4);
  EXPECT_EQ(run("summary -i " + csv + " --x x --y y --domain cdf --region 10,20,1,2"), 5);
  EXPECT_EQ(run("grid -i " + csv + " --x x --y y --levels \"\""), 5);
  EXPECT_EQ(run("compute -i " + csv + " --x x --y y --measure qcor --alpha 1.5"), 1);
  EXPECT_EQ(run("compute -i " + csv + " --x x --y y --measure qcor"), 1);
  EXPECT_EQ(run("compute -i " + csv + " --x x --y y --measure spearman"), 1);
  EXPECT_EQ(run("compute -i " + csv + " --x x --y y --measure mcor --format svg"), 1);
  EXPECT_EQ(run("grid -i " + csv + " --x x --y y --levels 0.5,0.2"), 1);
  EXPECT_EQ(run("--help"), 0);
}

TEST(Cli, SimulateIsDeterministic) {
  const std::string a = temp("sim_a.csv");
  const std::string b = temp("sim_b.csv");
  ASSERT_EQ(run("simulate --family countermonotone --n 5 --seed 7 -o " + a), 0);
  ASSERT_EQ(run("simulate --family countermonotone --n 5 --seed 7 -o " + b), 0);
  const std::string text = slurp(a);
  EXPECT_EQ(text, slurp(b));
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 6);
  EXPECT_EQ(text.rfind("u,v\n", 0), 0u);
  ASSERT_EQ(run("simulate --family gumbel --rho-s 0.5 --n 10 --margin exponential -o " + a), 0);
  EXPECT_EQ(slurp(a).rfind("u,v,x,y\n", 0), 0u);
  EXPECT_EQ(run("simulate --family clayton --rho-s -0.5 --n 10"), 1);
}

TEST(Cli, GridFormats) {
  const std::string data = temp("grid_data.csv");
  ASSERT_EQ(run("simulate --family clayton --theta 2 --n 100000 --seed 1 -o " + data), 0);
  const std::string out = temp("grid.csv");
  ASSERT_EQ(run("grid -i " + data + " --x u --y v --mode qf --levels 0.1:0.9:0.1", out), 0);

  std::ifstream in(out);
  const auto surf = read_surface_csv(in, SurfaceMeasure::qf_cor);
  ASSERT_EQ(surf.rows(), 9u);
  EXPECT_EQ(surf.axis_x[6], 0.7);
  EXPECT_NEAR(surf.at(4, 4), 0.5118578920, 0.02);

  // Re-parsed CSV reproduces the in-memory surface bit for bit.
  const RankedSample sample(read_sample(data, "u", "v"));
  const auto direct = qf_surface(sample, surf.axis_x);
  EXPECT_EQ(surf.values, direct.values);

  const std::string svg = temp("grid.svg");
  ASSERT_EQ(run("grid -i " + data + " --x u --y v --levels 0.1:0.9:0.1 --format svg -o " + svg), 0);
  const std::string text = slurp(svg);
  EXPECT_EQ(text.rfind("<?xml", 0), 0u);
  std::size_t rects = 0;
  for (auto p = text.find("<rect"); p != std::string::npos; p = text.find("<rect", p + 1)) ++rects;
  EXPECT_EQ(rects, 81u + 1u);
  ASSERT_EQ(run("grid -i " + data + " --x u --y v --levels 0.1:0.9:0.1 --format svg -o " + svg + "2"), 0);
  EXPECT_EQ(text, slurp(svg + "2"));

  const std::string js = temp("grid.json");
  ASSERT_EQ(run("grid -i " + data + " --x u --y v --mode cdf --max-points 20 --format json", js), 0);
  const auto j = nlohmann::json::parse(slurp(js));
  EXPECT_EQ(j["measure"], "CDFCor");
  EXPECT_EQ(j["values"].size(), 20u);

  ASSERT_EQ(run("grid -i " + data + " --x u --y v --mode cdf --stat cov --max-points 50 --classify"), 0);
  EXPECT_NE(slurp(temp("stderr.txt")).find("global dependence: positive"), std::string::npos);
}

TEST(Cli, SummaryCdfIsSampleCovariance) {
  const std::string data = temp("summary.csv");
  ASSERT_EQ(run("simulate --family gaussian --r 0.4 --n 500 --seed 3 --margin normal -o " + data), 0);
  const std::string out = temp("summary_out.csv");
  ASSERT_EQ(run("summary -i " + data + " --x x --y y --domain cdf --measure lebesgue", out), 0);
  const auto cols = read_csv_columns(data, "x", "y");
  EXPECT_NEAR(std::stod(record_fields(out)[kCov]), oracle::covariance(cols.x, cols.y), 1e-10);
  ASSERT_EQ(run("summary -i " + data + " --x x --y y --domain qf --trim 0.025,0.975 --format json", out), 0);
  const auto j = nlohmann::json::parse(slurp(out));
  EXPECT_EQ(j["measure"], "scor_qf_region");
  EXPECT_EQ(j["params"]["lo_x"], 0.025);
}

TEST(Cli, ClaytonLowerTail) {
  const std::string data = temp("tail.csv");
  ASSERT_EQ(run("simulate --family clayton --theta 2 --n 1000000 --seed 5 -o " + data), 0);
  const std::string out = temp("tail_out.csv");
  ASSERT_EQ(run("tail -i " + data + " --x u --y v --side lower --levels 0.1,0.05,0.02,0.01", out), 0);
  std::istringstream in(slurp(out));
  std::string line;
  std::string last;
  while (std::getline(in, line)) last = line;
  EXPECT_EQ(last.rfind("lower,0.01,", 0), 0u);
  const auto comma = last.find(',', 11);
  const double q = std::stod(last.substr(11, comma - 11));
  EXPECT_NEAR(q, std::sqrt(0.5), 0.05);
  EXPECT_NE(slurp(temp("stderr.txt")).find("positively_dependent"), std::string::npos);
}
