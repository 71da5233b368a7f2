#include <gtest/gtest.h>

#include <cmath>

#include "gencor/copula.hpp"
#include "gencor/errors.hpp"
#include "gencor/local.hpp"
#include "gencor/tail.hpp"

using namespace gencor;

TEST(TailCurve, DiagonalQcorAndCornerCounts) {
  const RankedSample s(sample_copula(CopulaSpec::gumbel(1.5), 3000, 2));
  const std::vector<double> levels{0.5, 0.8, 0.9, 0.99};
  const auto curve = tail_curve(s, TailSide::upper, levels);
  for (std::size_t k = 0; k < levels.size(); ++k) {
    const auto c = quantile_counts(s, levels[k], levels[k]);
    EXPECT_EQ(curve.qcor_values[k], qcor(s, levels[k], levels[k]).correlation);
    const std::int64_t corner = c.n - c.nx - c.ny + c.nxy;
    EXPECT_EQ(curve.corner_counts[k], corner);
    EXPECT_EQ(curve.lambda_values[k], static_cast<double>(corner) / static_cast<double>(c.n - c.nx));
  }
  const auto lower = tail_curve(s, TailSide::lower, levels);
  const auto c = quantile_counts(s, 0.5, 0.5);
  EXPECT_EQ(lower.lambda_values[0], static_cast<double>(c.nxy) / static_cast<double>(c.nx));
}

TEST(TailCurve, Countermonotone) {
  const RankedSample s(sample_copula(CopulaSpec::countermonotone(), 1000, 5));
  const std::vector<double> levels{0.1, 0.05, 0.01};
  const auto curve = tail_curve(s, TailSide::lower, levels);
  for (std::size_t k = 0; k < levels.size(); ++k) {
    EXPECT_EQ(curve.qcor_values[k], -1.0);
    EXPECT_EQ(curve.lambda_values[k], 0.0);
  }
  EXPECT_EQ(tail_estimate(curve).label, TailLabel::countermonotonic);
}

TEST(TailCurve, LevelValidation) {
  const RankedSample s(sample_copula(CopulaSpec::independence(), 100, 5));
  const std::vector<double> bad{0.1, 1.0};
  EXPECT_THROW(tail_curve(s, TailSide::lower, bad), LevelOutOfRange);
}

namespace {

// Population diagonal quantile correlations, labelled as if read from a sample of size n.
TailCurve population_curve(const CopulaSpec& spec, TailSide side, std::vector<double> levels,
                           std::size_t n) {
  TailCurve curve;
  curve.side = side;
  curve.sample_size = n;
  for (double a : levels) {
    curve.levels.push_back(a);
    curve.qcor_values.push_back(population_qfcor(spec, a, a));
    curve.lambda_values.push_back(0.0);
    curve.corner_counts.push_back(0);
  }
  return curve;
}

}  // namespace

TEST(TailEstimate, GaussianPopulationIsTailIndependent) {
  const auto spec = CopulaSpec::gaussian(0.52);
  const auto est = tail_estimate(
      population_curve(spec, TailSide::lower, {0.01, 0.005, 0.002, 0.001}, 10000));
  EXPECT_EQ(est.level, 0.001);
  EXPECT_EQ(est.label, TailLabel::independent);
  EXPECT_LT(est.estimate, population_qfcor(spec, 0.01, 0.01));
}

TEST(TailEstimate, GumbelPopulationUpperTail) {
  const auto spec = CopulaSpec::gumbel(2.0);
  const auto est =
      tail_estimate(population_curve(spec, TailSide::upper, {0.99, 0.999, 0.9999}, 1000000));
  EXPECT_EQ(est.label, TailLabel::positively_dependent);
  EXPECT_NEAR(est.estimate, 2.0 - std::sqrt(2.0), 0.01);
}

TEST(TailCurve, PositiveBranchIdentity) {
  for (const auto& spec : {CopulaSpec::clayton(2.0), CopulaSpec::gumbel(2.0)}) {
    for (double a : {0.01, 0.05, 0.1}) {
      const double c = copula_cdf(spec, a, a);
      EXPECT_NEAR(population_qfcor(spec, a, a), (c - a * a) / (a - a * a), 1e-14);
    }
  }
}

TEST(TailEstimate, ClaytonLowerTail) {
  const RankedSample s(sample_copula(CopulaSpec::clayton(2.0), 100000, 8));
  const std::vector<double> levels{0.1, 0.05, 0.01};
  const auto est = tail_estimate(tail_curve(s, TailSide::lower, levels));
  EXPECT_EQ(est.label, TailLabel::positively_dependent);
  EXPECT_NEAR(est.estimate, std::sqrt(0.5), 0.06);
  EXPECT_EQ(tail_estimate(tail_curve(s, TailSide::upper, std::vector<double>{0.9, 0.99})).label,
            TailLabel::independent);
}

TEST(TailEstimate, InsufficientData) {
  const RankedSample s(sample_copula(CopulaSpec::clayton(2.0), 50, 8));
  EXPECT_THROW(tail_estimate(tail_curve(s, TailSide::lower, std::vector<double>{0.1})),
               InsufficientTailData);
}
