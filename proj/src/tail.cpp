#include "gencor/tail.hpp"

#include <cmath>

#include "gencor/errors.hpp"
#include "gencor/local.hpp"

namespace gencor {

std::string to_string(TailSide side) { return side == TailSide::lower ? "lower" : "upper"; }

std::string to_string(TailLabel label) {
  switch (label) {
    case TailLabel::positively_dependent: return "positively_dependent";
    case TailLabel::negatively_dependent: return "negatively_dependent";
    case TailLabel::independent: return "independent";
    case TailLabel::comonotonic: return "comonotonic";
    case TailLabel::countermonotonic: return "countermonotonic";
  }
  return "unknown";
}

TailCurve tail_curve(const RankedSample& sample, TailSide side, std::span<const double> levels) {
  TailCurve curve;
  curve.side = side;
  curve.sample_size = sample.size();
  for (double level : levels) {
    if (!(level > 0.0 && level < 1.0))
      throw LevelOutOfRange("tail levels must lie strictly inside (0, 1)");
  }
  for (double level : levels) {
    const LocalCounts c = quantile_counts(sample, level, level);
    const MeasureResult m = local_measure(c);
    double lambda = 0.0;
    std::int64_t corner = 0;
    if (side == TailSide::lower) {
      corner = c.nxy;
      lambda = static_cast<double>(c.nxy) / static_cast<double>(c.nx);
    } else {
      corner = c.n - c.nx - c.ny + c.nxy;
      const std::int64_t beyond = c.n - c.nx;
      lambda = beyond > 0 ? static_cast<double>(corner) / static_cast<double>(beyond) : 0.0;
    }
    curve.levels.push_back(level);
    curve.qcor_values.push_back(m.correlation);
    curve.lambda_values.push_back(lambda);
    curve.corner_counts.push_back(corner);
  }
  return curve;
}

TailClassification tail_estimate(const TailCurve& curve) {
  if (curve.levels.empty()) throw InsufficientTailData("empty tail curve");
  const double n = static_cast<double>(curve.sample_size);
  auto tail_mass = [&](double level) {
    return curve.side == TailSide::lower ? level : 1.0 - level;
  };

  std::size_t best = curve.levels.size();
  for (std::size_t i = 0; i < curve.levels.size(); ++i) {
    if (n * tail_mass(curve.levels[i]) < kTailOccupancy) continue;
    if (best == curve.levels.size() || tail_mass(curve.levels[i]) < tail_mass(curve.levels[best]))
      best = i;
  }
  if (best == curve.levels.size())
    throw InsufficientTailData("no level has enough expected tail observations");

  TailClassification out;
  out.level = curve.levels[best];
  out.estimate = curve.qcor_values[best];
  out.tolerance = 2.0 / std::sqrt(n * tail_mass(out.level));
  if (std::abs(out.estimate - 1.0) <= out.tolerance) {
    out.label = TailLabel::comonotonic;
  } else if (std::abs(out.estimate + 1.0) <= out.tolerance) {
    out.label = TailLabel::countermonotonic;
  } else if (out.estimate > out.tolerance) {
    out.label = TailLabel::positively_dependent;
  } else if (out.estimate < -out.tolerance) {
    out.label = TailLabel::negatively_dependent;
  } else {
    out.label = TailLabel::independent;
  }
  return out;
}

}  // namespace gencor
