#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gencor/sample.hpp"

namespace gencor {

enum class TailSide { lower, upper };

std::string to_string(TailSide side);

/// Diagonal quantile correlations and empirical tail-dependence coefficients along a sequence
/// of levels approaching one corner.
struct TailCurve {
  TailSide side = TailSide::lower;
  std::vector<double> levels;
  std::vector<double> qcor_values;
  std::vector<double> lambda_values;
  /// Joint corner counts: #{x <= q_x, y <= q_y} (lower) or #{x > q_x, y > q_y} (upper).
  std::vector<std::int64_t> corner_counts;
  std::size_t sample_size = 0;
};

/// For each level: qcor(alpha, alpha); lower lambda = F(q_x, q_y) / u*, upper lambda =
/// corner count / (n - n u*). Throws LevelOutOfRange for levels outside (0, 1).
TailCurve tail_curve(const RankedSample& sample, TailSide side, std::span<const double> levels);

enum class TailLabel {
  positively_dependent,
  negatively_dependent,
  independent,
  comonotonic,
  countermonotonic
};

std::string to_string(TailLabel label);

struct TailClassification {
  TailLabel label = TailLabel::independent;
  double estimate = 0.0;
  /// Level the estimate was read at and the tolerance used for labelling.
  double level = 0.0;
  double tolerance = 0.0;
};

/// Minimum expected number of tail observations, n * alpha (lower) or n * (1 - alpha) (upper).
inline constexpr double kTailOccupancy = 10.0;

/// Reads qcor at the most extreme level with at least kTailOccupancy expected tail
/// observations and labels it with tolerance 2 / sqrt(n * tail probability). Within tolerance
/// of +-1 the label is (counter)comonotonic; otherwise the sign decides. No extrapolation
/// beyond the curve. Throws InsufficientTailData when no level qualifies.
TailClassification tail_estimate(const TailCurve& curve);

}  // namespace gencor
