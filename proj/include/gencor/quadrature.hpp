#pragma once

#include <functional>

namespace gencor {

/// Adaptive Gauss-Kronrod (7/15) integration of f over [a, b] to the given absolute
/// tolerance. Intervals are bisected until the Kronrod-Gauss difference on each piece meets
/// its share of the tolerance or the depth limit is reached.
double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                 int max_depth = 30);

}  // namespace gencor
