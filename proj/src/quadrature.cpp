#include "gencor/quadrature.hpp"

#include <array>
#include <cmath>

namespace gencor {

namespace {

constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrod = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5, 7).
constexpr std::array<double, 4> kGauss = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Estimate {
  double value;
  double error;
};

Estimate kronrod15(const std::function<double(double)>& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(centre);
  double kronrod = fc * kKronrod[7];
  double gauss = fc * kGauss[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kNodes[i];
    const double pair = f(centre - dx) + f(centre + dx);
    kronrod += kKronrod[i] * pair;
    if (i % 2 == 1) gauss += kGauss[i / 2] * pair;
  }
  return {kronrod * half, std::abs((kronrod - gauss) * half)};
}

double adapt(const std::function<double(double)>& f, double a, double b, double tol, int depth,
             const Estimate& whole) {
  if (whole.error <= tol || depth <= 0) return whole.value;
  const double mid = 0.5 * (a + b);
  const Estimate left = kronrod15(f, a, mid);
  const Estimate right = kronrod15(f, mid, b);
  return adapt(f, a, mid, 0.5 * tol, depth - 1, left) +
         adapt(f, mid, b, 0.5 * tol, depth - 1, right);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                 int max_depth) {
  if (a == b) return 0.0;
  if (b < a) return -integrate(f, b, a, abs_tol, max_depth);
  return adapt(f, a, b, abs_tol, max_depth, kronrod15(f, a, b));
}

}  // namespace gencor
