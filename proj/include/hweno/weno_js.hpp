#pragma once

#include <cmath>

namespace hweno {

// ---------------------------------------------------------------------------
// Classical fifth-order WENO (Jiang-Shu) on five-point windows, used as the
// reference scheme.  Same global Lax-Friedrichs splitting and driver as the
// Hermite scheme; no derivative field.
// ---------------------------------------------------------------------------

/// Upwind value at the right edge of the center cell from nodes
/// {i-2, i-1, i, i+1, i+2}.
inline double weno_js_plus(const double f[5], double eps = 1e-6) {
  const auto sq = [](double x) { return x * x; };
  const double q0 = (2.0 * f[0] - 7.0 * f[1] + 11.0 * f[2]) / 6.0;
  const double q1 = (-f[1] + 5.0 * f[2] + 2.0 * f[3]) / 6.0;
  const double q2 = (2.0 * f[2] + 5.0 * f[3] - f[4]) / 6.0;
  const double b0 = (13.0 / 12.0) * sq(f[0] - 2.0 * f[1] + f[2]) +
                    0.25 * sq(f[0] - 4.0 * f[1] + 3.0 * f[2]);
  const double b1 = (13.0 / 12.0) * sq(f[1] - 2.0 * f[2] + f[3]) +
                    0.25 * sq(f[1] - f[3]);
  const double b2 = (13.0 / 12.0) * sq(f[2] - 2.0 * f[3] + f[4]) +
                    0.25 * sq(3.0 * f[2] - 4.0 * f[3] + f[4]);
  const double a0 = 0.1 / sq(eps + b0);
  const double a1 = 0.6 / sq(eps + b1);
  const double a2 = 0.3 / sq(eps + b2);
  return (a0 * q0 + a1 * q1 + a2 * q2) / (a0 + a1 + a2);
}

/// Downwind value at x_{i+1/2} from nodes {i-1, i, i+1, i+2, i+3} (mirror
/// image of weno_js_plus about the edge).
inline double weno_js_minus(const double f[5], double eps = 1e-6) {
  const double r[5] = {f[4], f[3], f[2], f[1], f[0]};
  return weno_js_plus(r, eps);
}

/// Interface value of a split flux; both windows are the six nodes
/// {i-2, ..., i+3}.
inline double weno_js_interface(const double fp[6], const double fm[6],
                                double eps = 1e-6) {
  return weno_js_plus(fp, eps) + weno_js_minus(fm + 1, eps);
}

}  // namespace hweno
