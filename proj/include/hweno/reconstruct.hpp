#pragma once

#include <array>
#include <cmath>
#include <span>

#include "hweno/config.hpp"

namespace hweno {

// ---------------------------------------------------------------------------
// Hermite reconstruction kernels.
//
// All kernels work on three-node windows {i-1, i, i+1} of a uniform grid:
// `f` holds function data and `h` the matching first-derivative data.  The
// quintic candidate interpolates value and derivative information on all
// three nodes; the two quadratic candidates use the value pairs {i-1, i} and
// {i, i+1} plus the center derivative.  Values are produced at the right
// edge x_{i+1/2} of the center cell; the mirrored variants below handle the
// left-edge (downwind) case.
// ---------------------------------------------------------------------------

/// Edge values of the three candidates plus the derivative of the quintic.
struct CandidateValues {
  double p0, p1, p2;  ///< quintic, left quadratic, right quadratic at x_{i+1/2}
  double dp0;         ///< quintic derivative at x_{i+1/2}
};

inline CandidateValues candidate_point_values(const double f[3], const double h[3],
                                              double dx) {
  CandidateValues c;
  c.p0 = (11.0 / 60.0) * f[0] + (19.0 / 30.0) * f[1] + (11.0 / 60.0) * f[2] +
         (dx / 20.0) * (h[0] + 10.0 * h[1] - h[2]);
  c.p1 = (1.0 / 6.0) * f[0] + (5.0 / 6.0) * f[1] + (2.0 / 3.0) * dx * h[1];
  c.p2 = (5.0 / 6.0) * f[1] + (1.0 / 6.0) * f[2] + (1.0 / 3.0) * dx * h[1];
  c.dp0 = (f[0] - 8.0 * f[1] + 7.0 * f[2]) / (4.0 * dx) +
          (h[0] - 2.0 * h[1] - 5.0 * h[2]) / 12.0;
  return c;
}

/// Smoothness indicators of the three candidates and the global contrast
/// measure tau built from them.
struct Smoothness {
  double beta[3];
  double tau;
};

/// `alt_beta2` switches the right-quadratic indicator to an alternate variant
/// retained for A/B diagnostics only; the solver always uses the default,
/// which is the exact scaled-derivative integral of the right quadratic.
inline Smoothness flux_smoothness(const double f[3], const double h[3], double dx,
                                  bool alt_beta2 = false) {
  const auto sq = [](double x) { return x * x; };
  const double a1 = dx * ((19.0 / 192.0) * h[0] + (79.0 / 48.0) * h[1] +
                          (19.0 / 192.0) * h[2]) +
                    (27.0 / 64.0) * (f[0] - f[2]);
  const double a2 = dx * (3.0 / 8.0) * (h[0] - h[2]) +
                    (5.0 / 4.0) * (f[0] - 2.0 * f[1] + f[2]);
  const double a3 = -dx * ((11.0 / 24.0) * h[0] + (17.0 / 6.0) * h[1] +
                           (11.0 / 24.0) * h[2]) +
                    (15.0 / 8.0) * (f[2] - f[0]);
  const double a4 = dx * 0.25 * (h[2] - h[0]) - 0.5 * (f[0] - 2.0 * f[1] + f[2]);
  const double a5 = dx * (0.25 * h[0] + h[1] + 0.25 * h[2]) + 0.75 * (f[0] - f[2]);

  Smoothness s;
  s.beta[0] = sq(a1 + 0.25 * a3 + a5 / 16.0) +
              (13.0 / 3.0) * sq(a2 + (63.0 / 130.0) * a4) +
              (781.0 / 20.0) * sq(a3 + (8825.0 / 10934.0) * a5) +
              (1421461.0 / 2275.0) * sq(a4) +
              (21520059541.0 / 1377684.0) * sq(a5);
  s.beta[1] = sq(dx * h[1]) + (13.0 / 3.0) * sq(dx * h[1] - f[1] + f[0]);
  s.beta[2] = alt_beta2
                  ? sq(dx * h[1]) + (13.0 / 3.0) * sq(dx * h[1] + f[1] - f[0])
                  : sq(dx * h[1]) + (13.0 / 3.0) * sq(dx * h[1] - f[2] + f[1]);
  s.tau = 0.25 * sq(std::abs(s.beta[0] - s.beta[1]) + std::abs(s.beta[0] - s.beta[2]));
  return s;
}

struct Weights {
  double w[3];
};

/// Normalized nonlinear weights w_l ~ gamma_l * (1 + tau / (beta_l + eps)).
inline Weights nonlinear_weights(const Smoothness& s,
                                 const std::array<double, 3>& gamma, double eps) {
  double raw[3], sum = 0.0;
  for (int l = 0; l < 3; ++l) {
    raw[l] = gamma[l] * (1.0 + s.tau / (s.beta[l] + eps));
    sum += raw[l];
  }
  return {{raw[0] / sum, raw[1] / sum, raw[2] / sum}};
}

/// Reconstructed edge pair: function value and derivative value.
struct EdgeValue {
  double f, h;
};

/// Upwind reconstruction at the right edge of the center cell from nodes
/// {i-1, i, i+1}.  The function value combines the candidates with nonlinear
/// weights; the derivative value is the plain quintic derivative.
inline EdgeValue reconstruct_plus(const double f[3], const double h[3], double dx,
                                  const SchemeConfig& cfg) {
  const CandidateValues c = candidate_point_values(f, h, dx);
  const Smoothness s = flux_smoothness(f, h, dx);
  const Weights w = nonlinear_weights(s, cfg.gamma, cfg.epsilon);
  const double g0 = cfg.gamma[0], g1 = cfg.gamma[1], g2 = cfg.gamma[2];
  EdgeValue e;
  e.f = w.w[0] * (c.p0 / g0 - (g1 / g0) * c.p1 - (g2 / g0) * c.p2) +
        w.w[1] * c.p1 + w.w[2] * c.p2;
  e.h = c.dp0;
  return e;
}

/// Downwind reconstruction at the LEFT edge of the window, i.e. the value at
/// x_{i+1/2} from nodes {i, i+1, i+2} (passed in left-to-right order).  This
/// is the mirror image of reconstruct_plus: reflecting about the edge
/// reverses the node order and negates derivative data, and flips the sign
/// of the reconstructed derivative.
inline EdgeValue reconstruct_minus(const double f[3], const double h[3], double dx,
                                   const SchemeConfig& cfg) {
  const double fr[3] = {f[2], f[1], f[0]};
  const double hr[3] = {-h[2], -h[1], -h[0]};
  EdgeValue e = reconstruct_plus(fr, hr, dx, cfg);
  e.h = -e.h;
  return e;
}

/// Interface value of a split flux: plus part from nodes {i-1, i, i+1}, minus
/// part from nodes {i, i+1, i+2}.  All windows are passed as the four nodes
/// {i-1, i, i+1, i+2}.
inline EdgeValue reconstruct_interface(const double fp[4], const double fm[4],
                                       const double hp[4], const double hm[4],
                                       double dx, const SchemeConfig& cfg) {
  const EdgeValue plus = reconstruct_plus(fp, hp, dx, cfg);
  const EdgeValue minus = reconstruct_minus(fm + 1, hm + 1, dx, cfg);
  return {plus.f + minus.f, plus.h + minus.h};
}

/// Global Lax-Friedrichs splitting f^{+-} = (f +- a*u)/2 over a node range.
inline void split_flux_lf(std::span<const double> f, std::span<const double> u,
                          double alpha, std::span<double> plus,
                          std::span<double> minus) {
  for (size_t k = 0; k < f.size(); ++k) {
    plus[k] = 0.5 * (f[k] + alpha * u[k]);
    minus[k] = 0.5 * (f[k] - alpha * u[k]);
  }
}

}  // namespace hweno
