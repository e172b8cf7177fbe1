#pragma once

#include <cmath>

#include "hweno/config.hpp"
#include "hweno/reconstruct.hpp"

namespace hweno {

// ---------------------------------------------------------------------------
// Derivative limiter.
//
// Given point values u and point derivatives v on the nodes {i-1, i, i+1},
// the limiter rebuilds the center derivative from three candidates: the
// derivative of the quartic that interpolates u on all three nodes and v on
// the outer two, and the two one-sided difference slopes.  On smooth data the
// result stays within O(dx^4) of v_i; near a discontinuity the weights
// collapse onto the one-sided slopes, discarding the polluted derivative.
// ---------------------------------------------------------------------------

/// Candidate center-node slopes: quartic derivative, left and right
/// difference quotients.
struct SlopeCandidates {
  double dq0, dq1, dq2;
};

inline SlopeCandidates limiter_candidates(const double u[3], const double v[3],
                                          double dx) {
  SlopeCandidates c;
  c.dq0 = (3.0 / (4.0 * dx)) * (u[2] - u[0]) - 0.25 * (v[0] + v[2]);
  c.dq1 = (u[1] - u[0]) / dx;
  c.dq2 = (u[2] - u[1]) / dx;
  return c;
}

/// Smoothness of the three slope candidates (quartic, left linear, right
/// linear) plus the contrast measure tau.
inline Smoothness limiter_smoothness(const double u[3], const double v[3],
                                     double dx) {
  const auto sq = [](double x) { return x * x; };
  const double a1 = -0.25 * dx * (v[0] + v[2]) + 0.75 * (u[2] - u[0]);
  const double a2 = 0.25 * dx * (v[0] - v[2]) + u[0] - 2.0 * u[1] + u[2];
  const double a3 = 0.25 * dx * (v[0] + v[2]) + 0.25 * (u[0] - u[2]);
  const double a4 = 0.25 * dx * (v[2] - v[0]) - 0.5 * (u[0] - 2.0 * u[1] + u[2]);

  Smoothness s;
  s.beta[0] = sq(a1 + 0.25 * a3) + (13.0 / 3.0) * sq(a2 + (63.0 / 130.0) * a4) +
              (781.0 / 20.0) * sq(a3) + (1421461.0 / 2275.0) * sq(a4);
  s.beta[1] = sq(u[1] - u[0]);
  s.beta[2] = sq(u[1] - u[2]);
  s.tau = 0.25 * sq(std::abs(s.beta[0] - s.beta[1]) + std::abs(s.beta[0] - s.beta[2]));
  return s;
}

/// Limited derivative at the center node of the window.
inline double limit_derivative(const double u[3], const double v[3], double dx,
                               const SchemeConfig& cfg) {
  const SlopeCandidates c = limiter_candidates(u, v, dx);
  const Smoothness s = limiter_smoothness(u, v, dx);
  const Weights lam = nonlinear_weights(s, cfg.d, cfg.epsilon);
  const double d0 = cfg.d[0], d1 = cfg.d[1], d2 = cfg.d[2];
  return lam.w[0] * (c.dq0 / d0 - (d1 / d0) * c.dq1 - (d2 / d0) * c.dq2) +
         lam.w[1] * c.dq1 + lam.w[2] * c.dq2;
}

}  // namespace hweno
