#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <stdexcept>

#include "hweno/state.hpp"

namespace hweno {

struct GasParams {
  double gamma = 1.4;
};

// ---------------------------------------------------------------------------
// Compressible Euler helpers.  Conserved layouts:
//   1D (3 components): rho, rho*u, E
//   2D (4 components): rho, rho*u, rho*v, E
// The component count of the spans selects the variant.
// ---------------------------------------------------------------------------

inline double euler_pressure(std::span<const double> U, const GasParams& gas) {
  const double rho = U[0];
  double ke = U[1] * U[1];
  if (U.size() == 4) ke += U[2] * U[2];
  return (gas.gamma - 1.0) * (U[U.size() - 1] - 0.5 * ke / rho);
}

inline bool euler_admissible(std::span<const double> U, const GasParams& gas) {
  return U[0] > 0.0 && euler_pressure(U, gas) > 0.0;
}

inline double euler_sound_speed(std::span<const double> U, const GasParams& gas) {
  return std::sqrt(gas.gamma * euler_pressure(U, gas) / U[0]);
}

/// |u| + c in the x direction.
inline double euler_wave_speed_x(std::span<const double> U, const GasParams& gas) {
  return std::abs(U[1] / U[0]) + euler_sound_speed(U, gas);
}

/// |v| + c in the y direction (2D layout).
inline double euler_wave_speed_y(std::span<const double> U, const GasParams& gas) {
  return std::abs(U[2] / U[0]) + euler_sound_speed(U, gas);
}

inline void euler_flux_x(std::span<const double> U, const GasParams& gas,
                         std::span<double> F) {
  const double rho = U[0], mx = U[1];
  const double p = euler_pressure(U, gas);
  const double u = mx / rho;
  if (U.size() == 3) {
    F[0] = mx;
    F[1] = mx * u + p;
    F[2] = u * (U[2] + p);
  } else {
    F[0] = mx;
    F[1] = mx * u + p;
    F[2] = U[2] * u;
    F[3] = u * (U[3] + p);
  }
}

inline void euler_flux_y(std::span<const double> U, const GasParams& gas,
                         std::span<double> F) {
  const double rho = U[0], my = U[2];
  const double p = euler_pressure(U, gas);
  const double v = my / rho;
  F[0] = my;
  F[1] = U[1] * v;
  F[2] = my * v + p;
  F[3] = v * (U[3] + p);
}

/// Product of the x-flux Jacobian at U with a vector z (analytic).
inline void euler_jacobian_x_apply(std::span<const double> U, const GasParams& gas,
                                   std::span<const double> z, std::span<double> out) {
  const double g = gas.gamma;
  const double rho = U[0];
  if (U.size() == 3) {
    const double u = U[1] / rho, E = U[2];
    out[0] = z[1];
    out[1] = 0.5 * (g - 3.0) * u * u * z[0] + (3.0 - g) * u * z[1] + (g - 1.0) * z[2];
    out[2] = ((g - 1.0) * u * u * u - g * u * E / rho) * z[0] +
             (g * E / rho - 1.5 * (g - 1.0) * u * u) * z[1] + g * u * z[2];
  } else {
    const double u = U[1] / rho, v = U[2] / rho, E = U[3];
    const double q2 = u * u + v * v;
    out[0] = z[1];
    out[1] = (0.5 * (g - 1.0) * q2 - u * u) * z[0] + (3.0 - g) * u * z[1] -
             (g - 1.0) * v * z[2] + (g - 1.0) * z[3];
    out[2] = -u * v * z[0] + v * z[1] + u * z[2];
    out[3] = (-g * u * E / rho + (g - 1.0) * u * q2) * z[0] +
             (g * E / rho - 0.5 * (g - 1.0) * (q2 + 2.0 * u * u)) * z[1] -
             (g - 1.0) * u * v * z[2] + g * u * z[3];
  }
}

/// Product of the y-flux Jacobian at U with a vector z (2D layout).  Uses the
/// symmetry g(U) = S f(S U) with S swapping the momentum components.
inline void euler_jacobian_y_apply(std::span<const double> U, const GasParams& gas,
                                   std::span<const double> z, std::span<double> out) {
  const double Us[4] = {U[0], U[2], U[1], U[3]};
  const double zs[4] = {z[0], z[2], z[1], z[3]};
  double os[4];
  euler_jacobian_x_apply(std::span<const double>(Us, 4), gas,
                         std::span<const double>(zs, 4), std::span<double>(os, 4));
  out[0] = os[0];
  out[1] = os[2];
  out[2] = os[1];
  out[3] = os[3];
}

// ---------------------------------------------------------------------------
// Characteristic frames.  Built at interfaces from the arithmetic average of
// the two adjacent conserved states; project/unproject map between conserved
// and characteristic variables.
// ---------------------------------------------------------------------------

struct CharFrame {
  int n = 0;               ///< number of components (3 or 4)
  double L[4][4] = {};     ///< rows are left eigenvectors
  double R[4][4] = {};     ///< columns are right eigenvectors
  double lambda[4] = {};   ///< eigenvalues

  void project(std::span<const double> q, std::span<double> out) const {
    for (int m = 0; m < n; ++m) {
      double s = 0.0;
      for (int c = 0; c < n; ++c) s += L[m][c] * q[c];
      out[m] = s;
    }
  }
  void unproject(std::span<const double> q, std::span<double> out) const {
    for (int c = 0; c < n; ++c) {
      double s = 0.0;
      for (int m = 0; m < n; ++m) s += R[c][m] * q[m];
      out[c] = s;
    }
  }
};

namespace detail {

/// x-direction eigensystem of the 1D (3-component) Euler equations.
inline CharFrame euler_frame_1d(std::span<const double> U, const GasParams& gas) {
  if (!euler_admissible(U, gas))
    throw SolverError("characteristic frame: inadmissible average state");
  CharFrame fr;
  fr.n = 3;
  const double rho = U[0], u = U[1] / rho, E = U[2];
  const double p = euler_pressure(U, gas);
  const double c = std::sqrt(gas.gamma * p / rho);
  const double H = (E + p) / rho;
  const double b1 = (gas.gamma - 1.0) / (c * c);
  const double b2 = 0.5 * b1 * u * u;

  fr.lambda[0] = u - c;
  fr.lambda[1] = u;
  fr.lambda[2] = u + c;

  const double R[3][3] = {{1.0, 1.0, 1.0},
                          {u - c, u, u + c},
                          {H - u * c, 0.5 * u * u, H + u * c}};
  const double L[3][3] = {
      {0.5 * (b2 + u / c), -0.5 * (b1 * u + 1.0 / c), 0.5 * b1},
      {1.0 - b2, b1 * u, -b1},
      {0.5 * (b2 - u / c), -0.5 * (b1 * u - 1.0 / c), 0.5 * b1}};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      fr.R[a][b] = R[a][b];
      fr.L[a][b] = L[a][b];
    }
  return fr;
}

/// x-direction eigensystem of the 2D (4-component) Euler equations.
inline CharFrame euler_frame_2d_x(std::span<const double> U, const GasParams& gas) {
  if (!euler_admissible(U, gas))
    throw SolverError("characteristic frame: inadmissible average state");
  CharFrame fr;
  fr.n = 4;
  const double rho = U[0], u = U[1] / rho, v = U[2] / rho, E = U[3];
  const double p = euler_pressure(U, gas);
  const double c = std::sqrt(gas.gamma * p / rho);
  const double H = (E + p) / rho;
  const double q2 = u * u + v * v;
  const double b1 = (gas.gamma - 1.0) / (c * c);
  const double b2 = 0.5 * b1 * q2;

  fr.lambda[0] = u - c;
  fr.lambda[1] = u;
  fr.lambda[2] = u;
  fr.lambda[3] = u + c;

  const double R[4][4] = {{1.0, 1.0, 0.0, 1.0},
                          {u - c, u, 0.0, u + c},
                          {v, v, 1.0, v},
                          {H - u * c, 0.5 * q2, v, H + u * c}};
  const double L[4][4] = {
      {0.5 * (b2 + u / c), -0.5 * (b1 * u + 1.0 / c), -0.5 * b1 * v, 0.5 * b1},
      {1.0 - b2, b1 * u, b1 * v, -b1},
      {-v, 0.0, 1.0, 0.0},
      {0.5 * (b2 - u / c), -0.5 * (b1 * u - 1.0 / c), -0.5 * b1 * v, 0.5 * b1}};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      fr.R[a][b] = R[a][b];
      fr.L[a][b] = L[a][b];
    }
  return fr;
}

}  // namespace detail

/// Characteristic frame in the x direction at the interface between UL and
/// UR (arithmetic average of conserved states).
inline CharFrame char_frame_x(std::span<const double> UL, std::span<const double> UR,
                              const GasParams& gas) {
  double Ua[4];
  const int n = static_cast<int>(UL.size());
  for (int c = 0; c < n; ++c) Ua[c] = 0.5 * (UL[c] + UR[c]);
  const std::span<const double> U(Ua, static_cast<size_t>(n));
  return n == 3 ? detail::euler_frame_1d(U, gas) : detail::euler_frame_2d_x(U, gas);
}

/// Characteristic frame in the y direction (2D).  From g(U) = S f(S U) with
/// S the momentum swap: R_y = S R_x(SU) (swap rows), L_y = L_x(SU) S (swap
/// columns).
inline CharFrame char_frame_y(std::span<const double> UL, std::span<const double> UR,
                              const GasParams& gas) {
  const double Us[4] = {0.5 * (UL[0] + UR[0]), 0.5 * (UL[2] + UR[2]),
                        0.5 * (UL[1] + UR[1]), 0.5 * (UL[3] + UR[3])};
  CharFrame fr = detail::euler_frame_2d_x(std::span<const double>(Us, 4), gas);
  for (int m = 0; m < 4; ++m) std::swap(fr.L[m][1], fr.L[m][2]);
  for (int m = 0; m < 4; ++m) std::swap(fr.R[1][m], fr.R[2][m]);
  return fr;
}

// ---------------------------------------------------------------------------
// Conservation-law descriptor consumed by the solver.
// ---------------------------------------------------------------------------

/// What the residual operators need to know about the PDE.  Scalar problems
/// provide flux functions; Euler problems set `euler` and the gas parameters.
struct System {
  int ncomp = 1;
  bool euler = false;
  GasParams gas;

  std::function<double(double)> f;   ///< scalar x-flux
  std::function<double(double)> df;  ///< its derivative (wave speed)
  std::function<double(double)> g;   ///< scalar y-flux (2D)
  std::function<double(double)> dg;  ///< its derivative

  /// Optional fixed wave-speed bounds; when positive they replace the scan
  /// over grid values (used when the flux derivative is not monotone, so the
  /// pointwise scan could undershoot the true bound between nodes).
  double alpha_fixed_x = -1.0;
  double alpha_fixed_y = -1.0;

  static System scalar1d(std::function<double(double)> f,
                         std::function<double(double)> df) {
    System s;
    s.f = std::move(f);
    s.df = std::move(df);
    return s;
  }
  static System scalar2d(std::function<double(double)> f,
                         std::function<double(double)> df,
                         std::function<double(double)> g,
                         std::function<double(double)> dg) {
    System s;
    s.f = std::move(f);
    s.df = std::move(df);
    s.g = std::move(g);
    s.dg = std::move(dg);
    return s;
  }
  static System euler1d(GasParams gas = {}) {
    System s;
    s.ncomp = 3;
    s.euler = true;
    s.gas = gas;
    return s;
  }
  static System euler2d(GasParams gas = {}) {
    System s;
    s.ncomp = 4;
    s.euler = true;
    s.gas = gas;
    return s;
  }
};

}  // namespace hweno
