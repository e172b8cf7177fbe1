#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hweno/boundary.hpp"
#include "hweno/config.hpp"
#include "hweno/grid.hpp"
#include "hweno/limiter.hpp"
#include "hweno/reconstruct.hpp"
#include "hweno/state.hpp"
#include "hweno/system.hpp"
#include "hweno/weno_js.hpp"

namespace hweno {

// ---------------------------------------------------------------------------
// Step-geometry mask and wave-speed bounds
// ---------------------------------------------------------------------------

/// Resolved cell-index view of an optional step geometry.
struct StepMask {
  bool active = false;
  int fi = 0, fj = 0;

  bool solid(int i, int j) const { return active && i >= fi && j < fj; }

  static StepMask from(const std::optional<StepGeom>& geom, const Grid2D& g) {
    StepMask m;
    if (geom) {
      m.active = true;
      m.fi = geom->i_face(g);
      m.fj = geom->j_face(g);
    }
    return m;
  }
};

/// Largest wave speed over the interior, used for the global flux splitting.
/// Computed once per time step and shared by all Runge-Kutta stages.
inline double max_wave_speed_x(const System& sys, const HermiteState1D& s) {
  if (sys.alpha_fixed_x > 0.0) return sys.alpha_fixed_x;
  double a = 0.0;
  if (sys.euler) {
    double U[3];
    for (int i = 0; i < s.nx(); ++i) {
      for (int c = 0; c < 3; ++c) U[c] = s.u[c](i);
      a = std::max(a, euler_wave_speed_x(std::span<const double>(U, 3), sys.gas));
    }
  } else {
    for (int i = 0; i < s.nx(); ++i) a = std::max(a, std::abs(sys.df(s.u[0](i))));
  }
  return a;
}

struct WaveSpeeds2D {
  double ax = 0.0, ay = 0.0;
};

inline WaveSpeeds2D max_wave_speed_2d(const System& sys, const HermiteState2D& s,
                                      const StepMask& mask) {
  WaveSpeeds2D ws;
  if (sys.euler) {
    double U[4];
    for (int j = 0; j < s.ny(); ++j)
      for (int i = 0; i < s.nx(); ++i) {
        if (mask.solid(i, j)) continue;
        for (int c = 0; c < 4; ++c) U[c] = s.u[c](i, j);
        const std::span<const double> Us(U, 4);
        ws.ax = std::max(ws.ax, euler_wave_speed_x(Us, sys.gas));
        ws.ay = std::max(ws.ay, euler_wave_speed_y(Us, sys.gas));
      }
  } else {
    for (int j = 0; j < s.ny(); ++j)
      for (int i = 0; i < s.nx(); ++i) {
        if (mask.solid(i, j)) continue;
        const double u = s.u[0](i, j);
        ws.ax = std::max(ws.ax, std::abs(sys.df(u)));
        ws.ay = std::max(ws.ay, std::abs(sys.dg(u)));
      }
  }
  if (sys.alpha_fixed_x > 0.0) ws.ax = sys.alpha_fixed_x;
  if (sys.alpha_fixed_y > 0.0) ws.ay = sys.alpha_fixed_y;
  return ws;
}

// ---------------------------------------------------------------------------
// Time-step control.  `exponent` scales dt like h^exponent; 1 is the usual
// CFL rule, while accuracy studies use 5/3 so the temporal error refines at
// the spatial fifth-order rate.
// ---------------------------------------------------------------------------

inline double compute_dt(double alpha, double dx, double cfl, double exponent,
                         double remaining) {
  if (!(alpha > 1e-300)) return remaining;
  return std::min(remaining, cfl * std::pow(dx, exponent) / alpha);
}

inline double compute_dt(const WaveSpeeds2D& ws, double dx, double dy, double cfl,
                         double exponent, double remaining) {
  const double denom =
      ws.ax / std::pow(dx, exponent) + ws.ay / std::pow(dy, exponent);
  if (!(denom > 1e-300)) return remaining;
  return std::min(remaining, cfl / denom);
}

// ---------------------------------------------------------------------------
// Line worker: interface fluxes along one grid line.  Callers gather node
// data (including ghosts) into the contiguous buffers; the worker evaluates
// physical fluxes, applies the global Lax-Friedrichs splitting, and fills the
// interface arrays.  Local cell indices run over [0, n); buffer slot of cell
// c is c + ghost_width; interface k sits between cells k-1 and k.
// ---------------------------------------------------------------------------

namespace detail {

struct LineData {
  int nc = 1, n = 0;
  double h = 0.0;      ///< grid spacing along the line
  double alpha = 0.0;  ///< splitting speed
  bool mixed = false;  ///< transverse-derivative flux requested

  // inputs, per component: solution, along-line derivative, transverse derivative
  std::vector<std::vector<double>> U, D, T;
  // node scratch
  std::vector<std::vector<double>> F, H, MIX, Fp, Fm, Hp, Hm;
  // outputs, per component, n + 1 interfaces
  std::vector<std::vector<double>> fhat, hhat, mixhat;

  void resize(int ncomp, int ncells, bool with_mixed) {
    nc = ncomp;
    n = ncells;
    mixed = with_mixed;
    const int m = n + 2 * ghost_width, ni = n + 1;
    auto fit = [this](std::vector<std::vector<double>>& a, int len) {
      a.resize(nc);
      for (auto& v : a) v.assign(len, 0.0);
    };
    fit(U, m), fit(D, m), fit(F, m), fit(H, m);
    fit(Fp, m), fit(Fm, m), fit(Hp, m), fit(Hm, m);
    fit(fhat, ni), fit(hhat, ni);
    if (mixed) {
      fit(T, m), fit(MIX, m), fit(mixhat, ni);
    }
  }
};

/// Midpoint value of the four surrounding nodes (fourth-order central
/// interpolation); used for the unsplit transverse-derivative fluxes.
inline double mixed_edge(double q0, double q1, double q2, double q3) {
  return (-q0 + 7.0 * (q1 + q2) - q3) / 12.0;
}

inline void compute_line_fluxes(const System& sys, const SchemeConfig& cfg, int axis,
                                LineData& L) {
  const int g = ghost_width, nc = L.nc, m = L.n + 2 * g;
  const bool weno = cfg.scheme == Scheme::weno_js;

  // pointwise physical fluxes
  if (sys.euler) {
    double U[4], D[4], T[4], FF[4], HH[4], MM[4];
    for (int k = 0; k < m; ++k) {
      for (int c = 0; c < nc; ++c) {
        U[c] = L.U[c][k];
        D[c] = L.D[c][k];
      }
      const std::span<const double> Us(U, static_cast<size_t>(nc));
      const std::span<const double> Ds(D, static_cast<size_t>(nc));
      const std::span<double> Fs(FF, static_cast<size_t>(nc));
      const std::span<double> Hs(HH, static_cast<size_t>(nc));
      if (axis == 0) {
        euler_flux_x(Us, sys.gas, Fs);
        euler_jacobian_x_apply(Us, sys.gas, Ds, Hs);
      } else {
        euler_flux_y(Us, sys.gas, Fs);
        euler_jacobian_y_apply(Us, sys.gas, Ds, Hs);
      }
      for (int c = 0; c < nc; ++c) {
        L.F[c][k] = FF[c];
        L.H[c][k] = HH[c];
      }
      if (L.mixed) {
        for (int c = 0; c < nc; ++c) T[c] = L.T[c][k];
        const std::span<const double> Ts(T, static_cast<size_t>(nc));
        const std::span<double> Ms(MM, static_cast<size_t>(nc));
        if (axis == 0) euler_jacobian_x_apply(Us, sys.gas, Ts, Ms);
        else euler_jacobian_y_apply(Us, sys.gas, Ts, Ms);
        for (int c = 0; c < nc; ++c) L.MIX[c][k] = MM[c];
      }
    }
  } else {
    const auto& f = axis == 0 ? sys.f : sys.g;
    const auto& df = axis == 0 ? sys.df : sys.dg;
    for (int k = 0; k < m; ++k) {
      const double u = L.U[0][k];
      const double a = df(u);
      L.F[0][k] = f(u);
      L.H[0][k] = a * L.D[0][k];
      if (L.mixed) L.MIX[0][k] = a * L.T[0][k];
    }
  }

  // global Lax-Friedrichs splitting of the value and derivative fluxes
  for (int c = 0; c < nc; ++c)
    for (int k = 0; k < m; ++k) {
      L.Fp[c][k] = 0.5 * (L.F[c][k] + L.alpha * L.U[c][k]);
      L.Fm[c][k] = 0.5 * (L.F[c][k] - L.alpha * L.U[c][k]);
      L.Hp[c][k] = 0.5 * (L.H[c][k] + L.alpha * L.D[c][k]);
      L.Hm[c][k] = 0.5 * (L.H[c][k] - L.alpha * L.D[c][k]);
    }

  for (int e = 0; e <= L.n; ++e) {
    if (!sys.euler) {
      if (weno) {
        L.fhat[0][e] =
            weno_js_interface(&L.Fp[0][e + g - 3], &L.Fm[0][e + g - 3], cfg.epsilon);
      } else {
        const EdgeValue ev =
            reconstruct_interface(&L.Fp[0][e + g - 2], &L.Fm[0][e + g - 2],
                                  &L.Hp[0][e + g - 2], &L.Hm[0][e + g - 2], L.h, cfg);
        L.fhat[0][e] = ev.f;
        L.hhat[0][e] = ev.h;
      }
    } else {
      // characteristic decomposition at the interface average state
      double UL[4], UR[4], tmp[4], cf[4], ch[4], out[4];
      for (int c = 0; c < nc; ++c) {
        UL[c] = L.U[c][e + g - 1];
        UR[c] = L.U[c][e + g];
      }
      const std::span<const double> ULs(UL, static_cast<size_t>(nc));
      const std::span<const double> URs(UR, static_cast<size_t>(nc));
      const CharFrame fr =
          axis == 0 ? char_frame_x(ULs, URs, sys.gas) : char_frame_y(ULs, URs, sys.gas);
      const std::span<const double> tmps(tmp, static_cast<size_t>(nc));

      if (weno) {
        double pfp[6][4], pfm[6][4];
        for (int k = 0; k < 6; ++k) {
          const int slot = e + g - 3 + k;
          for (int c = 0; c < nc; ++c) tmp[c] = L.Fp[c][slot];
          fr.project(tmps, std::span<double>(pfp[k], static_cast<size_t>(nc)));
          for (int c = 0; c < nc; ++c) tmp[c] = L.Fm[c][slot];
          fr.project(tmps, std::span<double>(pfm[k], static_cast<size_t>(nc)));
        }
        for (int q = 0; q < nc; ++q) {
          const double wp[6] = {pfp[0][q], pfp[1][q], pfp[2][q],
                                pfp[3][q], pfp[4][q], pfp[5][q]};
          const double wm[6] = {pfm[0][q], pfm[1][q], pfm[2][q],
                                pfm[3][q], pfm[4][q], pfm[5][q]};
          cf[q] = weno_js_interface(wp, wm, cfg.epsilon);
        }
        fr.unproject(std::span<const double>(cf, static_cast<size_t>(nc)),
                     std::span<double>(out, static_cast<size_t>(nc)));
        for (int c = 0; c < nc; ++c) L.fhat[c][e] = out[c];
      } else {
        double pfp[4][4], pfm[4][4], php[4][4], phm[4][4];
        for (int k = 0; k < 4; ++k) {
          const int slot = e + g - 2 + k;
          for (int c = 0; c < nc; ++c) tmp[c] = L.Fp[c][slot];
          fr.project(tmps, std::span<double>(pfp[k], static_cast<size_t>(nc)));
          for (int c = 0; c < nc; ++c) tmp[c] = L.Fm[c][slot];
          fr.project(tmps, std::span<double>(pfm[k], static_cast<size_t>(nc)));
          for (int c = 0; c < nc; ++c) tmp[c] = L.Hp[c][slot];
          fr.project(tmps, std::span<double>(php[k], static_cast<size_t>(nc)));
          for (int c = 0; c < nc; ++c) tmp[c] = L.Hm[c][slot];
          fr.project(tmps, std::span<double>(phm[k], static_cast<size_t>(nc)));
        }
        for (int q = 0; q < nc; ++q) {
          const double wfp[4] = {pfp[0][q], pfp[1][q], pfp[2][q], pfp[3][q]};
          const double wfm[4] = {pfm[0][q], pfm[1][q], pfm[2][q], pfm[3][q]};
          const double whp[4] = {php[0][q], php[1][q], php[2][q], php[3][q]};
          const double whm[4] = {phm[0][q], phm[1][q], phm[2][q], phm[3][q]};
          const EdgeValue ev = reconstruct_interface(wfp, wfm, whp, whm, L.h, cfg);
          cf[q] = ev.f;
          ch[q] = ev.h;
        }
        fr.unproject(std::span<const double>(cf, static_cast<size_t>(nc)),
                     std::span<double>(out, static_cast<size_t>(nc)));
        for (int c = 0; c < nc; ++c) L.fhat[c][e] = out[c];
        fr.unproject(std::span<const double>(ch, static_cast<size_t>(nc)),
                     std::span<double>(out, static_cast<size_t>(nc)));
        for (int c = 0; c < nc; ++c) L.hhat[c][e] = out[c];
      }
    }

    if (L.mixed && !weno)
      for (int c = 0; c < nc; ++c)
        L.mixhat[c][e] = mixed_edge(L.MIX[c][e + g - 2], L.MIX[c][e + g - 1],
                                    L.MIX[c][e + g], L.MIX[c][e + g + 1]);
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// 1D operators
// ---------------------------------------------------------------------------

/// Spatial residuals for the solution and derivative fields.  The state's
/// ghosts must already be filled.  The reference scheme leaves R.v at zero.
inline void residual_1d(const System& sys, const SchemeConfig& cfg, const Grid1D& g,
                        const HermiteState1D& s, double alpha, HermiteState1D& R,
                        detail::LineData& L) {
  const int n = g.nx, nc = sys.ncomp;
  L.resize(nc, n, false);
  L.h = g.dx;
  L.alpha = alpha;
  for (int c = 0; c < nc; ++c)
    for (int k = 0; k < n + 2 * ghost_width; ++k) {
      L.U[c][k] = s.u[c](k - ghost_width);
      L.D[c][k] = s.v[c](k - ghost_width);
    }
  detail::compute_line_fluxes(sys, cfg, 0, L);
  for (int c = 0; c < nc; ++c)
    for (int i = 0; i < n; ++i) {
      R.u[c](i) = -(L.fhat[c][i + 1] - L.fhat[c][i]) / g.dx;
      R.v[c](i) = -(L.hhat[c][i + 1] - L.hhat[c][i]) / g.dx;
    }
}

inline void residual_1d(const System& sys, const SchemeConfig& cfg, const Grid1D& g,
                        const HermiteState1D& s, double alpha, HermiteState1D& R) {
  detail::LineData L;
  residual_1d(sys, cfg, g, s, alpha, R, L);
}

/// Filtered derivative field used as the anchor of the Runge-Kutta convex
/// combinations.  With the limiter off (or for the reference scheme) this is
/// a plain copy.
inline void limited_derivative_1d(const SchemeConfig& cfg, const Grid1D& g,
                                  const HermiteState1D& s,
                                  std::vector<std::vector<double>>& vt) {
  const int n = g.nx, nc = s.ncomp();
  const bool lim =
      cfg.limiter == LimiterMode::staged && cfg.scheme == Scheme::l_hweno;
  vt.resize(nc);
  for (int c = 0; c < nc; ++c) {
    vt[c].resize(n);
    for (int i = 0; i < n; ++i)
      vt[c][i] = lim ? limit_derivative(s.u[c].ptr(i - 1), s.v[c].ptr(i - 1), g.dx, cfg)
                     : s.v[c](i);
  }
}

/// One strong-stability-preserving RK3 step.  The derivative field entering
/// each convex combination is the limited one; the spatial operators always
/// consume the raw stage derivatives.  `alpha` is held fixed across stages.
inline void rk3_step_1d(const System& sys, const SchemeConfig& cfg, const Grid1D& g,
                        const BoundarySpec1D& bc, HermiteState1D& s, double t,
                        double dt, double alpha) {
  const int n = g.nx, nc = sys.ncomp;
  const int normal = sys.euler ? 1 : -1;
  detail::LineData L;
  auto R = HermiteState1D::make(nc, n);
  std::vector<std::vector<double>> vt0, vt1, vt2;

  HermiteState1D s0 = s;
  apply_boundary(s0, g, bc, t, normal);
  limited_derivative_1d(cfg, g, s0, vt0);
  residual_1d(sys, cfg, g, s0, alpha, R, L);

  auto s1 = HermiteState1D::make(nc, n);
  for (int c = 0; c < nc; ++c)
    for (int i = 0; i < n; ++i) {
      s1.u[c](i) = s0.u[c](i) + dt * R.u[c](i);
      s1.v[c](i) = vt0[c][i] + dt * R.v[c](i);
    }
  apply_boundary(s1, g, bc, t + dt, normal);
  limited_derivative_1d(cfg, g, s1, vt1);
  residual_1d(sys, cfg, g, s1, alpha, R, L);

  auto s2 = HermiteState1D::make(nc, n);
  for (int c = 0; c < nc; ++c)
    for (int i = 0; i < n; ++i) {
      s2.u[c](i) = 0.75 * s0.u[c](i) + 0.25 * (s1.u[c](i) + dt * R.u[c](i));
      s2.v[c](i) = 0.75 * vt0[c][i] + 0.25 * (vt1[c][i] + dt * R.v[c](i));
    }
  apply_boundary(s2, g, bc, t + 0.5 * dt, normal);
  limited_derivative_1d(cfg, g, s2, vt2);
  residual_1d(sys, cfg, g, s2, alpha, R, L);

  const double c1 = 1.0 / 3.0, c2 = 2.0 / 3.0;
  for (int c = 0; c < nc; ++c)
    for (int i = 0; i < n; ++i) {
      s.u[c](i) = c1 * s0.u[c](i) + c2 * (s2.u[c](i) + dt * R.u[c](i));
      s.v[c](i) = c1 * vt0[c][i] + c2 * (vt2[c][i] + dt * R.v[c](i));
    }
}

// ---------------------------------------------------------------------------
// 2D operators
// ---------------------------------------------------------------------------

/// Ghost fill, limited-derivative computation, and both directional sweeps
/// for one Runge-Kutta stage.  The ordering matters around a step corner:
/// the x-direction wall ghosts are filled before anything reads x windows,
/// then overwritten by the y-direction fill before the y work.
inline void stage_ops_2d(const System& sys, const SchemeConfig& cfg, const Grid2D& g,
                         const BoundarySpec2D& bc, const std::optional<StepGeom>& step,
                         HermiteState2D& s, double t_stage, const WaveSpeeds2D& ws,
                         HermiteState2D& R, std::vector<Array2D>& VT,
                         std::vector<Array2D>& WT, detail::LineData& L) {
  const int nx = g.nx, ny = g.ny, nc = sys.ncomp;
  const StepMask mask = StepMask::from(step, g);
  const int ncx = sys.euler ? 1 : -1, ncy = sys.euler ? 2 : -1;
  const bool lim =
      cfg.limiter == LimiterMode::staged && cfg.scheme == Scheme::l_hweno;

  apply_boundary(s, g, bc, t_stage, ncx, ncy);
  if (step) fill_step_ghosts_x(s, g, *step, ncx);

  if (static_cast<int>(VT.size()) != nc) VT.assign(nc, Array2D(nx, ny));
  if (static_cast<int>(WT.size()) != nc) WT.assign(nc, Array2D(nx, ny));

  for (int c = 0; c < nc; ++c)
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) {
        if (lim && !mask.solid(i, j))
          VT[c](i, j) =
              limit_derivative(s.u[c].row_ptr(i - 1, j), s.v[c].row_ptr(i - 1, j),
                               g.dx, cfg);
        else
          VT[c](i, j) = s.v[c](i, j);
      }

  for (int c = 0; c < nc; ++c)
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) {
        R.u[c](i, j) = 0.0;
        R.v[c](i, j) = 0.0;
        R.w[c](i, j) = 0.0;
      }

  // x sweeps: solution flux, derivative flux, and the transverse flux of the
  // y-derivative field
  for (int j = 0; j < ny; ++j) {
    const int ihi = (mask.active && j < mask.fj) ? mask.fi : nx;
    L.resize(nc, ihi, true);
    L.h = g.dx;
    L.alpha = ws.ax;
    for (int c = 0; c < nc; ++c)
      for (int k = 0; k < ihi + 2 * ghost_width; ++k) {
        const int i = k - ghost_width;
        L.U[c][k] = s.u[c](i, j);
        L.D[c][k] = s.v[c](i, j);
        L.T[c][k] = s.w[c](i, j);
      }
    detail::compute_line_fluxes(sys, cfg, 0, L);
    for (int c = 0; c < nc; ++c)
      for (int i = 0; i < ihi; ++i) {
        R.u[c](i, j) -= (L.fhat[c][i + 1] - L.fhat[c][i]) / g.dx;
        R.v[c](i, j) -= (L.hhat[c][i + 1] - L.hhat[c][i]) / g.dx;
        if (cfg.scheme == Scheme::l_hweno)
          R.w[c](i, j) -= (L.mixhat[c][i + 1] - L.mixhat[c][i]) / g.dx;
      }
  }

  if (step) fill_step_ghosts_y(s, g, *step, ncy);

  for (int c = 0; c < nc; ++c)
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) {
        if (lim && !mask.solid(i, j)) {
          const double uw[3] = {s.u[c](i, j - 1), s.u[c](i, j), s.u[c](i, j + 1)};
          const double ww[3] = {s.w[c](i, j - 1), s.w[c](i, j), s.w[c](i, j + 1)};
          WT[c](i, j) = limit_derivative(uw, ww, g.dy, cfg);
        } else {
          WT[c](i, j) = s.w[c](i, j);
        }
      }

  // y sweeps: solution flux, derivative flux of the y field, and the
  // transverse flux of the x-derivative field
  for (int i = 0; i < nx; ++i) {
    const int jlo = (mask.active && i >= mask.fi) ? mask.fj : 0;
    const int nline = ny - jlo;
    L.resize(nc, nline, true);
    L.h = g.dy;
    L.alpha = ws.ay;
    for (int c = 0; c < nc; ++c)
      for (int k = 0; k < nline + 2 * ghost_width; ++k) {
        const int j = jlo + k - ghost_width;
        L.U[c][k] = s.u[c](i, j);
        L.D[c][k] = s.w[c](i, j);
        L.T[c][k] = s.v[c](i, j);
      }
    detail::compute_line_fluxes(sys, cfg, 1, L);
    for (int c = 0; c < nc; ++c)
      for (int k = 0; k < nline; ++k) {
        const int j = jlo + k;
        R.u[c](i, j) -= (L.fhat[c][k + 1] - L.fhat[c][k]) / g.dy;
        R.w[c](i, j) -= (L.hhat[c][k + 1] - L.hhat[c][k]) / g.dy;
        if (cfg.scheme == Scheme::l_hweno)
          R.v[c](i, j) -= (L.mixhat[c][k + 1] - L.mixhat[c][k]) / g.dy;
      }
  }
}

inline void rk3_step_2d(const System& sys, const SchemeConfig& cfg, const Grid2D& g,
                        const BoundarySpec2D& bc, const std::optional<StepGeom>& step,
                        HermiteState2D& s, double t, double dt,
                        const WaveSpeeds2D& ws) {
  const int nx = g.nx, ny = g.ny, nc = sys.ncomp;
  detail::LineData L;
  auto R = HermiteState2D::make(nc, nx, ny);
  std::vector<Array2D> vt0, wt0, vt1, wt1, vt2, wt2;

  HermiteState2D s0 = s;
  stage_ops_2d(sys, cfg, g, bc, step, s0, t, ws, R, vt0, wt0, L);

  auto s1 = HermiteState2D::make(nc, nx, ny);
  for (int c = 0; c < nc; ++c)
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) {
        s1.u[c](i, j) = s0.u[c](i, j) + dt * R.u[c](i, j);
        s1.v[c](i, j) = vt0[c](i, j) + dt * R.v[c](i, j);
        s1.w[c](i, j) = wt0[c](i, j) + dt * R.w[c](i, j);
      }
  stage_ops_2d(sys, cfg, g, bc, step, s1, t + dt, ws, R, vt1, wt1, L);

  auto s2 = HermiteState2D::make(nc, nx, ny);
  for (int c = 0; c < nc; ++c)
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) {
        s2.u[c](i, j) = 0.75 * s0.u[c](i, j) + 0.25 * (s1.u[c](i, j) + dt * R.u[c](i, j));
        s2.v[c](i, j) = 0.75 * vt0[c](i, j) + 0.25 * (vt1[c](i, j) + dt * R.v[c](i, j));
        s2.w[c](i, j) = 0.75 * wt0[c](i, j) + 0.25 * (wt1[c](i, j) + dt * R.w[c](i, j));
      }
  stage_ops_2d(sys, cfg, g, bc, step, s2, t + 0.5 * dt, ws, R, vt2, wt2, L);

  const double c1 = 1.0 / 3.0, c2 = 2.0 / 3.0;
  for (int c = 0; c < nc; ++c)
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) {
        s.u[c](i, j) = c1 * s0.u[c](i, j) + c2 * (s2.u[c](i, j) + dt * R.u[c](i, j));
        s.v[c](i, j) = c1 * vt0[c](i, j) + c2 * (vt2[c](i, j) + dt * R.v[c](i, j));
        s.w[c](i, j) = c1 * wt0[c](i, j) + c2 * (wt2[c](i, j) + dt * R.w[c](i, j));
      }
}

// ---------------------------------------------------------------------------
// Drivers
// ---------------------------------------------------------------------------

struct RunStats {
  long long steps = 0;
  double wall_seconds = 0.0;
  double t_final = 0.0;
};

namespace detail {

inline void require_admissible(const System& sys, const HermiteState1D& s) {
  if (!sys.euler) return;
  double U[3];
  for (int i = 0; i < s.nx(); ++i) {
    for (int c = 0; c < 3; ++c) U[c] = s.u[c](i);
    if (!euler_admissible(std::span<const double>(U, 3), sys.gas))
      throw SolverError("negative density or pressure at i=" + std::to_string(i));
  }
}

inline void require_admissible(const System& sys, const HermiteState2D& s,
                               const StepMask& mask) {
  if (!sys.euler) return;
  double U[4];
  for (int j = 0; j < s.ny(); ++j)
    for (int i = 0; i < s.nx(); ++i) {
      if (mask.solid(i, j)) continue;
      for (int c = 0; c < 4; ++c) U[c] = s.u[c](i, j);
      if (!euler_admissible(std::span<const double>(U, 4), sys.gas))
        throw SolverError("negative density or pressure at i=" + std::to_string(i) +
                          ", j=" + std::to_string(j));
    }
}

}  // namespace detail

inline RunStats advance_1d(
    const System& sys, const SchemeConfig& cfg, const Grid1D& g,
    const BoundarySpec1D& bc, HermiteState1D& s, double t_end,
    double dt_exponent = 1.0, bool positivity = false,
    const std::function<void(HermiteState1D&, const Grid1D&, double)>& post_step = {}) {
  const auto wall0 = std::chrono::steady_clock::now();
  RunStats st;
  double t = 0.0;
  const double t_eps = 1e-12 * std::max(1.0, std::abs(t_end));
  while (t_end - t > t_eps) {
    const double alpha = max_wave_speed_x(sys, s);
    const double dt = compute_dt(alpha, g.dx, cfg.cfl, dt_exponent, t_end - t);
    rk3_step_1d(sys, cfg, g, bc, s, t, dt, alpha);
    t += dt;
    ++st.steps;
    if (post_step) post_step(s, g, t);
    if (positivity) detail::require_admissible(sys, s);
    if (st.steps > 100000000LL) throw SolverError("time-step count exceeds limit");
  }
  st.t_final = t;
  st.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - wall0).count();
  return st;
}

inline RunStats advance_2d(
    const System& sys, const SchemeConfig& cfg, const Grid2D& g,
    const BoundarySpec2D& bc, const std::optional<StepGeom>& step, HermiteState2D& s,
    double t_end, double dt_exponent = 1.0, bool positivity = false,
    const std::function<void(HermiteState2D&, const Grid2D&, double)>& post_step = {}) {
  const auto wall0 = std::chrono::steady_clock::now();
  RunStats st;
  const StepMask mask = StepMask::from(step, g);
  double t = 0.0;
  const double t_eps = 1e-12 * std::max(1.0, std::abs(t_end));
  while (t_end - t > t_eps) {
    const WaveSpeeds2D ws = max_wave_speed_2d(sys, s, mask);
    const double dt = compute_dt(ws, g.dx, g.dy, cfg.cfl, dt_exponent, t_end - t);
    rk3_step_2d(sys, cfg, g, bc, step, s, t, dt, ws);
    t += dt;
    ++st.steps;
    if (post_step) post_step(s, g, t);
    if (positivity) detail::require_admissible(sys, s, mask);
    if (st.steps > 100000000LL) throw SolverError("time-step count exceeds limit");
  }
  st.t_final = t;
  st.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - wall0).count();
  return st;
}

}  // namespace hweno
