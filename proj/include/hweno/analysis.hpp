#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hweno/problem.hpp"
#include "hweno/solver.hpp"

namespace hweno {

// ---------------------------------------------------------------------------
// Error norms against an exact solution.  The L1 norm is the node average of
// the absolute error; Linf is the node maximum.  For systems the comparison
// component defaults to the first (density for gas dynamics).
// ---------------------------------------------------------------------------

struct ErrorNorms {
  double l1 = 0.0;
  double linf = 0.0;
};

inline ErrorNorms error_norms(const Problem1D& P, const Grid1D& g,
                              const HermiteState1D& s, double t, int comp = 0) {
  if (!P.exact) throw std::runtime_error(P.name + ": no exact solution available");
  std::vector<double> ue(P.system.ncomp);
  ErrorNorms n;
  for (int i = 0; i < g.nx; ++i) {
    P.exact(g.x(i), t, ue);
    const double e = std::abs(s.u[comp](i) - ue[comp]);
    n.l1 += e;
    n.linf = std::max(n.linf, e);
  }
  n.l1 /= g.nx;
  return n;
}

inline ErrorNorms error_norms(const Problem2D& P, const Grid2D& g,
                              const HermiteState2D& s, double t, int comp = 0) {
  if (!P.exact) throw std::runtime_error(P.name + ": no exact solution available");
  std::vector<double> ue(P.system.ncomp);
  ErrorNorms n;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      P.exact(g.x(i), g.y(j), t, ue);
      const double e = std::abs(s.u[comp](i, j) - ue[comp]);
      n.l1 += e;
      n.linf = std::max(n.linf, e);
    }
  n.l1 /= static_cast<double>(g.nx) * g.ny;
  return n;
}

// ---------------------------------------------------------------------------
// Grid-refinement studies
// ---------------------------------------------------------------------------

struct ConvergenceRow {
  int n = 0;  ///< cells per direction
  double l1 = std::numeric_limits<double>::quiet_NaN();
  double linf = std::numeric_limits<double>::quiet_NaN();
  double order_l1 = std::numeric_limits<double>::quiet_NaN();
  double order_linf = std::numeric_limits<double>::quiet_NaN();
  double wall_seconds = 0.0;
  long long steps = 0;
};

namespace detail {

inline void fill_orders(std::vector<ConvergenceRow>& rows) {
  for (size_t k = 1; k < rows.size(); ++k) {
    const double r = std::log(static_cast<double>(rows[k].n) / rows[k - 1].n);
    rows[k].order_l1 = std::log(rows[k - 1].l1 / rows[k].l1) / r;
    rows[k].order_linf = std::log(rows[k - 1].linf / rows[k].linf) / r;
  }
}

}  // namespace detail

inline std::vector<ConvergenceRow> convergence_study_1d(const Problem1D& P,
                                                        const SchemeConfig& cfg,
                                                        std::span<const int> resolutions,
                                                        double dt_exponent = 1.0,
                                                        int comp = 0) {
  std::vector<ConvergenceRow> rows;
  for (const int n : resolutions) {
    ConvergenceRow row;
    row.n = n;
    try {
      const Grid1D g = Grid1D::make(P.x_min, P.x_max, n);
      HermiteState1D s = init_state(P, g);
      const RunStats st =
          advance_1d(P.system, cfg, g, P.bc, s, P.t_end, dt_exponent, P.positivity,
                     P.post_step);
      const ErrorNorms e = error_norms(P, g, s, st.t_final, comp);
      row.l1 = e.l1;
      row.linf = e.linf;
      row.wall_seconds = st.wall_seconds;
      row.steps = st.steps;
    } catch (const SolverError&) {
      // leave the error entries NaN; the row still reports the resolution
    }
    rows.push_back(row);
  }
  detail::fill_orders(rows);
  return rows;
}

inline std::vector<ConvergenceRow> convergence_study_2d(const Problem2D& P,
                                                        const SchemeConfig& cfg,
                                                        std::span<const int> resolutions,
                                                        double dt_exponent = 1.0,
                                                        int comp = 0) {
  std::vector<ConvergenceRow> rows;
  for (const int n : resolutions) {
    ConvergenceRow row;
    row.n = n;
    try {
      const Grid2D g = Grid2D::make(P.x_min, P.x_max, P.y_min, P.y_max, n, n);
      HermiteState2D s = init_state(P, g);
      const RunStats st =
          advance_2d(P.system, cfg, g, P.bc, P.step, s, P.t_end, dt_exponent,
                     P.positivity, P.post_step);
      const ErrorNorms e = error_norms(P, g, s, st.t_final, comp);
      row.l1 = e.l1;
      row.linf = e.linf;
      row.wall_seconds = st.wall_seconds;
      row.steps = st.steps;
    } catch (const SolverError&) {
      // leave the error entries NaN
    }
    rows.push_back(row);
  }
  detail::fill_orders(rows);
  return rows;
}

// ---------------------------------------------------------------------------
// Comparison against a fine-grid reference run (for problems without a
// closed-form solution).  Both grids must be uniform over the same interval;
// the reference is restricted to the coarse nodes by nearest-node sampling,
// averaging the two straddling nodes when a coarse node falls exactly on a
// reference cell face.
// ---------------------------------------------------------------------------

inline double l1_distance_to_reference(std::span<const double> xs,
                                       std::span<const double> us,
                                       std::span<const double> xs_ref,
                                       std::span<const double> us_ref) {
  if (xs.size() != us.size() || xs_ref.size() != us_ref.size() || xs_ref.size() < 2 ||
      xs.empty())
    throw std::runtime_error("reference comparison: bad table sizes");
  const double dxr = xs_ref[1] - xs_ref[0];
  const int nref = static_cast<int>(xs_ref.size());
  double acc = 0.0;
  for (size_t k = 0; k < xs.size(); ++k) {
    const double pos = (xs[k] - xs_ref[0]) / dxr;
    const double lo = std::floor(pos);
    const double fr = pos - lo;
    const int ilo = std::clamp(static_cast<int>(lo), 0, nref - 1);
    const int ihi = std::clamp(static_cast<int>(lo) + 1, 0, nref - 1);
    double ref;
    if (std::abs(fr - 0.5) < 1e-9)
      ref = 0.5 * (us_ref[ilo] + us_ref[ihi]);
    else
      ref = fr < 0.5 ? us_ref[ilo] : us_ref[ihi];
    acc += std::abs(us[k] - ref);
  }
  return acc / static_cast<double>(xs.size());
}

}  // namespace hweno
