#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>

#include "hweno/grid.hpp"
#include "hweno/state.hpp"

namespace hweno {

enum class BCKind { periodic, reflective, outflow, dirichlet };

/// Conserved-state prescription used by dirichlet sides; evaluated at the
/// ghost node's own coordinates (y is ignored in 1D).
using BoundaryStateFn =
    std::function<void(double x, double y, double t, std::span<double> u)>;

/// Boundary rule for one side of the domain.
struct SideBC {
  BCKind kind = BCKind::outflow;
  BoundaryStateFn state;  ///< dirichlet only; ghost derivative data are zero

  static SideBC periodic() { return {BCKind::periodic, {}}; }
  static SideBC reflective() { return {BCKind::reflective, {}}; }
  static SideBC outflow() { return {BCKind::outflow, {}}; }
  static SideBC dirichlet(BoundaryStateFn f) { return {BCKind::dirichlet, std::move(f)}; }
};

struct BoundarySpec1D {
  SideBC left, right;
};

/// One side of a 2D domain; the rule may vary along the boundary (kind_fn
/// receives the transverse coordinate of the line being filled).
struct Side2D {
  SideBC bc;
  std::function<BCKind(double coord)> kind_fn;

  BCKind kind(double coord) const { return kind_fn ? kind_fn(coord) : bc.kind; }
  static Side2D uniform(SideBC b) { return {std::move(b), {}}; }
};

struct BoundarySpec2D {
  Side2D left, right, bottom, top;
};

/// Rectangular notch removed from the lower-right of a 2D domain: cells with
/// x > x_face and y < y_face are solid.  Both faces must coincide with grid
/// lines.
struct StepGeom {
  double x_face = 0.0, y_face = 0.0;

  int i_face(const Grid2D& g) const {
    return aligned_index(x_face - g.x_min, g.dx, "x_face");
  }
  int j_face(const Grid2D& g) const {
    return aligned_index(y_face - g.y_min, g.dy, "y_face");
  }

 private:
  static int aligned_index(double offset, double h, const char* what) {
    const double r = offset / h;
    const int k = static_cast<int>(std::lround(r));
    if (std::abs(r - k) > 1e-9)
      throw std::invalid_argument(std::string("StepGeom: ") + what +
                                  " does not lie on a grid line");
    return k;
  }
};

namespace detail {

/// Mirror sign of one component across a wall.  `axis` is the wall normal
/// (0 = x, 1 = y); `deriv_axis` identifies the field (-1 for the solution,
/// 0 for d/dx data, 1 for d/dy data).  The normal momentum flips sign, and a
/// derivative taken along the wall normal flips the parity of its component.
inline double mirror_sign(int comp, int normal_comp, int axis, int deriv_axis) {
  double s = (comp == normal_comp) ? -1.0 : 1.0;
  if (deriv_axis == axis) s = -s;
  return s;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// 1D ghost fill
// ---------------------------------------------------------------------------

/// Fills all ghost nodes of a 1D state.  `normal_comp` is the index of the
/// momentum component normal to walls (-1 when no component flips, e.g.
/// scalar problems).  Throws SolverError if the interior is not finite.
inline void apply_boundary(HermiteState1D& s, const Grid1D& g,
                           const BoundarySpec1D& bc, double t,
                           int normal_comp = -1) {
  if ((bc.left.kind == BCKind::periodic) != (bc.right.kind == BCKind::periodic))
    throw std::invalid_argument("apply_boundary: periodic sides must pair up");
  require_finite(s, "apply_boundary");

  const int n = s.nx();
  const int nc = s.ncomp();
  std::vector<double> ghost(nc);

  for (int k = 0; k < ghost_width; ++k) {
    for (int side = 0; side < 2; ++side) {
      const SideBC& rule = side == 0 ? bc.left : bc.right;
      const int gi = side == 0 ? -1 - k : n + k;      // ghost index
      const int mi = side == 0 ? k : n - 1 - k;       // mirrored interior
      const int pi = side == 0 ? n - 1 - k : k;       // periodic partner
      const int ei = side == 0 ? 0 : n - 1;           // extrapolation source
      switch (rule.kind) {
        case BCKind::periodic:
          for (int c = 0; c < nc; ++c) {
            s.u[c](gi) = s.u[c](pi);
            s.v[c](gi) = s.v[c](pi);
          }
          break;
        case BCKind::reflective:
          for (int c = 0; c < nc; ++c) {
            s.u[c](gi) = detail::mirror_sign(c, normal_comp, 0, -1) * s.u[c](mi);
            s.v[c](gi) = detail::mirror_sign(c, normal_comp, 0, 0) * s.v[c](mi);
          }
          break;
        case BCKind::outflow:
          for (int c = 0; c < nc; ++c) {
            s.u[c](gi) = s.u[c](ei);
            s.v[c](gi) = s.v[c](ei);
          }
          break;
        case BCKind::dirichlet:
          rule.state(g.x(gi), 0.0, t, ghost);
          for (int c = 0; c < nc; ++c) {
            s.u[c](gi) = ghost[c];
            s.v[c](gi) = 0.0;
          }
          break;
      }
    }
  }
}

// ---------------------------------------------------------------------------
// 2D ghost fill
// ---------------------------------------------------------------------------

/// Fills the face ghosts of a 2D state (corner ghosts are never read by the
/// dimension-by-dimension sweeps and stay untouched).  `normal_comp_x/y` name
/// the momentum components normal to x/y walls.  Internal step-wall ghosts
/// are filled separately right before each sweep direction.
inline void apply_boundary(HermiteState2D& s, const Grid2D& g,
                           const BoundarySpec2D& bc, double t,
                           int normal_comp_x = -1, int normal_comp_y = -1) {
  const bool px = bc.left.bc.kind == BCKind::periodic;
  const bool py = bc.bottom.bc.kind == BCKind::periodic;
  if (px != (bc.right.bc.kind == BCKind::periodic) ||
      py != (bc.top.bc.kind == BCKind::periodic))
    throw std::invalid_argument("apply_boundary: periodic sides must pair up");
  require_finite(s, "apply_boundary");

  const int nx = s.nx(), ny = s.ny(), nc = s.ncomp();
  std::vector<double> ghost(nc);

  // x faces, one row at a time
  for (int j = 0; j < ny; ++j) {
    for (int k = 0; k < ghost_width; ++k) {
      for (int side = 0; side < 2; ++side) {
        const Side2D& sd = side == 0 ? bc.left : bc.right;
        const BCKind kind = sd.kind(g.y(j));
        const int gi = side == 0 ? -1 - k : nx + k;
        const int mi = side == 0 ? k : nx - 1 - k;
        const int pi = side == 0 ? nx - 1 - k : k;
        const int ei = side == 0 ? 0 : nx - 1;
        switch (kind) {
          case BCKind::periodic:
            for (int c = 0; c < nc; ++c) {
              s.u[c](gi, j) = s.u[c](pi, j);
              s.v[c](gi, j) = s.v[c](pi, j);
              s.w[c](gi, j) = s.w[c](pi, j);
            }
            break;
          case BCKind::reflective:
            for (int c = 0; c < nc; ++c) {
              s.u[c](gi, j) = detail::mirror_sign(c, normal_comp_x, 0, -1) * s.u[c](mi, j);
              s.v[c](gi, j) = detail::mirror_sign(c, normal_comp_x, 0, 0) * s.v[c](mi, j);
              s.w[c](gi, j) = detail::mirror_sign(c, normal_comp_x, 0, 1) * s.w[c](mi, j);
            }
            break;
          case BCKind::outflow:
            for (int c = 0; c < nc; ++c) {
              s.u[c](gi, j) = s.u[c](ei, j);
              s.v[c](gi, j) = s.v[c](ei, j);
              s.w[c](gi, j) = s.w[c](ei, j);
            }
            break;
          case BCKind::dirichlet:
            sd.bc.state(g.x(gi), g.y(j), t, ghost);
            for (int c = 0; c < nc; ++c) {
              s.u[c](gi, j) = ghost[c];
              s.v[c](gi, j) = 0.0;
              s.w[c](gi, j) = 0.0;
            }
            break;
        }
      }
    }
  }

  // y faces, one column at a time
  for (int i = 0; i < nx; ++i) {
    for (int k = 0; k < ghost_width; ++k) {
      for (int side = 0; side < 2; ++side) {
        const Side2D& sd = side == 0 ? bc.bottom : bc.top;
        const BCKind kind = sd.kind(g.x(i));
        const int gj = side == 0 ? -1 - k : ny + k;
        const int mj = side == 0 ? k : ny - 1 - k;
        const int pj = side == 0 ? ny - 1 - k : k;
        const int ej = side == 0 ? 0 : ny - 1;
        switch (kind) {
          case BCKind::periodic:
            for (int c = 0; c < nc; ++c) {
              s.u[c](i, gj) = s.u[c](i, pj);
              s.v[c](i, gj) = s.v[c](i, pj);
              s.w[c](i, gj) = s.w[c](i, pj);
            }
            break;
          case BCKind::reflective:
            for (int c = 0; c < nc; ++c) {
              s.u[c](i, gj) = detail::mirror_sign(c, normal_comp_y, 1, -1) * s.u[c](i, mj);
              s.v[c](i, gj) = detail::mirror_sign(c, normal_comp_y, 1, 0) * s.v[c](i, mj);
              s.w[c](i, gj) = detail::mirror_sign(c, normal_comp_y, 1, 1) * s.w[c](i, mj);
            }
            break;
          case BCKind::outflow:
            for (int c = 0; c < nc; ++c) {
              s.u[c](i, gj) = s.u[c](i, ej);
              s.v[c](i, gj) = s.v[c](i, ej);
              s.w[c](i, gj) = s.w[c](i, ej);
            }
            break;
          case BCKind::dirichlet:
            sd.bc.state(g.x(i), g.y(gj), t, ghost);
            for (int c = 0; c < nc; ++c) {
              s.u[c](i, gj) = ghost[c];
              s.v[c](i, gj) = 0.0;
              s.w[c](i, gj) = 0.0;
            }
            break;
        }
      }
    }
  }
}

/// Reflective fill of the step's vertical wall (x = x_face) into the solid
/// region, for the rows below the step surface.  Call before x-direction
/// stencil work.
inline void fill_step_ghosts_x(HermiteState2D& s, const Grid2D& g,
                               const StepGeom& step, int normal_comp_x) {
  const int fi = step.i_face(g), fj = step.j_face(g), nc = s.ncomp();
  for (int j = -ghost_width; j < fj; ++j)
    for (int k = 0; k < ghost_width; ++k)
      for (int c = 0; c < nc; ++c) {
        s.u[c](fi + k, j) = detail::mirror_sign(c, normal_comp_x, 0, -1) * s.u[c](fi - 1 - k, j);
        s.v[c](fi + k, j) = detail::mirror_sign(c, normal_comp_x, 0, 0) * s.v[c](fi - 1 - k, j);
        s.w[c](fi + k, j) = detail::mirror_sign(c, normal_comp_x, 0, 1) * s.w[c](fi - 1 - k, j);
      }
}

/// Reflective fill of the step's horizontal wall (y = y_face) into the solid
/// region, for the columns right of the corner.  Call before y-direction
/// stencil work.
inline void fill_step_ghosts_y(HermiteState2D& s, const Grid2D& g,
                               const StepGeom& step, int normal_comp_y) {
  const int fi = step.i_face(g), fj = step.j_face(g), nc = s.ncomp();
  for (int i = fi; i < s.nx() + ghost_width; ++i)
    for (int k = 0; k < ghost_width; ++k)
      for (int c = 0; c < nc; ++c) {
        s.u[c](i, fj - 1 - k) = detail::mirror_sign(c, normal_comp_y, 1, -1) * s.u[c](i, fj + k);
        s.v[c](i, fj - 1 - k) = detail::mirror_sign(c, normal_comp_y, 1, 0) * s.v[c](i, fj + k);
        s.w[c](i, fj - 1 - k) = detail::mirror_sign(c, normal_comp_y, 1, 1) * s.w[c](i, fj + k);
      }
}

}  // namespace hweno
