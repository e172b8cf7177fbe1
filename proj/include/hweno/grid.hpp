#pragma once

#include <cmath>
#include <stdexcept>

namespace hweno {

/// Number of ghost nodes kept on each side of every array.  Three covers the
/// widest stencil in the code base (the five-point WENO windows shifted one
/// node off the boundary).
inline constexpr int ghost_width = 3;

/// Uniform 1D node grid over [x_min, x_max]; nodes sit at cell centers so
/// that walls and material interfaces fall on the half-index boundaries.
struct Grid1D {
  double x_min = 0.0;
  double x_max = 1.0;
  int nx = 0;
  double dx = 0.0;

  static Grid1D make(double x_min, double x_max, int nx) {
    if (nx < 2 * ghost_width || x_max <= x_min)
      throw std::invalid_argument("Grid1D: need x_max > x_min and nx >= 6");
    return {x_min, x_max, nx, (x_max - x_min) / nx};
  }

  double x(int i) const { return x_min + (i + 0.5) * dx; }
};

/// Uniform 2D tensor grid; indexing is (i, j) with i along x and j along y.
struct Grid2D {
  double x_min = 0.0, x_max = 1.0;
  double y_min = 0.0, y_max = 1.0;
  int nx = 0, ny = 0;
  double dx = 0.0, dy = 0.0;

  static Grid2D make(double x_min, double x_max, double y_min, double y_max,
                     int nx, int ny) {
    if (nx < 2 * ghost_width || ny < 2 * ghost_width || x_max <= x_min ||
        y_max <= y_min)
      throw std::invalid_argument("Grid2D: bad extents or resolution");
    return {x_min, x_max, y_min, y_max, nx, ny,
            (x_max - x_min) / nx, (y_max - y_min) / ny};
  }

  double x(int i) const { return x_min + (i + 0.5) * dx; }
  double y(int j) const { return y_min + (j + 0.5) * dy; }
};

}  // namespace hweno
