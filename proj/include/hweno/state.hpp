#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "hweno/grid.hpp"

namespace hweno {

/// Runtime failure of the numerical solve (NaN data, inadmissible state, ...).
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// 1D value array with ghost_width ghost nodes on each side.  Interior
/// indices run over [0, n); any index in [-ghost_width, n + ghost_width) is
/// addressable.
class Array1D {
 public:
  Array1D() = default;
  explicit Array1D(int n) : n_(n), data_(n + 2 * ghost_width, 0.0) {}

  int n() const { return n_; }
  double& operator()(int i) { return data_[i + ghost_width]; }
  double operator()(int i) const { return data_[i + ghost_width]; }
  /// Pointer positioned at logical index i (valid for window reads).
  const double* ptr(int i) const { return data_.data() + (i + ghost_width); }
  double* ptr(int i) { return data_.data() + (i + ghost_width); }

 private:
  int n_ = 0;
  std::vector<double> data_;
};

/// 2D value array with ghost nodes on all sides; x is the fast axis so a row
/// (fixed j) is contiguous and can be handed to 1D window kernels directly.
class Array2D {
 public:
  Array2D() = default;
  Array2D(int nx, int ny)
      : nx_(nx), ny_(ny), stride_(nx + 2 * ghost_width),
        data_(static_cast<size_t>(stride_) * (ny + 2 * ghost_width), 0.0) {}

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double& operator()(int i, int j) { return data_[index(i, j)]; }
  double operator()(int i, int j) const { return data_[index(i, j)]; }
  const double* row_ptr(int i, int j) const { return data_.data() + index(i, j); }

 private:
  size_t index(int i, int j) const {
    return static_cast<size_t>(j + ghost_width) * stride_ + (i + ghost_width);
  }
  int nx_ = 0, ny_ = 0, stride_ = 0;
  std::vector<double> data_;
};

/// Solution plus first-derivative field per component, 1D.
struct HermiteState1D {
  std::vector<Array1D> u;  ///< point values
  std::vector<Array1D> v;  ///< d/dx point values

  static HermiteState1D make(int ncomp, int nx) {
    HermiteState1D s;
    s.u.assign(ncomp, Array1D(nx));
    s.v.assign(ncomp, Array1D(nx));
    return s;
  }
  int ncomp() const { return static_cast<int>(u.size()); }
  int nx() const { return u.empty() ? 0 : u[0].n(); }
};

/// Solution plus both first-derivative fields per component, 2D.
struct HermiteState2D {
  std::vector<Array2D> u;  ///< point values
  std::vector<Array2D> v;  ///< d/dx point values
  std::vector<Array2D> w;  ///< d/dy point values

  static HermiteState2D make(int ncomp, int nx, int ny) {
    HermiteState2D s;
    s.u.assign(ncomp, Array2D(nx, ny));
    s.v.assign(ncomp, Array2D(nx, ny));
    s.w.assign(ncomp, Array2D(nx, ny));
    return s;
  }
  int ncomp() const { return static_cast<int>(u.size()); }
  int nx() const { return u.empty() ? 0 : u[0].nx(); }
  int ny() const { return u.empty() ? 0 : u[0].ny(); }
};

inline void require_finite(const HermiteState1D& s, const char* where) {
  for (int c = 0; c < s.ncomp(); ++c)
    for (int i = 0; i < s.nx(); ++i)
      if (!std::isfinite(s.u[c](i)) || !std::isfinite(s.v[c](i)))
        throw SolverError(std::string(where) + ": non-finite value at component " +
                          std::to_string(c) + ", i=" + std::to_string(i));
}

inline void require_finite(const HermiteState2D& s, const char* where) {
  for (int c = 0; c < s.ncomp(); ++c)
    for (int j = 0; j < s.ny(); ++j)
      for (int i = 0; i < s.nx(); ++i)
        if (!std::isfinite(s.u[c](i, j)) || !std::isfinite(s.v[c](i, j)) ||
            !std::isfinite(s.w[c](i, j)))
          throw SolverError(std::string(where) + ": non-finite value at component " +
                            std::to_string(c) + ", i=" + std::to_string(i) +
                            ", j=" + std::to_string(j));
}

}  // namespace hweno
