#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hweno {

enum class Scheme { l_hweno, weno_js };

/// How the derivative limiter participates in time stepping.  `staged`
/// filters the derivative field entering each Runge-Kutta convex combination;
/// `off` passes the raw derivatives through (the flux reconstruction is
/// identical in both modes).
enum class LimiterMode { staged, off };

/// Tunable parameters shared by the reconstruction kernels and the limiter.
struct SchemeConfig {
  Scheme scheme = Scheme::l_hweno;
  double cfl = 0.6;
  /// Linear weights of the flux reconstruction candidates (quintic, left
  /// quadratic, right quadratic).  Must be positive and sum to one.
  std::array<double, 3> gamma{0.98, 0.01, 0.01};
  /// Linear weights of the limiter candidates (quartic, left slope, right
  /// slope).  Same constraints as gamma.
  std::array<double, 3> d{0.98, 0.01, 0.01};
  /// Regularization floor added to smoothness indicators.
  double epsilon = 1e-6;
  LimiterMode limiter = LimiterMode::staged;

  void validate() const {
    auto check_weights = [](const std::array<double, 3>& w, const char* name) {
      double sum = 0.0;
      for (double v : w) {
        if (!(v > 0.0)) throw std::invalid_argument(std::string(name) + ": weights must be positive");
        sum += v;
      }
      if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument(std::string(name) + ": weights must sum to 1");
    };
    check_weights(gamma, "gamma");
    check_weights(d, "d");
    if (!(cfl > 0.0 && cfl <= 1.0))
      throw std::invalid_argument("cfl must lie in (0, 1]");
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  }
};

inline std::string to_string(Scheme s) {
  return s == Scheme::l_hweno ? "l-hweno" : "weno-js";
}

inline std::string to_string(LimiterMode m) {
  return m == LimiterMode::staged ? "staged" : "off";
}

inline Scheme scheme_from_string(std::string_view s) {
  if (s == "l-hweno") return Scheme::l_hweno;
  if (s == "weno-js") return Scheme::weno_js;
  throw std::invalid_argument("unknown scheme '" + std::string(s) +
                              "' (expected l-hweno or weno-js)");
}

inline LimiterMode limiter_mode_from_string(std::string_view s) {
  if (s == "staged") return LimiterMode::staged;
  if (s == "off") return LimiterMode::off;
  throw std::invalid_argument("unknown limiter_mode '" + std::string(s) +
                              "' (expected staged or off)");
}

}  // namespace hweno
