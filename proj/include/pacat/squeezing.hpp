#pragma once

#include "pacat/state.hpp"

namespace pacat {

/// Moments of a rotated quadrature at angle θ.
struct QuadratureReport {
  double theta;
  double mean;
  double second_moment;
  double variance;
};

/// Result of a minimization over the quadrature angle. `squeezed` compares
/// optimal_value with the benchmark (1/4 for x_θ, 0 for Y(θ)).
struct SqueezingVerdict {
  double optimal_theta;
  double optimal_value;
  bool squeezed;
};

inline constexpr double kVacuumQuadratureVariance = 0.25;
/// Round-off margin below the benchmark before a verdict reports squeezing.
inline constexpr double kSqueezingMargin = 1e-10;

// First-order quadrature x_θ = (a e^{iθ} + a† e^{−iθ}) / 2.

double quadrature_mean(const CatParams& params, double theta);
double quadrature_second_moment(const CatParams& params, double theta);
QuadratureReport quadrature_variance(const CatParams& params, double theta);

/// Scans θ ∈ [0, π) on `scan_points` nodes, refines the best node by golden
/// section to 1e−10 rad. optimal_theta is reported in [0, π).
SqueezingVerdict min_quadrature_variance(const CatParams& params, int scan_points = 720);

// Amplitude-squared quadrature y_θ = (a² e^{iθ} + a†² e^{−iθ}) / 2.

double amplitude_squared_mean(const CatParams& params, double theta);
double amplitude_squared_second_moment(const CatParams& params, double theta);
QuadratureReport amplitude_squared_variance(const CatParams& params, double theta);

/// Y(θ) = (Δy_θ)² − |⟨a†a + 1/2⟩|; negative values signal amplitude-squared squeezing.
double amplitude_squared_squeezing(const CatParams& params, double theta);

/// Scans θ ∈ [0, 2π) and refines; optimal_theta is reported in [0, 2π).
SqueezingVerdict min_amplitude_squared_squeezing(const CatParams& params, int scan_points = 1440);

namespace detail {

/// Golden-section search for a minimum of f on [lo, hi].
template <typename F>
double golden_section_minimize(F&& f, double lo, double hi, double tol) {
  constexpr double inv_phi = 0.6180339887498949;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  while (hi - lo > tol) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

}  // namespace pacat
