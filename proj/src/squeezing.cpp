#include "pacat/squeezing.hpp"

#include <cmath>

#include "pacat/special_functions.hpp"
#include "pacat/statistics.hpp"

namespace pacat {

namespace {

// L_m^{(k)}(−x) + e^{−2x} L_m^{(k)}(x) cos φ
double laguerre_pair(const CatParams& params, int k) {
  const double x = params.alpha_sq();
  const int m = params.m();
  return assoc_laguerre(m, k, -x) + std::exp(-2.0 * x) * assoc_laguerre(m, k, x) * params.cos_rel_phase();
}

// Checked bracket of N_m.
double norm_bracket(const CatParams& params) {
  log_normalization(params);
  return normalization_bracket(params, params.m());
}

template <typename F>
SqueezingVerdict scan_and_refine(F&& f, double period, int scan_points, double benchmark) {
  if (scan_points < 3) throw DomainError("angle scan needs at least 3 points");
  const double step = period / scan_points;
  int best = 0;
  double best_value = f(0.0);
  for (int i = 1; i < scan_points; ++i) {
    const double v = f(i * step);
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }
  double theta = best * step;
  const double refined = detail::golden_section_minimize(f, theta - step, theta + step, 1e-10);
  const double refined_value = f(refined);
  if (refined_value < best_value) {
    theta = refined;
    best_value = refined_value;
  }
  theta = reduce_angle(theta, period);
  return {theta, best_value, best_value < benchmark - kSqueezingMargin};
}

}  // namespace

double quadrature_mean(const CatParams& params, double theta) {
  const double bracket = norm_bracket(params);
  const double x = params.alpha_sq();
  if (x == 0.0) return 0.0;
  return params.alpha_mag() * std::exp(-2.0 * x) * assoc_laguerre(params.m(), 1, x) * params.sin_rel_phase() *
         std::sin(theta + params.alpha_phase()) / bracket;
}

double quadrature_second_moment(const CatParams& params, double theta) {
  const double bracket = norm_bracket(params);
  const double x = params.alpha_sq();
  const double a = antinormal_moment(params, 1);
  // m!|α|²cos 2(θ+ϑ)[...]/N_m + ⟨aa†⟩/2 − 1/4
  return x * std::cos(2.0 * (theta + params.alpha_phase())) * laguerre_pair(params, 2) / (2.0 * bracket) +
         0.5 * a - 0.25;
}

QuadratureReport quadrature_variance(const CatParams& params, double theta) {
  const double mean = quadrature_mean(params, theta);
  const double second = quadrature_second_moment(params, theta);
  return {theta, mean, second, second - mean * mean};
}

SqueezingVerdict min_quadrature_variance(const CatParams& params, int scan_points) {
  norm_bracket(params);
  return scan_and_refine([&](double t) { return quadrature_variance(params, t).variance; }, kPi, scan_points,
                         kVacuumQuadratureVariance);
}

double amplitude_squared_mean(const CatParams& params, double theta) {
  const double bracket = norm_bracket(params);
  const double x = params.alpha_sq();
  // 2 m!|α|²cos(2ϑ+θ)[...]/N_m
  return x * std::cos(2.0 * params.alpha_phase() + theta) * laguerre_pair(params, 2) / bracket;
}

double amplitude_squared_second_moment(const CatParams& params, double theta) {
  const double bracket = norm_bracket(params);
  const double x = params.alpha_sq();
  const double a = antinormal_moment(params, 1);
  const double b = antinormal_moment(params, 2);
  // m!|α|⁴cos(4ϑ+2θ)[...]/N_m + (N_{m+2} − 2N_{m+1} + N_m)/2N_m
  return x * x * std::cos(4.0 * params.alpha_phase() + 2.0 * theta) * laguerre_pair(params, 4) / (2.0 * bracket) +
         0.5 * (b - 2.0 * a + 1.0);
}

QuadratureReport amplitude_squared_variance(const CatParams& params, double theta) {
  const double mean = amplitude_squared_mean(params, theta);
  const double second = amplitude_squared_second_moment(params, theta);
  return {theta, mean, second, second - mean * mean};
}

double amplitude_squared_squeezing(const CatParams& params, double theta) {
  const double variance = amplitude_squared_variance(params, theta).variance;
  return variance - std::abs(mean_photon_number(params) + 0.5);
}

SqueezingVerdict min_amplitude_squared_squeezing(const CatParams& params, int scan_points) {
  norm_bracket(params);
  return scan_and_refine([&](double t) { return amplitude_squared_squeezing(params, t); }, kTwoPi, scan_points, 0.0);
}

}  // namespace pacat
