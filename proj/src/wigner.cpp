#include "pacat/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "pacat/parallel.hpp"
#include "pacat/special_functions.hpp"

namespace pacat {

namespace {

constexpr double kSupportThreshold = 1e-6;

// Trapezoid weight of node index i on an axis with n nodes.
double trapezoid_weight(int i, int n) { return (i == 0 || i == n - 1) ? 0.5 : 1.0; }

}  // namespace

cplx wigner_cross_kernel(int m, cplx ket, cplx bra, cplx z) {
  if (m < 0) throw DomainError("wigner_cross_kernel: negative photon count");
  const cplx exponent = log_factorial(m) - 0.5 * std::norm(ket) - 0.5 * std::norm(bra) + std::conj(bra) * ket -
                        2.0 * (std::conj(z) - std::conj(bra)) * (z - ket);
  const cplx lag = laguerre(m, (2.0 * std::conj(z) - std::conj(bra)) * (2.0 * z - ket));
  const double sign = m % 2 == 0 ? 1.0 : -1.0;
  return (2.0 / kPi) * sign * std::exp(exponent) * lag;
}

cplx wigner_closed_form_unreduced(const CatParams& params, cplx z) {
  const double norm = normalization(params);
  const int m = params.m();
  const cplx alpha = params.alpha();
  const cplx phase = params.rel_phase_factor();
  const cplx sum = wigner_cross_kernel(m, alpha, alpha, z) + wigner_cross_kernel(m, -alpha, -alpha, z) +
                   std::conj(phase) * wigner_cross_kernel(m, alpha, -alpha, z) +
                   phase * wigner_cross_kernel(m, -alpha, alpha, z);
  return sum / norm;
}

double wigner_closed_form(const CatParams& params, cplx z) { return wigner_closed_form_unreduced(params, z).real(); }

double wigner_fock_oracle(const FockState& state, cplx z, double tail_tol) {
  const FockVector& c = state.amplitudes();
  const int n_state = state.cutoff();
  const double state_norm = c.squaredNorm();
  const double r = std::abs(z);
  const double reach = std::sqrt(static_cast<double>(n_state)) + r;
  int n_out = static_cast<int>(std::ceil(reach * reach + 10.0 * (reach + 1.0) + 10.0));

  for (int attempt = 0; attempt < 4; ++attempt, n_out *= 2) {
    double kept = 0.0;
    double parity_sum = 0.0;
    for (int n = 0; n <= n_out; ++n) {
      cplx b = 0.0;
      for (int p = 0; p <= n_state; ++p) {
        if (c[p] != 0.0) b += displacement_matrix_element(n, p, -z) * c[p];
      }
      const double weight = std::norm(b);
      kept += weight;
      parity_sum += n % 2 == 0 ? weight : -weight;
    }
    if (state_norm - kept <= tail_tol) return (2.0 / kPi) * parity_sum;
  }
  throw CutoffTooSmallError("wigner_fock_oracle: displaced state does not fit the enlarged basis");
}

GridSpec GridSpec::default_for(const CatParams& params) {
  const double half = params.alpha_mag() + 4.0;
  return {-half, half, 201, -half, half, 201};
}

void GridSpec::validate() const {
  if (nx < 2 || np < 2) throw DomainError("grid needs at least 2 nodes per axis");
  if (!(std::isfinite(x_min) && std::isfinite(x_max) && std::isfinite(p_min) && std::isfinite(p_max))) {
    throw DomainError("grid bounds must be finite");
  }
  if (!(x_min < x_max && p_min < p_max)) throw DomainError("grid bounds must be increasing");
}

WignerGrid wigner_grid(const CatParams& params, const GridSpec& spec, int workers) {
  spec.validate();
  normalization(params);
  WignerGrid grid{spec, RowMatrix(spec.np, spec.nx)};
  parallel_for(spec.np, workers, [&](int j) {
    const double p = spec.p(j);
    for (int i = 0; i < spec.nx; ++i) grid.values(j, i) = wigner_closed_form(params, cplx(spec.x(i), p));
  });
  return grid;
}

double grid_integral(const WignerGrid& grid) {
  const GridSpec& s = grid.spec;
  double total = 0.0;
  for (int j = 0; j < s.np; ++j) {
    double row = 0.0;
    for (int i = 0; i < s.nx; ++i) row += trapezoid_weight(i, s.nx) * grid.values(j, i);
    total += trapezoid_weight(j, s.np) * row;
  }
  return total * s.dx() * s.dp();
}

double boundary_max_abs(const WignerGrid& grid) {
  const auto& v = grid.values;
  return std::max({v.row(0).cwiseAbs().maxCoeff(), v.row(v.rows() - 1).cwiseAbs().maxCoeff(),
                   v.col(0).cwiseAbs().maxCoeff(), v.col(v.cols() - 1).cwiseAbs().maxCoeff()});
}

NegativeVolume negative_volume(const WignerGrid& grid) {
  const GridSpec& s = grid.spec;
  double total = 0.0;
  for (int j = 0; j < s.np; ++j) {
    double row = 0.0;
    for (int i = 0; i < s.nx; ++i) row += trapezoid_weight(i, s.nx) * std::max(-grid.values(j, i), 0.0);
    total += trapezoid_weight(j, s.np) * row;
  }
  return {total * s.dx() * s.dp(), boundary_max_abs(grid) < kSupportThreshold};
}

}  // namespace pacat
