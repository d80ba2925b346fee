#pragma once

#include "pacat/state.hpp"

namespace pacat {

// Phase-space convention: z = x + i p, W(z) = (2/π) Tr[ρ D(z) Π D(z)†], so the
// vacuum peaks at 2/π, ∫W dx dp = 1 and the x marginal is the distribution of
// x_0 = (a + a†)/2.

inline constexpr double kWignerBound = 2.0 / kPi;

/// Wigner transform of the operator a†^m |ket⟩⟨bra| a^m for coherent |ket⟩, |bra⟩:
///   (2/π) (−1)^m m! ⟨bra|ket⟩ e^{−2(z* − bra*)(z − ket)} L_m((2z* − bra*)(2z − ket)).
/// All exponents are combined before a single exponentiation.
cplx wigner_cross_kernel(int m, cplx ket, cplx bra, cplx z);

/// N_m^{-1} [W_{++} + W_{−−} + e^{−iφ} W_{+−} + e^{iφ} W_{−+}] before the
/// imaginary round-off is discarded.
cplx wigner_closed_form_unreduced(const CatParams& params, cplx z);

double wigner_closed_form(const CatParams& params, cplx z);

/// (2/π) Σ_n (−1)^n |⟨n|D(−z)|ψ⟩|². The displaced basis is enlarged until the
/// displaced state holds all but `tail_tol` of its norm; throws
/// CutoffTooSmallError if that fails.
double wigner_fock_oracle(const FockState& state, cplx z, double tail_tol = 1e-10);

/// Rectangular phase-space box with nx × np nodes (endpoints included).
struct GridSpec {
  double x_min;
  double x_max;
  int nx;
  double p_min;
  double p_max;
  int np;

  /// 201 × 201 over [−(|α|+4), |α|+4]².
  static GridSpec default_for(const CatParams& params);
  void validate() const;
  double x(int i) const { return x_min + (x_max - x_min) * i / (nx - 1); }
  double p(int j) const { return p_min + (p_max - p_min) * j / (np - 1); }
  double dx() const { return (x_max - x_min) / (nx - 1); }
  double dp() const { return (p_max - p_min) / (np - 1); }
};

/// W sampled on a GridSpec; values(j, i) = W(x_i + i p_j).
struct WignerGrid {
  GridSpec spec;
  RowMatrix values;
};

/// Evaluates the closed form at every node. Rows are distributed over
/// `workers` threads; the result does not depend on the worker count.
WignerGrid wigner_grid(const CatParams& params, const GridSpec& spec, int workers = 1);

/// Trapezoid-rule integral of W over the box.
double grid_integral(const WignerGrid& grid);

/// Largest |W| on the boundary of the box.
double boundary_max_abs(const WignerGrid& grid);

struct NegativeVolume {
  double value;
  /// False when the boundary carries |W| ≥ 1e−6, i.e. the box clips the state.
  bool support_covered;
};

/// Trapezoid-rule ∫∫ max(−W, 0) dx dp.
NegativeVolume negative_volume(const WignerGrid& grid);

}  // namespace pacat
