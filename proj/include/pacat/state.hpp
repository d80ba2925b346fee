#pragma once

#include <complex>

#include "pacat/core.hpp"

namespace pacat {

/// Parameters of the m-photon-added cat a†^m(|α⟩ + e^{iφ}|−α⟩), α = |α|e^{iϑ}.
///
/// The coherent amplitude is kept as magnitude and phase because the closed
/// forms depend on |α| and ϑ separately. Both phases are reduced to [0, 2π).
class CatParams {
 public:
  CatParams(double alpha_mag, double alpha_phase, double rel_phase, int m);

  static CatParams from_amplitude(cplx alpha, double rel_phase, int m);

  double alpha_mag() const { return alpha_mag_; }
  double alpha_phase() const { return alpha_phase_; }
  double rel_phase() const { return rel_phase_; }
  int m() const { return m_; }

  double alpha_sq() const { return alpha_mag_ * alpha_mag_; }
  cplx alpha() const { return alpha_mag_ * unit_phase(alpha_phase_); }

  /// e^{iφ}, exact at multiples of π/2.
  cplx rel_phase_factor() const { return unit_phase(rel_phase_); }
  double cos_rel_phase() const { return rel_phase_factor().real(); }
  double sin_rel_phase() const { return rel_phase_factor().imag(); }
  /// 1 + cos φ without cancellation near φ = π.
  double one_plus_cos_rel_phase() const;

  CatParams with_m(int m) const { return {alpha_mag_, alpha_phase_, rel_phase_, m}; }

 private:
  double alpha_mag_;
  double alpha_phase_;
  double rel_phase_;
  int m_;
};

/// Bracket L_m(−|α|²) + L_m(|α|²) e^{−2|α|²} cos φ of the normalization, for the
/// degree m given explicitly. Returned without the degeneracy check.
double normalization_bracket(const CatParams& params, int m);

/// Squared norm N_m of the unnormalized state, 2 m! [L_m(−|α|²) + L_m(|α|²)e^{−2|α|²}cos φ].
/// Throws VanishingNormError when the bracket is ≤ 1e−14.
double normalization(const CatParams& params);

/// ln N_m; same error contract as normalization.
double log_normalization(const CatParams& params);

/// Truncated number-basis state. Amplitudes hold c_0..c_N with N = cutoff.
class FockState {
 public:
  FockState(FockVector amplitudes, double tail_mass);

  int cutoff() const { return static_cast<int>(amplitudes_.size()) - 1; }
  const FockVector& amplitudes() const { return amplitudes_; }
  cplx operator[](int n) const { return amplitudes_[n]; }
  double tail_mass() const { return tail_mass_; }
  double norm_squared() const { return amplitudes_.squaredNorm(); }

 private:
  FockVector amplitudes_;
  double tail_mass_;
};

inline constexpr double kDefaultTailTolerance = 1e-10;

/// Photon-number mass above `cutoff` from the closed-form distribution.
double tail_mass_beyond(const CatParams& params, int cutoff);

/// N = m + ⌈|α|² + 10 sqrt(|α|²+1) + 15⌉.
int heuristic_cutoff(const CatParams& params);

/// Smallest N ≥ m with photon-number mass above N below tail_tol.
int choose_cutoff(const CatParams& params, double tail_tol);

/// Expands |±α⟩ in the number basis, superposes with e^{iφ} and applies a† m
/// times. Not normalized; its squared norm approximates N_m.
FockVector build_fock_direct_unnormalized(const CatParams& params, int cutoff);

FockState build_fock_direct(const CatParams& params, int cutoff,
                            double tail_tol = kDefaultTailTolerance);

/// Same state from the binomial sum over displaced number states
/// Σ_p C(m,p) sqrt(p!) [(α*)^{m−p} D(α) + e^{iφ}(−α*)^{m−p} D(−α)] |p⟩.
FockState build_fock_displaced(const CatParams& params, int cutoff,
                               double tail_tol = kDefaultTailTolerance);

/// |⟨a|b⟩|²; the shorter vector is zero-padded.
double fidelity(const FockState& a, const FockState& b);

}  // namespace pacat
