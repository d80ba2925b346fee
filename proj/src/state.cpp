#include "pacat/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "pacat/special_functions.hpp"
#include "pacat/statistics.hpp"

namespace pacat {

namespace {

constexpr double kDegenerateBracket = 1e-14;

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string("CatParams: non-finite ") + what);
}

// L_m(−x) − L_m(x) = 2 Σ_{k odd} C(m,k) x^k / k!, all terms positive.
double laguerre_odd_difference(int m, double x) {
  double sum = 0.0;
  for (int k = 1; k <= m; k += 2) {
    const double log_term = log_factorial(m) - log_factorial(k) - log_factorial(m - k) -
                            log_factorial(k) + k * std::log(x);
    sum += std::exp(log_term);
  }
  return 2.0 * sum;
}

void check_cutoff(const CatParams& params, int cutoff) {
  if (cutoff < params.m()) {
    throw CutoffTooSmallError("cutoff " + std::to_string(cutoff) +
                              " is below the added-photon count " + std::to_string(params.m()));
  }
}

double checked_tail(const CatParams& params, int cutoff, double tail_tol) {
  const double tail = tail_mass_beyond(params, cutoff);
  if (tail > tail_tol) {
    throw CutoffTooSmallError("cutoff " + std::to_string(cutoff) + " leaves tail mass " +
                              std::to_string(tail) + " above tolerance");
  }
  return tail;
}

FockState normalized(FockVector v, double tail) {
  const double norm = v.norm();
  if (!(norm > 0.0)) throw VanishingNormError("constructed state has zero norm");
  v /= norm;
  return {std::move(v), tail};
}

cplx ipow(cplx base, int exponent) {
  cplx result(1.0, 0.0);
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace

CatParams::CatParams(double alpha_mag, double alpha_phase, double rel_phase, int m)
    : alpha_mag_(alpha_mag), alpha_phase_(0), rel_phase_(0), m_(m) {
  require_finite(alpha_mag, "amplitude");
  require_finite(alpha_phase, "amplitude phase");
  require_finite(rel_phase, "relative phase");
  if (alpha_mag < 0) throw DomainError("CatParams: negative amplitude magnitude");
  if (m < 0) throw DomainError("CatParams: negative added-photon count");
  alpha_phase_ = reduce_angle(alpha_phase);
  rel_phase_ = reduce_angle(rel_phase);
}

CatParams CatParams::from_amplitude(cplx alpha, double rel_phase, int m) {
  return {std::abs(alpha), std::arg(alpha), rel_phase, m};
}

double CatParams::one_plus_cos_rel_phase() const {
  const cplx u = rel_phase_factor();
  if (u.imag() == 0.0) return 1.0 + u.real();
  const double c = std::cos(0.5 * rel_phase_);
  return 2.0 * c * c;
}

double normalization_bracket(const CatParams& params, int m) {
  const double x = params.alpha_sq();
  if (x == 0.0) return 1.0 + params.cos_rel_phase();
  // L_m(−x) + L_m(x)e^{−2x}cos φ
  //   = [L_m(−x) − L_m(x)] − L_m(x) expm1(−2x) + L_m(x) e^{−2x} (1 + cos φ)
  const double lx = laguerre(m, x);
  return laguerre_odd_difference(m, x) - lx * std::expm1(-2.0 * x) +
         lx * std::exp(-2.0 * x) * params.one_plus_cos_rel_phase();
}

double log_normalization(const CatParams& params) {
  const double bracket = normalization_bracket(params, params.m());
  if (!(bracket > kDegenerateBracket)) {
    throw VanishingNormError("vanishing norm: the superposition is degenerate at this parameter point");
  }
  return std::log(2.0) + log_factorial(params.m()) + std::log(bracket);
}

double normalization(const CatParams& params) { return std::exp(log_normalization(params)); }

FockState::FockState(FockVector amplitudes, double tail_mass)
    : amplitudes_(std::move(amplitudes)), tail_mass_(tail_mass) {
  if (amplitudes_.size() == 0) throw DomainError("FockState: empty amplitude vector");
}

double tail_mass_beyond(const CatParams& params, int cutoff) {
  // Terms fall off faster than geometrically past the bulk; stop after two
  // consecutive negligible terms (parity zeros alternate with nonzero ones).
  const int bulk = heuristic_cutoff(params);
  const int limit = 64 * bulk + 1024;
  double tail = 0.0;
  int quiet = 0;
  for (int n = std::max(cutoff + 1, params.m()); n < limit; ++n) {
    const double p = photon_probability(params, n);
    tail += p;
    if (n > bulk && p <= 1e-30 * tail) {
      if (++quiet >= 2) break;
    } else {
      quiet = 0;
    }
  }
  return tail;
}

int heuristic_cutoff(const CatParams& params) {
  const double x = params.alpha_sq();
  return params.m() + static_cast<int>(std::ceil(x + 10.0 * std::sqrt(x + 1.0) + 15.0));
}

int choose_cutoff(const CatParams& params, double tail_tol) {
  if (!(tail_tol > 0.0 && tail_tol < 1.0)) throw DomainError("choose_cutoff: tolerance must lie in (0, 1)");
  normalization(params);
  // Suffix sums from a point well past the bulk; the mass beyond it is
  // accumulated once by tail_mass_beyond.
  int top = 2 * heuristic_cutoff(params);
  std::vector<double> probs(top + 1, 0.0);
  for (int n = params.m(); n <= top; ++n) probs[n] = photon_probability(params, n);
  double suffix = tail_mass_beyond(params, top);
  int chosen = top;
  for (int n = top; n >= params.m(); --n) {
    if (suffix < tail_tol) chosen = n;
    else break;
    suffix += probs[n];
  }
  return std::max(chosen, params.m());
}

FockVector build_fock_direct_unnormalized(const CatParams& params, int cutoff) {
  check_cutoff(params, cutoff);
  const int m = params.m();
  const int core = cutoff - m;
  const double r = params.alpha_mag();
  const cplx phase_factor = params.rel_phase_factor();

  // |α⟩ + e^{iφ}|−α⟩ up to n = cutoff − m
  FockVector v = FockVector::Zero(cutoff + 1);
  for (int n = 0; n <= core; ++n) {
    const cplx superposition = 1.0 + (n % 2 == 0 ? phase_factor : -phase_factor);
    if (superposition == 0.0) continue;
    double magnitude;
    if (r == 0.0) {
      if (n > 0) break;
      magnitude = 1.0;
    } else {
      magnitude = std::exp(-0.5 * params.alpha_sq() + n * std::log(r) - 0.5 * log_factorial(n));
    }
    v[n] = magnitude * unit_phase(reduce_angle(n * params.alpha_phase())) * superposition;
  }
  // a†: c_n ← sqrt(n) c_{n−1}
  for (int k = 0; k < m; ++k) {
    for (int n = cutoff; n >= 1; --n) v[n] = std::sqrt(static_cast<double>(n)) * v[n - 1];
    v[0] = 0.0;
  }
  return v;
}

FockState build_fock_direct(const CatParams& params, int cutoff, double tail_tol) {
  normalization(params);
  check_cutoff(params, cutoff);
  const double tail = checked_tail(params, cutoff, tail_tol);
  return normalized(build_fock_direct_unnormalized(params, cutoff), tail);
}

FockState build_fock_displaced(const CatParams& params, int cutoff, double tail_tol) {
  normalization(params);
  check_cutoff(params, cutoff);
  const double tail = checked_tail(params, cutoff, tail_tol);

  const int m = params.m();
  const cplx alpha = params.alpha();
  const cplx phase_factor = params.rel_phase_factor();
  FockVector v = FockVector::Zero(cutoff + 1);
  for (int p = 0; p <= m; ++p) {
    const double weight =
        std::exp(log_factorial(m) - log_factorial(p) - log_factorial(m - p) + 0.5 * log_factorial(p));
    const cplx plus = weight * ipow(std::conj(alpha), m - p);
    const cplx minus = weight * ipow(-std::conj(alpha), m - p) * phase_factor;
    for (int n = 0; n <= cutoff; ++n) {
      v[n] += plus * displacement_matrix_element(n, p, alpha) +
              minus * displacement_matrix_element(n, p, -alpha);
    }
  }
  return normalized(std::move(v), tail);
}

double fidelity(const FockState& a, const FockState& b) {
  const Eigen::Index n = std::min(a.amplitudes().size(), b.amplitudes().size());
  const cplx overlap = a.amplitudes().head(n).dot(b.amplitudes().head(n));
  return std::norm(overlap);
}

}  // namespace pacat
