#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <type_traits>

#include "pacat/core.hpp"

namespace pacat {

namespace detail {

template <typename T>
struct is_complex : std::false_type {};
template <typename T>
struct is_complex<std::complex<T>> : std::true_type {};

template <typename Scalar>
bool is_finite(const Scalar& x) {
  if constexpr (is_complex<Scalar>::value) {
    return std::isfinite(x.real()) && std::isfinite(x.imag());
  } else {
    return std::isfinite(x);
  }
}

inline constexpr int kLogFactorialTableSize = 1024;

inline const std::array<double, kLogFactorialTableSize>& log_factorial_table() {
  static const auto table = [] {
    std::array<double, kLogFactorialTableSize> t{};
    t[0] = 0.0;
    for (int n = 1; n < kLogFactorialTableSize; ++n) t[n] = t[n - 1] + std::log(static_cast<double>(n));
    return t;
  }();
  return table;
}

}  // namespace detail

/// Associated Laguerre polynomial L_m^{(k)}(x) by the three-term recurrence
/// ascending in degree. Scalar may be real or complex.
template <typename Scalar>
Scalar assoc_laguerre(int m, int k, const Scalar& x) {
  if (m < 0 || k < 0) throw DomainError("assoc_laguerre: negative degree or order");
  if (!detail::is_finite(x)) throw DomainError("assoc_laguerre: non-finite argument");
  Scalar previous(1);
  if (m == 0) return previous;
  Scalar current = Scalar(1 + k) - x;
  for (int n = 1; n < m; ++n) {
    // (n+1) L_{n+1} = (2n+1+k-x) L_n - (n+k) L_{n-1}
    Scalar next = ((Scalar(2 * n + 1 + k) - x) * current - Scalar(n + k) * previous) / Scalar(n + 1);
    previous = current;
    current = next;
  }
  return current;
}

/// Laguerre polynomial L_m(x).
template <typename Scalar>
Scalar laguerre(int m, const Scalar& x) {
  return assoc_laguerre(m, 0, x);
}

/// ln(n!). Cumulative sums below 1024, lgamma above.
inline double log_factorial(int n) {
  if (n < 0) throw DomainError("log_factorial: negative argument");
  if (n < detail::kLogFactorialTableSize) return detail::log_factorial_table()[n];
  return std::lgamma(static_cast<double>(n) + 1.0);
}

/// ⟨n|D(β)|p⟩ for D(β) = exp(βa† − β*a).
///
/// For n ≥ p the element is sqrt(p!/n!) β^{n−p} e^{−|β|²/2} L_p^{(n−p)}(|β|²);
/// n < p follows from ⟨n|D(β)|p⟩ = conj(⟨p|D(−β)|n⟩). The real prefactor is
/// assembled in log space so elements stay finite at high photon numbers.
template <typename Real>
std::complex<Real> displacement_matrix_element(int n, int p, const std::complex<Real>& beta) {
  if (n < 0 || p < 0) throw DomainError("displacement_matrix_element: negative index");
  if (!detail::is_finite(beta)) throw DomainError("displacement_matrix_element: non-finite displacement");
  const Real r2 = std::norm(beta);
  const int lo = std::min(n, p);
  const int hi = std::max(n, p);
  const int d = hi - lo;
  if (r2 == Real(0)) return d == 0 ? std::complex<Real>(1) : std::complex<Real>(0);

  const Real r = std::sqrt(r2);
  const Real log_mag = Real(0.5) * (Real(log_factorial(lo)) - Real(log_factorial(hi))) +
                       Real(d) * std::log(r) - Real(0.5) * r2;
  const Real lag = assoc_laguerre(lo, d, r2);
  // β^{d} for n ≥ p, (−β*)^{d} otherwise; only the phase is needed here.
  const Real arg = std::arg(beta);
  const Real phase = n >= p ? Real(d) * arg : Real(d) * (Real(kPi) - arg);
  return std::polar(Real(1), phase) * (std::exp(log_mag) * lag);
}

}  // namespace pacat
